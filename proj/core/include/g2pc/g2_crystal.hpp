#pragma once
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "g2pc/cartan.hpp"
#include "g2pc/signature.hpp"

namespace g2pc {

// The 14 letters of B(L1) in the fixed linearization used for canonical words.
// Z1, Z2 are the two weight-zero letters (printed 0_1, 0_2).
enum class Letter : std::uint8_t { L1, L2, L3, L4, L5, L6, Z1, Z2, B6, B5, B4, B3, B2, B1 };
inline constexpr int kLetters = 14;

std::string_view letter_name(Letter a);  // "1".."6","01","02","-6".."-1"
std::optional<Letter> parse_letter(std::string_view s);
Letter bar(Letter a);
std::pair<int, int> letter_weight(Letter a);  // (m1, m2) in the L1, L2 basis
// (eps, phi) of a letter for color 1 or 2.
std::pair<int, int> letter_string(int color, Letter a);
std::optional<Letter> letter_step(Op op, int color, Letter a);

struct FundamentalEdge {
    int color;
    Letter from, to;  // to = f_color(from)
};
std::vector<FundamentalEdge> fundamental();

struct GTableau {
    std::vector<Letter> letters;  // weakly increasing in the fixed order; empty = phi

    int size() const { return static_cast<int>(letters.size()); }
    bool empty() const { return letters.empty(); }
    int count(Letter a) const;
    bool valid() const;
    std::pair<int, int> weight() const;  // (m1, m2)
    ClassicalWeight classical_weight() const;
    std::string str() const;  // "[1,1,-2]"; phi is "[]"
    auto operator<=>(const GTableau&) const = default;
};

GTableau make_tableau(std::initializer_list<Letter> ls);
// Repeated letters, e.g. word({{Letter::L6, 2}, {Letter::B2, 1}}).
GTableau word(std::initializer_list<std::pair<Letter, int>> runs);
std::optional<GTableau> parse_tableau(std::string_view s);
void canonicalize(GTableau& t);

std::vector<GTableau> g2_enumerate(int n);
std::uint64_t g2_dim(int n);
UWord g2_uword(int color, const GTableau& t);
std::optional<GTableau> g2_apply(Op op, int color, const GTableau& t);

enum class Strip : std::uint8_t { C, W, Wbar };
std::vector<Letter> strip(Strip kind, int k);

GTableau involution_CG(const GTableau& t);

struct GTableauHash {
    std::size_t operator()(const GTableau& t) const noexcept;
};

}  // namespace g2pc
