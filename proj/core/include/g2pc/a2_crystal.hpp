#pragma once
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "g2pc/signature.hpp"

namespace g2pc {

// The two colors of an A2 crystal, by role.  Alpha moves 1->2, Beta moves 2->3.
enum class A2Color : std::uint8_t { Alpha = 0, Beta = 1 };

// Labels the roles carry in a particular instantiation, e.g. (1,2) inside G2 or
// (1,0) in the affine model.  Pure metadata.
struct A2Colors {
    int alpha = 1, beta = 2;
};

// Element of B(m*L_alpha + n*L_beta).  The word is the Japanese reading of the
// tableau: the m single boxes from the right, then the n columns from the right,
// each column read top then bottom.  Tensor factors are read left to right.
struct A2Tableau {
    int m = 0, n = 0;
    std::vector<std::uint8_t> word;

    std::vector<std::uint8_t> top_row() const;
    std::vector<std::uint8_t> bottom_row() const;
    bool semistandard() const;
    auto operator<=>(const A2Tableau&) const = default;
};

struct StringCoords {
    int p = 0, q = 0, r = 0;
    auto operator<=>(const StringCoords&) const = default;
};

bool coords_in_range(int m, int n, const StringCoords& c);
std::uint64_t a2_size(int m, int n);  // (m+1)(n+1)(m+n+2)/2

A2Tableau a2_highest(int m, int n);
std::vector<A2Tableau> a2_enumerate(int m, int n);
std::optional<A2Tableau> a2_apply(Op op, A2Color c, const A2Tableau& t);
A2Tableau from_coords(int m, int n, const StringCoords& c);  // f_beta^r f_alpha^q f_beta^p (highest)
StringCoords string_coords(const A2Tableau& t);

// Dense index over B(m L_alpha + n L_beta) with operator tables, built once
// per shape and shared.
class A2Table {
public:
    static std::shared_ptr<const A2Table> get(int m, int n);

    int m() const { return m_; }
    int n() const { return n_; }
    int size() const { return static_cast<int>(coords_.size()); }
    const StringCoords& coords(int idx) const { return coords_[idx]; }
    const A2Tableau& tableau(int idx) const { return tabs_[idx]; }
    int index(const StringCoords& c) const;  // -1 if out of range
    // -1 when the operator kills the element.
    int step(Op op, A2Color c, int idx) const {
        return moves_[static_cast<int>(op)][static_cast<int>(c)][idx];
    }

private:
    A2Table(int m, int n);
    int m_, n_;
    std::vector<StringCoords> coords_;
    std::vector<A2Tableau> tabs_;
    std::unordered_map<std::uint64_t, int> lookup_;
    std::vector<int> moves_[2][2];
};

}  // namespace g2pc
