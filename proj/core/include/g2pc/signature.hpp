#pragma once
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace g2pc {

enum class Op : std::uint8_t { E, F };

inline constexpr std::int8_t kMinus = -1, kZero = 0, kPlus = 1;

// A signature word: one symbol per unit, tagged with the factor it came from.
struct UWord {
    std::vector<std::int8_t> symbols;
    std::vector<int> positions;

    void push(std::int8_t s, int pos) {
        symbols.push_back(s);
        positions.push_back(pos);
    }
    void push_string(int eps, int phi, int pos) {
        for (int k = 0; k < eps; ++k) push(kMinus, pos);
        for (int k = 0; k < phi; ++k) push(kPlus, pos);
    }
    std::size_t size() const { return symbols.size(); }
    bool operator==(const UWord&) const = default;
};

struct ContractViolation : std::logic_error {
    using std::logic_error::logic_error;
};

// Drop zeros, then cancel every plus immediately followed by a minus until none
// remain.  Single stack pass; the result has the shape minus^a plus^b.
UWord reduce(const UWord& w);

std::pair<int, int> eps_phi(const UWord& w);

// Factor index the operator acts on, given a word (reduced or not).
// f acts at the leftmost surviving plus, e at the rightmost surviving minus.
std::optional<int> acting_position(Op op, const UWord& w);

// Kashiwara operator on a tensor product of factors, read left to right.
// uword(x) returns the factor's own signature (must be minus^a plus^b);
// step(op, x) returns the single-step image of one factor.
template <class T, class WordFn, class StepFn>
std::optional<std::vector<T>> tensor_apply(Op op, const std::vector<T>& factors, WordFn&& uword,
                                           StepFn&& step) {
    UWord w;
    for (int k = 0; k < static_cast<int>(factors.size()); ++k) {
        const std::vector<std::int8_t> s = uword(factors[k]);
        bool seen_plus = false;
        for (auto c : s) {
            if (c == kPlus) seen_plus = true;
            else if (c == kMinus && seen_plus)
                throw ContractViolation("factor u-word is not of the form minus^a plus^b");
            else if (c != kMinus)
                throw ContractViolation("factor u-word contains a zero");
            w.push(c, k);
        }
    }
    const auto pos = acting_position(op, w);
    if (!pos) return std::nullopt;
    std::optional<T> moved = step(op, factors[*pos]);
    if (!moved) throw ContractViolation("factor refused a step its u-word allows");
    std::vector<T> out = factors;
    out[*pos] = std::move(*moved);
    return out;
}

}  // namespace g2pc
