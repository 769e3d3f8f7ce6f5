#include "g2pc/signature.hpp"

namespace g2pc {

UWord reduce(const UWord& w) {
    UWord st;
    for (std::size_t k = 0; k < w.size(); ++k) {
        const auto s = w.symbols[k];
        if (s == kZero) continue;
        if (s == kMinus && !st.symbols.empty() && st.symbols.back() == kPlus) {
            st.symbols.pop_back();
            st.positions.pop_back();
        } else {
            st.push(s, w.positions[k]);
        }
    }
    return st;
}

std::pair<int, int> eps_phi(const UWord& w) {
    const UWord r = reduce(w);
    int e = 0, p = 0;
    for (auto s : r.symbols) (s == kMinus ? e : p)++;
    return {e, p};
}

std::optional<int> acting_position(Op op, const UWord& w) {
    const UWord r = reduce(w);
    if (op == Op::F) {
        for (std::size_t k = 0; k < r.size(); ++k)
            if (r.symbols[k] == kPlus) return r.positions[k];
    } else {
        for (std::size_t k = r.size(); k-- > 0;)
            if (r.symbols[k] == kMinus) return r.positions[k];
    }
    return std::nullopt;
}

}  // namespace g2pc
