#include "g2pc/g2_crystal.hpp"

#include <algorithm>
#include <stdexcept>

namespace g2pc {

namespace {

constexpr std::array<std::string_view, kLetters> kNames{"1",  "2",  "3",  "4",  "5",  "6",  "01",
                                                        "02", "-6", "-5", "-4", "-3", "-2", "-1"};
constexpr std::array<std::pair<int, int>, 6> kUnbarredWeight{{{1, 0}, {-1, 3}, {0, 1}, {1, -1}, {-1, 2}, {2, -3}}};

// (eps, phi) per color; row order follows Letter.
constexpr std::array<std::pair<int, int>, kLetters> kString1{
    {{0, 1}, {1, 0}, {0, 0}, {0, 1}, {1, 0}, {0, 2}, {0, 0}, {1, 1}, {2, 0}, {0, 1}, {1, 0}, {0, 0}, {0, 1}, {1, 0}}};
constexpr std::array<std::pair<int, int>, kLetters> kString2{
    {{0, 0}, {0, 3}, {1, 2}, {2, 1}, {0, 2}, {3, 0}, {1, 1}, {0, 0}, {0, 3}, {2, 0}, {1, 2}, {2, 1}, {3, 0}, {0, 0}}};

using L = Letter;
constexpr std::array<std::pair<Letter, Letter>, 6> kF1{
    {{L::L1, L::L2}, {L::L4, L::L5}, {L::L6, L::Z2}, {L::Z2, L::B6}, {L::B5, L::B4}, {L::B2, L::B1}}};
constexpr std::array<std::pair<Letter, Letter>, 8> kF2{{{L::L2, L::L3},
                                                        {L::L3, L::L4},
                                                        {L::L4, L::L6},
                                                        {L::L5, L::Z1},
                                                        {L::Z1, L::B5},
                                                        {L::B6, L::B4},
                                                        {L::B4, L::B3},
                                                        {L::B3, L::B2}}};

int idx(Letter a) { return static_cast<int>(a); }

}  // namespace

std::string_view letter_name(Letter a) { return kNames[idx(a)]; }

std::optional<Letter> parse_letter(std::string_view s) {
    for (int k = 0; k < kLetters; ++k)
        if (kNames[k] == s) return static_cast<Letter>(k);
    if (s == "7") return L::Z1;  // boxed 7 and 8
    if (s == "8") return L::Z2;
    return std::nullopt;
}

Letter bar(Letter a) {
    if (a == L::Z1 || a == L::Z2) return a;
    return static_cast<Letter>(kLetters - 1 - idx(a));
}

std::pair<int, int> letter_weight(Letter a) {
    const int k = idx(a);
    if (k < 6) return kUnbarredWeight[k];
    if (k < 8) return {0, 0};
    const auto w = kUnbarredWeight[kLetters - 1 - k];
    return {-w.first, -w.second};
}

std::pair<int, int> letter_string(int color, Letter a) {
    if (color == 1) return kString1[idx(a)];
    if (color == 2) return kString2[idx(a)];
    throw std::out_of_range("G2 color must be 1 or 2");
}

std::optional<Letter> letter_step(Op op, int color, Letter a) {
    auto scan = [&](const auto& table) -> std::optional<Letter> {
        for (auto [from, to] : table) {
            if (op == Op::F && from == a) return to;
            if (op == Op::E && to == a) return from;
        }
        return std::nullopt;
    };
    if (color == 1) return scan(kF1);
    if (color == 2) return scan(kF2);
    throw std::out_of_range("G2 color must be 1 or 2");
}

std::vector<FundamentalEdge> fundamental() {
    std::vector<FundamentalEdge> out;
    for (auto [a, b] : kF1) out.push_back({1, a, b});
    for (auto [a, b] : kF2) out.push_back({2, a, b});
    return out;
}

int GTableau::count(Letter a) const { return static_cast<int>(std::count(letters.begin(), letters.end(), a)); }

bool GTableau::valid() const {
    if (!std::is_sorted(letters.begin(), letters.end())) return false;
    auto x = [&](Letter a) { return count(a); };
    auto sgn = [](int v) { return v > 0 ? 1 : 0; };
    // The 0_1 letter occupies both middle positions, hence its weight in the
    // second and third bounds.
    return x(L::L5) + x(L::Z1) + x(L::Z2) + x(L::B5) <= 1 && x(L::L3) + x(L::L4) + x(L::L5) + x(L::Z1) <= 1 &&
           x(L::B5) + x(L::B4) + x(L::B3) + x(L::Z1) <= 1 && x(L::L5) + sgn(x(L::L6)) + x(L::Z1) <= 1 &&
           x(L::Z1) + sgn(x(L::B6)) + x(L::B5) <= 1;
}

std::pair<int, int> GTableau::weight() const {
    int a = 0, b = 0;
    for (auto l : letters) {
        auto [u, v] = letter_weight(l);
        a += u;
        b += v;
    }
    return {a, b};
}

ClassicalWeight GTableau::classical_weight() const {
    auto [a, b] = weight();
    return from_g2(a, b);
}

std::string GTableau::str() const {
    std::string s = "[";
    for (std::size_t k = 0; k < letters.size(); ++k) {
        if (k) s += ',';
        s += letter_name(letters[k]);
    }
    return s + "]";
}

GTableau make_tableau(std::initializer_list<Letter> ls) {
    GTableau t{ls};
    canonicalize(t);
    return t;
}

GTableau word(std::initializer_list<std::pair<Letter, int>> runs) {
    GTableau t;
    for (auto [a, n] : runs) t.letters.insert(t.letters.end(), std::max(n, 0), a);
    canonicalize(t);
    return t;
}

std::optional<GTableau> parse_tableau(std::string_view s) {
    auto trim = [](std::string_view v) {
        while (!v.empty() && (v.front() == ' ' || v.front() == '"')) v.remove_prefix(1);
        while (!v.empty() && (v.back() == ' ' || v.back() == '"')) v.remove_suffix(1);
        return v;
    };
    s = trim(s);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') return std::nullopt;
    s = s.substr(1, s.size() - 2);
    GTableau t;
    while (!trim(s).empty()) {
        const auto comma = s.find(',');
        auto a = parse_letter(trim(s.substr(0, comma)));
        if (!a) return std::nullopt;
        t.letters.push_back(*a);
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    canonicalize(t);
    if (!t.valid()) return std::nullopt;
    return t;
}

void canonicalize(GTableau& t) { std::sort(t.letters.begin(), t.letters.end()); }

std::vector<GTableau> g2_enumerate(int n) {
    std::vector<GTableau> out;
    if (n < 0) return out;
    GTableau t;
    t.letters.resize(n);
    // Weakly increasing words, pruned on the bounds as letters are placed.
    std::function<void(int, int)> rec = [&](int pos, int start) {
        if (pos == n) {
            if (t.valid()) out.push_back(t);
            return;
        }
        for (int a = start; a < kLetters; ++a) {
            t.letters[pos] = static_cast<Letter>(a);
            GTableau prefix{{t.letters.begin(), t.letters.begin() + pos + 1}};
            if (prefix.valid()) rec(pos + 1, a);
        }
    };
    rec(0, 0);
    return out;
}

std::uint64_t g2_dim(int n) {
    // (n+1)(n/2+1)(2n/3+1)(3n/4+1)(3n/5+1), exactly.
    if (n < 0) return 0;
    const __int128 v = static_cast<__int128>(n + 1) * (n + 2) * (2 * n + 3) * (3 * n + 4) * (3 * n + 5);
    if (v % 120 != 0) throw std::logic_error("Weyl dimension is not integral");
    return static_cast<std::uint64_t>(v / 120);
}

UWord g2_uword(int color, const GTableau& t) {
    // The word b_1..b_n stands for b_n (x) ... (x) b_1.
    UWord w;
    for (int k = t.size() - 1; k >= 0; --k) {
        auto [e, p] = letter_string(color, t.letters[k]);
        w.push_string(e, p, k);
    }
    return w;
}

std::optional<GTableau> g2_apply(Op op, int color, const GTableau& t) {
    const auto pos = acting_position(op, g2_uword(color, t));
    if (!pos) return std::nullopt;
    GTableau out = t;
    const auto moved = letter_step(op, color, t.letters[*pos]);
    if (!moved) throw std::logic_error("signature selected a letter at the end of its string");
    out.letters[*pos] = *moved;
    canonicalize(out);
    if (!out.valid()) throw std::logic_error("G2 operator left the tableau set: " + t.str());
    return out;
}

std::vector<Letter> strip(Strip kind, int k) {
    std::vector<Letter> w;
    if (k < 0) throw std::out_of_range("strip length must be nonnegative");
    auto put = [&](Letter a, int n) { w.insert(w.end(), n, a); };
    const int h = k / 3;
    switch (kind) {
        case Strip::C:
            put(L::L6, k / 2);
            if (k % 2) put(L::Z2, 1);
            put(L::B6, k / 2);
            break;
        case Strip::W:
            if (k % 3 == 0) {
                put(L::L2, 2 * h);
            } else if (k % 3 == 1) {
                put(L::L2, 2 * h);
                put(L::L3, 1);
            } else {
                put(L::L2, 2 * h + 1);
                put(L::L4, 1);
            }
            put(L::L6, h);
            break;
        case Strip::Wbar:
            put(L::B6, h);
            if (k % 3 == 1) put(L::B3, 1);
            if (k % 3 == 2) put(L::B4, 1);
            put(L::B2, 2 * h + (k % 3 == 2 ? 1 : 0));
            break;
    }
    return w;
}

GTableau involution_CG(const GTableau& t) {
    GTableau out;
    for (auto it = t.letters.rbegin(); it != t.letters.rend(); ++it) out.letters.push_back(bar(*it));
    return out;
}

std::size_t GTableauHash::operator()(const GTableau& t) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto a : t.letters) h = (h ^ static_cast<std::size_t>(a)) * 1099511628211ull;
    return h ^ t.letters.size();
}

}  // namespace g2pc
