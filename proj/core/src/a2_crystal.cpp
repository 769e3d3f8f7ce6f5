#include "g2pc/a2_crystal.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace g2pc {

namespace {

// (eps, phi) of a single box for each role.
constexpr int kBoxEps[2][4] = {{0, 0, 1, 0}, {0, 0, 0, 1}};
constexpr int kBoxPhi[2][4] = {{0, 1, 0, 0}, {0, 0, 1, 0}};

std::uint64_t key(const StringCoords& c) {
    return (static_cast<std::uint64_t>(c.p) << 42) | (static_cast<std::uint64_t>(c.q) << 21) |
           static_cast<std::uint64_t>(c.r);
}

std::optional<A2Tableau> fpow(A2Color c, int k, A2Tableau t) {
    for (int s = 0; s < k; ++s) {
        auto nt = a2_apply(Op::F, c, t);
        if (!nt) return std::nullopt;
        t = std::move(*nt);
    }
    return t;
}

}  // namespace

std::vector<std::uint8_t> A2Tableau::top_row() const {
    // Leftmost column first.
    std::vector<std::uint8_t> row;
    for (int c = n - 1; c >= 0; --c) row.push_back(word[m + 2 * c]);
    for (int s = m - 1; s >= 0; --s) row.push_back(word[s]);
    return row;
}

std::vector<std::uint8_t> A2Tableau::bottom_row() const {
    std::vector<std::uint8_t> row;
    for (int c = n - 1; c >= 0; --c) row.push_back(word[m + 2 * c + 1]);
    return row;
}

bool A2Tableau::semistandard() const {
    if (static_cast<int>(word.size()) != m + 2 * n) return false;
    for (auto x : word)
        if (x < 1 || x > 3) return false;
    const auto top = top_row(), bot = bottom_row();
    for (std::size_t c = 1; c < top.size(); ++c)
        if (top[c - 1] > top[c]) return false;
    for (std::size_t c = 1; c < bot.size(); ++c)
        if (bot[c - 1] > bot[c]) return false;
    for (std::size_t c = 0; c < bot.size(); ++c)
        if (top[c] >= bot[c]) return false;
    return true;
}

bool coords_in_range(int m, int n, const StringCoords& c) {
    return 0 <= c.p && c.p <= n && c.p <= c.q && c.q <= c.p + m && 0 <= c.r && c.r <= n + c.q - 2 * c.p;
}

std::uint64_t a2_size(int m, int n) {
    return static_cast<std::uint64_t>(m + 1) * (n + 1) * (m + n + 2) / 2;
}

A2Tableau a2_highest(int m, int n) {
    A2Tableau t{m, n, {}};
    t.word.assign(m, 1);
    for (int c = 0; c < n; ++c) {
        t.word.push_back(1);
        t.word.push_back(2);
    }
    return t;
}

std::vector<A2Tableau> a2_enumerate(int m, int n) {
    // Direct enumeration of semistandard fillings, independent of the operators.
    std::vector<A2Tableau> out;
    const int w = m + n;
    std::vector<std::uint8_t> top(w), bot(n);
    auto emit = [&] {
        A2Tableau t{m, n, std::vector<std::uint8_t>(m + 2 * n)};
        for (int s = 0; s < m; ++s) t.word[s] = top[w - 1 - s];
        for (int c = 0; c < n; ++c) {
            t.word[m + 2 * c] = top[n - 1 - c];
            t.word[m + 2 * c + 1] = bot[n - 1 - c];
        }
        out.push_back(std::move(t));
    };
    // Rows are weakly increasing sequences over {1,2,3}: choose counts.
    for (int a1 = 0; a1 <= w; ++a1)
        for (int a2 = 0; a1 + a2 <= w; ++a2) {
            for (int c = 0; c < w; ++c) top[c] = c < a1 ? 1 : (c < a1 + a2 ? 2 : 3);
            for (int b2 = 0; b2 <= n; ++b2) {
                for (int c = 0; c < n; ++c) bot[c] = c < b2 ? 2 : 3;
                bool ok = true;
                for (int c = 0; c < n && ok; ++c) ok = top[c] < bot[c];
                if (ok) emit();
            }
        }
    return out;
}

std::optional<A2Tableau> a2_apply(Op op, A2Color c, const A2Tableau& t) {
    const int ci = static_cast<int>(c);
    UWord w;
    for (int k = 0; k < static_cast<int>(t.word.size()); ++k)
        w.push_string(kBoxEps[ci][t.word[k]], kBoxPhi[ci][t.word[k]], k);
    const auto pos = acting_position(op, w);
    if (!pos) return std::nullopt;
    A2Tableau out = t;
    const int delta = op == Op::F ? 1 : -1;
    out.word[*pos] = static_cast<std::uint8_t>(out.word[*pos] + delta);
    return out;
}

A2Tableau from_coords(int m, int n, const StringCoords& c) {
    if (!coords_in_range(m, n, c)) throw std::out_of_range("A2 string coordinates out of range");
    auto t = fpow(A2Color::Beta, c.p, a2_highest(m, n));
    if (t) t = fpow(A2Color::Alpha, c.q, *t);
    if (t) t = fpow(A2Color::Beta, c.r, *t);
    if (!t) throw std::logic_error("A2 string walk left the crystal");
    return *t;
}

StringCoords string_coords(const A2Tableau& t) {
    // Undo the walk: r = eps_beta, then q = eps_alpha, then p = eps_beta.
    StringCoords c;
    A2Tableau x = t;
    auto strip = [&](A2Color col) {
        int d = 0;
        while (auto y = a2_apply(Op::E, col, x)) {
            x = std::move(*y);
            ++d;
        }
        return d;
    };
    c.r = strip(A2Color::Beta);
    c.q = strip(A2Color::Alpha);
    c.p = strip(A2Color::Beta);
    if (x != a2_highest(t.m, t.n) || from_coords(t.m, t.n, c) != t)
        throw std::logic_error("A2 element is not reached by its string coordinates");
    return c;
}

A2Table::A2Table(int m, int n) : m_(m), n_(n) {
    for (int p = 0; p <= n; ++p)
        for (int q = p; q <= p + m; ++q)
            for (int r = 0; r <= n + q - 2 * p; ++r) {
                StringCoords c{p, q, r};
                lookup_[key(c)] = static_cast<int>(coords_.size());
                coords_.push_back(c);
                tabs_.push_back(from_coords(m, n, c));
            }
    std::map<A2Tableau, int> back;
    for (int k = 0; k < size(); ++k) back.emplace(tabs_[k], k);
    if (static_cast<int>(back.size()) != size()) throw std::logic_error("A2 string coordinates collide");
    for (int o = 0; o < 2; ++o)
        for (int c = 0; c < 2; ++c) {
            auto& mv = moves_[o][c];
            mv.assign(size(), -1);
            for (int k = 0; k < size(); ++k)
                if (auto y = a2_apply(static_cast<Op>(o), static_cast<A2Color>(c), tabs_[k])) mv[k] = back.at(*y);
        }
}

int A2Table::index(const StringCoords& c) const {
    if (!coords_in_range(m_, n_, c)) return -1;
    return lookup_.at(key(c));
}

std::shared_ptr<const A2Table> A2Table::get(int m, int n) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const A2Table>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[{m, n}];
    if (!slot) slot.reset(new A2Table(m, n));
    return slot;
}

}  // namespace g2pc
