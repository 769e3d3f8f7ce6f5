#include "g2pc/affine_model.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace g2pc {

namespace {

constexpr int kUnknown = -2;

std::vector<Letter> rep(Letter a, int n) { return std::vector<Letter>(std::max(n, 0), a); }

GTableau join(std::initializer_list<std::vector<Letter>> parts) {
    GTableau t;
    for (const auto& p : parts) t.letters.insert(t.letters.end(), p.begin(), p.end());
    canonicalize(t);
    return t;
}

std::vector<Letter> C(int k) { return strip(Strip::C, k); }

std::optional<GTableau> gpow(Op op, int color, int n, std::optional<GTableau> t) {
    for (int s = 0; s < n && t; ++s) t = g2_apply(op, color, *t);
    return t;
}

}  // namespace

int floor_div(int a, int b) {
    int d = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --d;
    return d;
}

std::string AParam::str() const {
    std::ostringstream os;
    os << "(i=" << i << ",k=" << k << ",j=" << j << ",p=" << p << ",q=" << q << ",r=" << r << ")";
    return os.str();
}

bool param_in_range(int l, const AParam& b) {
    if (b.i < 0 || 2 * b.i > l) return false;
    if (b.k < b.i || b.k > l - b.i || b.j < b.i || b.j > l - b.i) return false;
    return coords_in_range(b.k, b.j, {b.p, b.q, b.r});
}

std::vector<AParam> enumerate_A(int l) {
    std::vector<AParam> out;
    for (int i = 0; 2 * i <= l; ++i)
        for (int k = i; k <= l - i; ++k)
            for (int j = i; j <= l - i; ++j) {
                auto tab = A2Table::get(k, j);
                for (int a = 0; a < tab->size(); ++a) {
                    const auto& c = tab->coords(a);
                    out.push_back({i, k, j, c.p, c.q, c.r});
                }
            }
    return out;
}

std::uint64_t count_A(int l) {
    std::uint64_t n = 0;
    for (int i = 0; 2 * i <= l; ++i)
        for (int k = i; k <= l - i; ++k)
            for (int j = i; j <= l - i; ++j) n += a2_size(k, j);
    return n;
}

std::uint64_t count_G(int l) {
    std::uint64_t n = 0;
    for (int s = 0; s <= l; ++s) n += g2_dim(s);
    return n;
}

std::pair<int, int> weight_A(const AParam& b) {
    return {b.k + b.p + b.r - 2 * b.q, b.j - 2 * b.p - 2 * b.r + b.q};
}

AParam CA(const AParam& b) {
    return {b.i, b.j, b.k, b.k - b.q + b.p, b.k + b.j - b.q, b.j + b.q - 2 * b.p - b.r};
}

AParam iota(const AParam& b) { return {b.i, b.k + 1, b.j + 1, b.p, b.q + 1, b.r + 1}; }

int y_of(int l, int i, int j) { return floor_div(l - i - j, 3); }

// ---- tableau anchors ----

GTableau ur_element(int l, int p) { return join({rep(Letter::L6, p), rep(Letter::B2, l - p)}); }

GTableau ur_lowest(int l, int p) { return join({rep(Letter::L2, l - p), rep(Letter::B6, p)}); }

GTableau uelement(int l, int k, int p) {
    auto t = gpow(Op::E, 2, l - k, ur_element(l, p));
    if (!t) throw ConstructionFault("e2 string too short at uelement");
    return *t;
}

GTableau uelement_display(int l, int k, int p) {
    const int d = l - k, h = floor_div(d, 3);
    if (d > 3 * p) {
        return join({rep(Letter::L2, p), strip(Strip::Wbar, d - 3 * p), rep(Letter::B2, k + 2 * p)});
    }
    switch (d % 3) {
        case 0: return join({rep(Letter::L2, h), rep(Letter::L6, p - h), rep(Letter::B2, l - p)});
        case 1: return join({rep(Letter::L2, h), {Letter::L4}, rep(Letter::L6, p - 1 - h), rep(Letter::B2, l - p)});
        default: return join({rep(Letter::L2, h), {Letter::L3}, rep(Letter::L6, p - 1 - h), rep(Letter::B2, l - p)});
    }
}

GTableau allhighest(int l, int i, int j) {
    const int y = y_of(l, i, j), m = (l - i - j) - 3 * y;
    if (m == 0) return join({rep(Letter::L6, y), C(y + i), rep(Letter::B2, y + j)});
    if (m == 1 && y + i > 0)
        return join({rep(Letter::L6, y + 1), C(y + i - 1), {Letter::B4}, rep(Letter::B2, y + j)});
    if (m == 1) return join({{Letter::B5}, rep(Letter::B2, j - i)});
    return join({rep(Letter::L6, y + 1), C(y + i), {Letter::B3}, rep(Letter::B2, y + j)});
}

GTableau f0pR(int l, int i, int j, int p) {
    const int y = y_of(l, i, j), m = (l - i - j) - 3 * y;
    if (p <= i) {
        const auto ones = rep(Letter::L1, p);
        if (m == 0) return join({ones, rep(Letter::L6, y), C(y + i - p), rep(Letter::B2, y + j)});
        if (m == 1 && y + i > p)
            return join({ones, rep(Letter::L6, y + 1), C(y + i - p - 1), {Letter::B4}, rep(Letter::B2, y + j)});
        if (m == 1) return join({rep(Letter::L1, i), {Letter::B5}, rep(Letter::B2, j)});
        return join({ones, rep(Letter::L6, y + 1), C(y + i - p), {Letter::B3}, rep(Letter::B2, y + j)});
    }
    const auto ones = rep(Letter::L1, i);
    const int tail = y + j - p + i;
    if (m == 0) return join({ones, rep(Letter::L6, p - i + y), C(y), rep(Letter::B2, tail)});
    if (m == 1 && y > 0)
        return join({ones, rep(Letter::L6, p - i + y + 1), C(y - 1), {Letter::B4}, rep(Letter::B2, tail)});
    if (m == 1) return join({ones, rep(Letter::L6, p - i), {Letter::B5}, rep(Letter::B2, j - p + i)});
    return join({ones, rep(Letter::L6, p - i + y + 1), C(y), {Letter::B3}, rep(Letter::B2, tail)});
}

// ---- Level accessors ----

int Level::index(const AParam& b) const {
    if (!param_in_range(l_, b)) return -1;
    const int slot = block_slot(b.i, b.k, b.j);
    return block_base_[slot] + block_table_[slot]->index({b.p, b.q, b.r});
}

int Level::a_step(Op op, int color, int a) const {
    if (a < 0) return -1;
    return amoves_[static_cast<int>(op)][color == 1 ? 1 : 0][a];
}

int Level::a_pow(Op op, int color, int n, int a) const {
    for (int s = 0; s < n && a >= 0; ++s) a = a_step(op, color, a);
    return a;
}

int Level::a_depth(Op op, int color, int a) const {
    int n = 0;
    while ((a = a_step(op, color, a)) >= 0) ++n;
    return n;
}

int Level::ea_depth(int a) const {
    int n = 0;
    while ((a = ea_[a]) >= 0) ++n;
    return n;
}

int Level::fa_depth(int a) const {
    int n = 0;
    while ((a = fa_[a]) >= 0) ++n;
    return n;
}

int Level::g_index(const GTableau& t) const {
    auto it = gidx_.find(t);
    return it == gidx_.end() ? -1 : it->second;
}

// ---- construction ----

const Level& AffineModel::level(int l) {
    if (l < 0) throw std::out_of_range("level must be nonnegative");
    while (static_cast<int>(levels_.size()) <= l) levels_.push_back(build(static_cast<int>(levels_.size())));
    return *levels_[l];
}

std::unique_ptr<Level> AffineModel::build(int l) {
    auto L = std::make_unique<Level>();
    L->l_ = l;
    const Level* prev = l > 0 ? levels_[l - 1].get() : nullptr;
    build_params(*L);
    build_EA(*L, prev);
    build_sets(*L);
    build_G(*L);
    build_phi(*L, prev);
    return L;
}

void AffineModel::build_params(Level& L) {
    const int l = L.l_;
    L.block_base_.assign((l / 2 + 1) * (l + 1) * (l + 1), -1);
    L.block_table_.resize(L.block_base_.size());
    for (int i = 0; 2 * i <= l; ++i)
        for (int k = i; k <= l - i; ++k)
            for (int j = i; j <= l - i; ++j) {
                const int slot = L.block_slot(i, k, j);
                auto tab = A2Table::get(k, j);
                L.block_base_[slot] = static_cast<int>(L.params_.size());
                L.block_table_[slot] = tab;
                for (int a = 0; a < tab->size(); ++a) {
                    const auto& c = tab->coords(a);
                    L.params_.push_back({i, k, j, c.p, c.q, c.r});
                }
            }
    const int n = L.size();
    for (int op = 0; op < 2; ++op)
        for (int c = 0; c < 2; ++c) {
            auto& mv = L.amoves_[op][c];
            mv.assign(n, -1);
            // color 1 is the alpha role, color 0 the beta role
            const A2Color role = c == 1 ? A2Color::Alpha : A2Color::Beta;
            for (int a = 0; a < n; ++a) {
                const auto& b = L.params_[a];
                const int slot = L.block_slot(b.i, b.k, b.j);
                const auto& tab = L.block_table_[slot];
                const int local = tab->step(static_cast<Op>(op), role, a - L.block_base_[slot]);
                mv[a] = local < 0 ? -1 : L.block_base_[slot] + local;
            }
        }
}

void AffineModel::build_EA(Level& L, const Level* prev) {
    const int l = L.l_, n = L.size();
    L.ea_.assign(n, kUnknown);
    auto fault = [&](const AParam& b, const std::string& why) {
        throw ConstructionFault("E_A at level " + std::to_string(l) + " on " + b.str() + ": " + why);
    };
    auto need = [&](const AParam& b, const std::string& why) {
        const int a = L.index(b);
        if (a < 0) fault(b, why + " leaves the model");
        return a;
    };

    enum class Rule { One, Two, Three, Four, Five, Induction, None };
    std::function<int(int)> ea;

    auto ea_plus = [&](int a) -> int {
        const AParam x = L.params_[a];
        const int i = x.i, k = x.k, j = x.j, p = x.p, q = x.q, Lm = l - i;
        std::vector<std::pair<const char*, Rule>> hits;
        auto add = [&](const char* tag, Rule r) { hits.emplace_back(tag, r); };
        if (i < k && k <= Lm && i < j && j <= Lm) {
            const int t = floor_div(j - k, 3);
            if (0 <= q && q <= j - 1 - t && p == std::min(q, j)) add("1i", Rule::One);
            if (j - t <= q && q <= j + k && p == std::min(q, j)) add(j < Lm ? "1ii" : "1iii", j < Lm ? Rule::Two : Rule::None);
            if (0 <= p && p <= j - 1 && p + 1 <= q && q <= p + k) add("1iv", Rule::Induction);
        }
        if (k == i && i + 2 <= j && j <= Lm) {
            const int t = floor_div(j - i, 3);
            if (0 <= p && p <= j - 1 - t && p <= q && q <= p + i) add("2i", Rule::Three);
            if (j - t <= p && p <= j && p <= q && q <= p + i) add(j < Lm ? "2ii" : "2iii", j < Lm ? Rule::Two : Rule::None);
        }
        if (k == i && j == i + 1) {
            if (0 <= p && p <= i && p <= q && q <= p + i) add("3i", Rule::Four);
            if (p == i + 1 && p <= q && q <= p + i) add("3ii", j < Lm ? Rule::Two : Rule::None);
        }
        if (k == i && j == i) {
            if (0 <= p && p <= i - 1 && p <= q && q <= p + i) add("4i", Rule::Five);
            if (p == i && i <= q && q <= 2 * i) add("4ii", j < Lm ? Rule::Two : Rule::None);
        }
        if (i + 1 <= k && k <= Lm && j == i) {
            const int t = floor_div(i - k, 3);
            if (0 <= p && p <= i && p <= q && q <= p - 1 - t) add("5i", Rule::One);
            if (p == i && p - t <= q && q <= p + k) add("5ii", j < Lm ? Rule::Two : Rule::None);
            if (0 <= p && p <= i - 1 && p - t <= q && q <= p + k) add("5iii", Rule::Five);
        }
        if (hits.size() != 1) {
            std::string tags;
            for (auto& h : hits) tags += std::string(tags.empty() ? "" : ",") + h.first;
            fault(x, hits.empty() ? "no case applies" : "cases overlap: " + tags);
        }
        switch (hits[0].second) {
            case Rule::One: return need({i, k - 1, j, p, q, 0}, "case 1");
            case Rule::Two: return need({i, k, j + 1, p + 1, q + 1, 0}, "case 2");
            case Rule::Three: return need({i + 1, k + 1, j - 1, p, q + 1, 0}, "case 3");
            case Rule::Four: return need({i, k + 1, j - 1, p, q + 1, 0}, "case 4");
            case Rule::Five: return need({i - 1, k + 1, j - 1, p, q + 1, 0}, "case 5");
            case Rule::None: return -1;
            case Rule::Induction: {
                if (!prev) fault(x, "induction below level 0");
                const int f = L.a_step(Op::F, 0, a);
                if (f < 0) fault(x, "f0 vanishes before induction");
                const AParam y = L.params_[f];
                const int down = prev->index({y.i, y.k - 1, y.j - 1, y.p, y.q - 1, y.r - 1});
                if (down < 0) fault(x, "f0 image not in the embedded previous level");
                const int z = prev->EA(down);
                if (z < 0) return -1;
                const int up = need(iota(prev->param(z)), "embedding");
                const int w = L.a_step(Op::E, 0, up);
                if (w < 0) fault(x, "e0 vanishes after induction");
                return w;
            }
        }
        return -1;
    };

    ea = [&](int a) -> int {
        if (L.ea_[a] != kUnknown) return L.ea_[a];
        int r = 0, top = a;
        for (int up; (up = L.a_step(Op::E, 0, top)) >= 0; top = up) ++r;
        int res = ea_plus(top);
        if (res >= 0) {
            res = L.a_pow(Op::F, 0, r, res);
            if (res < 0) fault(L.params_[a], "E_A does not commute with f0");
        }
        return L.ea_[a] = res;
    };
    for (int a = 0; a < n; ++a) ea(a);

    L.fa_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        const int b = L.ea_[a];
        if (b < 0) continue;
        if (L.fa_[b] >= 0) fault(L.params_[a], "E_A not injective, collides with " + L.params_[L.fa_[b]].str());
        L.fa_[b] = a;
    }
}

void AffineModel::build_sets(Level& L) {
    const int l = L.l_;
    L.sets_.assign(L.size(), 0);
    auto mark = [&](int a, ASet s) {
        if (a < 0) throw ConstructionFault("set display element vanishes at level " + std::to_string(l));
        L.sets_[a] |= static_cast<unsigned>(s);
    };
    for (int i = 0; 2 * i <= l; ++i)
        for (int j = i; j <= l - i; ++j) {
            const int y = y_of(l, i, j);
            const int h = L.highest(i, l - i, j);
            for (int p = 0; p <= j; ++p) {
                const int base = L.a_pow(Op::F, 0, p, h);
                auto f1 = [&](int q) { return L.a_pow(Op::F, 1, q, base); };
                for (int q = 0; q <= p; ++q) mark(f1(q), ASet::C);
                if (j == i)
                    for (int q = p + 1; q <= y + j; ++q) mark(f1(q), ASet::W);
                if (p == j)
                    for (int q = j + 1; q <= y + 2 * j - i; ++q) mark(f1(q), ASet::U);
                if (j > i)
                    for (int q = p + 1; q <= y + j - pos_part(i - p); ++q) mark(f1(q), ASet::R);
            }
        }
    L.shell_.assign(L.size(), true);
    if (l > 0) {
        for (const auto& b : enumerate_A(l - 1)) L.shell_[L.index(iota(b))] = false;
    }
}

void AffineModel::build_G(Level& L) {
    for (int s = 0; s <= L.l_; ++s) {
        auto ts = g2_enumerate(s);
        std::sort(ts.begin(), ts.end());
        for (auto& t : ts) {
            L.gidx_.emplace(t, static_cast<int>(L.tabs_.size()));
            L.tabs_.push_back(std::move(t));
        }
    }
    const int n = L.g_size();
    for (int op = 0; op < 2; ++op)
        for (int c = 1; c <= 2; ++c) {
            auto& mv = L.gmoves_[op][c];
            mv.assign(n, -1);
            for (int g = 0; g < n; ++g) {
                auto t = g2_apply(static_cast<Op>(op), c, L.tabs_[g]);
                if (t) mv[g] = L.g_index(*t);
            }
        }
}

void AffineModel::build_phi(Level& L, const Level* prev) {
    const int l = L.l_, n = L.size();
    if (static_cast<std::uint64_t>(n) != static_cast<std::uint64_t>(L.g_size()))
        throw ConstructionFault("level " + std::to_string(l) + ": model and tableau counts differ");
    L.rule_names_ = {"unassigned", "ur-highest", "ur-lowest",  "uelement",  "hamidashi", "allhighest", "f0pR",
                     "f1qf0p",     "E-string",   "symmetry",   "interior",  "closure"};
    enum : std::uint8_t { UR = 1, URlw, Uel, Ham, AllH, F0pR, F1qF0p, EStr, Sym, Interior, Closure };
    L.phi_.assign(n, -1);
    L.phi_rule_.assign(n, 0);

    std::vector<std::string> faults;
    auto report = [&](std::string s) {
        if (faults.size() < 8) faults.push_back(std::move(s));
        else faults.push_back({});
    };
    auto assign = [&](int a, const std::optional<GTableau>& t, std::uint8_t rule) -> bool {
        const std::string& rn = L.rule_names_[rule];
        if (a < 0 || !t) {
            report(rn + ": null element " + (a < 0 ? std::string("on model side") : L.params_[a].str()));
            return false;
        }
        const int g = L.g_index(*t);
        if (g < 0) {
            report(rn + ": " + t->str() + " is not in G^l, at " + L.params_[a].str());
            return false;
        }
        if (L.phi_[a] >= 0) {
            if (L.phi_[a] != g)
                report(rn + ": conflict at " + L.params_[a].str() + ", " + L.tabs_[L.phi_[a]].str() + " by " +
                       L.rule_names_[L.phi_rule_[a]] + " vs " + t->str());
            return false;
        }
        L.phi_[a] = g;
        L.phi_rule_[a] = rule;
        return true;
    };
    auto tab = [&](int a) { return L.tabs_[L.phi_[a]]; };

    // explicit anchors
    const AParam lw{0, l, l, l, 2 * l, l};
    for (int p = 0; p <= l; ++p) {
        assign(L.a_pow(Op::F, 0, p, L.highest(0, l, l)), ur_element(l, p), UR);
        assign(L.a_pow(Op::E, 0, p, L.index(lw)), ur_lowest(l, p), URlw);
    }
    for (int k = 0; k <= l; ++k)
        for (int p = 0; p <= l; ++p) assign(L.a_pow(Op::F, 0, p, L.highest(0, k, l)), uelement(l, k, p), Uel);
    for (int k = 0; k <= l; ++k) {
        const int base = L.a_pow(Op::F, 0, l, L.highest(0, k, l));
        const GTableau t = tab(base);
        for (int q = 0; q <= l + k; ++q) assign(L.a_pow(Op::F, 1, q, base), gpow(Op::F, 1, q, t), Ham);
    }
    for (int i = 0; 2 * i <= l; ++i)
        for (int j = i; j <= l - i; ++j) {
            const int h = L.highest(i, l - i, j);
            assign(h, allhighest(l, i, j), AllH);
            const int y = y_of(l, i, j);
            for (int p = 0; p <= j; ++p) {
                const int x = L.a_pow(Op::F, 0, p, h);
                const GTableau t = f0pR(l, i, j, p);
                assign(x, t, F0pR);
                for (int q = 0; q <= y + j - pos_part(i - p); ++q)
                    assign(L.a_pow(Op::F, 1, q, x), gpow(Op::F, 1, q, t), F1qF0p);
            }
        }

    // B_C and B_R seeds carried down their E_A-strings by e2
    for (int b = 0; b < n; ++b) {
        if (!(L.in_set(ASet::C, b) || L.in_set(ASet::R, b))) continue;
        if (L.phi_[b] < 0) {
            report("E-string: seed " + L.params_[b].str() + " unassigned");
            continue;
        }
        std::optional<GTableau> t = tab(b);
        for (int x = L.ea_[b]; x >= 0; x = L.ea_[x]) {
            t = gpow(Op::E, 2, 1, t);
            assign(x, t, EStr);
        }
    }

    // symmetry Phi = C_G Phi C_A along E_A-strings, to a fixpoint
    auto sym_walk = [&](int x) {
        bool changed = false;
        for (; x >= 0; x = L.ea_[x]) {
            const int c = L.index(CA(L.params_[x]));
            if (L.phi_[c] < 0) continue;
            const GTableau want = involution_CG(tab(c));
            if (L.phi_[x] < 0) changed |= assign(x, want, Sym);
            else if (tab(x) != want)
                report("symmetry: " + L.params_[x].str() + " has " + tab(x).str() + ", mirror gives " + want.str());
        }
        return changed;
    };
    for (bool changed = true; changed;) {
        changed = false;
        for (int b = 0; b < n; ++b)
            if (L.in_set(ASet::W, b) || L.in_set(ASet::U, b)) changed |= sym_walk(b);
        for (int b = 0; b < n; ++b)
            if (L.in_set(ASet::R, b)) changed |= sym_walk(L.a_pow(Op::F, 0, L.a_depth(Op::F, 0, b), b));
    }

    // interior: the embedded previous level keeps its tableaux
    if (prev)
        for (int x = 0; x < prev->size(); ++x) assign(L.index(iota(prev->param(x))), prev->tableau(prev->phi(x)), Interior);

    // closure along colors 1 and 2
    std::vector<int> stack;
    for (int a = 0; a < n; ++a)
        if (L.phi_[a] >= 0) stack.push_back(a);
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        const int g = L.phi_[x];
        const std::pair<int, int> edges[] = {
            {L.a_step(Op::F, 1, x), L.g_step(Op::F, 1, g)},
            {L.a_step(Op::E, 1, x), L.g_step(Op::E, 1, g)},
            {L.ea_[x], L.g_step(Op::E, 2, g)},
            {L.fa_[x], L.g_step(Op::F, 2, g)},
        };
        for (auto [y, h] : edges) {
            if ((y < 0) != (h < 0)) {
                report("closure: edge mismatch at " + L.params_[x].str() + " / " + L.tabs_[g].str());
                continue;
            }
            if (y >= 0 && assign(y, L.tabs_[h], Closure)) stack.push_back(y);
        }
    }

    for (int a = 0; a < n; ++a)
        if (L.phi_[a] < 0) report("gap: " + L.params_[a].str() + " unassigned");
    L.phi_inv_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        const int g = L.phi_[a];
        if (g < 0) continue;
        if (L.phi_inv_[g] >= 0) report("not injective: " + L.tabs_[g].str());
        L.phi_inv_[g] = a;
    }

    if (!faults.empty()) {
        std::string msg = "Phi at level " + std::to_string(l) + ": " + std::to_string(faults.size()) + " fault(s)";
        for (const auto& f : faults)
            if (!f.empty()) msg += "\n  " + f;
        throw ConstructionFault(msg);
    }

    for (int op = 0; op < 2; ++op) {
        auto& mv = L.gmoves_[op][0];
        mv.assign(n, -1);
        for (int g = 0; g < n; ++g) {
            const int a = L.a_step(static_cast<Op>(op), 0, L.phi_inv_[g]);
            if (a >= 0) mv[g] = L.phi_[a];
        }
    }
}

// ---- verification ----

void AxiomCheck::fail(std::string what) {
    pass = false;
    if (counterexamples.size() < 10) counterexamples.push_back(std::move(what));
}

bool ConstructionReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.pass; });
}

const AxiomCheck* ConstructionReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

ConstructionReport verify_construction(const Level& L) {
    ConstructionReport rep;
    rep.level = L.level();
    const int n = L.size();
    auto P = [&](int a) { return L.param(a).str(); };
    auto T = [&](int g) { return g < 0 ? std::string("none") : L.tableau(g).str(); };
    auto phi_or = [&](int a) { return a < 0 ? -1 : L.phi(a); };
    auto check = [&](const std::string& name, auto&& body) {
        AxiomCheck c;
        c.name = name;
        for (int a = 0; a < n; ++a) {
            ++c.checked;
            body(a, c);
        }
        rep.checks.push_back(std::move(c));
    };

    check("C1", [&](int a, AxiomCheck& c) {
        const int e = L.EA(a), f = L.FA(a);
        if (e >= 0 && L.FA(e) != a) c.fail("F_A E_A " + P(a) + " != id");
        if (f >= 0 && L.EA(f) != a) c.fail("E_A F_A " + P(a) + " != id");
    });
    check("C2", [&](int a, AxiomCheck& c) {
        const int f = L.a_step(Op::F, 0, a);
        if (f < 0) return;
        const int lhs = L.EA(f), rhs = L.a_step(Op::F, 0, L.EA(a));
        if (lhs >= 0 && rhs >= 0 && lhs != rhs) c.fail("E_A f0 != f0 E_A at " + P(a));
    });
    check("C3", [&](int a, AxiomCheck& c) {
        const auto [w1, w0] = weight_A(L.param(a));
        if (L.fa_depth(a) - L.ea_depth(a) != -2 * w1 - w0) c.fail("string length at " + P(a));
    });
    auto gs = [&](Op o, int color, int g) { return g < 0 ? -1 : L.g_step(o, color, g); };
    check("D1", [&](int a, AxiomCheck& c) {
        const int g = L.phi(a);
        for (Op o : {Op::E, Op::F})
            if (gs(o, 0, gs(o, 2, g)) != gs(o, 2, gs(o, 0, g)))
                c.fail(std::string(o == Op::F ? "f0 f2" : "e0 e2") + " does not commute at " + T(g));
    });
    check("E1", [&](int a, AxiomCheck& c) {
        for (int op = 0; op < 2; ++op)
            if (phi_or(L.a_step(static_cast<Op>(op), 1, a)) != L.g_step(static_cast<Op>(op), 1, L.phi(a)))
                c.fail("color 1 at " + P(a));
    });
    check("E2", [&](int a, AxiomCheck& c) {
        if (phi_or(L.EA(a)) != L.g_step(Op::E, 2, L.phi(a))) c.fail("e2 vs E_A at " + P(a));
        if (phi_or(L.FA(a)) != L.g_step(Op::F, 2, L.phi(a))) c.fail("f2 vs F_A at " + P(a));
    });
    check("E3", [&](int a, AxiomCheck& c) {
        if (L.tableau(L.phi(a)).classical_weight().m1 != weight_A(L.param(a)).first) c.fail("wt1 at " + P(a));
    });
    check("E4", [&](int a, AxiomCheck& c) {
        const auto [w1, w0] = weight_A(L.param(a));
        if (L.tableau(L.phi(a)).classical_weight().m2 != -2 * w1 - w0) c.fail("wt2 at " + P(a));
    });
    check("E5", [&](int a, AxiomCheck& c) {
        for (int op = 0; op < 2; ++op)
            if ((L.a_step(static_cast<Op>(op), 0, a) < 0) != (L.g_step(static_cast<Op>(op), 0, L.phi(a)) < 0))
                c.fail("0-arrow existence at " + P(a));
    });
    check("bijection", [&](int a, AxiomCheck& c) {
        if (L.phi(a) < 0 || L.phi_inv(L.phi(a)) != a) c.fail("Phi not invertible at " + P(a));
    });
    check("phi0-EA", [&](int a, AxiomCheck& c) {
        const int e = L.EA(a);
        if (e >= 0 && L.a_depth(Op::F, 0, e) != L.a_depth(Op::F, 0, a)) c.fail("phi0 changes at " + P(a));
    });
    check("EA-raises-wt2", [&](int a, AxiomCheck& c) {
        const int e = L.EA(a);
        if (e < 0) return;
        const auto [w1, w0] = weight_A(L.param(a));
        const auto [v1, v0] = weight_A(L.param(e));
        if (-2 * v1 - v0 != -2 * w1 - w0 + 2) c.fail("weight shift at " + P(a));
    });
    check("CA-involution", [&](int a, AxiomCheck& c) {
        const int b = L.index(CA(L.param(a)));
        if (b < 0 || L.index(CA(L.param(b))) != a) c.fail("C_A^2 != id at " + P(a));
    });
    check("CA-EA", [&](int a, AxiomCheck& c) {
        const int e = L.EA(a);
        const int lhs = e < 0 ? -1 : L.index(CA(L.param(e)));
        const int rhs = L.FA(L.index(CA(L.param(a))));
        if (lhs != rhs) c.fail("C_A E_A != F_A C_A at " + P(a));
    });
    check("Phi-CA", [&](int a, AxiomCheck& c) {
        if (L.tableau(L.phi(L.index(CA(L.param(a))))) != involution_CG(L.tableau(L.phi(a))))
            c.fail("Phi C_A != C_G Phi at " + P(a));
    });
    check("shell", [&](int a, AxiomCheck& c) {
        if (L.in_shell(a) != (L.tableau(L.phi(a)).size() == L.level())) c.fail("shell vs top tableaux at " + P(a));
    });
    return rep;
}

CrystalGraph build_Bl(const Level& L) {
    CrystalGraph G;
    G.level = L.level();
    const int n = L.g_size();
    G.vertices.reserve(n);
    for (int g = 0; g < n; ++g) G.vertices.push_back(L.tableau(g));
    for (int c = 0; c < 3; ++c) {
        G.f[c].resize(n);
        G.e[c].resize(n);
        for (int g = 0; g < n; ++g) {
            G.f[c][g] = L.g_step(Op::F, c, g);
            G.e[c][g] = L.g_step(Op::E, c, g);
        }
    }
    return G;
}

}  // namespace g2pc
