// One line per acceptance criterion; exit status is nonzero if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>

#include "g2pc/a2_crystal.hpp"
#include "g2pc/affine_model.hpp"
#include "g2pc/perfectness.hpp"
#include "g2pc/qlevel1.hpp"
#include "oracles.hpp"

using namespace g2pc;

namespace {

AffineModel& model() {
    static AffineModel m;
    return m;
}

bool dimensions() {
    const std::uint64_t sums[] = {1, 15, 92, 365, 1113};
    const std::uint64_t dims[] = {1, 14, 77, 273, 748, 1729};
    bool ok = true;
    for (int n = 0; n <= 5; ++n) ok &= g2_dim(n) == dims[n] && oracle::weyl_dim_g2(n, 0) == dims[n];
    for (int l = 0; l <= 8; ++l) {
        ok &= count_A(l) == count_G(l);
        if (l <= 4) ok &= count_G(l) == sums[l];
    }
    return ok;
}

bool level_one_table() {
    // f-arrows of B^1 as listed with the polarization; "9" is the empty tableau
    const char* table[3][8][2] = {
        {{"-6", "2"}, {"-4", "3"}, {"-3", "4"}, {"-2", "6"}, {"-1", "9"}, {"9", "1"}},
        {{"1", "2"}, {"4", "5"}, {"6", "02"}, {"02", "-6"}, {"-5", "-4"}, {"-2", "-1"}},
        {{"2", "3"}, {"3", "4"}, {"4", "6"}, {"5", "01"}, {"01", "-5"}, {"-6", "-4"}, {"-4", "-3"}, {"-3", "-2"}},
    };
    const int counts[3] = {6, 6, 8};
    auto tab = [](const std::string& s) {
        return s == "9" ? GTableau{} : make_tableau({*parse_letter(s)});
    };
    const CrystalGraph G = build_Bl(model().level(1));
    if (G.size() != 15) return false;
    std::set<std::pair<int, std::pair<GTableau, GTableau>>> want, got;
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < counts[i]; ++k) want.insert({i, {tab(table[i][k][0]), tab(table[i][k][1])}});
    bool ok = true;
    for (int v = 0; v < G.size(); ++v)
        for (int i = 0; i < 3; ++i) {
            if (G.f[i][v] >= 0) {
                got.insert({i, {G.vertices[v], G.vertices[G.f[i][v]]}});
                ok &= G.e[i][G.f[i][v]] == v;
            }
        }
    return ok && want == got;
}

bool construction() {
    bool ok = true;
    for (int l = 1; l <= 4; ++l) {
        const Level& L = model().level(l);
        const auto rep = verify_construction(L);
        ok &= rep.ok();
        for (const char* n : {"C1", "C2", "C3", "D1", "E1", "E2", "E3", "E4", "E5"})
            ok &= rep.find(n) && rep.find(n)->pass && rep.find(n)->checked == static_cast<std::uint64_t>(L.size());
        if (l == 4) ok &= L.size() == 1113;
    }
    return ok;
}

bool minimal() {
    const std::vector<std::string> listed = {
        "[]", "[01]", "[1,-1]", "[3,-3]", "[1,01,-1]", "[2,02,-2]", "[1,1,-1,-1]", "[1,3,-3,-1]", "[2,4,-4,-2]",
        "[1,1,01,-1,-1]", "[1,2,02,-2,-1]", "[2,3,02,-3,-2]", "[1,1,1,-1,-1,-1]", "[1,1,3,-3,-1,-1]",
        "[1,2,4,-4,-2,-1]", "[2,2,6,-6,-2,-2]", "[1,1,1,01,-1,-1,-1]", "[1,1,2,02,-2,-1,-1]",
        "[1,2,3,02,-3,-2,-1]", "[2,2,4,02,-4,-2,-2]"};
    const std::size_t counts[] = {0, 2, 4, 6, 9, 12, 16, 20};
    bool ok = true;
    for (int l = 1; l <= 7; ++l) {
        const auto mins = minimal_elements(build_Bl(model().level(l)));
        ok &= mins.size() == counts[l] && mins.size() == dominant_weights(l).size();
        for (std::size_t k = 0; k < mins.size() && k < listed.size(); ++k) ok &= mins[k].tableau.str() == listed[k];
    }
    return ok;
}

bool perfect() {
    const std::uint64_t squares[] = {0, 225, 8464, 133225};
    bool ok = true;
    for (int l = 1; l <= 3; ++l) {
        const auto r = check_perfect(build_Bl(model().level(l)));
        ok &= r.ok() && r.square.vertices == squares[l] && r.square.components == 1;
    }
    return ok;
}

bool involutions() {
    bool ok = true;
    for (int l = 0; l <= 3; ++l) {
        const Level& L = model().level(l);
        const auto rep = verify_construction(L);
        for (const char* n : {"CA-involution", "CA-EA", "Phi-CA"}) ok &= rep.find(n) && rep.find(n)->pass;
        if (l <= 2)
            for (const auto& b : enumerate_A(l)) {
                const auto w = weight_A(b), v = weight_A(CA(b));
                ok &= v.first == -w.first && v.second == -w.second;
            }
    }
    return ok;
}

bool qmodule() {
    bool ok = true;
    for (const auto& r : verify_module_relations()) ok &= r.pass;
    const auto s = verify_singular();
    ok &= s.ok() && singular_vectors().size() == 8;
    const auto f = verify_fusion_identities();
    ok &= f.size() == 15;
    for (const auto& it : f) ok &= it.pass;
    ok &= rmatrix_checks().ok();
    return ok;
}

template <class T, class Step>
int depth(Step&& step, T t) {
    int k = 0;
    while (auto n = step(t)) t = *n, ++k;
    return k;
}

bool properties() {
    bool ok = true;
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= 4; ++n)
            for (const auto& t : a2_enumerate(m, n)) {
                int c[4] = {0, 0, 0, 0};
                for (auto x : t.word) ++c[x];
                const int wt[2] = {c[1] - c[2], c[2] - c[3]};
                for (A2Color col : {A2Color::Alpha, A2Color::Beta}) {
                    const int ci = static_cast<int>(col);
                    if (auto f = a2_apply(Op::F, col, t)) ok &= a2_apply(Op::E, col, *f) == t;
                    const int e = depth([&](const A2Tableau& x) { return a2_apply(Op::E, col, x); }, t);
                    const int p = depth([&](const A2Tableau& x) { return a2_apply(Op::F, col, x); }, t);
                    ok &= p - e == wt[ci];
                }
                ok &= from_coords(m, n, string_coords(t)) == t;
            }
    for (int n = 0; n <= 3; ++n)
        for (const auto& t : g2_enumerate(n)) {
            const auto w = t.weight();
            for (int c = 1; c <= 2; ++c) {
                if (auto f = g2_apply(Op::F, c, t)) ok &= g2_apply(Op::E, c, *f) == t;
                const int e = depth([&](const GTableau& x) { return g2_apply(Op::E, c, x); }, t);
                const int p = depth([&](const GTableau& x) { return g2_apply(Op::F, c, x); }, t);
                ok &= p - e == (c == 1 ? w.first : w.second);
            }
        }
    for (int l = 1; l <= 4; ++l)
        for (const auto& c : check_crystal_axioms(build_Bl(model().level(l)))) ok &= c.pass;
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> len(0, 20), sym(-1, 1);
    for (int trial = 0; trial < 10000; ++trial) {
        UWord w;
        std::string s;
        for (int k = 0, n = len(rng); k < n; ++k) {
            const auto c = static_cast<std::int8_t>(sym(rng));
            w.push(c, k);
            s += c > 0 ? '+' : c < 0 ? '-' : '0';
        }
        std::string got;
        for (auto c : reduce(w).symbols) got += c > 0 ? '+' : '-';
        ok &= got == oracle::naive_reduce(s);
    }
    return ok;
}

}  // namespace

int main() {
    struct Criterion {
        int number;
        const char* name;
        double limit;  // seconds; 0 = none
        std::function<bool()> run;
    };
    const std::vector<Criterion> all = {
        {1, "dimension identities l = 0..8", 1.0, dimensions},
        {2, "level-1 crystal table", 1.0, level_one_table},
        {3, "construction axioms l = 1..4", 30.0, construction},
        {4, "minimal elements l = 1..7", 0.0, minimal},
        {5, "perfectness l = 1..3", 60.0, perfect},
        {6, "involution laws", 0.0, involutions},
        {7, "q-module suite", 10.0, qmodule},
        {8, "property suites", 0.0, properties},
    };
    int failed = 0;
    for (const auto& c : all) {
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            std::cout << "  exception: " << e.what() << '\n';
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = c.limit == 0 || secs < c.limit;
        std::cout << "criterion " << c.number << ": " << (ok && in_time ? "PASS" : "FAIL") << "  " << c.name << "  ("
                  << secs << " s" << (c.limit > 0 ? ", limit " + std::to_string(static_cast<int>(c.limit)) + " s" : "")
                  << (in_time ? "" : ", too slow") << ")\n";
        failed += !(ok && in_time);
    }
    return failed ? 1 : 0;
}
