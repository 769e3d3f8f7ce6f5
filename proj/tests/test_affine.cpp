#include <doctest.h>

#include <set>

#include "g2pc/affine_model.hpp"
#include "g2pc/perfectness.hpp"
#include "oracles.hpp"

using namespace g2pc;

namespace {

AffineModel& model() {
    static AffineModel m;
    return m;
}

std::uint64_t block_sum(int l) {
    std::uint64_t s = 0;
    for (int i = 0; 2 * i <= l; ++i)
        for (int k = i; k <= l - i; ++k)
            for (int j = i; j <= l - i; ++j) s += static_cast<std::uint64_t>((k + 1) * (j + 1) * (k + j + 2) / 2);
    return s;
}

}  // namespace

TEST_CASE("model counts") {
    const std::uint64_t sums[] = {1, 15, 92, 365, 1113};
    for (int l = 0; l <= 8; ++l) {
        std::uint64_t g = 0;
        for (int n = 0; n <= l; ++n) g += oracle::weyl_dim_g2(n, 0);
        CHECK(count_A(l) == block_sum(l));
        CHECK(count_G(l) == g);
        CHECK(count_A(l) == g);
        CHECK(enumerate_A(l).size() == g);
        if (l <= 4) CHECK(g == sums[l]);
    }
}

TEST_CASE("parameters, weights and C_A") {
    CHECK(CA({1, 2, 3, 1, 2, 1}) == AParam{1, 3, 2, 1, 3, 2});
    CHECK(iota({0, 1, 1, 1, 1, 0}) == AParam{0, 2, 2, 1, 2, 1});
    CHECK(floor_div(-1, 3) == -1);
    CHECK(floor_div(-3, 3) == -1);
    CHECK(floor_div(2, 3) == 0);
    for (int l = 0; l <= 3; ++l)
        for (const auto& b : enumerate_A(l)) {
            REQUIRE(param_in_range(l, b));
            CHECK(CA(CA(b)) == b);
            CHECK(param_in_range(l, CA(b)));
            if (l >= 1) CHECK(param_in_range(l + 1, iota(b)));
            if (l <= 2) {
                const auto w = weight_A(b), v = weight_A(CA(b));
                CHECK(v.first == -w.first);
                CHECK(v.second == -w.second);
            }
        }
    // p = q = r = 0 goes to f0^j f1^(k+j) f0^k of the swapped block
    CHECK(CA({0, 2, 1, 0, 0, 0}) == AParam{0, 1, 2, 2, 3, 1});
}

TEST_CASE("construction axioms hold for l <= 4") {
    for (int l = 1; l <= 4; ++l) {
        const auto rep = verify_construction(model().level(l));
        for (const auto& c : rep.checks) {
            INFO("level " << l << " check " << c.name);
            CHECK(c.pass);
            CHECK(c.checked == count_A(l));
        }
    }
}

TEST_CASE("Phi agrees with a breadth-first reconstruction") {
    for (int l = 0; l <= 4; ++l) {
        std::string why;
        INFO("level " << l);
        CHECK_MESSAGE(oracle::phi_matches_bfs(model().level(l), &why), why);
    }
}

TEST_CASE("E_A examples") {
    const Level& L = model().level(2);
    CHECK(L.EA(L.highest(0, 1, 1)) == L.highest(0, 0, 1));
    // E_A raises -2 wt1 - wt0 by 2 and is injective
    for (int l = 1; l <= 3; ++l) {
        const Level& M = model().level(l);
        std::set<int> img;
        for (int a = 0; a < M.size(); ++a) {
            const int e = M.EA(a);
            if (e < 0) continue;
            CHECK(img.insert(e).second);
            CHECK(M.a_depth(Op::F, 0, e) == M.a_depth(Op::F, 0, a));
        }
    }
    // j = l - i, q at the top of the string: nothing above
    for (int l = 1; l <= 4; ++l) {
        const Level& M = model().level(l);
        for (int i = 0; 2 * i <= l; ++i)
            for (int k = i + 1; k <= l - i; ++k) {
                const int j = l - i, t = floor_div(j - k, 3);
                for (int q = j - t; q <= j + k; ++q) {
                    const int b = M.index({i, k, j, std::min(q, j), q, 0});
                    REQUIRE(b >= 0);
                    CHECK(M.EA(b) == -1);
                }
            }
    }
}

TEST_CASE("anchor tableaux") {
    for (int l = 1; l <= 5; ++l) {
        const Level& L = model().level(l);
        const int top = L.highest(0, l, l);
        CHECK(L.tableau(L.phi(top)) == word({{Letter::B2, l}}));
        for (int p = 0; p <= l; ++p) {
            const int b = L.a_pow(Op::F, 0, p, top);
            CHECK(L.tableau(L.phi(b)) == ur_element(l, p));
        }
        // f0 on [6^p 2bar^(l-p)]
        for (int p = 0; p <= l; ++p) {
            const int g = L.g_index(ur_element(l, p));
            const int f = L.g_step(Op::F, 0, g);
            if (p < l) CHECK(L.tableau(f) == ur_element(l, p + 1));
            else CHECK(f == -1);
        }
        // wt2 of the top element is -3l
        CHECK(L.tableau(L.phi(top)).weight().second == -3 * l);
    }
    const Level& L3 = model().level(3);
    const int c = L3.a_pow(Op::F, 1, 1, L3.a_pow(Op::F, 0, 1, L3.highest(1, 2, 1)));
    CHECK(L3.tableau(L3.phi(L3.EA(c))) == word({{Letter::L1, 1}, {Letter::Z1, 1}, {Letter::B1, 1}}));
    const Level& L1 = model().level(1);
    CHECK(L1.tableau(L1.g_step(Op::F, 0, L1.g_index(GTableau{}))) == word({{Letter::L1, 1}}));
    CHECK(L1.tableau(L1.g_step(Op::F, 0, L1.g_index(word({{Letter::B1, 1}}))))  == GTableau{});
}

TEST_CASE("Uelement closed form agrees with the e2 string") {
    for (int l = 0; l <= 7; ++l)
        for (int k = 0; k <= l; ++k)
            for (int p = 0; p <= l; ++p) {
                INFO(l << " " << k << " " << p);
                CHECK(uelement(l, k, p) == uelement_display(l, k, p));
            }
}

TEST_CASE("shell and the embedding of the previous level") {
    for (int l = 1; l <= 5; ++l) {
        const Level& L = model().level(l);
        int shell = 0, top = 0;
        for (int a = 0; a < L.size(); ++a) shell += L.in_shell(a);
        for (int g = 0; g < L.g_size(); ++g) top += L.tableau(g).size() == l;
        CHECK(shell == top);
        CHECK(static_cast<std::uint64_t>(L.g_size() - shell) == count_G(l - 1));
    }
}

TEST_CASE("set displays sit on the top blocks") {
    for (int l = 1; l <= 5; ++l) {
        const Level& L = model().level(l);
        for (int a = 0; a < L.size(); ++a) {
            if (!L.sets(a)) continue;
            INFO(L.param(a).str());
            CHECK(L.param(a).k == l - L.param(a).i);
        }
        for (int i = 0; 2 * i <= l; ++i)
            for (int j = i; j <= l - i; ++j) CHECK(L.in_set(ASet::C, L.highest(i, l - i, j)));
    }
}

TEST_CASE("phi_0 after f1^q f0^p on a block highest element") {
    // phi_0(f1^q f0^p b) = j + q - 2p
    for (int l = 1; l <= 4; ++l) {
        const Level& L = model().level(l);
        for (int i = 0; 2 * i <= l; ++i)
            for (int k = i; k <= l - i; ++k)
                for (int j = i; j <= l - i; ++j)
                    for (int p = 0; p <= j; ++p)
                        for (int q = p; q <= p + k; ++q) {
                            const int a = L.a_pow(Op::F, 1, q, L.a_pow(Op::F, 0, p, L.highest(i, k, j)));
                            REQUIRE(a >= 0);
                            CHECK(L.a_depth(Op::F, 0, a) == j + q - 2 * p);
                            CHECK(L.a_depth(Op::F, 0, a) - L.a_depth(Op::E, 0, a) == weight_A(L.param(a)).second);
                        }
    }
}

TEST_CASE("B^l crystal axioms for l <= 4") {
    for (int l = 1; l <= 4; ++l) {
        const CrystalGraph G = build_Bl(model().level(l));
        CHECK(static_cast<std::uint64_t>(G.size()) == count_G(l));
        for (const auto& c : check_crystal_axioms(G)) {
            INFO("level " << l << " " << c.name);
            CHECK(c.pass);
        }
    }
}
