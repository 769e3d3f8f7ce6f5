#include <doctest.h>

#include <set>

#include "g2pc/a2_crystal.hpp"
#include "g2pc/g2_crystal.hpp"
#include "oracles.hpp"

using namespace g2pc;

namespace {

std::pair<int, int> a2_weight(const A2Tableau& t) {
    int c[4] = {0, 0, 0, 0};
    for (auto x : t.word) ++c[x];
    return {c[1] - c[2], c[2] - c[3]};
}

template <class T, class Step>
int depth(Step&& step, T t) {
    int k = 0;
    while (auto n = step(t)) {
        t = *n;
        ++k;
    }
    return k;
}

}  // namespace

TEST_CASE("A2 crystal axioms, m,n <= 4") {
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= 4; ++n) {
            const auto all = a2_enumerate(m, n);
            CHECK(all.size() == a2_size(m, n));
            CHECK(std::set<A2Tableau>(all.begin(), all.end()).size() == all.size());
            for (const auto& t : all) {
                REQUIRE(t.semistandard());
                const auto w = a2_weight(t);
                for (A2Color c : {A2Color::Alpha, A2Color::Beta}) {
                    const int ci = static_cast<int>(c);
                    if (auto f = a2_apply(Op::F, c, t)) {
                        CHECK(a2_apply(Op::E, c, *f) == t);
                        const auto v = a2_weight(*f);
                        // f_alpha: (-2, +1); f_beta: (+1, -2)
                        CHECK(v.first - w.first == (ci == 0 ? -2 : 1));
                        CHECK(v.second - w.second == (ci == 0 ? 1 : -2));
                    }
                    if (auto e = a2_apply(Op::E, c, t)) CHECK(a2_apply(Op::F, c, *e) == t);
                    const int eps = depth([&](const A2Tableau& x) { return a2_apply(Op::E, c, x); }, t);
                    const int phi = depth([&](const A2Tableau& x) { return a2_apply(Op::F, c, x); }, t);
                    CHECK(phi - eps == (ci == 0 ? w.first : w.second));
                }
            }
        }
}

TEST_CASE("A2 string coordinates round-trip") {
    for (int m = 0; m <= 5; ++m)
        for (int n = 0; n <= 5; ++n) {
            const auto tab = A2Table::get(m, n);
            CHECK(static_cast<std::uint64_t>(tab->size()) == a2_size(m, n));
            for (int a = 0; a < tab->size(); ++a) {
                const auto& c = tab->coords(a);
                REQUIRE(coords_in_range(m, n, c));
                const A2Tableau t = from_coords(m, n, c);
                CHECK(t == tab->tableau(a));
                CHECK(string_coords(t) == c);
                CHECK(tab->index(c) == a);
            }
            CHECK(string_coords(a2_highest(m, n)) == StringCoords{});
        }
}

TEST_CASE("G2 letters") {
    CHECK(fundamental().size() == 14);
    for (int a = 0; a < kLetters; ++a) {
        const Letter x = static_cast<Letter>(a);
        CHECK(parse_letter(letter_name(x)) == x);
        const auto w = letter_weight(x), wb = letter_weight(bar(x));
        CHECK(w.first == -wb.first);
        CHECK(w.second == -wb.second);
    }
    CHECK(letter_weight(Letter::L2) == std::pair{-1, 3});
    CHECK(letter_weight(Letter::L6) == std::pair{2, -3});
}

TEST_CASE("G2 dimensions follow the Weyl formula") {
    const std::uint64_t expect[] = {1, 14, 77, 273, 748, 1729};
    for (int n = 0; n <= 5; ++n) {
        CHECK(oracle::weyl_dim_g2(n, 0) == expect[n]);
        CHECK(g2_dim(n) == expect[n]);
    }
    for (int n = 0; n <= 4; ++n) CHECK(g2_enumerate(n).size() == expect[n]);
}

TEST_CASE("G2 crystal axioms, n <= 3") {
    for (int n = 0; n <= 3; ++n) {
        const auto all = g2_enumerate(n);
        std::set<GTableau> set(all.begin(), all.end());
        int highest = 0;
        for (const auto& t : all) {
            REQUIRE(t.valid());
            const auto w = t.weight();
            bool is_high = true;
            for (int c = 1; c <= 2; ++c) {
                if (auto f = g2_apply(Op::F, c, t)) {
                    CHECK(set.count(*f));
                    CHECK(g2_apply(Op::E, c, *f) == t);
                    const auto v = f->weight();
                    const auto a = c == 1 ? std::pair{2, -3} : std::pair{-1, 2};
                    CHECK(v.first == w.first - a.first);
                    CHECK(v.second == w.second - a.second);
                }
                if (auto e = g2_apply(Op::E, c, t)) {
                    is_high = false;
                    CHECK(g2_apply(Op::F, c, *e) == t);
                }
                const int eps = depth([&](const GTableau& x) { return g2_apply(Op::E, c, x); }, t);
                const int phi = depth([&](const GTableau& x) { return g2_apply(Op::F, c, x); }, t);
                CHECK(phi - eps == (c == 1 ? w.first : w.second));
            }
            highest += is_high;
        }
        CHECK(highest == 1);
    }
}

TEST_CASE("G2 involution reverses and negates") {
    for (int n = 0; n <= 3; ++n)
        for (const auto& t : g2_enumerate(n)) {
            const GTableau c = involution_CG(t);
            CHECK(involution_CG(c) == t);
            CHECK(c.weight().first == -t.weight().first);
            CHECK(c.weight().second == -t.weight().second);
        }
}

TEST_CASE("tableau text form") {
    const GTableau t = word({{Letter::L1, 2}, {Letter::Z1, 1}, {Letter::B2, 1}});
    CHECK(t.str() == "[1,1,01,-2]");
    CHECK(parse_tableau("[1,1,01,-2]") == t);
    CHECK(GTableau{}.str() == "[]");
}
