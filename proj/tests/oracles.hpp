#pragma once
// Independent reference computations used by the tests.  Deliberately naive.
#include <cstdint>
#include <map>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "g2pc/affine_model.hpp"
#include "g2pc/cartan.hpp"
#include "g2pc/g2_crystal.hpp"
#include "g2pc/signature.hpp"

namespace oracle {

// Erase zeros, then repeatedly delete the first "+-" pair.
inline std::string naive_reduce(std::string s) {
    std::string t;
    for (char c : s)
        if (c != '0') t += c;
    for (;;) {
        const auto k = t.find("+-");
        if (k == std::string::npos) return t;
        t.erase(k, 2);
    }
}

// Which original symbol survives: mark cancelled pairs by repeated scanning.
inline int naive_acting(g2pc::Op op, const std::vector<std::int8_t>& w) {
    std::vector<int> alive;
    for (int k = 0; k < static_cast<int>(w.size()); ++k)
        if (w[k] != 0) alive.push_back(k);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k + 1 < alive.size(); ++k)
            if (w[alive[k]] > 0 && w[alive[k + 1]] < 0) {
                alive.erase(alive.begin() + static_cast<long>(k), alive.begin() + static_cast<long>(k) + 2);
                changed = true;
                break;
            }
    }
    if (op == g2pc::Op::F) {
        for (int k : alive)
            if (w[k] > 0) return k;
    } else {
        for (auto it = alive.rbegin(); it != alive.rend(); ++it)
            if (w[*it] < 0) return *it;
    }
    return -1;
}

// Weyl dimension formula for G2; alpha_1 long, alpha_2 short.
inline std::uint64_t weyl_dim_g2(int a, int b) {
    // positive roots c1 alpha_1 + c2 alpha_2; 2(lambda, beta) = 3 c1 m1 + c2 m2
    const int roots[6][2] = {{1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}, {2, 3}};
    std::uint64_t num = 1, den = 1;
    for (const auto& r : roots) {
        num *= static_cast<std::uint64_t>(3 * r[0] * (a + 1) + r[1] * (b + 1));
        den *= static_cast<std::uint64_t>(3 * r[0] + r[1]);
    }
    return num / den;
}

// Recover Phi from scratch: block highest elements map to e1/e2-highest
// tableaux of the same weight, and everything else follows by walking f1/F_A
// against f1/f2 computed directly on tableaux.
inline bool phi_matches_bfs(const g2pc::Level& L, std::string* why = nullptr) {
    using namespace g2pc;
    const int n = L.size();
    std::vector<int> seen(n, -1);
    for (int a = 0; a < n; ++a) {
        if (L.a_step(Op::E, 1, a) >= 0 || L.EA(a) >= 0) continue;
        const GTableau& top = L.tableau(L.phi(a));
        if (g2_apply(Op::E, 1, top) || g2_apply(Op::E, 2, top)) {
            if (why) *why = "image of a highest element is not highest: " + top.str();
            return false;
        }
        std::queue<std::pair<int, GTableau>> bfs;
        bfs.emplace(a, top);
        seen[a] = a;
        while (!bfs.empty()) {
            auto [x, t] = bfs.front();
            bfs.pop();
            if (L.tableau(L.phi(x)) != t) {
                if (why) *why = "mismatch at " + L.param(x).str();
                return false;
            }
            const int nx[2] = {L.a_step(Op::F, 1, x), L.FA(x)};
            for (int c = 0; c < 2; ++c) {
                auto nt = g2_apply(Op::F, c + 1, t);
                if ((nx[c] >= 0) != nt.has_value()) {
                    if (why) *why = "arrow existence differs at " + L.param(x).str();
                    return false;
                }
                if (nx[c] >= 0 && seen[nx[c]] < 0) {
                    seen[nx[c]] = a;
                    bfs.emplace(nx[c], *nt);
                }
            }
        }
    }
    for (int a = 0; a < n; ++a)
        if (seen[a] < 0) {
            if (why) *why = "unreached " + L.param(a).str();
            return false;
        }
    return true;
}

}  // namespace oracle
