#pragma once
#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace g2pc {

// Index order (0,1,2) everywhere.  Node 2 is the short root.
inline constexpr std::array<std::array<int, 3>, 3> kCartan{{
    {2, -1, 0},
    {-1, 2, -1},
    {0, -3, 2},
}};
inline constexpr std::array<int, 3> kRootNorm{3, 3, 1};  // (alpha_i, alpha_i)
inline constexpr std::array<int, 3> kCentral{1, 2, 1};   // c = h0 + 2h1 + h2

int cartan_entry(int i, int j);

// Classical weight m0*L0 + m1*L1 + m2*L2.
struct ClassicalWeight {
    int m0 = 0, m1 = 0, m2 = 0;

    int wt(int i) const;
    int level() const { return kCentral[0] * m0 + kCentral[1] * m1 + kCentral[2] * m2; }

    ClassicalWeight operator+(const ClassicalWeight& o) const { return {m0 + o.m0, m1 + o.m1, m2 + o.m2}; }
    ClassicalWeight operator-(const ClassicalWeight& o) const { return {m0 - o.m0, m1 - o.m1, m2 - o.m2}; }
    ClassicalWeight operator-() const { return {-m0, -m1, -m2}; }
    ClassicalWeight operator*(int s) const { return {s * m0, s * m1, s * m2}; }
    auto operator<=>(const ClassicalWeight&) const = default;
};

inline int level(const ClassicalWeight& w) { return w.level(); }

// cl(alpha_i): the i-th column of the Cartan matrix.
ClassicalWeight simple_root(int i);
ClassicalWeight fundamental(int i);

// Level-0 lift of a G2 weight a*L1 + b*L2 (the h0 coordinate is forced).
inline ClassicalWeight from_g2(int m1, int m2) { return {-2 * m1 - m2, m1, m2}; }

std::vector<ClassicalWeight> dominant_weights(int l);

}  // namespace g2pc
