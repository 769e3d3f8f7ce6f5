#include "g2pc/cartan.hpp"

namespace g2pc {

namespace {
void check_index(int i) {
    if (i < 0 || i > 2) throw std::out_of_range("Cartan index must be 0, 1 or 2");
}
}  // namespace

int cartan_entry(int i, int j) {
    check_index(i);
    check_index(j);
    return kCartan[i][j];
}

int ClassicalWeight::wt(int i) const {
    check_index(i);
    return i == 0 ? m0 : (i == 1 ? m1 : m2);
}

ClassicalWeight simple_root(int i) {
    check_index(i);
    return {kCartan[0][i], kCartan[1][i], kCartan[2][i]};
}

ClassicalWeight fundamental(int i) {
    check_index(i);
    ClassicalWeight w;
    (i == 0 ? w.m0 : i == 1 ? w.m1 : w.m2) = 1;
    return w;
}

std::vector<ClassicalWeight> dominant_weights(int l) {
    std::vector<ClassicalWeight> out;
    if (l < 0) return out;
    for (int m1 = 0; 2 * m1 <= l; ++m1)
        for (int m0 = 0; m0 + 2 * m1 <= l; ++m0) out.push_back({m0, m1, l - m0 - 2 * m1});
    return out;
}

}  // namespace g2pc
