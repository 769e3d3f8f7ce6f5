#pragma once
#include <cstdint>
#include <vector>

#include "g2pc/affine_model.hpp"
#include "g2pc/cartan.hpp"

namespace g2pc {

// eps = sum eps_i L_i, phi likewise, stored in ClassicalWeight coordinates.
struct EpsPhi {
    ClassicalWeight eps, phi;
};

std::vector<EpsPhi> eps_phi_all(const CrystalGraph& G);
EpsPhi eps_phi_total(const CrystalGraph& G, int v);

struct MinimalElement {
    GTableau tableau;
    ClassicalWeight eps, phi;
};

// {b : <c, eps(b)> = l}, in vertex order.
std::vector<MinimalElement> minimal_elements(const CrystalGraph& G);

// f/e inverse, weight shift by -cl(alpha_i), phi_i - eps_i = <h_i, wt>, for i = 0,1,2.
std::vector<AxiomCheck> check_crystal_axioms(const CrystalGraph& G);

int count_components(const CrystalGraph& G);

struct TensorConnectivity {
    std::uint64_t vertices = 0;
    int components = 0;
};
// B (x) B under the tensor rule, components over undirected edges.
TensorConnectivity tensor_square_components(const CrystalGraph& G);

struct PerfectReport {
    int level = 0;
    bool cond_connected_square = false;
    TensorConnectivity square;
    bool cond_unique_top_weight = false;
    ClassicalWeight top_weight;
    bool cond_level_bound = false;
    bool cond_eps_phi_bijective = false;
    std::vector<MinimalElement> minimal;
    bool ok() const {
        return cond_connected_square && cond_unique_top_weight && cond_level_bound && cond_eps_phi_bijective;
    }
};

PerfectReport check_perfect(const CrystalGraph& G, bool with_square = true);

}  // namespace g2pc
