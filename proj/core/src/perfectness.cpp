#include "g2pc/perfectness.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace g2pc {

namespace {

int depth(const std::vector<int>& step, int v) {
    int n = 0;
    while ((v = step[v]) >= 0) ++n;
    return n;
}

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a), b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

// w <= top in the order generated by cl(alpha_1), cl(alpha_2)
bool below(const ClassicalWeight& w, const ClassicalWeight& top) {
    const int d1 = top.m1 - w.m1, d2 = top.m2 - w.m2;
    return 2 * d1 + d2 >= 0 && 3 * d1 + 2 * d2 >= 0;
}

}  // namespace

std::vector<EpsPhi> eps_phi_all(const CrystalGraph& G) {
    std::vector<EpsPhi> out(G.size());
    for (int v = 0; v < G.size(); ++v) out[v] = eps_phi_total(G, v);
    return out;
}

EpsPhi eps_phi_total(const CrystalGraph& G, int v) {
    EpsPhi r;
    r.eps = {depth(G.e[0], v), depth(G.e[1], v), depth(G.e[2], v)};
    r.phi = {depth(G.f[0], v), depth(G.f[1], v), depth(G.f[2], v)};
    return r;
}

std::vector<MinimalElement> minimal_elements(const CrystalGraph& G) {
    std::vector<MinimalElement> out;
    for (int v = 0; v < G.size(); ++v) {
        const auto ep = eps_phi_total(G, v);
        if (ep.eps.level() == G.level) out.push_back({G.vertices[v], ep.eps, ep.phi});
    }
    return out;
}

std::vector<AxiomCheck> check_crystal_axioms(const CrystalGraph& G) {
    std::vector<AxiomCheck> out(3);
    out[0].name = "f/e inverse";
    out[1].name = "weight shift";
    out[2].name = "phi-eps=wt";
    for (int v = 0; v < G.size(); ++v) {
        const auto w = G.vertices[v].classical_weight();
        const auto ep = eps_phi_total(G, v);
        for (int c = 0; c < 3; ++c) {
            const std::string at = " color " + std::to_string(c) + " at " + G.vertices[v].str();
            ++out[0].checked, ++out[1].checked, ++out[2].checked;
            const int f = G.f[c][v], e = G.e[c][v];
            if ((f >= 0 && G.e[c][f] != v) || (e >= 0 && G.f[c][e] != v)) out[0].fail("inverse" + at);
            if (f >= 0 && G.vertices[f].classical_weight() != w - simple_root(c)) out[1].fail("f" + at);
            if (e >= 0 && G.vertices[e].classical_weight() != w + simple_root(c)) out[1].fail("e" + at);
            if (ep.phi.wt(c) - ep.eps.wt(c) != w.wt(c)) out[2].fail("string length" + at);
        }
    }
    return out;
}

int count_components(const CrystalGraph& G) {
    Dsu d(G.size());
    int comps = G.size();
    for (int c = 0; c < 3; ++c)
        for (int v = 0; v < G.size(); ++v)
            if (G.f[c][v] >= 0 && d.unite(v, G.f[c][v])) --comps;
    return comps;
}

TensorConnectivity tensor_square_components(const CrystalGraph& G) {
    const int n = G.size();
    const auto ep = eps_phi_all(G);
    Dsu d(static_cast<std::size_t>(n) * n);
    int comps = n * n;
    // f on a (x) b acts on a iff phi(a) > eps(b); e is its inverse, so f-edges suffice
    for (int c = 0; c < 3; ++c)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                int to;
                if (ep[a].phi.wt(c) > ep[b].eps.wt(c)) {
                    to = G.f[c][a] < 0 ? -1 : G.f[c][a] * n + b;
                } else {
                    to = G.f[c][b] < 0 ? -1 : a * n + G.f[c][b];
                }
                if (to >= 0 && d.unite(a * n + b, to)) --comps;
            }
    return {static_cast<std::uint64_t>(n) * n, comps};
}

PerfectReport check_perfect(const CrystalGraph& G, bool with_square) {
    PerfectReport rep;
    rep.level = G.level;
    const int l = G.level;

    if (with_square) {
        rep.square = tensor_square_components(G);
        rep.cond_connected_square = rep.square.components == 1;
    }

    std::set<ClassicalWeight> weights;
    for (const auto& t : G.vertices) weights.insert(t.classical_weight());
    std::vector<ClassicalWeight> maximal;
    for (const auto& w : weights) {
        const bool dominated = std::any_of(weights.begin(), weights.end(),
                                           [&](const ClassicalWeight& o) { return o != w && below(w, o); });
        if (!dominated) maximal.push_back(w);
    }
    if (maximal.size() == 1) {
        rep.top_weight = maximal[0];
        const auto hits = std::count_if(G.vertices.begin(), G.vertices.end(),
                                        [&](const GTableau& t) { return t.classical_weight() == rep.top_weight; });
        const bool all_below = std::all_of(weights.begin(), weights.end(),
                                           [&](const ClassicalWeight& w) { return below(w, rep.top_weight); });
        rep.cond_unique_top_weight = hits == 1 && all_below;
    }

    const auto ep = eps_phi_all(G);
    rep.cond_level_bound =
        std::all_of(ep.begin(), ep.end(), [&](const EpsPhi& x) { return x.eps.level() >= l; });

    rep.minimal = minimal_elements(G);
    const auto dom = dominant_weights(l);
    const std::set<ClassicalWeight> target(dom.begin(), dom.end());
    std::set<ClassicalWeight> es, ps;
    for (const auto& m : rep.minimal) {
        es.insert(m.eps);
        ps.insert(m.phi);
    }
    rep.cond_eps_phi_bijective = es.size() == rep.minimal.size() && ps.size() == rep.minimal.size() &&
                                 es == target && ps == target;
    return rep;
}

}  // namespace g2pc
