#pragma once
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "g2pc/a2_crystal.hpp"
#include "g2pc/cartan.hpp"
#include "g2pc/g2_crystal.hpp"

namespace g2pc {

int floor_div(int a, int b);  // mathematical floor, b > 0
inline int pos_part(int a) { return a > 0 ? a : 0; }

// f0^r f1^q f0^p applied to the highest element of B^i_(k,j) at a fixed level.
struct AParam {
    int i = 0, k = 0, j = 0, p = 0, q = 0, r = 0;
    std::string str() const;
    auto operator<=>(const AParam&) const = default;
};

bool param_in_range(int l, const AParam& b);
std::vector<AParam> enumerate_A(int l);
std::uint64_t count_A(int l);  // block sum
std::uint64_t count_G(int l);  // sum of G2 dimensions up to l
std::pair<int, int> weight_A(const AParam& b);  // (wt_1, wt_0)
AParam CA(const AParam& b);
AParam iota(const AParam& b);  // level l-1 into level l
int y_of(int l, int i, int j);  // floor((l-i-j)/3)

struct ConstructionFault : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ASet : std::uint8_t { C = 1, W = 2, U = 4, R = 8 };

// Explicit tableau anchors.
GTableau ur_element(int l, int p);     // image of f0^p of the top block highest element
GTableau ur_lowest(int l, int p);      // image of e0^p of its lowest element
GTableau uelement(int l, int k, int p);          // e2^(l-k) of ur_element
GTableau uelement_display(int l, int k, int p);  // closed-form cases
GTableau allhighest(int l, int i, int j);
GTableau f0pR(int l, int i, int j, int p);

// One level: the model crystal A, its operators, the bijection onto G^l and
// the induced 0-arrows.  Built by AffineModel; immutable afterwards.
class Level {
public:
    int level() const { return l_; }

    // A side.
    int size() const { return static_cast<int>(params_.size()); }
    const AParam& param(int a) const { return params_[a]; }
    int index(const AParam& b) const;  // -1 if absent
    int a_step(Op op, int color, int a) const;  // color 1 or 0; -1 = none
    int a_pow(Op op, int color, int n, int a) const;
    int EA(int a) const { return ea_[a]; }
    int FA(int a) const { return fa_[a]; }
    int ea_depth(int a) const;
    int fa_depth(int a) const;
    int a_depth(Op op, int color, int a) const;
    int highest(int i, int k, int j) const { return index({i, k, j, 0, 0, 0}); }
    unsigned sets(int a) const { return sets_[a]; }
    bool in_set(ASet s, int a) const { return sets_[a] & static_cast<unsigned>(s); }
    // Shell A^(l): elements outside the image of the previous level.
    bool in_shell(int a) const { return shell_[a]; }

    // G side.
    int g_size() const { return static_cast<int>(tabs_.size()); }
    const GTableau& tableau(int g) const { return tabs_[g]; }
    int g_index(const GTableau& t) const;  // -1 if absent
    int g_step(Op op, int color, int g) const { return gmoves_[static_cast<int>(op)][color][g]; }

    int phi(int a) const { return phi_[a]; }
    int phi_inv(int g) const { return phi_inv_[g]; }
    const std::string& phi_rule(int a) const { return rule_names_[phi_rule_[a]]; }

private:
    friend class AffineModel;
    int l_ = 0;
    std::vector<AParam> params_;
    std::vector<int> block_base_;  // indexed by (i,k,j)
    std::vector<std::shared_ptr<const A2Table>> block_table_;
    std::vector<int> amoves_[2][2];  // [op][color 0/1]
    std::vector<int> ea_, fa_;
    std::vector<unsigned> sets_;
    std::vector<bool> shell_;
    std::vector<GTableau> tabs_;
    std::unordered_map<GTableau, int, GTableauHash> gidx_;
    std::vector<int> gmoves_[2][3];
    std::vector<int> phi_, phi_inv_;
    std::vector<std::uint8_t> phi_rule_;
    std::vector<std::string> rule_names_;
    int block_slot(int i, int k, int j) const { return (i * (l_ + 1) + k) * (l_ + 1) + j; }
};

// Levels are built bottom-up (E_A and the interior of Phi recurse on l-1) and
// cached.  Not thread-safe while building; built levels are read-only.
class AffineModel {
public:
    const Level& level(int l);

private:
    std::vector<std::unique_ptr<Level>> levels_;
    std::unique_ptr<Level> build(int l);
    void build_params(Level& L);
    void build_EA(Level& L, const Level* prev);
    void build_sets(Level& L);
    void build_G(Level& L);
    void build_phi(Level& L, const Level* prev);
};

// Exhaustive axiom checks; failures are data.
struct AxiomCheck {
    std::string name;
    bool pass = true;
    std::uint64_t checked = 0;
    std::vector<std::string> counterexamples;  // first few
    void fail(std::string what);
};

struct ConstructionReport {
    int level = 0;
    std::vector<AxiomCheck> checks;
    bool ok() const;
    const AxiomCheck* find(const std::string& name) const;
};

ConstructionReport verify_construction(const Level& L);

// B^l as a plain colored graph on G^l (vertex order = Level tableau order).
struct CrystalGraph {
    int level = 0;
    std::vector<GTableau> vertices;
    std::array<std::vector<int>, 3> f, e;  // -1 = none
    int size() const { return static_cast<int>(vertices.size()); }
};

CrystalGraph build_Bl(const Level& L);

}  // namespace g2pc
