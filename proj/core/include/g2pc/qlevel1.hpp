#pragma once
#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "g2pc/qarith.hpp"
#include "g2pc/signature.hpp"

namespace g2pc {

// V^1 = V(L1) + V(0), basis 1..6, 01, 02, -6..-1, 9 (indices 0..14).
inline constexpr int kV1Dim = 15;
inline constexpr int kPhi = 14;  // the V(0) vector "9"

std::string_view v1_basis_name(int b);
std::optional<int> v1_basis_index(std::string_view s);  // also "7", "8" for 01, 02
std::pair<int, int> v1_weight(int b);                   // (m1, m2)
int v1_h(int i, int b);                                 // <h_i, wt>

enum class Gen : std::uint8_t { E, F, T, Tinv };

using ModVec = std::vector<QRat>;  // size kV1Dim
// Matrix of a generator acting on V^1, entry [target][source].
const QMatrix& v1_matrix(Gen g, int i);
ModVec v1_apply(Gen g, int i, const ModVec& v);
ModVec v1_basis(int b);

struct NamedCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Commutators, t-conjugation and q-Serre relations with divided powers.
std::vector<NamedCheck> verify_module_relations();

// Vectors of V_x (x) V_y: coefficient of v_a (x) v_b is a Laurent polynomial in x, y.
using TVec = std::map<std::pair<int, int>, XY>;

// Delta(e) = e (x) t^-1 + 1 (x) e, Delta(f) = f (x) 1 + t (x) f.  With spectral
// parameters e_0 picks up x (first factor) or y (second), f_0 their inverses.
TVec tensor_apply(Op op, int i, const TVec& w, bool spectral = true);
TVec tensor_divided(Op op, int i, int k, const TVec& w, bool spectral = true);

struct OpWord {
    Op op;
    int color;
    int power;
};
// "f0(2) f1 f2(3) f1": read left to right, applied right-most first.
std::vector<OpWord> parse_word(std::string_view s);
TVec apply_word(const std::vector<OpWord>& word, TVec v, bool spectral = true);

struct SingularVector {
    std::string name;  // "2L1", "3L2", "2L2", "L1_1".."L1_3", "0_1", "0_2"
    std::pair<int, int> weight;
    TVec vec;
};

// The eight highest weight vectors of V^1 (x) V^1, with the repaired 01(x)02
// coefficient of the second weight-zero vector.
const std::vector<SingularVector>& singular_vectors();
const SingularVector& singular(const std::string& name);

struct SingularReport {
    std::vector<NamedCheck> checks;
    int zero_weight_singular_dim = 0;
    std::map<std::pair<int, int>, int> multiplicities;  // highest weight -> count
    QRat solved_c;  // coefficient 01(x)02 is -q^6/([2]_1 c)
    bool ok() const;
};
SingularReport verify_singular();

struct FusionItem {
    int number = 0;
    std::string word, source, target;
    XY expected;
    bool pass = false;
    std::string reconstruction;  // empty when the item is used as printed
    std::optional<bool> printed_holds;
};
std::vector<FusionItem> verify_fusion_identities();

struct RMatrixReport {
    std::vector<NamedCheck> checks;
    std::vector<NamedCheck> printed_forms;  // the relations exactly as printed, for the record
    bool ok() const;
};
RMatrixReport rmatrix_checks();

struct PolarizationReport {
    bool printed_diagonal_is_prepolarization = false;
    bool solution_unique = false;
    QMatrix gram;  // symmetric, kV1Dim x kV1Dim
    bool gram_identity_at_zero = false;
    bool axioms_hold = false;
    std::vector<NamedCheck> string_norms;  // norms along i-strings, corrected where needed
    std::vector<NamedCheck> printed_forms;
    bool ok() const;
};
PolarizationReport check_polarization();

// Leading terms of the Kashiwara operators on the basis; -1 = in q*L.
struct CrystalLimit {
    std::array<std::array<int, kV1Dim>, 3> f{}, e{};
    bool lattice_preserved = true;
    std::vector<std::string> problems;
};
CrystalLimit crystal_limit();

}  // namespace g2pc
