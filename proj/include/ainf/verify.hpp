#pragma once

#include "ainf/algebra.hpp"
#include "ainf/cyclic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ainf {

struct DerivationCheck {
    bool ok = true;
    Word witness;        // inputs where [m,D] is nonzero
    SparseVec value;
};

/// [m,D] = 0, with the first nonzero entry as witness.
DerivationCheck is_derivation(const Cochain& d, const AInfinityAlgebra& a);

/// Lie derivative on Tot CC⁺: b_D on even columns and (-1)^{|D|} b'_D on odd
/// columns, Tot_T -> Tot_{T+|D|}. It satisfies d∘L_D = (-1)^{|D|} L_D∘d.
SparseMatrix lie_derivative(CyclicHomology& h, const Cochain& d, int t);

struct LieReport {
    std::string name;
    int degree = 0;                  // suspended degree of D
    bool derivation = true;
    bool chain_map = true;           // checked on every degree used
    std::vector<int> hc_degrees;     // n with L_D∘S computed on HC_n
    std::vector<int> hc_ranks;       // rank of L_D∘S : HC_n -> HC_{n-2+|D|}
    std::vector<int> hp_parities;
    std::vector<int> hp_ranks;       // rank of L_D on the stable image in HC_p
    std::vector<bool> hp_stabilized;
    std::vector<std::string> notes;

    bool hc_zero() const;
    bool hp_zero() const;            // only over stabilized parities
    bool conclusive() const;
};

/// L_D∘S on HC_n for 2 <= n <= max_degree, and L_D on HP_p (p = 0, 1)
/// restricted to the stable image of S^k.
LieReport lie_derivative_report(CyclicHomology& h, const Cochain& d, int max_degree);

/// Degree-0 linear map between algebras, target.dim() x source.dim().
struct StrictMorphism {
    AInfinityAlgebra source;
    AInfinityAlgebra target;
    SparseMatrix map;

    SparseVec apply(const SparseVec& v) const { return map.apply(v); }
};

struct MorphismCheck {
    bool ok = true;
    Word witness;
    std::string detail;
};

/// m_n(f a_1..f a_n) = f m_n(a_1..a_n) on all basis words.
MorphismCheck check_strict_morphism(const StrictMorphism& f);

/// Graded subspace I ⊆ A spanned by the given vectors (each homogeneous).
struct AInfinityIdeal {
    std::vector<SparseVec> span;
};

struct IdealCheck {
    bool ok = true;
    Word witness;        // basis word with the ideal vector at `slot`
    int slot = -1;
    int generator = -1;
    SparseVec value;     // m_n(...) outside I
};

IdealCheck check_ideal(const AInfinityAlgebra& a, const AInfinityIdeal& i);
/// Smallest ideal containing the given vectors.
AInfinityIdeal ideal_closure(const AInfinityAlgebra& a, const std::vector<SparseVec>& gens);
/// The part of I in degree d, as vectors.
std::vector<SparseVec> ideal_part(const AInfinityAlgebra& a, const AInfinityIdeal& i, int d);

/// A/I on the basis elements that are not pivots of I, with the projection.
/// Throws InvariantViolation (with witness) if I is not an ideal.
StrictMorphism quotient(const AInfinityAlgebra& a, const AInfinityIdeal& i);

/// H_•(A, m1) with the induced m2 on chosen representatives (the unit class
/// first when A is unital); throws if the induced product is not associative.
AInfinityAlgebra homology_algebra(const AInfinityAlgebra& a);
/// H_0(A, m1) as an ordinary algebra in degree 0.
AInfinityAlgebra h0(const AInfinityAlgebra& a);

struct EquivalenceCheck {
    bool ok = true;
    std::vector<int> source_dims;   // dim H_d(A, m1)
    std::vector<int> target_dims;
    std::vector<int> ranks;         // rank of the induced map in degree d
};

/// Induced map on H_•(−, m1) is an isomorphism in every degree.
EquivalenceCheck is_equivalence(const StrictMorphism& f);

/// Reports shared by the theorem harnesses.
struct DimensionRow {
    std::string theory;   // HH, HC, HP
    int degree = 0;
    int source = 0;
    int target = 0;
    int induced_rank = -1;  // -1 when the two sides are not related by a map
    bool stabilized = true;
    bool ok() const { return source == target && (induced_rank < 0 || induced_rank == source); }
};

struct TheoremReport {
    std::string name;
    std::vector<DimensionRow> rows;
    std::vector<std::string> evidence;
    bool precondition = true;   // e.g. f strict and an equivalence
    bool inconclusive = false;  // some HP side did not stabilize
    bool violated = false;

    bool passed() const { return precondition && !inconclusive && !violated; }
    std::string status() const;  // PASS, FAIL or INCONCLUSIVE
};

/// HH and HC for n <= max_degree and HP for both parities: dimensions on
/// both sides and the rank of the map induced by f.
TheoremReport compare_homology(const StrictMorphism& f, const ComplexWindow& win, int max_degree, bool hh_hc);

/// Strict equivalence f: dimension equality and invertible induced maps.
TheoremReport verify_prop23(const StrictMorphism& f, const ComplexWindow& win, int max_degree);

/// Ideal with I_0 = 0: HP(A) -> HP(A/I) is an isomorphism.
TheoremReport verify_thm44(const AInfinityAlgebra& a, const AInfinityIdeal& i, const ComplexWindow& win);

/// The acyclic ideal J = Im(m1|A_1) ⊕ C with m1 : C ≅ Im(m1|A_1) (then
/// closed under the products), so that A/J has (A/J)_0 = H_0(A).
AInfinityIdeal degree_zero_ideal(const AInfinityAlgebra& a);

/// HP(A) against classical HP(H_0(A)) through the pipeline A -> A/J ->
/// (A/J)_0 and directly through the classical cyclic complex.
TheoremReport verify_thm45(const AInfinityAlgebra& a, const ComplexWindow& win);

/// Labelled experiment: for a morphism that is an isomorphism on H_0 and
/// onto on H_1, compare HP. Never asserted.
TheoremReport conjecture_check_1connected(const StrictMorphism& f, const ComplexWindow& win);

}  // namespace ainf
