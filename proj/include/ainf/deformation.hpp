#pragma once

#include "ainf/algebra.hpp"
#include "ainf/cyclic.hpp"
#include "ainf/gerstenhaber.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ainf {

/// Degree-0 functional τ : A -> Q as a vector over the basis of A.
struct Trace {
    SparseVec values;

    Scalar operator()(const SparseVec& v) const;
    Scalar operator()(int basis_index) const { return values.get(basis_index); }
};

// Witness of a failed trace condition: τ(m2(a,b)) != τ(m2(b,a)) for degree-0
// a, b, or τ(m1(a)) != 0 for degree-1 a (then `right` is empty).
struct TraceDefect {
    int order = 0;
    std::vector<int> left;
    std::vector<int> right;
    Scalar value;
};

/// First failure of the closed-trace conditions for the structure cochain
/// `c` (same conditions as closed_graded_traces).
std::optional<TraceDefect> trace_defect(const Cochain& c, const Trace& tau, const BasisInfo& basis);

/// m + t m⁽¹⁾ + ... + t^N m⁽ᴺ⁾ with every m⁽ⁱ⁾ of suspended degree -1.
struct FormalDeformation {
    AInfinityAlgebra base;
    std::vector<Cochain> terms;  // terms[i-1] = m⁽ⁱ⁾

    int order() const { return static_cast<int>(terms.size()); }
    // term(0) is the base structure; zero above the order.
    Cochain term(int i) const;
    // Σ_{i+j=n} m⁽ⁱ⁾∘m⁽ʲ⁾, the order-n Maurer-Cartan expression.
    Cochain mc_defect(int n) const;
    std::optional<int> first_mc_failure() const;
};

/// Closedness: τ is a closed trace for every m⁽ⁱ⁾, i <= order. Returns the
/// first failing order with a witness pair.
std::optional<TraceDefect> closedness_defect(const FormalDeformation& d, const Trace& tau);
inline bool is_closed(const FormalDeformation& d, const Trace& tau) { return !closedness_defect(d, tau); }

/// Functional on one piece of the cyclic chains, indexed like piece(n).
struct PieceFunctional {
    int piece = 0;
    SparseVec values;
};

/// Element of the dual of Tot CC⁺ in total degree `degree`; column q is a
/// functional on piece degree-q.
struct TotCochain {
    int degree = 0;
    std::map<int, SparseVec> columns;

    SparseVec flatten(const TotalComplex& tot) const;
    static TotCochain unflatten(int degree, const SparseVec& v, const TotalComplex& tot);
    bool is_zero() const;
};

/// φ̃(a_0,...) = ± τ(m2(a_0, φ(a_1..a_p)), a_{p+1}, ...), summed over the
/// weights of φ; the sign is the Koszul sign of φ passing a_0. Lands on
/// piece q+1-|φ|. For a b-cocycle τ, φ̃∘b = (-1)^{|φ|+1} (δφ)~.
PieceFunctional pair_cochain_with_cocycle(const Cochain& phi, const PieceFunctional& tau, const CyclicChains& c);

/// ψ = (ψ_p, ψ_{p-1}) in total degree p = 1-|φ|: column 0 is the first
/// pairing with τ, column 1 is (-1)^{|φ|} τ(φ(a_0,...)).
TotCochain pair_with_trace(const Cochain& phi, const Trace& tau, const CyclicChains& c);

/// ψ∘d on Tot_{p+1} (the coboundary of a dual Tot cochain).
TotCochain coboundary(const TotCochain& psi, const TotalComplex& tot);

struct DualClass {
    bool cocycle = false;
    bool coboundary = false;  // meaningful only for cocycles
    TotCochain defect;        // ψ∘d, zero iff cocycle
};

/// Cocycle and coboundary tests in the dual of Tot CC⁺ (needs degree+1
/// within the complete pieces).
DualClass dual_class(const TotCochain& psi, const CyclicChains& c);

struct ObstructionReport {
    int order = 0;        // the deformation being extended has this order
    Cochain rhs;          // -Σ_{i+j=n+1, i,j>=1} m⁽ⁱ⁾∘m⁽ʲ⁾
    bool rhs_closed = false;
    bool exact = false;   // class in H³(A,A) vanishes
    std::optional<DualClass> cyclic;    // class of ψ(rhs) in HC³ when τ is given
    std::optional<Cochain> witness;     // m⁽ⁿ⁺¹⁾ with δ m⁽ⁿ⁺¹⁾ = rhs (closed if τ given)
    bool witness_mc = false;
    bool witness_closed = false;
    std::vector<std::string> notes;

    bool unobstructed() const { return witness.has_value(); }
};

/// Obstruction to extending `d` by one order. With a trace, `d` must be
/// closed (StructuralError otherwise) and the witness is solved under the
/// closedness constraint.
ObstructionReport obstruction_class(const FormalDeformation& d, const std::optional<Trace>& tau, const ComplexWindow& win);

struct EquivalenceReport {
    int order = 0;        // first order where the two deformations differ
    Cochain difference;   // m'⁽ⁿ⁾ - m⁽ⁿ⁾
    bool difference_closed = false;
    bool exact = false;   // class in H²(A,A) vanishes
    std::optional<DualClass> cyclic;     // class in HC² when τ is given
    std::optional<Cochain> witness;      // g with δg = difference (τ∘g = 0 if τ given)
    std::vector<std::string> notes;
};

/// Obstruction to a gauge equivalence id + t^n g between two deformations
/// that agree below order n.
EquivalenceReport equivalence_obstruction(const FormalDeformation& d1, const FormalDeformation& d2,
                                          const std::optional<Trace>& tau, const ComplexWindow& win);

}  // namespace ainf
