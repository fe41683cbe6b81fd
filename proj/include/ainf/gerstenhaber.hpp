#pragma once

#include "ainf/algebra.hpp"
#include "ainf/bar.hpp"
#include "ainf/exactlin/linalg.hpp"

#include <utility>
#include <vector>

namespace ainf {

/// δx = [m,x] = m∘x − (-1)^{|x|} x∘m. Lowers the suspended degree by one.
Cochain deformation_differential(const Cochain& x, const AInfinityAlgebra& a);

/// C•(A,A) restricted to cochains whose weight is forced to be finite by the
/// degree bound: a suspended-degree-s cochain has weights n <= top+1-s, since
/// its outputs n-1+s+Σ|a_i| cannot exceed the top degree of A. The weight-0
/// part (elements of A) is included. H^n lives at suspended degree 1-n.
class DeformationComplex {
public:
    using Entry = std::pair<Word, int>;  // (inputs, output basis index)

    DeformationComplex(AInfinityAlgebra a, ComplexWindow win);

    const AInfinityAlgebra& algebra() const { return a_; }
    const ComplexWindow& window() const { return win_; }

    int max_weight(int s) const { return a_.top_degree() + 1 - s; }
    std::vector<Entry> basis(int s) const;
    int dim(int s) const { return static_cast<int>(basis(s).size()); }

    SparseVec to_vector(const Cochain& x) const;
    Cochain from_vector(int s, const SparseVec& v) const;

    // Matrix of δ : C^s -> C^{s-1}.
    SparseMatrix differential(int s) const;

    // Cohomology in the H^n indexing; throws WindowExceeded if the pieces
    // involved need weights above the window.
    int cohomology_dim(int n) const;
    HomologyBasis cohomology_basis(int n) const;

    // x in C^s with δx = y, if one exists.
    std::optional<Cochain> primitive(const Cochain& y) const;

private:
    void require(int s) const;

    AInfinityAlgebra a_;
    BasisInfo basis_;
    ComplexWindow win_;
};

int hochschild_cohomology_dim(const AInfinityAlgebra& a, int n, const ComplexWindow& win);

/// m̃_n(f_1..f_n) = m_n∘(f_1⊗...⊗f_n)∘Δ^{(n)} for f_i : T^cA[1] -> B[1]
/// given as cochains; Koszul signs are taken in suspended degrees. Outputs of
/// weight above `max_weight` are dropped.
Cochain cup(const AInfinityAlgebra& b, const std::vector<Cochain>& fs, const BasisInfo& source, int max_weight);

/// The A∞-structure {m̃_n} on Hom(T^cA[1]_{<=W}, B) in the basis
/// (word -> basis element of B); Hom degrees may be negative.
struct CupStructure {
    BasisInfo basis;
    std::vector<Word> words;    // source word of each basis element
    std::vector<int> outputs;   // target basis index of each basis element
    Cochain m;                  // suspended degree -1

    int find(const Word& w, int output) const;
    // Cochain with entries on words of length <= W, as a vector here.
    SparseVec embed(const Cochain& f) const;
    Cochain extract(const SparseVec& v, int suspended_degree) const;
};

CupStructure cup_structure(const BasisInfo& source, const AInfinityAlgebra& b, const ComplexWindow& win);

}  // namespace ainf
