#pragma once

#include "ainf/algebra.hpp"
#include "ainf/exactlin/graded.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace ainf {

/// Truncation parameters shared by every complex built from an algebra.
///
/// Chain spaces are graded by total degree (tensor length − 1 plus internal
/// degree) and are cut only by tensor length, so the total-degree-N piece is
/// complete once N+1 <= max_weight. Homology in degree N needs the complete
/// piece N+1, hence the reliable bound max_weight − 2. `max_degree` bounds
/// the internal degrees the algebra itself may occupy.
struct ComplexWindow {
    int max_weight = 8;
    int max_degree = 4;

    int reliable_bound() const { return max_weight - 2; }
    void check() const;                                // W >= 2, D >= 0
    void check(const AInfinityAlgebra& a) const;       // algebra lives in degrees <= D
    void require_reliable(int degree, const char* what) const;
};

using TensorPair = std::map<std::pair<Word, Word>, Scalar>;

/// Truncated T^cA[1]: all words of length <= W graded by Σ(|a_i|+1), the
/// deconcatenation coproduct, and a fixed basis order (degree, then length,
/// then lexicographic in basis index).
class BarCoalgebra {
public:
    BarCoalgebra(const AInfinityAlgebra& a, const ComplexWindow& win);
    BarCoalgebra(const BasisInfo& basis, const ComplexWindow& win);

    const BasisInfo& basis() const { return basis_; }
    const ComplexWindow& window() const { return window_; }
    const GradedVectorSpace& space() const { return space_; }

    // Words of bar degree n, in basis order.
    const std::vector<Word>& words(int degree) const;
    int max_degree() const { return static_cast<int>(by_degree_.size()) - 1; }
    int degree(const Word& w) const { return basis_.suspended(w); }
    bool contains(const Word& w) const { return index_.count(w) > 0; }
    // Position of w within its degree block.
    int index(const Word& w) const;

    // (i_1,...,i_r) degree patterns making up (T^cA[1])_n.
    std::vector<std::vector<int>> weight_decomposition(int n) const;

    Tensor column_to_tensor(int degree, const SparseVec& v) const;
    SparseVec tensor_to_column(int degree, const Tensor& t) const;

private:
    void build();

    BasisInfo basis_;
    ComplexWindow window_;
    std::vector<std::vector<Word>> by_degree_;
    std::map<Word, int> index_;
    GradedVectorSpace space_;
};

BarCoalgebra build_bar(const AInfinityAlgebra& a, const ComplexWindow& win);

/// Δ(a_1..a_n) = Σ_{i=0..n} (a_1..a_i) ⊗ (a_{i+1}..a_n).
TensorPair coproduct(const Word& w);
TensorPair coproduct(const Tensor& t);

/// b'_m on a single word: m_i inserted at every contiguous window
/// (a_j..a_{j+i-1}), sign (-1)^{k·Σ_{l<j}(|a_l|+1)}, k the suspended degree.
Tensor apply_coderivation(const Cochain& m, const Word& w, const BasisInfo& basis);
Tensor apply_coderivation(const Cochain& m, const Tensor& t, const BasisInfo& basis);

/// (f⊗1 + 1⊗f) for a degree-k operator on T^cA[1], with the Koszul sign
/// (-1)^{k|u|} on u⊗f(v).
TensorPair coderivation_on_pair(const Cochain& m, const TensorPair& t, const BasisInfo& basis);

/// Matrix form of b'_m on the window. Throws WindowExceeded when an output
/// word would be longer than W.
GradedLinearMap coderivation_from_cochain(const Cochain& m, const BarCoalgebra& bar);

/// Checks Δ∘c = (c⊗1 + 1⊗c)∘Δ on every word of the window whose coproduct
/// stays inside it; returns the first failing word if any.
std::optional<Word> coderivation_defect(const GradedLinearMap& c, const BarCoalgebra& bar);

/// Corestriction to cogenerators; throws InvariantViolation if c is not a
/// coderivation on the window.
Cochain cochain_from_coderivation(const GradedLinearMap& c, const BarCoalgebra& bar);

/// f̂ : T^cA[1] -> T^cB[1] from f = (f_1, f_2, ...) of suspended degree 0:
/// f̂(a_1..a_n) = Σ over splittings into consecutive blocks of
/// (f(block_1), ..., f(block_r)).
GradedLinearMap coalgebra_morphism_from_map(const Cochain& f, const BarCoalgebra& source, const BarCoalgebra& target);

/// Δ∘F = (F⊗F)∘Δ and counitality on the window.
bool is_coalgebra_morphism(const GradedLinearMap& f, const BarCoalgebra& source, const BarCoalgebra& target);

/// (Δ⊗1)Δ = (1⊗Δ)Δ on every word of the window.
bool is_coassociative(const BarCoalgebra& bar);

}  // namespace ainf
