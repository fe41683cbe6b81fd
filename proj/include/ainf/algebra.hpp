#pragma once

#include "ainf/exactlin/graded.hpp"
#include "ainf/exactlin/sparse.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ainf {

/// Sequence of basis indices (a_1,...,a_n); the empty word is the unit of
/// the bar coalgebra.
using Word = std::vector<int>;

/// Finite linear combination of words.
using Tensor = std::map<Word, Scalar>;

void add_to(Tensor& t, const Word& w, const Scalar& c);
void add_to(Tensor& t, const Tensor& u, const Scalar& c = 1);
std::string format_word(const Word& w, const std::vector<std::string>& labels);

/// Flattened view of a graded basis: index -> (degree, label). Indices run
/// through degrees in increasing order, labels in declared order.
struct BasisInfo {
    std::vector<int> degree;
    std::vector<std::string> label;

    static BasisInfo of(const GradedVectorSpace& v);
    int size() const { return static_cast<int>(degree.size()); }
    int find(const std::string& l) const;  // -1 if absent
    // Sum of suspended degrees |a|+1 over the word.
    int suspended(const Word& w) const;
    int internal(const Word& w) const;
};

/// Element of Hom(T^cA[1], A[1]) of a fixed suspended degree k. The weight-n
/// component is a table word -> value; as a map of A-gradings it has degree
/// n-1+k. A weight-0 component (the value on the bar unit) is allowed here;
/// A∞ structures never carry one.
struct Cochain {
    int suspended_degree = 0;
    std::map<int, std::map<Word, SparseVec>> components;

    // Adds c·target to the value on w.
    void add_term(const Word& w, const SparseVec& value, const Scalar& c = 1);
    SparseVec eval(const Word& w) const;
    const std::map<Word, SparseVec>* component(int weight) const;

    int max_weight() const;
    bool is_zero() const;
    void prune();  // drop zero values and empty components

    Cochain scaled(const Scalar& c) const;
    Cochain operator+(const Cochain& o) const;
    Cochain operator-(const Cochain& o) const;
    bool operator==(const Cochain& o) const;

    // Checks |m_n| = n-1+k on every stored entry.
    void validate(const BasisInfo& basis) const;
};

/// Gerstenhaber circle product: m' inserted into every slot of m with the
/// Koszul sign |m'|·(suspended degrees to the left).
Cochain circle(const Cochain& m, const Cochain& mp, const BasisInfo& basis);

/// Graded Lie bracket [x,y] = x∘y - (-1)^{|x||y|} y∘x.
Cochain bracket(const Cochain& x, const Cochain& y, const BasisInfo& basis);

struct StasheffViolation {
    int weight = 0;
    Word witness;
    SparseVec value;  // (m∘m)(witness)
};

/// All nonzero values of m∘m with weight <= max_weight (all if < 0).
std::vector<StasheffViolation> check_stasheff(const Cochain& m, const BasisInfo& basis, int max_weight = -1);

/// Positively graded A∞-algebra given by structure constants.
struct AInfinityAlgebra {
    std::string name;
    GradedVectorSpace space;
    Cochain m;  // suspended degree -1
    std::optional<int> unit;

    BasisInfo basis() const { return BasisInfo::of(space); }
    int dim() const { return space.total_dim(); }
    int top_degree() const { return space.total_dim() == 0 ? 0 : space.high(); }
    bool concentrated_in_degree_zero() const;
    bool has_higher_products() const;  // any m_n, n >= 3

    // Degree checks, Stasheff identities and (if a unit is declared) strict
    // unitality. Throws InvariantViolation with a witness on failure.
    void validate() const;
};

std::string describe_violation(const StasheffViolation& v, const BasisInfo& basis);

/// Strict unitality violations: m2(1,a) = a, m2(a,1) = (-1)^{|a|} a and
/// m_n(...,1,...) = 0 for n != 2. Empty when the unit is strict.
std::vector<std::string> unit_violations(const AInfinityAlgebra& a);

// Convenience constructors used by fixtures, spec files and tests.
Cochain cochain_from_product(const std::vector<std::vector<SparseVec>>& table);

/// One structure constant: coeff · output sits in the value on `inputs`.
struct LabelEntry {
    std::vector<std::string> inputs;
    std::string output;
    Scalar coeff = 1;
};

/// Cochain of suspended degree k from label-level entries.
Cochain cochain_from_entries(const BasisInfo& basis, int k, const std::vector<LabelEntry>& entries);

/// Builds (and by default validates) an algebra from labels per degree
/// starting at degree 0. With `unit` set and `complete_unit` true, the
/// products m2(1,a) = a and m2(a,1) = (-1)^{|a|}a are added for every a not
/// already listed with the unit.
AInfinityAlgebra make_algebra(const std::string& name, const std::vector<std::vector<std::string>>& labels,
                              const std::vector<LabelEntry>& entries, const std::optional<std::string>& unit = {},
                              bool complete_unit = true, bool validate = true);

/// Transport of structure along an invertible degree-0 change of basis g
/// (matrix on the flattened basis): m'_n = g∘m_n∘(g^{-1})^{⊗n}.
AInfinityAlgebra transport(const AInfinityAlgebra& a, const SparseMatrix& g);
Cochain transport(const Cochain& c, const SparseMatrix& g, const SparseMatrix& g_inv);

}  // namespace ainf
