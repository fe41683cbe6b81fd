#pragma once

#include "ainf/algebra.hpp"
#include "ainf/bar.hpp"
#include "ainf/exactlin/linalg.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace ainf {

/// Chains (a_0,...,a_n) of A^{⊗n+1} graded by the total degree
/// N = n + Σ|a_i|. Piece N is complete whenever N+1 <= W, so pieces
/// 0..W-1 are built and homology is trusted up to W-2.
///
/// Every operator is given on single words (returning a Tensor) and as a
/// sparse matrix between pieces; matrices are cached per instance.
class CyclicChains {
public:
    CyclicChains(AInfinityAlgebra a, ComplexWindow win);

    const AInfinityAlgebra& algebra() const { return a_; }
    const BasisInfo& basis() const { return basis_; }
    const ComplexWindow& window() const { return win_; }
    int top_piece() const { return win_.max_weight - 1; }

    // Words of total degree N in basis order (length, then lexicographic).
    const std::vector<Word>& piece(int n) const;
    int dim(int n) const { return static_cast<int>(piece(n).size()); }
    int index(int n, const Word& w) const;
    int total_degree(const Word& w) const { return basis_.suspended(w) - 1; }

    // Word-level operators.
    Tensor lambda(const Word& w) const;
    Tensor lambda_inverse(const Word& w) const;
    Tensor norm(const Word& w) const;
    Tensor bprime(const Cochain& c, const Word& w) const;
    Tensor b(const Cochain& c, const Word& w) const;
    Tensor extra_s(const Word& w) const;  // (1, a_0, ..., a_n)
    Tensor connes_B(const Word& w) const;

    // Matrices on piece N. b, b' of a cochain of suspended degree k map
    // piece N to piece N+k; B and s map N to N+1.
    SparseMatrix lambda(int n) const;
    SparseMatrix norm(int n) const;
    SparseMatrix one_minus_lambda(int n) const;
    SparseMatrix bprime(int n) const;
    SparseMatrix b(int n) const;
    SparseMatrix bprime(const Cochain& c, int n) const;
    SparseMatrix b(const Cochain& c, int n) const;
    SparseMatrix extra_s(int n) const;
    SparseMatrix connes_B(int n) const;

    // Matrix of a word-level map from piece n to piece m.
    SparseMatrix matrix(int n, int m, const std::function<Tensor(const Word&)>& f) const;

private:
    AInfinityAlgebra a_;
    BasisInfo basis_;
    ComplexWindow win_;
    int unit_ = -1;

    mutable std::mutex mu_;
    mutable std::map<int, std::vector<Word>> pieces_;
    mutable std::map<int, std::map<Word, int>> index_;
    mutable std::map<std::pair<std::string, int>, SparseMatrix> cache_;

    SparseMatrix cached(const std::string& key, int n, const std::function<SparseMatrix()>& build) const;
};

/// Total complex assembled from blocks; offsets locate each (total degree,
/// column) block inside the total space.
struct TotalComplex {
    ChainComplex complex;
    // offset[T][q] is the first coordinate of column q inside Tot_T; the
    // column holds piece piece_of(T,q).
    std::map<int, std::map<int, int>> offset;
    std::map<int, std::map<int, int>> size;

    int dim(int t) const { return complex.dim(t); }
};

/// Tot CC⁺ up to total degree hi: column q holds piece T-q; vertical b on
/// even and -b' on odd columns; horizontal 1-λ from odd, N from even q >= 2.
TotalComplex cyclic_total_complex(const CyclicChains& c, int hi);
/// Columns 0 and 1 only; its homology is HH for unital algebras.
TotalComplex two_column_complex(const CyclicChains& c, int hi);
/// (b,B) bicomplex: Tot_T = ⊕_p piece T-2p, d = b + B. Needs a unit.
TotalComplex bB_total_complex(const CyclicChains& c, int hi);
/// Hochschild complex (piece N, b).
ChainComplex hochschild_complex(const CyclicChains& c, int hi);

/// Connes' complex of coinvariants C/(1-λ) with the induced b.
struct LambdaComplex {
    ChainComplex complex;
    // Orbit representatives per piece and the projection from chains.
    std::map<int, std::vector<Word>> reps;
    std::map<int, SparseMatrix> projection;
};
LambdaComplex lambda_complex(const CyclicChains& c, int hi);

/// S : Tot_T -> Tot_{T-2} drops columns 0 and 1.
SparseMatrix periodicity_map(const TotalComplex& tot, int t);
/// I : piece T -> Tot_T, inclusion as column 0.
SparseMatrix column_zero_inclusion(const TotalComplex& tot, const CyclicChains& c, int t);

struct HomologyReport {
    std::string theory;  // HH, HC, HP, HC^, HC(lambda), HC(bB), H
    int degree = 0;
    int dim = 0;
    bool stabilized = true;
    std::optional<int> stable_at;   // ladder step for HP
    std::vector<int> ladder;        // r_0 = dim HC_p, r_k = rank S^k
    std::vector<std::string> notes;
};

/// Caches the complexes and homology bases of one algebra on one window.
class CyclicHomology {
public:
    CyclicHomology(AInfinityAlgebra a, ComplexWindow win);

    const CyclicChains& chains() const { return chains_; }
    const AInfinityAlgebra& algebra() const { return chains_.algebra(); }
    const ComplexWindow& window() const { return chains_.window(); }

    // All of these throw WindowExceeded beyond the reliable bound.
    int hh(int n);
    int hc(int n);
    int hc_lambda(int n);
    int hc_bB(int n);
    int hc_cohomology(int n);
    int two_column(int n);

    const HomologyBasis& hh_basis(int n);
    const HomologyBasis& hc_basis(int n);
    const HomologyBasis& two_column_basis(int n);

    // Total complex built through degree `hi` (extends lazily).
    const TotalComplex& tot(int hi);
    const TotalComplex& two_columns(int hi);

    // Matrix of S^k : HC_{n} -> HC_{n-2k} in the representative bases.
    SparseMatrix s_power(int n, int k);

    // HP_p as the stable rank of S^k : HC_{p+2k} -> HC_p; the ladder is
    // stable at the least k >= 1 with r_{k-1} = r_k, or as soon as r_k = 0.
    // `max_steps` caps k (defaults to what the window allows).
    HomologyReport hp(int parity, int max_steps = -1);

private:
    CyclicChains chains_;
    std::unique_ptr<TotalComplex> tot_;
    std::unique_ptr<TotalComplex> two_;
    std::map<int, HomologyBasis> hh_bases_;
    std::map<int, HomologyBasis> hc_bases_;
    std::map<int, HomologyBasis> two_bases_;
};

HomologyReport hh_report(const AInfinityAlgebra& a, int n, const ComplexWindow& win);
HomologyReport hc_report(const AInfinityAlgebra& a, int n, const ComplexWindow& win);
HomologyReport hp_report(const AInfinityAlgebra& a, int parity, const ComplexWindow& win);

/// Degree-0 functionals f with f(m2(a,b) - (-1)^{|a||b|} m2(b,a)) = 0 and
/// f∘m1 = 0, as vectors over the basis of A (supported on A_0).
std::vector<SparseVec> closed_graded_traces(const AInfinityAlgebra& a);

/// One node of the SBI sequence … -> H(K)_n -I-> HC_n -S-> HC_{n-2} -∂-> H(K)_{n-1} -> …
/// where K is the two-column complex (homology HH for unital algebras).
struct SbiNode {
    std::string name;  // e.g. "HC_3"
    int dim = 0;
    int rank_in = 0;
    int rank_out = 0;
    bool exact() const { return rank_in + rank_out == dim; }
};

struct SbiReport {
    std::vector<SbiNode> nodes;
    // dim HH_n against dim H(K)_n and the rank of the column inclusion
    bool hh_matches = true;
    std::vector<std::string> notes;
    bool exact() const;
};

/// Checks rank-exactness at every node whose degree is <= max_degree; needs
/// max_degree + 1 <= W - 1 for the lifts.
SbiReport sbi_check(CyclicHomology& h, int max_degree);

/// Ordinary (ungraded) algebras and their classical Hochschild and cyclic
/// complexes, written with the textbook formulas for b, b', t and N.
namespace classical {

struct Algebra {
    int dim = 0;
    std::vector<std::vector<SparseVec>> mult;  // mult[i][j] = e_i e_j
    std::vector<std::string> labels;
};

Algebra from(const AInfinityAlgebra& a);  // requires a concentrated in degree 0 with m2 only

class Cyclic {
public:
    Cyclic(Algebra a, int max_n);
    int hh(int n);
    int hc(int n);
    HomologyReport hp(int parity, int max_steps = -1);

private:
    const std::vector<Word>& words(int n);
    SparseMatrix b(int n);
    SparseMatrix bprime(int n);
    SparseMatrix one_minus_t(int n);
    SparseMatrix norm(int n);
    void build_tot(int hi);
    const HomologyBasis& hc_basis(int n);

    Algebra a_;
    int max_n_;
    std::map<int, std::vector<Word>> words_;
    std::map<int, std::map<Word, int>> index_;
    TotalComplex tot_;
    int built_ = -1;
    std::map<int, HomologyBasis> hc_bases_;
};

}  // namespace classical

}  // namespace ainf
