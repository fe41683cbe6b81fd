#pragma once

#include "ainf/exactlin/sparse.hpp"

#include <map>
#include <optional>
#include <vector>

namespace ainf {

/// Rank by fraction-free (integer, content-normalised) sparse column
/// elimination. Columns are scaled to primitive integer vectors first, so
/// intermediate growth stays bounded by the Bareiss determinant bound.
int rank(const SparseMatrix& m);

/// Incremental echelon basis keyed by leading (largest) index. Each stored
/// row optionally carries a tag vector recording which combination of
/// generators it came from; reductions propagate tags linearly.
class Echelon {
public:
    struct Reduction {
        SparseVec remainder;
        SparseVec combination;  // Σ c_i·tag_i of the rows subtracted
    };

    Reduction reduce(SparseVec v) const;

    // Reduces v (tag follows along) and stores it if independent.
    // Returns true when the rank grew.
    bool insert(SparseVec v, SparseVec tag = {});

    bool contains(const SparseVec& v) const { return reduce(v).remainder.empty(); }
    int size() const { return static_cast<int>(rows_.size()); }

    // Leading indices of stored rows, ascending.
    std::vector<int> pivots() const;

private:
    struct Row {
        SparseVec vec;  // lead coefficient normalised to 1
        SparseVec tag;
    };
    std::map<int, Row> rows_;
};

/// Basis of ker m as vectors in the source space, deterministic order.
std::vector<SparseVec> kernel_basis(const SparseMatrix& m);

/// Some x with m·x = b, if one exists.
std::optional<SparseVec> solve(const SparseMatrix& m, const SparseVec& b);

/// Homology of C_{N+1} --in--> C_N --out--> C_{N-1} at C_N with chosen
/// representatives and a coordinate map. Representatives are the reduced
/// kernel vectors that stay independent of the boundaries, taken in kernel
/// order, so the basis is deterministic.
class HomologyBasis {
public:
    // Either map may have zero columns/rows; `dim` is dim C_N.
    HomologyBasis(int dim, const SparseMatrix& incoming, const SparseMatrix& outgoing);

    int dim() const { return static_cast<int>(reps_.size()); }
    int chain_dim() const { return chain_dim_; }
    const std::vector<SparseVec>& representatives() const { return reps_; }

    // Coordinates of the class of a cycle in the representative basis.
    // Throws InvariantViolation if z is not a cycle.
    SparseVec coordinates(const SparseVec& z) const;
    bool is_boundary(const SparseVec& z) const;

private:
    int chain_dim_;
    Echelon boundaries_;
    Echelon with_reps_;
    std::vector<SparseVec> reps_;
    SparseMatrix outgoing_;
};

/// Matrix of the map induced on homology by a chain-level map `f`
/// (source chains -> target chains), in the two representative bases.
SparseMatrix induced_map(const HomologyBasis& source, const HomologyBasis& target, const SparseMatrix& f);

/// Bounded chain complex C_lo..C_hi with d_n : C_n -> C_{n-1}.
struct ChainComplex {
    int lo = 0;
    int hi = -1;
    std::map<int, int> dims;               // C_n dimensions
    std::map<int, SparseMatrix> boundary;  // d_n, present for lo < n <= hi

    int dim(int n) const;
    SparseMatrix d(int n) const;  // zero map if outside
    bool is_complex() const;      // every d_n∘d_{n+1} = 0
};

/// dim ker d_n − rank d_{n+1} of the bounded complex (zero outside lo..hi).
int homology_dim(const ChainComplex& c, int n);

/// Cohomology of the dual complex at n (matrices transposed).
int cohomology_dim(const ChainComplex& c, int n);

}  // namespace ainf
