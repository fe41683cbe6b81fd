#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ainf {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator.
using Scalar = mpq_class;

Scalar parse_scalar(const std::string& text);
std::string to_string(const Scalar& q);

/// Thrown when a structural precondition (shapes, spaces) is violated.
class StructuralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when a checked algebraic identity fails (d∘d ≠ 0, Stasheff, ...).
class InvariantViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when an answer would need data outside the truncation window.
class WindowExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Sparse vector: entries sorted by index, no explicit zeros.
class SparseVec {
public:
    using Entry = std::pair<int, Scalar>;

    SparseVec() = default;
    explicit SparseVec(std::vector<Entry> sorted_entries);
    static SparseVec unit(int index, Scalar coeff = 1);
    static SparseVec from_map(const std::map<int, Scalar>& m);

    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    const std::vector<Entry>& entries() const { return entries_; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    // Largest index carrying a nonzero entry; -1 when empty.
    int lead() const { return entries_.empty() ? -1 : entries_.back().first; }
    const Scalar& lead_coeff() const { return entries_.back().second; }
    Scalar get(int index) const;

    void add_scaled(const SparseVec& other, const Scalar& c);
    SparseVec scaled(const Scalar& c) const;
    SparseVec operator+(const SparseVec& o) const;
    SparseVec operator-(const SparseVec& o) const;

    bool operator==(const SparseVec& o) const { return entries_ == o.entries_; }

private:
    std::vector<Entry> entries_;
};

/// rows x cols matrix stored by sparse columns.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), columns_(static_cast<std::size_t>(cols)) {}

    static SparseMatrix identity(int n);
    static SparseMatrix zero(int rows, int cols) { return SparseMatrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const SparseVec& column(int j) const { return columns_[static_cast<std::size_t>(j)]; }
    void set_column(int j, SparseVec v);
    Scalar at(int i, int j) const { return column(j).get(i); }

    SparseVec apply(const SparseVec& v) const;
    SparseMatrix transpose() const;
    SparseMatrix operator*(const SparseMatrix& o) const;
    SparseMatrix operator+(const SparseMatrix& o) const;
    SparseMatrix operator-(const SparseMatrix& o) const;
    SparseMatrix scaled(const Scalar& c) const;

    bool is_zero() const;
    std::size_t nonzeros() const;
    bool operator==(const SparseMatrix& o) const;

    // Block placement helpers for assembling total complexes.
    void add_block(int row_offset, int col_offset, const SparseMatrix& block, const Scalar& c = 1);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<SparseVec> columns_;
};

}  // namespace ainf
