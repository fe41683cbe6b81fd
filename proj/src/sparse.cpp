#include "ainf/exactlin/sparse.hpp"

#include <algorithm>

namespace ainf {

Scalar parse_scalar(const std::string& text)
{
    std::string t;
    for (char c : text)
        if (c != ' ' && c != '+') t.push_back(c);
    if (t.empty()) throw StructuralError("empty rational literal");
    Scalar q;
    if (q.set_str(t, 10) != 0) throw StructuralError("malformed rational literal '" + text + "'");
    if (q.get_den() == 0) throw StructuralError("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Scalar& q)
{
    return q.get_str();
}

SparseVec::SparseVec(std::vector<Entry> sorted_entries) : entries_(std::move(sorted_entries))
{
    std::erase_if(entries_, [](const Entry& e) { return e.second == 0; });
}

SparseVec SparseVec::unit(int index, Scalar coeff)
{
    SparseVec v;
    if (coeff != 0) v.entries_.emplace_back(index, std::move(coeff));
    return v;
}

SparseVec SparseVec::from_map(const std::map<int, Scalar>& m)
{
    SparseVec v;
    v.entries_.reserve(m.size());
    for (const auto& [i, c] : m)
        if (c != 0) v.entries_.emplace_back(i, c);
    return v;
}

Scalar SparseVec::get(int index) const
{
    auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                               [](const Entry& e, int i) { return e.first < i; });
    if (it != entries_.end() && it->first == index) return it->second;
    return 0;
}

void SparseVec::add_scaled(const SparseVec& other, const Scalar& c)
{
    if (c == 0 || other.empty()) return;
    std::vector<Entry> out;
    out.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
        if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
            out.push_back(std::move(*a));
            ++a;
        } else if (a == entries_.end() || b->first < a->first) {
            out.emplace_back(b->first, c * b->second);
            ++b;
        } else {
            Scalar s = a->second + c * b->second;
            if (s != 0) out.emplace_back(a->first, std::move(s));
            ++a;
            ++b;
        }
    }
    entries_ = std::move(out);
}

SparseVec SparseVec::scaled(const Scalar& c) const
{
    if (c == 0) return {};
    SparseVec v = *this;
    for (auto& e : v.entries_) e.second *= c;
    return v;
}

SparseVec SparseVec::operator+(const SparseVec& o) const
{
    SparseVec v = *this;
    v.add_scaled(o, 1);
    return v;
}

SparseVec SparseVec::operator-(const SparseVec& o) const
{
    SparseVec v = *this;
    v.add_scaled(o, -1);
    return v;
}

SparseMatrix SparseMatrix::identity(int n)
{
    SparseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.columns_[static_cast<std::size_t>(i)] = SparseVec::unit(i);
    return m;
}

void SparseMatrix::set_column(int j, SparseVec v)
{
    if (j < 0 || j >= cols_) throw StructuralError("column index out of range");
    if (!v.empty() && (v.entries().front().first < 0 || v.lead() >= rows_))
        throw StructuralError("column entry outside matrix rows");
    columns_[static_cast<std::size_t>(j)] = std::move(v);
}

SparseVec SparseMatrix::apply(const SparseVec& v) const
{
    std::map<int, Scalar> acc;
    for (const auto& [j, c] : v) {
        if (j < 0 || j >= cols_) throw StructuralError("vector index outside matrix columns");
        for (const auto& [i, a] : column(j)) acc[i] += a * c;
    }
    return SparseVec::from_map(acc);
}

SparseMatrix SparseMatrix::transpose() const
{
    std::vector<std::vector<SparseVec::Entry>> cols(static_cast<std::size_t>(rows_));
    for (int j = 0; j < cols_; ++j)
        for (const auto& [i, a] : column(j)) cols[static_cast<std::size_t>(i)].emplace_back(j, a);
    SparseMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i) t.columns_[static_cast<std::size_t>(i)] = SparseVec(std::move(cols[static_cast<std::size_t>(i)]));
    return t;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const
{
    if (cols_ != o.rows_) throw StructuralError("matrix product shape mismatch");
    SparseMatrix r(rows_, o.cols_);
    for (int j = 0; j < o.cols_; ++j) r.columns_[static_cast<std::size_t>(j)] = apply(o.column(j));
    return r;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_) throw StructuralError("matrix sum shape mismatch");
    SparseMatrix r = *this;
    for (int j = 0; j < cols_; ++j) r.columns_[static_cast<std::size_t>(j)].add_scaled(o.column(j), 1);
    return r;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const
{
    return *this + o.scaled(-1);
}

SparseMatrix SparseMatrix::scaled(const Scalar& c) const
{
    SparseMatrix r(rows_, cols_);
    for (int j = 0; j < cols_; ++j) r.columns_[static_cast<std::size_t>(j)] = column(j).scaled(c);
    return r;
}

bool SparseMatrix::is_zero() const
{
    return std::all_of(columns_.begin(), columns_.end(), [](const SparseVec& c) { return c.empty(); });
}

std::size_t SparseMatrix::nonzeros() const
{
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
}

bool SparseMatrix::operator==(const SparseMatrix& o) const
{
    return rows_ == o.rows_ && cols_ == o.cols_ && columns_ == o.columns_;
}

void SparseMatrix::add_block(int row_offset, int col_offset, const SparseMatrix& block, const Scalar& c)
{
    if (row_offset + block.rows() > rows_ || col_offset + block.cols() > cols_)
        throw StructuralError("block does not fit");
    for (int j = 0; j < block.cols(); ++j) {
        std::vector<SparseVec::Entry> shifted;
        shifted.reserve(block.column(j).size());
        for (const auto& [i, a] : block.column(j)) shifted.emplace_back(i + row_offset, a);
        columns_[static_cast<std::size_t>(j + col_offset)].add_scaled(SparseVec(std::move(shifted)), c);
    }
}

}  // namespace ainf
