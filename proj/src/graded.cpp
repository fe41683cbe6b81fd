#include "ainf/exactlin/graded.hpp"

#include <set>

namespace ainf {

GradedVectorSpace::GradedVectorSpace(int low, std::vector<std::vector<std::string>> labels)
    : low_(low), labels_(std::move(labels))
{
    for (const auto& deg : labels_) {
        std::set<std::string> seen(deg.begin(), deg.end());
        if (seen.size() != deg.size()) throw StructuralError("duplicate basis label within a degree");
    }
    normalise();
}

GradedVectorSpace GradedVectorSpace::with_dims(const std::vector<int>& dims)
{
    std::vector<std::vector<std::string>> labels(dims.size());
    for (std::size_t d = 0; d < dims.size(); ++d) {
        if (dims[d] < 0) throw StructuralError("negative dimension");
        for (int k = 0; k < dims[d]; ++k) labels[d].push_back("e" + std::to_string(d) + "_" + std::to_string(k));
    }
    return GradedVectorSpace(0, std::move(labels));
}

void GradedVectorSpace::normalise()
{
    while (!labels_.empty() && labels_.back().empty()) labels_.pop_back();
    std::size_t lead = 0;
    while (lead < labels_.size() && labels_[lead].empty()) ++lead;
    if (lead == labels_.size()) {
        labels_.clear();
        low_ = 0;
        return;
    }
    labels_.erase(labels_.begin(), labels_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
}

int GradedVectorSpace::dim(int degree) const
{
    int k = degree - low_;
    if (k < 0 || k >= static_cast<int>(labels_.size())) return 0;
    return static_cast<int>(labels_[static_cast<std::size_t>(k)].size());
}

int GradedVectorSpace::total_dim() const
{
    int n = 0;
    for (const auto& l : labels_) n += static_cast<int>(l.size());
    return n;
}

std::vector<int> GradedVectorSpace::dims() const
{
    if (labels_.empty()) return {};
    if (low_ < 0) throw StructuralError("dims() requires a non-negatively graded space");
    std::vector<int> d(static_cast<std::size_t>(high() + 1), 0);
    for (int i = low_; i <= high(); ++i) d[static_cast<std::size_t>(i)] = dim(i);
    return d;
}

const std::vector<std::string>& GradedVectorSpace::labels(int degree) const
{
    static const std::vector<std::string> none;
    int k = degree - low_;
    if (k < 0 || k >= static_cast<int>(labels_.size())) return none;
    return labels_[static_cast<std::size_t>(k)];
}

bool GradedVectorSpace::operator==(const GradedVectorSpace& o) const
{
    return low_ == o.low_ && labels_ == o.labels_;
}

GradedVectorSpace shift(const GradedVectorSpace& v, int n)
{
    std::vector<std::vector<std::string>> labels;
    for (int i = v.low(); i <= v.high(); ++i) labels.push_back(v.labels(i));
    return GradedVectorSpace(v.low() + n, std::move(labels));
}

namespace {

// Offset of the (i, j) summand inside (V⊗W)_n, summands ordered by i.
int tensor_offset(const GradedVectorSpace& v, const GradedVectorSpace& w, int n, int i)
{
    int off = 0;
    for (int a = v.low(); a < i; ++a) off += v.dim(a) * w.dim(n - a);
    return off;
}

}  // namespace

GradedVectorSpace tensor_space(const GradedVectorSpace& v, const GradedVectorSpace& w)
{
    if (v.total_dim() == 0 || w.total_dim() == 0) return {};
    int lo = v.low() + w.low();
    int hi = v.high() + w.high();
    std::vector<std::vector<std::string>> labels;
    for (int n = lo; n <= hi; ++n) {
        std::vector<std::string> deg;
        for (int i = v.low(); i <= v.high(); ++i)
            for (const auto& a : v.labels(i))
                for (const auto& b : w.labels(n - i)) deg.push_back(a + "⊗" + b);
        labels.push_back(std::move(deg));
    }
    return GradedVectorSpace(lo, std::move(labels));
}

GradedLinearMap GradedLinearMap::identity(const GradedVectorSpace& v)
{
    GradedLinearMap f{v, v, 0, {}};
    for (int i = v.low(); i <= v.high(); ++i)
        if (v.dim(i) > 0) f.blocks[i] = SparseMatrix::identity(v.dim(i));
    return f;
}

GradedLinearMap GradedLinearMap::zero(const GradedVectorSpace& s, const GradedVectorSpace& t, int degree)
{
    return GradedLinearMap{s, t, degree, {}};
}

SparseMatrix GradedLinearMap::block(int source_degree) const
{
    auto it = blocks.find(source_degree);
    if (it != blocks.end()) return it->second;
    return SparseMatrix(target.dim(source_degree + degree), source.dim(source_degree));
}

void GradedLinearMap::set_block(int source_degree, SparseMatrix m)
{
    if (m.cols() != source.dim(source_degree) || m.rows() != target.dim(source_degree + degree))
        throw StructuralError("block shape does not match source/target dimensions");
    blocks[source_degree] = std::move(m);
}

bool GradedLinearMap::is_zero() const
{
    for (const auto& [d, b] : blocks)
        if (!b.is_zero()) return false;
    return true;
}

bool GradedLinearMap::operator==(const GradedLinearMap& o) const
{
    if (!(source == o.source) || !(target == o.target) || degree != o.degree) return false;
    for (int i = source.low(); i <= source.high(); ++i)
        if (!(block(i) == o.block(i))) return false;
    return true;
}

GradedLinearMap compose(const GradedLinearMap& f, const GradedLinearMap& g)
{
    if (!(g.target == f.source)) throw StructuralError("compose: spaces do not match");
    GradedLinearMap h{g.source, f.target, f.degree + g.degree, {}};
    for (int i = g.source.low(); i <= g.source.high(); ++i) {
        if (g.source.dim(i) == 0) continue;
        h.set_block(i, f.block(i + g.degree) * g.block(i));
    }
    return h;
}

GradedLinearMap add(const GradedLinearMap& f, const GradedLinearMap& g, const Scalar& c)
{
    if (!(f.source == g.source) || !(f.target == g.target) || f.degree != g.degree)
        throw StructuralError("add: maps live in different Hom spaces");
    GradedLinearMap h = f;
    for (int i = f.source.low(); i <= f.source.high(); ++i) {
        if (f.source.dim(i) == 0) continue;
        h.set_block(i, f.block(i) + g.block(i).scaled(c));
    }
    return h;
}

GradedLinearMap tensor_map(const GradedLinearMap& f, const GradedLinearMap& g)
{
    const auto& v = f.source;
    const auto& w = g.source;
    const auto& v2 = f.target;
    const auto& w2 = g.target;
    GradedVectorSpace src = tensor_space(v, w);
    GradedVectorSpace tgt = tensor_space(v2, w2);
    GradedLinearMap h{src, tgt, f.degree + g.degree, {}};
    for (int n = src.low(); n <= src.high(); ++n) {
        if (src.dim(n) == 0) continue;
        int m = n + h.degree;
        SparseMatrix block(tgt.dim(m), src.dim(n));
        for (int i = v.low(); i <= v.high(); ++i) {
            int j = n - i;
            if (v.dim(i) == 0 || w.dim(j) == 0) continue;
            SparseMatrix fb = f.block(i);
            SparseMatrix gb = g.block(j);
            int src_off = tensor_offset(v, w, n, i);
            int i2 = i + f.degree;
            int j2 = j + g.degree;
            int tgt_off = tensor_offset(v2, w2, m, i2);
            int wdim = w.dim(j);
            int w2dim = w2.dim(j2);
            int sign = ((i * g.degree) % 2 == 0) ? 1 : -1;
            for (int a = 0; a < v.dim(i); ++a)
                for (int b = 0; b < wdim; ++b) {
                    std::map<int, Scalar> col;
                    for (const auto& [a2, x] : fb.column(a))
                        for (const auto& [b2, y] : gb.column(b)) col[tgt_off + a2 * w2dim + b2] += sign * x * y;
                    block.set_column(src_off + a * wdim + b, SparseVec::from_map(col));
                }
        }
        h.set_block(n, std::move(block));
    }
    return h;
}

}  // namespace ainf
