#include "ainf/cyclic.hpp"

#include <algorithm>

namespace ainf {

namespace {

bool odd(int x) { return (x % 2) != 0; }

void check_no_weight_zero(const Cochain& c)
{
    if (auto z = c.component(0); z && !z->empty())
        throw StructuralError("cyclic operators need a cochain without weight-0 component");
}

}  // namespace

CyclicChains::CyclicChains(AInfinityAlgebra a, ComplexWindow win) : a_(std::move(a)), basis_(a_.basis()), win_(win)
{
    win_.check(a_);
    if (a_.unit) unit_ = *a_.unit;
}

const std::vector<Word>& CyclicChains::piece(int n) const
{
    static const std::vector<Word> none;
    if (n < 0) return none;
    if (n > top_piece())
        throw WindowExceeded("chains of total degree " + std::to_string(n) + " need max weight >= " + std::to_string(n + 1));
    std::lock_guard<std::mutex> lock(mu_);
    auto it = pieces_.find(n);
    if (it != pieces_.end()) return it->second;
    std::vector<Word> out;
    const int target = n + 1;  // suspended degree of the word
    for (int len = 1; len <= target; ++len) {
        Word w;
        std::function<void(int)> rec = [&](int remaining) {
            const int left = len - static_cast<int>(w.size());
            if (left == 0) {
                if (remaining == 0) out.push_back(w);
                return;
            }
            if (remaining < left) return;
            for (int x = 0; x < basis_.size(); ++x) {
                const int s = basis_.degree[static_cast<std::size_t>(x)] + 1;
                if (s > remaining) continue;
                w.push_back(x);
                rec(remaining - s);
                w.pop_back();
            }
        };
        rec(target);
    }
    auto& idx = index_[n];
    for (std::size_t i = 0; i < out.size(); ++i) idx[out[i]] = static_cast<int>(i);
    return pieces_[n] = std::move(out);
}

int CyclicChains::index(int n, const Word& w) const
{
    piece(n);
    std::lock_guard<std::mutex> lock(mu_);
    const auto& idx = index_.at(n);
    auto it = idx.find(w);
    if (it == idx.end()) throw StructuralError("word " + format_word(w, basis_.label) + " is not in piece " + std::to_string(n));
    return it->second;
}

Tensor CyclicChains::lambda(const Word& w) const
{
    if (w.size() <= 1) return {{w, Scalar(1)}};
    const int last = basis_.degree[static_cast<std::size_t>(w.back())] + 1;
    const int rest = basis_.suspended(w) - last;
    Word v;
    v.reserve(w.size());
    v.push_back(w.back());
    v.insert(v.end(), w.begin(), w.end() - 1);
    return {{v, Scalar(odd(last * rest) ? -1 : 1)}};
}

Tensor CyclicChains::lambda_inverse(const Word& w) const
{
    if (w.size() <= 1) return {{w, Scalar(1)}};
    const int first = basis_.degree[static_cast<std::size_t>(w.front())] + 1;
    const int rest = basis_.suspended(w) - first;
    Word v(w.begin() + 1, w.end());
    v.push_back(w.front());
    return {{v, Scalar(odd(first * rest) ? -1 : 1)}};
}

Tensor CyclicChains::norm(const Word& w) const
{
    Tensor out;
    Word cur = w;
    Scalar coef = 1;
    for (std::size_t j = 0; j < w.size(); ++j) {
        add_to(out, cur, coef);
        auto [next, c] = *lambda(cur).begin();
        cur = next;
        coef *= c;
    }
    return out;
}

Tensor CyclicChains::bprime(const Cochain& c, const Word& w) const
{
    check_no_weight_zero(c);
    return apply_coderivation(c, w, basis_);
}

Tensor CyclicChains::b(const Cochain& c, const Word& w) const
{
    Tensor out = bprime(c, w);
    const int len = static_cast<int>(w.size());
    // Wrap-around windows: rotate the last r letters to the front, then apply
    // c_i at position 0 to a window that still reaches into the old front.
    Word cur = w;
    Scalar sign = 1;
    for (int r = 1; r < len; ++r) {
        auto [next, s] = *lambda(cur).begin();
        cur = next;
        sign *= s;
        for (const auto& [i, comp] : c.components) {
            if (i <= r || i > len) continue;
            auto it = comp.find(Word(cur.begin(), cur.begin() + i));
            if (it == comp.end()) continue;
            for (const auto& [o, x] : it->second) {
                Word v{o};
                v.insert(v.end(), cur.begin() + i, cur.end());
                add_to(out, v, sign * x);
            }
        }
    }
    return out;
}

Tensor CyclicChains::extra_s(const Word& w) const
{
    if (unit_ < 0) throw StructuralError("algebra '" + a_.name + "' has no unit");
    Word v{unit_};
    v.insert(v.end(), w.begin(), w.end());
    return {{v, Scalar(1)}};
}

Tensor CyclicChains::connes_B(const Word& w) const
{
    Tensor sn;
    for (const auto& [u, c] : norm(w)) add_to(sn, extra_s(u), c);
    Tensor out = sn;
    for (const auto& [u, c] : sn) add_to(out, lambda_inverse(u), -c);
    return out;
}

SparseMatrix CyclicChains::matrix(int n, int m, const std::function<Tensor(const Word&)>& f) const
{
    const auto& src = piece(n);
    const int rows = m < 0 ? 0 : dim(m);
    SparseMatrix out(rows, static_cast<int>(src.size()));
    for (std::size_t j = 0; j < src.size(); ++j) {
        Tensor t = f(src[j]);
        if (t.empty()) continue;
        if (m < 0) throw StructuralError("operator leaves the chain complex");
        std::map<int, Scalar> col;
        for (const auto& [w, c] : t) col[index(m, w)] += c;
        out.set_column(static_cast<int>(j), SparseVec::from_map(col));
    }
    return out;
}

SparseMatrix CyclicChains::cached(const std::string& key, int n, const std::function<SparseMatrix()>& build) const
{
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find({key, n});
        if (it != cache_.end()) return it->second;
    }
    SparseMatrix m = build();
    std::lock_guard<std::mutex> lock(mu_);
    return cache_.emplace(std::make_pair(key, n), std::move(m)).first->second;
}

SparseMatrix CyclicChains::lambda(int n) const
{
    return cached("lambda", n, [&] { return matrix(n, n, [&](const Word& w) { return lambda(w); }); });
}

SparseMatrix CyclicChains::norm(int n) const
{
    return cached("norm", n, [&] { return matrix(n, n, [&](const Word& w) { return norm(w); }); });
}

SparseMatrix CyclicChains::one_minus_lambda(int n) const
{
    return cached("1-lambda", n, [&] { return SparseMatrix::identity(dim(n)) - lambda(n); });
}

SparseMatrix CyclicChains::bprime(int n) const
{
    return cached("b'", n, [&] { return bprime(a_.m, n); });
}

SparseMatrix CyclicChains::b(int n) const
{
    return cached("b", n, [&] { return b(a_.m, n); });
}

SparseMatrix CyclicChains::bprime(const Cochain& c, int n) const
{
    return matrix(n, n + c.suspended_degree, [&](const Word& w) { return bprime(c, w); });
}

SparseMatrix CyclicChains::b(const Cochain& c, int n) const
{
    return matrix(n, n + c.suspended_degree, [&](const Word& w) { return b(c, w); });
}

SparseMatrix CyclicChains::extra_s(int n) const
{
    return cached("s", n, [&] { return matrix(n, n + 1, [&](const Word& w) { return extra_s(w); }); });
}

SparseMatrix CyclicChains::connes_B(int n) const
{
    return cached("B", n, [&] { return matrix(n, n + 1, [&](const Word& w) { return connes_B(w); }); });
}

namespace {

struct Layout {
    std::map<int, std::map<int, int>> offset;
    std::map<int, std::map<int, int>> size;
    std::map<int, int> dims;
};

// columns(T) lists (column q, piece) pairs making up Tot_T.
Layout layout(const CyclicChains& c, int hi, const std::function<std::vector<std::pair<int, int>>(int)>& columns)
{
    Layout l;
    for (int t = 0; t <= hi; ++t) {
        int off = 0;
        for (auto [q, p] : columns(t)) {
            l.offset[t][q] = off;
            l.size[t][q] = c.dim(p);
            off += c.dim(p);
        }
        l.dims[t] = off;
    }
    return l;
}

TotalComplex finish(Layout l, int hi, std::map<int, SparseMatrix> d)
{
    TotalComplex tot;
    tot.complex.lo = 0;
    tot.complex.hi = hi;
    tot.complex.dims = l.dims;
    tot.complex.boundary = std::move(d);
    tot.offset = std::move(l.offset);
    tot.size = std::move(l.size);
    return tot;
}

TotalComplex cc_columns(const CyclicChains& c, int hi, int max_columns)
{
    if (hi > c.top_piece())
        throw WindowExceeded("total degree " + std::to_string(hi) + " needs max weight >= " + std::to_string(hi + 1));
    auto columns = [&](int t) {
        std::vector<std::pair<int, int>> out;
        for (int q = 0; q <= t && q < max_columns; ++q) out.emplace_back(q, t - q);
        return out;
    };
    Layout l = layout(c, hi, columns);
    std::map<int, SparseMatrix> d;
    for (int t = 1; t <= hi; ++t) {
        SparseMatrix m(l.dims[t - 1], l.dims[t]);
        for (auto [q, p] : columns(t)) {
            const int col = l.offset[t][q];
            if (p >= 1) {
                if (q % 2 == 0)
                    m.add_block(l.offset[t - 1][q], col, c.b(p));
                else
                    m.add_block(l.offset[t - 1][q], col, c.bprime(p), -1);
            }
            if (q % 2 == 1)
                m.add_block(l.offset[t - 1][q - 1], col, c.one_minus_lambda(p));
            else if (q >= 2)
                m.add_block(l.offset[t - 1][q - 1], col, c.norm(p));
        }
        d[t] = std::move(m);
    }
    return finish(std::move(l), hi, std::move(d));
}

}  // namespace

TotalComplex cyclic_total_complex(const CyclicChains& c, int hi)
{
    return cc_columns(c, hi, hi + 1);
}

TotalComplex two_column_complex(const CyclicChains& c, int hi)
{
    return cc_columns(c, hi, 2);
}

TotalComplex bB_total_complex(const CyclicChains& c, int hi)
{
    if (hi > c.top_piece())
        throw WindowExceeded("total degree " + std::to_string(hi) + " needs max weight >= " + std::to_string(hi + 1));
    auto columns = [&](int t) {
        std::vector<std::pair<int, int>> out;
        for (int p = 0; 2 * p <= t; ++p) out.emplace_back(p, t - 2 * p);
        return out;
    };
    Layout l = layout(c, hi, columns);
    std::map<int, SparseMatrix> d;
    for (int t = 1; t <= hi; ++t) {
        SparseMatrix m(l.dims[t - 1], l.dims[t]);
        for (auto [p, piece] : columns(t)) {
            const int col = l.offset[t][p];
            if (piece >= 1) m.add_block(l.offset[t - 1][p], col, c.b(piece));
            if (p >= 1) m.add_block(l.offset[t - 1][p - 1], col, c.connes_B(piece));
        }
        d[t] = std::move(m);
    }
    return finish(std::move(l), hi, std::move(d));
}

ChainComplex hochschild_complex(const CyclicChains& c, int hi)
{
    if (hi > c.top_piece())
        throw WindowExceeded("total degree " + std::to_string(hi) + " needs max weight >= " + std::to_string(hi + 1));
    ChainComplex h;
    h.lo = 0;
    h.hi = hi;
    for (int n = 0; n <= hi; ++n) {
        h.dims[n] = c.dim(n);
        if (n >= 1) h.boundary[n] = c.b(n);
    }
    return h;
}

LambdaComplex lambda_complex(const CyclicChains& c, int hi)
{
    if (hi > c.top_piece())
        throw WindowExceeded("total degree " + std::to_string(hi) + " needs max weight >= " + std::to_string(hi + 1));
    LambdaComplex lc;
    lc.complex.lo = 0;
    lc.complex.hi = hi;
    for (int n = 0; n <= hi; ++n) {
        const auto& words = c.piece(n);
        std::vector<int> orbit(words.size(), -2);  // -2 unvisited, -1 zero orbit
        std::vector<Scalar> coef(words.size(), Scalar(0));
        std::vector<Word> reps;
        for (std::size_t i = 0; i < words.size(); ++i) {
            if (orbit[i] != -2) continue;
            // λ^j(rep) = c_j w_j, so [w_j] = c_j [rep].
            std::vector<std::pair<int, Scalar>> members;
            Word cur = words[i];
            Scalar cj = 1;
            Scalar holonomy = 1;
            while (true) {
                members.emplace_back(c.index(n, cur), cj);
                auto [next, s] = *c.lambda(cur).begin();
                cj *= s;
                cur = next;
                if (cur == words[i]) {
                    holonomy = cj;
                    break;
                }
            }
            const int id = holonomy == 1 ? static_cast<int>(reps.size()) : -1;
            if (id >= 0) reps.push_back(words[i]);
            for (const auto& [k, x] : members) {
                orbit[static_cast<std::size_t>(k)] = id;
                coef[static_cast<std::size_t>(k)] = x;
            }
        }
        SparseMatrix proj(static_cast<int>(reps.size()), static_cast<int>(words.size()));
        for (std::size_t k = 0; k < words.size(); ++k)
            if (orbit[k] >= 0) proj.set_column(static_cast<int>(k), SparseVec::unit(orbit[k], coef[k]));
        lc.complex.dims[n] = static_cast<int>(reps.size());
        lc.reps[n] = std::move(reps);
        lc.projection[n] = std::move(proj);
    }
    for (int n = 1; n <= hi; ++n) {
        const auto& reps = lc.reps[n];
        SparseMatrix d(lc.complex.dims[n - 1], static_cast<int>(reps.size()));
        SparseMatrix bn = c.b(n);
        for (std::size_t j = 0; j < reps.size(); ++j)
            d.set_column(static_cast<int>(j), lc.projection[n - 1].apply(bn.column(c.index(n, reps[j]))));
        lc.complex.boundary[n] = std::move(d);
    }
    return lc;
}

SparseMatrix periodicity_map(const TotalComplex& tot, int t)
{
    SparseMatrix s(t >= 2 ? tot.dim(t - 2) : 0, tot.dim(t));
    if (t < 2) return s;
    for (const auto& [q, off] : tot.offset.at(t)) {
        if (q < 2) continue;
        const int n = tot.size.at(t).at(q);
        s.add_block(tot.offset.at(t - 2).at(q - 2), off, SparseMatrix::identity(n));
    }
    return s;
}

SparseMatrix column_zero_inclusion(const TotalComplex& tot, const CyclicChains& c, int t)
{
    SparseMatrix i(tot.dim(t), c.dim(t));
    i.add_block(tot.offset.at(t).at(0), 0, SparseMatrix::identity(c.dim(t)));
    return i;
}

}  // namespace ainf
