#include "ainf/exactlin/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace ainf {

namespace {

using IntRow = std::vector<std::pair<int, mpz_class>>;

IntRow primitive_integer(const SparseVec& v)
{
    mpz_class den = 1;
    for (const auto& [i, q] : v) den = lcm(den, q.get_den());
    IntRow r;
    r.reserve(v.size());
    mpz_class g = 0;
    for (const auto& [i, q] : v) {
        mpz_class a = q.get_num() * (den / q.get_den());
        g = gcd(g, a);
        r.emplace_back(i, std::move(a));
    }
    if (g > 1)
        for (auto& e : r) e.second /= g;
    return r;
}

void make_primitive(IntRow& r)
{
    mpz_class g = 0;
    for (const auto& e : r) {
        g = gcd(g, e.second);
        if (g == 1) return;
    }
    if (g > 1)
        for (auto& e : r) e.second /= g;
}

// r <- a*r - b*p, where a, b chosen to cancel the shared lead.
void eliminate(IntRow& r, const IntRow& p)
{
    const mpz_class& lr = r.back().second;
    const mpz_class& lp = p.back().second;
    mpz_class g = gcd(lr, lp);
    mpz_class a = lp / g;
    mpz_class b = lr / g;
    IntRow out;
    out.reserve(r.size() + p.size());
    auto x = r.begin();
    auto y = p.begin();
    while (x != r.end() || y != p.end()) {
        if (y == p.end() || (x != r.end() && x->first < y->first)) {
            out.emplace_back(x->first, a * x->second);
            ++x;
        } else if (x == r.end() || y->first < x->first) {
            out.emplace_back(y->first, -b * y->second);
            ++y;
        } else {
            mpz_class s = a * x->second - b * y->second;
            if (s != 0) out.emplace_back(x->first, std::move(s));
            ++x;
            ++y;
        }
    }
    r = std::move(out);
    make_primitive(r);
}

}  // namespace

int rank(const SparseMatrix& m)
{
    std::vector<int> order(static_cast<std::size_t>(m.cols()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return m.column(a).size() < m.column(b).size(); });
    std::map<int, IntRow> pivots;
    for (int j : order) {
        if (m.column(j).empty()) continue;
        IntRow r = primitive_integer(m.column(j));
        while (!r.empty()) {
            auto it = pivots.find(r.back().first);
            if (it == pivots.end()) break;
            eliminate(r, it->second);
        }
        if (!r.empty()) {
            int lead = r.back().first;
            pivots.emplace(lead, std::move(r));
        }
    }
    return static_cast<int>(pivots.size());
}

Echelon::Reduction Echelon::reduce(SparseVec v) const
{
    Reduction red;
    while (!v.empty()) {
        auto it = rows_.find(v.lead());
        if (it == rows_.end()) break;
        Scalar c = v.lead_coeff();
        v.add_scaled(it->second.vec, -c);
        red.combination.add_scaled(it->second.tag, c);
    }
    red.remainder = std::move(v);
    return red;
}

bool Echelon::insert(SparseVec v, SparseVec tag)
{
    while (!v.empty()) {
        auto it = rows_.find(v.lead());
        if (it == rows_.end()) break;
        Scalar c = v.lead_coeff();
        v.add_scaled(it->second.vec, -c);
        tag.add_scaled(it->second.tag, -c);
    }
    if (v.empty()) return false;
    Scalar inv = 1 / v.lead_coeff();
    int lead = v.lead();
    rows_.emplace(lead, Row{v.scaled(inv), tag.scaled(inv)});
    return true;
}

std::vector<int> Echelon::pivots() const
{
    std::vector<int> p;
    p.reserve(rows_.size());
    for (const auto& [k, r] : rows_) p.push_back(k);
    return p;
}

std::vector<SparseVec> kernel_basis(const SparseMatrix& m)
{
    // Column reduction tracking the combination of source columns. A column
    // that reduces to zero yields the kernel vector e_j − Σ c_i tag_i.
    Echelon e;
    std::vector<SparseVec> kernel;
    for (int j = 0; j < m.cols(); ++j) {
        auto red = e.reduce(m.column(j));
        if (red.remainder.empty()) {
            SparseVec k = SparseVec::unit(j);
            k.add_scaled(red.combination, -1);
            kernel.push_back(std::move(k));
        } else {
            SparseVec tag = SparseVec::unit(j);
            tag.add_scaled(red.combination, -1);
            e.insert(std::move(red.remainder), std::move(tag));
        }
    }
    return kernel;
}

std::optional<SparseVec> solve(const SparseMatrix& m, const SparseVec& b)
{
    Echelon e;
    for (int j = 0; j < m.cols(); ++j) e.insert(m.column(j), SparseVec::unit(j));
    auto red = e.reduce(b);
    if (!red.remainder.empty()) return std::nullopt;
    return red.combination;
}

HomologyBasis::HomologyBasis(int dim, const SparseMatrix& incoming, const SparseMatrix& outgoing)
    : chain_dim_(dim), outgoing_(outgoing)
{
    if (incoming.cols() > 0 && incoming.rows() != dim) throw StructuralError("incoming map has wrong target");
    if (outgoing.cols() != dim && !(outgoing.cols() == 0 && outgoing.rows() == 0))
        throw StructuralError("outgoing map has wrong source");
    for (int j = 0; j < incoming.cols(); ++j) {
        boundaries_.insert(incoming.column(j));
        with_reps_.insert(incoming.column(j));
    }
    std::vector<SparseVec> cycles;
    if (outgoing.cols() == 0) {
        for (int i = 0; i < dim; ++i) cycles.push_back(SparseVec::unit(i));
    } else {
        cycles = kernel_basis(outgoing);
    }
    for (auto& z : cycles) {
        auto red = with_reps_.reduce(z);
        if (red.remainder.empty()) continue;
        int r = static_cast<int>(reps_.size());
        reps_.push_back(red.remainder);
        with_reps_.insert(std::move(red.remainder), SparseVec::unit(r));
    }
}

SparseVec HomologyBasis::coordinates(const SparseVec& z) const
{
    auto red = with_reps_.reduce(z);
    if (!red.remainder.empty()) throw InvariantViolation("vector is not a cycle");
    return red.combination;
}

bool HomologyBasis::is_boundary(const SparseVec& z) const
{
    return boundaries_.contains(z);
}

SparseMatrix induced_map(const HomologyBasis& source, const HomologyBasis& target, const SparseMatrix& f)
{
    SparseMatrix m(target.dim(), source.dim());
    for (int j = 0; j < source.dim(); ++j) m.set_column(j, target.coordinates(f.apply(source.representatives()[static_cast<std::size_t>(j)])));
    return m;
}

int ChainComplex::dim(int n) const
{
    auto it = dims.find(n);
    return it == dims.end() ? 0 : it->second;
}

SparseMatrix ChainComplex::d(int n) const
{
    auto it = boundary.find(n);
    if (it != boundary.end()) return it->second;
    return SparseMatrix(dim(n - 1), dim(n));
}

bool ChainComplex::is_complex() const
{
    for (int n = lo + 2; n <= hi; ++n)
        if (!(d(n - 1) * d(n)).is_zero()) return false;
    return true;
}

int homology_dim(const ChainComplex& c, int n)
{
    if (n < c.lo || n > c.hi) throw WindowExceeded("homology degree outside complex window");
    SparseMatrix out = c.d(n);
    SparseMatrix in = c.d(n + 1);
    if (!(out * in).is_zero()) throw InvariantViolation("d∘d ≠ 0 at degree " + std::to_string(n));
    return c.dim(n) - rank(out) - rank(in);
}

int cohomology_dim(const ChainComplex& c, int n)
{
    if (n < c.lo || n > c.hi) throw WindowExceeded("cohomology degree outside complex window");
    SparseMatrix up = c.d(n + 1).transpose();  // C^n -> C^{n+1}
    SparseMatrix down = c.d(n).transpose();    // C^{n-1} -> C^n
    if (!(up * down).is_zero()) throw InvariantViolation("dual differential does not square to zero");
    int ker = c.dim(n) - rank(up);
    return ker - rank(down);
}

}  // namespace ainf
