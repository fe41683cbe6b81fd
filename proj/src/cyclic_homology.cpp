#include "ainf/cyclic.hpp"

#include <algorithm>

namespace ainf {

namespace {

// Shared rank ladder: r_0 = dim H_p, r_k = rank S^k : H_{p+2k} -> H_p.
HomologyReport run_ladder(int parity, int max_degree, int max_steps, const std::function<int(int)>& dim,
                          const std::function<int(int, int)>& rank_sk)
{
    HomologyReport r;
    r.theory = "HP";
    r.degree = parity;
    r.stabilized = false;
    r.ladder.push_back(dim(parity));
    if (r.ladder[0] == 0) {
        r.stabilized = true;
        r.stable_at = 0;
        r.dim = 0;
        return r;
    }
    for (int k = 1; parity + 2 * k <= max_degree && (max_steps < 0 || k <= max_steps); ++k) {
        r.ladder.push_back(rank_sk(parity + 2 * k, k));
        const int cur = r.ladder.back();
        if (cur == 0 || cur == r.ladder[static_cast<std::size_t>(k - 1)]) {
            r.stabilized = true;
            r.stable_at = k;
            r.dim = cur;
            return r;
        }
    }
    r.dim = r.ladder.back();
    r.notes.push_back("rank ladder did not settle inside the window");
    return r;
}

// Block-diagonal matrix dropping the first `drop` columns of a total complex.
SparseMatrix drop_columns(const TotalComplex& tot, int t, int drop)
{
    SparseMatrix s(tot.dim(t - drop), tot.dim(t));
    for (const auto& [q, off] : tot.offset.at(t)) {
        if (q < drop) continue;
        s.add_block(tot.offset.at(t - drop).at(q - drop), off, SparseMatrix::identity(tot.size.at(t).at(q)));
    }
    return s;
}

}  // namespace

CyclicHomology::CyclicHomology(AInfinityAlgebra a, ComplexWindow win) : chains_(std::move(a), win) {}

const TotalComplex& CyclicHomology::tot(int hi)
{
    if (!tot_ || tot_->complex.hi < hi) tot_ = std::make_unique<TotalComplex>(cyclic_total_complex(chains_, hi));
    return *tot_;
}

const TotalComplex& CyclicHomology::two_columns(int hi)
{
    if (!two_ || two_->complex.hi < hi) two_ = std::make_unique<TotalComplex>(two_column_complex(chains_, hi));
    return *two_;
}

const HomologyBasis& CyclicHomology::hh_basis(int n)
{
    window().require_reliable(n, "HH");
    auto it = hh_bases_.find(n);
    if (it != hh_bases_.end()) return it->second;
    SparseMatrix in = chains_.b(n + 1);
    SparseMatrix out = n >= 1 ? chains_.b(n) : SparseMatrix(0, chains_.dim(n));
    if (!(out * in).is_zero()) throw InvariantViolation("b∘b ≠ 0 at total degree " + std::to_string(n + 1));
    return hh_bases_.emplace(n, HomologyBasis(chains_.dim(n), in, out)).first->second;
}

const HomologyBasis& CyclicHomology::hc_basis(int n)
{
    window().require_reliable(n, "HC");
    auto it = hc_bases_.find(n);
    if (it != hc_bases_.end()) return it->second;
    const TotalComplex& t = tot(n + 1);
    SparseMatrix in = t.complex.d(n + 1);
    SparseMatrix out = t.complex.d(n);
    if (!(out * in).is_zero()) throw InvariantViolation("Tot CC differential does not square to zero at " + std::to_string(n + 1));
    return hc_bases_.emplace(n, HomologyBasis(t.dim(n), in, out)).first->second;
}

const HomologyBasis& CyclicHomology::two_column_basis(int n)
{
    window().require_reliable(n, "HH");
    auto it = two_bases_.find(n);
    if (it != two_bases_.end()) return it->second;
    const TotalComplex& t = two_columns(n + 1);
    SparseMatrix in = t.complex.d(n + 1);
    SparseMatrix out = t.complex.d(n);
    if (!(out * in).is_zero()) throw InvariantViolation("two-column differential does not square to zero");
    return two_bases_.emplace(n, HomologyBasis(t.dim(n), in, out)).first->second;
}

int CyclicHomology::hh(int n) { return hh_basis(n).dim(); }
int CyclicHomology::hc(int n) { return hc_basis(n).dim(); }
int CyclicHomology::two_column(int n) { return two_column_basis(n).dim(); }

int CyclicHomology::hc_lambda(int n)
{
    window().require_reliable(n, "HC (λ-complex)");
    LambdaComplex lc = lambda_complex(chains_, n + 1);
    return homology_dim(lc.complex, n);
}

int CyclicHomology::hc_bB(int n)
{
    window().require_reliable(n, "HC ((b,B) bicomplex)");
    TotalComplex t = bB_total_complex(chains_, n + 1);
    return homology_dim(t.complex, n);
}

int CyclicHomology::hc_cohomology(int n)
{
    window().require_reliable(n, "HC^");
    return cohomology_dim(tot(n + 1).complex, n);
}

SparseMatrix CyclicHomology::s_power(int n, int k)
{
    const HomologyBasis& src = hc_basis(n);
    const HomologyBasis& tgt = hc_basis(n - 2 * k);
    const TotalComplex& t = tot(n + 1);
    SparseMatrix f = drop_columns(t, n, 2 * k);
    return induced_map(src, tgt, f);
}

HomologyReport CyclicHomology::hp(int parity, int max_steps)
{
    HomologyReport r = run_ladder(
        parity, window().reliable_bound(), max_steps, [&](int n) { return hc(n); },
        [&](int n, int k) { return rank(s_power(n, k)); });
    return r;
}

HomologyReport hh_report(const AInfinityAlgebra& a, int n, const ComplexWindow& win)
{
    CyclicHomology h(a, win);
    return HomologyReport{"HH", n, h.hh(n), true, std::nullopt, {}, {}};
}

HomologyReport hc_report(const AInfinityAlgebra& a, int n, const ComplexWindow& win)
{
    CyclicHomology h(a, win);
    return HomologyReport{"HC", n, h.hc(n), true, std::nullopt, {}, {}};
}

HomologyReport hp_report(const AInfinityAlgebra& a, int parity, const ComplexWindow& win)
{
    CyclicHomology h(a, win);
    return h.hp(parity);
}

std::vector<SparseVec> closed_graded_traces(const AInfinityAlgebra& a)
{
    const BasisInfo b = a.basis();
    std::vector<int> zero;  // degree-0 basis indices
    std::map<int, int> pos;
    for (int i = 0; i < b.size(); ++i)
        if (b.degree[static_cast<std::size_t>(i)] == 0) {
            pos[i] = static_cast<int>(zero.size());
            zero.push_back(i);
        }
    std::vector<SparseVec> constraints;
    auto restrict = [&](const SparseVec& v) {
        std::map<int, Scalar> m;
        for (const auto& [i, c] : v)
            if (pos.count(i)) m[pos[i]] += c;
        return SparseVec::from_map(m);
    };
    for (int x : zero)
        for (int y : zero) {
            SparseVec v = a.m.eval({x, y}) - a.m.eval({y, x});
            if (!v.empty()) constraints.push_back(restrict(v));
        }
    for (int y = 0; y < b.size(); ++y)
        if (b.degree[static_cast<std::size_t>(y)] == 1) {
            SparseVec v = a.m.eval({y});
            if (!v.empty()) constraints.push_back(restrict(v));
        }
    // f (a row vector on A_0) must vanish on every constraint column.
    SparseMatrix cols(static_cast<int>(zero.size()), static_cast<int>(constraints.size()));
    for (std::size_t j = 0; j < constraints.size(); ++j) cols.set_column(static_cast<int>(j), constraints[j]);
    std::vector<SparseVec> out;
    for (const auto& k : kernel_basis(cols.transpose())) {
        std::map<int, Scalar> m;
        for (const auto& [i, x] : k) m[zero[static_cast<std::size_t>(i)]] = x;
        out.push_back(SparseVec::from_map(m));
    }
    return out;
}

bool SbiReport::exact() const
{
    if (!hh_matches) return false;
    return std::all_of(nodes.begin(), nodes.end(), [](const SbiNode& n) { return n.exact(); });
}

SbiReport sbi_check(CyclicHomology& h, int max_degree)
{
    SbiReport rep;
    const CyclicChains& c = h.chains();
    if (max_degree + 1 > c.top_piece())
        throw WindowExceeded("SBI check through degree " + std::to_string(max_degree) + " needs max weight >= " +
                             std::to_string(max_degree + 2));
    const TotalComplex& tot = h.tot(max_degree + 1);
    const TotalComplex& two = h.two_columns(max_degree + 1);

    // I_n : H(K)_n -> HC_n (K = columns 0 and 1 inside Tot)
    auto inclusion = [&](int n) {
        SparseMatrix f(tot.dim(n), two.dim(n));
        for (const auto& [q, off] : two.offset.at(n))
            f.add_block(tot.offset.at(n).at(q), off, SparseMatrix::identity(two.size.at(n).at(q)));
        return rank(induced_map(h.two_column_basis(n), h.hc_basis(n), f));
    };
    auto s_rank = [&](int n) { return n < 2 ? 0 : rank(h.s_power(n, 1)); };
    // ∂_n : HC_{n-2} -> H(K)_{n-1}: lift by shifting columns up by two,
    // apply d, read off columns 0 and 1.
    auto boundary = [&](int n) {
        if (n < 2) return 0;
        const HomologyBasis& src = h.hc_basis(n - 2);
        const HomologyBasis& tgt = h.two_column_basis(n - 1);
        SparseMatrix lift(tot.dim(n), tot.dim(n - 2));
        for (const auto& [q, off] : tot.offset.at(n - 2))
            lift.add_block(tot.offset.at(n).at(q + 2), off, SparseMatrix::identity(tot.size.at(n - 2).at(q)));
        SparseMatrix dn = tot.complex.d(n) * lift;
        SparseMatrix proj(two.dim(n - 1), tot.dim(n - 1));
        for (const auto& [q, off] : two.offset.at(n - 1))
            proj.add_block(off, tot.offset.at(n - 1).at(q), SparseMatrix::identity(two.size.at(n - 1).at(q)));
        SparseMatrix f = proj * dn;
        SparseMatrix m(tgt.dim(), src.dim());
        for (int j = 0; j < src.dim(); ++j) m.set_column(j, tgt.coordinates(f.apply(src.representatives()[static_cast<std::size_t>(j)])));
        return rank(m);
    };
    for (int n = 0; n <= max_degree; ++n) {
        const int hk = h.two_column(n);
        const int hh = h.hh(n);
        if (hh != hk) {
            rep.hh_matches = false;
            rep.notes.push_back("HH_" + std::to_string(n) + " = " + std::to_string(hh) + " but the two-column complex gives " +
                                std::to_string(hk));
        }
        const int i_n = inclusion(n);
        const int s_n = s_rank(n);
        rep.nodes.push_back({"HH_" + std::to_string(n), hk, boundary(n + 1), i_n});
        rep.nodes.push_back({"HC_" + std::to_string(n), h.hc(n), i_n, s_n});
        if (n >= 2) rep.nodes.push_back({"HC_" + std::to_string(n - 2) + " (after S)", h.hc(n - 2), s_n, boundary(n)});
    }
    return rep;
}

namespace classical {

Algebra from(const AInfinityAlgebra& a)
{
    if (!a.concentrated_in_degree_zero() || a.has_higher_products() || (a.m.component(1) && !a.m.component(1)->empty()))
        throw StructuralError("classical route needs an ordinary algebra in degree 0");
    Algebra c;
    c.dim = a.dim();
    BasisInfo b = a.basis();
    c.labels = b.label;
    c.mult.assign(static_cast<std::size_t>(c.dim), std::vector<SparseVec>(static_cast<std::size_t>(c.dim)));
    for (int i = 0; i < c.dim; ++i)
        for (int j = 0; j < c.dim; ++j) c.mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a.m.eval({i, j});
    return c;
}

Cyclic::Cyclic(Algebra a, int max_n) : a_(std::move(a)), max_n_(max_n) {}

const std::vector<Word>& Cyclic::words(int n)
{
    auto it = words_.find(n);
    if (it != words_.end()) return it->second;
    std::vector<Word> out{Word{}};
    for (int r = 0; r <= n; ++r) {
        std::vector<Word> next;
        for (const auto& w : out)
            for (int x = 0; x < a_.dim; ++x) {
                Word v = w;
                v.push_back(x);
                next.push_back(std::move(v));
            }
        out = std::move(next);
    }
    auto& idx = index_[n];
    for (std::size_t i = 0; i < out.size(); ++i) idx[out[i]] = static_cast<int>(i);
    return words_[n] = std::move(out);
}

namespace {

// (a_0..a_i a_{i+1}..a_n) with the product expanded.
void add_contracted(std::map<int, Scalar>& col, const std::map<Word, int>& idx, const Word& w, std::size_t i,
                    const SparseVec& prod, const Scalar& sign)
{
    for (const auto& [z, c] : prod) {
        Word v(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        v.push_back(z);
        v.insert(v.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
        col[idx.at(v)] += sign * c;
    }
}

}  // namespace

SparseMatrix Cyclic::bprime(int n)
{
    const auto& src = words(n);
    const auto& tgt = words(n - 1);
    const auto& idx = index_.at(n - 1);
    SparseMatrix m(static_cast<int>(tgt.size()), static_cast<int>(src.size()));
    for (std::size_t j = 0; j < src.size(); ++j) {
        std::map<int, Scalar> col;
        const Word& w = src[j];
        for (int i = 0; i < n; ++i)
            add_contracted(col, idx, w, static_cast<std::size_t>(i),
                           a_.mult[static_cast<std::size_t>(w[static_cast<std::size_t>(i)])][static_cast<std::size_t>(w[static_cast<std::size_t>(i) + 1])],
                           i % 2 == 0 ? 1 : -1);
        m.set_column(static_cast<int>(j), SparseVec::from_map(col));
    }
    return m;
}

SparseMatrix Cyclic::b(int n)
{
    SparseMatrix m = bprime(n);
    const auto& src = words(n);
    const auto& idx = index_.at(n - 1);
    SparseMatrix extra(m.rows(), m.cols());
    for (std::size_t j = 0; j < src.size(); ++j) {
        std::map<int, Scalar> col;
        const Word& w = src[j];
        // (-1)^n (a_n a_0, a_1, ..., a_{n-1})
        for (const auto& [z, c] : a_.mult[static_cast<std::size_t>(w.back())][static_cast<std::size_t>(w.front())]) {
            Word v{z};
            v.insert(v.end(), w.begin() + 1, w.end() - 1);
            col[idx.at(v)] += (n % 2 == 0 ? 1 : -1) * c;
        }
        extra.set_column(static_cast<int>(j), SparseVec::from_map(col));
    }
    return m + extra;
}

SparseMatrix Cyclic::one_minus_t(int n)
{
    const auto& src = words(n);
    const auto& idx = index_.at(n);
    SparseMatrix m = SparseMatrix::identity(static_cast<int>(src.size()));
    SparseMatrix t(m.rows(), m.cols());
    for (std::size_t j = 0; j < src.size(); ++j) {
        const Word& w = src[j];
        Word v{w.back()};
        v.insert(v.end(), w.begin(), w.end() - 1);
        t.set_column(static_cast<int>(j), SparseVec::unit(idx.at(v), n % 2 == 0 ? 1 : -1));
    }
    return m - t;
}

SparseMatrix Cyclic::norm(int n)
{
    const auto& src = words(n);
    const auto& idx = index_.at(n);
    SparseMatrix m(static_cast<int>(src.size()), static_cast<int>(src.size()));
    for (std::size_t j = 0; j < src.size(); ++j) {
        std::map<int, Scalar> col;
        Word w = src[j];
        Scalar sign = 1;
        for (int k = 0; k <= n; ++k) {
            col[idx.at(w)] += sign;
            Word v{w.back()};
            v.insert(v.end(), w.begin(), w.end() - 1);
            w = v;
            if (n % 2 == 1) sign = -sign;
        }
        m.set_column(static_cast<int>(j), SparseVec::from_map(col));
    }
    return m;
}

void Cyclic::build_tot(int hi)
{
    if (built_ >= hi) return;
    if (hi > max_n_) throw WindowExceeded("classical complex built only through degree " + std::to_string(max_n_));
    TotalComplex t;
    t.complex.lo = 0;
    t.complex.hi = hi;
    for (int T = 0; T <= hi; ++T) {
        int off = 0;
        for (int q = 0; q <= T; ++q) {
            t.offset[T][q] = off;
            t.size[T][q] = static_cast<int>(words(T - q).size());
            off += t.size[T][q];
        }
        t.complex.dims[T] = off;
    }
    for (int T = 1; T <= hi; ++T) {
        SparseMatrix d(t.complex.dims[T - 1], t.complex.dims[T]);
        for (int q = 0; q <= T; ++q) {
            const int p = T - q;
            const int col = t.offset[T][q];
            if (p >= 1) {
                if (q % 2 == 0)
                    d.add_block(t.offset[T - 1][q], col, b(p));
                else
                    d.add_block(t.offset[T - 1][q], col, bprime(p), -1);
            }
            if (q % 2 == 1)
                d.add_block(t.offset[T - 1][q - 1], col, one_minus_t(p));
            else if (q >= 2)
                d.add_block(t.offset[T - 1][q - 1], col, norm(p));
        }
        t.complex.boundary[T] = std::move(d);
    }
    tot_ = std::move(t);
    built_ = hi;
    hc_bases_.clear();
}

int Cyclic::hh(int n)
{
    if (n + 1 > max_n_) throw WindowExceeded("classical HH beyond the built range");
    words(n + 1);
    SparseMatrix in = b(n + 1);
    SparseMatrix out = n >= 1 ? b(n) : SparseMatrix(0, static_cast<int>(words(n).size()));
    return HomologyBasis(static_cast<int>(words(n).size()), in, out).dim();
}

const HomologyBasis& Cyclic::hc_basis(int n)
{
    build_tot(n + 1);
    auto it = hc_bases_.find(n);
    if (it != hc_bases_.end()) return it->second;
    return hc_bases_.emplace(n, HomologyBasis(tot_.dim(n), tot_.complex.d(n + 1), tot_.complex.d(n))).first->second;
}

int Cyclic::hc(int n) { return hc_basis(n).dim(); }

HomologyReport Cyclic::hp(int parity, int max_steps)
{
    return run_ladder(parity, max_n_ - 1, max_steps, [&](int n) { return hc(n); },
                      [&](int n, int k) {
                          build_tot(n + 1);
                          SparseMatrix f = drop_columns(tot_, n, 2 * k);
                          return rank(induced_map(hc_basis(n), hc_basis(n - 2 * k), f));
                      });
}

}  // namespace classical

}  // namespace ainf
