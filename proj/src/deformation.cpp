#include "ainf/deformation.hpp"

#include <functional>

namespace ainf {

namespace {

bool odd(int x) { return x % 2 != 0; }

Scalar koszul(int a, int b) { return odd(a * b) ? Scalar(-1) : Scalar(1); }

// Row functionals on C^s expressing closedness of an unknown cochain: for
// s = -1 the closed-trace conditions, for s = 0 τ∘g = 0 on A_0.
std::vector<SparseVec> closedness_rows(const DeformationComplex& dc, int s, const Trace& tau)
{
    const BasisInfo b = dc.algebra().basis();
    std::map<std::pair<Word, int>, int> index;
    const auto entries = dc.basis(s);
    for (std::size_t i = 0; i < entries.size(); ++i) index[entries[i]] = static_cast<int>(i);
    auto add = [&](std::map<int, Scalar>& row, const Word& w, const Scalar& sign) {
        for (const auto& [o, t] : tau.values) {
            auto it = index.find({w, o});
            if (it != index.end()) row[it->second] += sign * t;
        }
    };
    std::vector<SparseVec> rows;
    auto push = [&](std::map<int, Scalar>& row) {
        SparseVec v = SparseVec::from_map(row);
        if (!v.empty()) rows.push_back(v);
    };
    for (int x = 0; x < b.size(); ++x) {
        const int dx = b.degree[static_cast<std::size_t>(x)];
        if (s == -1 && dx == 1) {
            std::map<int, Scalar> row;
            add(row, {x}, 1);
            push(row);
        }
        if (s == 0 && dx == 0) {
            std::map<int, Scalar> row;
            add(row, {x}, 1);
            push(row);
        }
        if (s == -1 && dx == 0)
            for (int y = x + 1; y < b.size(); ++y) {
                if (b.degree[static_cast<std::size_t>(y)] != 0) continue;
                std::map<int, Scalar> row;
                add(row, {x, y}, 1);
                add(row, {y, x}, -1);
                push(row);
            }
    }
    return rows;
}

// Solves d x = y subject to the extra row constraints (homogeneous).
std::optional<SparseVec> constrained_solve(const SparseMatrix& d, const SparseVec& y, const std::vector<SparseVec>& rows)
{
    const int n = d.rows();
    SparseMatrix m(n + static_cast<int>(rows.size()), d.cols());
    for (int j = 0; j < d.cols(); ++j) {
        std::map<int, Scalar> col;
        for (const auto& [i, x] : d.column(j)) col[i] = x;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            Scalar x = rows[r].get(j);
            if (x != 0) col[n + static_cast<int>(r)] = x;
        }
        m.set_column(j, SparseVec::from_map(col));
    }
    return solve(m, y);
}

Cochain zero_cochain(int k) { return Cochain{k, {}}; }

std::optional<DualClass> try_dual_class(const TotCochain& psi, const CyclicChains& c, std::vector<std::string>& notes)
{
    try {
        return dual_class(psi, c);
    } catch (const WindowExceeded& e) {
        notes.push_back(std::string("cyclic class not computed: ") + e.what());
        return std::nullopt;
    }
}

}  // namespace

Scalar Trace::operator()(const SparseVec& v) const
{
    Scalar s = 0;
    for (const auto& [i, c] : v) s += c * values.get(i);
    return s;
}

std::optional<TraceDefect> trace_defect(const Cochain& c, const Trace& tau, const BasisInfo& basis)
{
    for (int x = 0; x < basis.size(); ++x) {
        const int dx = basis.degree[static_cast<std::size_t>(x)];
        if (dx == 1) {
            Scalar v = tau(c.eval({x}));
            if (v != 0) return TraceDefect{0, {x}, {}, v};
        }
        if (dx != 0) continue;
        for (int y = x + 1; y < basis.size(); ++y) {
            if (basis.degree[static_cast<std::size_t>(y)] != 0) continue;
            Scalar v = tau(c.eval({x, y})) - tau(c.eval({y, x}));
            if (v != 0) return TraceDefect{0, {x, y}, {y, x}, v};
        }
    }
    return std::nullopt;
}

Cochain FormalDeformation::term(int i) const
{
    if (i == 0) return base.m;
    if (i <= order()) return terms[static_cast<std::size_t>(i - 1)];
    return zero_cochain(-1);
}

Cochain FormalDeformation::mc_defect(int n) const
{
    const BasisInfo b = base.basis();
    Cochain out = zero_cochain(-2);
    for (int i = 0; i <= n; ++i) out = out + circle(term(i), term(n - i), b);
    out.prune();
    return out;
}

std::optional<int> FormalDeformation::first_mc_failure() const
{
    for (int n = 1; n <= order(); ++n)
        if (!mc_defect(n).is_zero()) return n;
    return std::nullopt;
}

std::optional<TraceDefect> closedness_defect(const FormalDeformation& d, const Trace& tau)
{
    const BasisInfo b = d.base.basis();
    for (int i = 0; i <= d.order(); ++i)
        if (auto t = trace_defect(d.term(i), tau, b)) {
            t->order = i;
            return t;
        }
    return std::nullopt;
}

SparseVec TotCochain::flatten(const TotalComplex& tot) const
{
    std::map<int, Scalar> out;
    const auto& offs = tot.offset.at(degree);
    for (const auto& [q, v] : columns) {
        auto it = offs.find(q);
        if (it == offs.end()) {
            if (!v.empty()) throw StructuralError("column " + std::to_string(q) + " is not part of Tot_" + std::to_string(degree));
            continue;
        }
        for (const auto& [i, x] : v) out[it->second + i] = x;
    }
    return SparseVec::from_map(out);
}

TotCochain TotCochain::unflatten(int degree, const SparseVec& v, const TotalComplex& tot)
{
    TotCochain out{degree, {}};
    for (const auto& [q, off] : tot.offset.at(degree)) {
        const int size = tot.size.at(degree).at(q);
        std::map<int, Scalar> col;
        for (const auto& [i, x] : v)
            if (i >= off && i < off + size) col[i - off] = x;
        out.columns[q] = SparseVec::from_map(col);
    }
    return out;
}

bool TotCochain::is_zero() const
{
    for (const auto& [q, v] : columns)
        if (!v.empty()) return false;
    return true;
}

PieceFunctional pair_cochain_with_cocycle(const Cochain& phi, const PieceFunctional& tau, const CyclicChains& c)
{
    const int k = phi.suspended_degree;
    const int target = tau.piece + 1 - k;
    PieceFunctional out{target, {}};
    if (target < 0 || tau.values.empty() || phi.is_zero()) return out;
    const BasisInfo& b = c.basis();
    const Cochain& m = c.algebra().m;
    const auto& words = c.piece(target);
    std::map<int, Scalar> vals;
    for (std::size_t j = 0; j < words.size(); ++j) {
        const Word& w = words[j];
        const Scalar sign = koszul(k, b.degree[static_cast<std::size_t>(w[0])] + 1);
        Scalar total = 0;
        for (const auto& [n, comp] : phi.components) {
            if (1 + n > static_cast<int>(w.size())) continue;
            auto it = comp.find(Word(w.begin() + 1, w.begin() + 1 + n));
            if (it == comp.end()) continue;
            for (const auto& [o, x] : it->second)
                for (const auto& [r, y] : m.eval({w[0], o})) {
                    Word v{r};
                    v.insert(v.end(), w.begin() + 1 + n, w.end());
                    total += x * y * tau.values.get(c.index(tau.piece, v));
                }
        }
        if (total != 0) vals[static_cast<int>(j)] = sign * total;
    }
    out.values = SparseVec::from_map(vals);
    return out;
}

TotCochain pair_with_trace(const Cochain& phi, const Trace& tau, const CyclicChains& c)
{
    const int k = phi.suspended_degree;
    TotCochain psi{1 - k, {}};
    if (psi.degree < 0) return psi;
    std::map<int, Scalar> t0;
    const auto& p0 = c.piece(0);
    for (std::size_t j = 0; j < p0.size(); ++j) {
        Scalar x = tau(p0[j][0]);
        if (x != 0) t0[static_cast<int>(j)] = x;
    }
    psi.columns[0] = pair_cochain_with_cocycle(phi, PieceFunctional{0, SparseVec::from_map(t0)}, c).values;
    if (psi.degree >= 1) {
        const auto& words = c.piece(psi.degree - 1);
        std::map<int, Scalar> vals;
        const Scalar sign = odd(k) ? -1 : 1;
        for (std::size_t j = 0; j < words.size(); ++j) {
            Scalar x = tau(phi.eval(words[j]));
            if (x != 0) vals[static_cast<int>(j)] = sign * x;
        }
        psi.columns[1] = SparseVec::from_map(vals);
    }
    return psi;
}

TotCochain coboundary(const TotCochain& psi, const TotalComplex& tot)
{
    const SparseMatrix d = tot.complex.d(psi.degree + 1);
    return TotCochain::unflatten(psi.degree + 1, d.transpose().apply(psi.flatten(tot)), tot);
}

DualClass dual_class(const TotCochain& psi, const CyclicChains& c)
{
    const TotalComplex tot = cyclic_total_complex(c, psi.degree + 1);
    DualClass out;
    out.defect = coboundary(psi, tot);
    out.cocycle = out.defect.is_zero();
    const SparseVec flat = psi.flatten(tot);
    if (flat.empty())
        out.coboundary = true;
    else if (psi.degree >= 1)
        out.coboundary = solve(tot.complex.d(psi.degree).transpose(), flat).has_value();
    return out;
}

ObstructionReport obstruction_class(const FormalDeformation& d, const std::optional<Trace>& tau, const ComplexWindow& win)
{
    if (auto n = d.first_mc_failure())
        throw StructuralError("the family fails the Maurer-Cartan identity at order " + std::to_string(*n));
    const BasisInfo b = d.base.basis();
    if (tau)
        if (auto t = closedness_defect(d, *tau))
            throw StructuralError("deformation is not closed at order " + std::to_string(t->order) + " on (" +
                                  format_word(t->left, b.label) + ")");
    ObstructionReport r;
    r.order = d.order();
    const int n = d.order();
    r.rhs = zero_cochain(-2);
    for (int i = 1; i <= n; ++i) r.rhs = r.rhs - circle(d.term(i), d.term(n + 1 - i), b);
    r.rhs.prune();

    DeformationComplex dc(d.base, win);
    r.rhs_closed = deformation_differential(r.rhs, d.base).is_zero();
    r.exact = dc.primitive(r.rhs).has_value();

    std::optional<SparseVec> x;
    if (tau) {
        CyclicChains chains(d.base, win);
        r.cyclic = try_dual_class(pair_with_trace(r.rhs, *tau, chains), chains, r.notes);
        x = constrained_solve(dc.differential(-1), dc.to_vector(r.rhs), closedness_rows(dc, -1, *tau));
        r.notes.push_back("HC3 class is the pairing with the trace: column 0 tau(m2(a0, R(...))), column 1 -tau(R(...))");
    } else {
        x = solve(dc.differential(-1), dc.to_vector(r.rhs));
    }
    if (x) {
        r.witness = dc.from_vector(-1, *x);
        FormalDeformation ext = d;
        ext.terms.push_back(*r.witness);
        r.witness_mc = ext.mc_defect(n + 1).is_zero();
        r.witness_closed = !tau || !trace_defect(*r.witness, *tau, b);
    }
    return r;
}

EquivalenceReport equivalence_obstruction(const FormalDeformation& d1, const FormalDeformation& d2,
                                          const std::optional<Trace>& tau, const ComplexWindow& win)
{
    if (!(d1.base.m == d2.base.m) || d1.base.dim() != d2.base.dim())
        throw StructuralError("deformations of different algebras");
    const BasisInfo b = d1.base.basis();
    EquivalenceReport r;
    const int top = std::max(d1.order(), d2.order());
    r.order = top + 1;
    for (int i = 1; i <= top; ++i)
        if (!(d1.term(i) == d2.term(i))) {
            r.order = i;
            break;
        }
    r.difference = d2.term(r.order) - d1.term(r.order);
    r.difference.prune();
    r.difference_closed = deformation_differential(r.difference, d1.base).is_zero();
    DeformationComplex dc(d1.base, win);
    r.exact = dc.primitive(r.difference).has_value();
    std::optional<SparseVec> g;
    if (tau) {
        CyclicChains chains(d1.base, win);
        r.cyclic = try_dual_class(pair_with_trace(r.difference, *tau, chains), chains, r.notes);
        g = constrained_solve(dc.differential(0), dc.to_vector(r.difference), closedness_rows(dc, 0, *tau));
    } else {
        g = solve(dc.differential(0), dc.to_vector(r.difference));
    }
    if (g) r.witness = dc.from_vector(0, *g);
    return r;
}

}  // namespace ainf
