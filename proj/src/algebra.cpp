#include "ainf/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "ainf/exactlin/linalg.hpp"

namespace ainf {

void add_to(Tensor& t, const Word& w, const Scalar& c)
{
    if (c == 0) return;
    auto [it, inserted] = t.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) t.erase(it);
    }
}

void add_to(Tensor& t, const Tensor& u, const Scalar& c)
{
    for (const auto& [w, x] : u) add_to(t, w, c * x);
}

std::string format_word(const Word& w, const std::vector<std::string>& labels)
{
    if (w.empty()) return "()";
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += labels[static_cast<std::size_t>(w[i])];
    }
    return s + ")";
}

BasisInfo BasisInfo::of(const GradedVectorSpace& v)
{
    BasisInfo b;
    if (v.total_dim() == 0) return b;
    for (int d = v.low(); d <= v.high(); ++d)
        for (const auto& l : v.labels(d)) {
            b.degree.push_back(d);
            b.label.push_back(l);
        }
    return b;
}

int BasisInfo::find(const std::string& l) const
{
    auto it = std::find(label.begin(), label.end(), l);
    return it == label.end() ? -1 : static_cast<int>(it - label.begin());
}

int BasisInfo::suspended(const Word& w) const
{
    int s = 0;
    for (int a : w) s += degree[static_cast<std::size_t>(a)] + 1;
    return s;
}

int BasisInfo::internal(const Word& w) const
{
    int s = 0;
    for (int a : w) s += degree[static_cast<std::size_t>(a)];
    return s;
}

void Cochain::add_term(const Word& w, const SparseVec& value, const Scalar& c)
{
    auto& comp = components[static_cast<int>(w.size())];
    auto& slot = comp[w];
    slot.add_scaled(value, c);
    if (slot.empty()) comp.erase(w);
}

SparseVec Cochain::eval(const Word& w) const
{
    auto c = components.find(static_cast<int>(w.size()));
    if (c == components.end()) return {};
    auto it = c->second.find(w);
    return it == c->second.end() ? SparseVec{} : it->second;
}

const std::map<Word, SparseVec>* Cochain::component(int weight) const
{
    auto c = components.find(weight);
    return c == components.end() ? nullptr : &c->second;
}

int Cochain::max_weight() const
{
    int w = -1;
    for (const auto& [n, comp] : components)
        if (!comp.empty()) w = std::max(w, n);
    return w;
}

bool Cochain::is_zero() const
{
    for (const auto& [n, comp] : components)
        for (const auto& [w, v] : comp)
            if (!v.empty()) return false;
    return true;
}

void Cochain::prune()
{
    for (auto it = components.begin(); it != components.end();) {
        std::erase_if(it->second, [](const auto& kv) { return kv.second.empty(); });
        if (it->second.empty())
            it = components.erase(it);
        else
            ++it;
    }
}

Cochain Cochain::scaled(const Scalar& c) const
{
    Cochain r{suspended_degree, {}};
    if (c == 0) return r;
    for (const auto& [n, comp] : components)
        for (const auto& [w, v] : comp) r.components[n][w] = v.scaled(c);
    r.prune();
    return r;
}

Cochain Cochain::operator+(const Cochain& o) const
{
    if (!is_zero() && !o.is_zero() && suspended_degree != o.suspended_degree)
        throw StructuralError("adding cochains of different suspended degree");
    Cochain r = *this;
    if (r.is_zero()) r.suspended_degree = o.suspended_degree;
    for (const auto& [n, comp] : o.components)
        for (const auto& [w, v] : comp) r.add_term(w, v);
    r.prune();
    return r;
}

Cochain Cochain::operator-(const Cochain& o) const
{
    return *this + o.scaled(-1);
}

bool Cochain::operator==(const Cochain& o) const
{
    Cochain a = *this;
    Cochain b = o;
    a.prune();
    b.prune();
    if (a.components != b.components) return false;
    return a.is_zero() || a.suspended_degree == b.suspended_degree;
}

void Cochain::validate(const BasisInfo& basis) const
{
    for (const auto& [n, comp] : components)
        for (const auto& [w, v] : comp) {
            if (static_cast<int>(w.size()) != n) throw StructuralError("cochain word stored under wrong weight");
            for (int a : w)
                if (a < 0 || a >= basis.size()) throw StructuralError("cochain input outside the basis");
            int expected = basis.internal(w) + n - 1 + suspended_degree;
            for (const auto& [i, c] : v) {
                if (i < 0 || i >= basis.size()) throw StructuralError("cochain output outside the basis");
                if (basis.degree[static_cast<std::size_t>(i)] != expected) {
                    std::ostringstream os;
                    os << "degree mismatch: m_" << n << format_word(w, basis.label) << " has a component on "
                       << basis.label[static_cast<std::size_t>(i)] << " of degree " << basis.degree[static_cast<std::size_t>(i)]
                       << ", expected " << expected;
                    throw StructuralError(os.str());
                }
            }
        }
}

namespace {

bool odd(long x) { return (x % 2) != 0; }

}  // namespace

Cochain circle(const Cochain& m, const Cochain& mp, const BasisInfo& basis)
{
    Cochain out{m.suspended_degree + mp.suspended_degree, {}};
    const bool odd_inner = odd(mp.suspended_degree);
    std::map<Word, std::map<int, Scalar>> acc;
    for (const auto& [q, inner] : mp.components) {
        // output letter -> (input word, coefficient)
        std::map<int, std::vector<std::pair<const Word*, const Scalar*>>> by_letter;
        for (const auto& [u, val] : inner)
            for (const auto& [letter, c] : val) by_letter[letter].emplace_back(&u, &c);
        for (const auto& [p, outer] : m.components) {
            if (p == 0) continue;
            for (const auto& [w, val] : outer) {
                int left = 0;  // suspended degree of w[0..i)
                for (std::size_t i = 0; i < w.size(); ++i) {
                    auto hit = by_letter.find(w[i]);
                    if (hit != by_letter.end()) {
                        const bool neg = odd_inner && odd(left);
                        for (const auto& [u, c] : hit->second) {
                            Word nw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
                            nw.insert(nw.end(), u->begin(), u->end());
                            nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end());
                            Scalar coef = neg ? Scalar(-*c) : Scalar(*c);
                            auto& slot = acc[nw];
                            for (const auto& [o, x] : val) slot[o] += coef * x;
                        }
                    }
                    left += basis.degree[static_cast<std::size_t>(w[i])] + 1;
                }
            }
        }
    }
    for (const auto& [w, col] : acc) {
        SparseVec v = SparseVec::from_map(col);
        if (!v.empty()) out.components[static_cast<int>(w.size())][w] = std::move(v);
    }
    return out;
}

Cochain bracket(const Cochain& x, const Cochain& y, const BasisInfo& basis)
{
    Cochain a = circle(x, y, basis);
    Cochain b = circle(y, x, basis);
    const bool sign_plus = !(odd(x.suspended_degree) && odd(y.suspended_degree));
    // x∘y - (-1)^{|x||y|} y∘x
    Cochain r = sign_plus ? a - b : a + b;
    r.suspended_degree = x.suspended_degree + y.suspended_degree;
    return r;
}

std::vector<StasheffViolation> check_stasheff(const Cochain& m, const BasisInfo& basis, int max_weight)
{
    std::vector<StasheffViolation> out;
    Cochain mm = circle(m, m, basis);
    for (const auto& [n, comp] : mm.components) {
        if (max_weight >= 0 && n > max_weight) continue;
        for (const auto& [w, v] : comp)
            if (!v.empty()) out.push_back({n, w, v});
    }
    return out;
}

std::string describe_violation(const StasheffViolation& v, const BasisInfo& basis)
{
    std::ostringstream os;
    os << "Stasheff identity fails at n=" << v.weight << " on " << format_word(v.witness, basis.label) << ": value";
    for (const auto& [i, c] : v.value) os << " " << to_string(c) << "*" << basis.label[static_cast<std::size_t>(i)];
    return os.str();
}

bool AInfinityAlgebra::concentrated_in_degree_zero() const
{
    return space.total_dim() == 0 || (space.low() == 0 && space.high() == 0);
}

bool AInfinityAlgebra::has_higher_products() const
{
    for (const auto& [n, comp] : m.components)
        if (n >= 3 && !comp.empty()) return true;
    return false;
}

std::vector<std::string> unit_violations(const AInfinityAlgebra& a)
{
    std::vector<std::string> out;
    if (!a.unit) return out;
    const BasisInfo b = a.basis();
    const int u = *a.unit;
    if (u < 0 || u >= b.size() || b.degree[static_cast<std::size_t>(u)] != 0) {
        out.push_back("unit is not a degree-0 basis element");
        return out;
    }
    for (int x = 0; x < b.size(); ++x) {
        SparseVec left = a.m.eval({u, x});
        SparseVec right = a.m.eval({x, u});
        if (!(left == SparseVec::unit(x)))
            out.push_back("m2(" + b.label[static_cast<std::size_t>(u)] + "," + b.label[static_cast<std::size_t>(x)] + ") != " + b.label[static_cast<std::size_t>(x)]);
        Scalar s = odd(b.degree[static_cast<std::size_t>(x)]) ? -1 : 1;
        if (!(right == SparseVec::unit(x, s)))
            out.push_back("m2(" + b.label[static_cast<std::size_t>(x)] + "," + b.label[static_cast<std::size_t>(u)] + ") != (-1)^|a| " + b.label[static_cast<std::size_t>(x)]);
    }
    for (const auto& [n, comp] : a.m.components) {
        if (n == 2) continue;
        for (const auto& [w, v] : comp)
            if (!v.empty() && std::find(w.begin(), w.end(), u) != w.end())
                out.push_back("m" + std::to_string(n) + format_word(w, b.label) + " != 0 although it contains the unit");
    }
    return out;
}

void AInfinityAlgebra::validate() const
{
    if (space.total_dim() > 0 && space.low() < 0) throw StructuralError("A∞-algebra must be non-negatively graded");
    if (m.suspended_degree != -1) throw StructuralError("structure cochain must have suspended degree -1");
    if (m.component(0) && !m.component(0)->empty()) throw StructuralError("structure cochain has a weight-0 component");
    const BasisInfo b = basis();
    m.validate(b);
    auto v = check_stasheff(m, b);
    if (!v.empty()) throw InvariantViolation(describe_violation(v.front(), b));
    auto u = unit_violations(*this);
    if (!u.empty()) throw InvariantViolation("unit is not strict: " + u.front());
}

Cochain cochain_from_product(const std::vector<std::vector<SparseVec>>& table)
{
    Cochain m{-1, {}};
    for (std::size_t i = 0; i < table.size(); ++i)
        for (std::size_t j = 0; j < table[i].size(); ++j)
            if (!table[i][j].empty()) m.add_term({static_cast<int>(i), static_cast<int>(j)}, table[i][j]);
    return m;
}

}  // namespace ainf

namespace ainf {

Cochain cochain_from_entries(const BasisInfo& basis, int k, const std::vector<LabelEntry>& entries)
{
    Cochain c{k, {}};
    auto lookup = [&](const std::string& l) {
        int i = basis.find(l);
        if (i < 0) throw StructuralError("unknown basis label '" + l + "'");
        return i;
    };
    for (const auto& e : entries) {
        Word w;
        for (const auto& l : e.inputs) w.push_back(lookup(l));
        c.add_term(w, SparseVec::unit(lookup(e.output)), e.coeff);
    }
    c.prune();
    return c;
}

AInfinityAlgebra make_algebra(const std::string& name, const std::vector<std::vector<std::string>>& labels,
                              const std::vector<LabelEntry>& entries, const std::optional<std::string>& unit,
                              bool complete_unit, bool validate)
{
    AInfinityAlgebra a{name, GradedVectorSpace(0, labels), Cochain{-1, {}}, std::nullopt};
    const BasisInfo b = a.basis();
    std::vector<LabelEntry> all = entries;
    if (unit) {
        int u = b.find(*unit);
        if (u < 0) throw StructuralError("unit label '" + *unit + "' is not a basis element");
        a.unit = u;
        if (complete_unit) {
            auto listed = [&](const std::vector<std::string>& in) {
                return std::any_of(entries.begin(), entries.end(), [&](const LabelEntry& e) { return e.inputs == in; });
            };
            for (int x = 0; x < b.size(); ++x) {
                const std::string& l = b.label[static_cast<std::size_t>(x)];
                if (!listed({*unit, l})) all.push_back({{*unit, l}, l, 1});
                if (x != u && !listed({l, *unit}))
                    all.push_back({{l, *unit}, l, odd(b.degree[static_cast<std::size_t>(x)]) ? -1 : 1});
            }
        }
    }
    a.m = cochain_from_entries(b, -1, all);
    if (validate) a.validate();
    return a;
}

Cochain transport(const Cochain& c, const SparseMatrix& g, const SparseMatrix& g_inv)
{
    Cochain out{c.suspended_degree, {}};
    const int n = g.cols();
    std::map<int, std::vector<Word>> words;
    for (const auto& [w, comp] : c.components) {
        if (comp.empty()) continue;
        std::vector<Word> layer{Word{}};
        for (int r = 0; r < w; ++r) {
            std::vector<Word> next;
            for (const auto& x : layer)
                for (int a = 0; a < n; ++a) {
                    Word y = x;
                    y.push_back(a);
                    next.push_back(std::move(y));
                }
            layer = std::move(next);
        }
        for (const auto& x : layer) {
            Tensor t{{Word{}, Scalar(1)}};
            for (int a : x) {
                Tensor next;
                for (const auto& [p, pc] : t)
                    for (const auto& [i, ci] : g_inv.column(a)) {
                        Word q = p;
                        q.push_back(i);
                        add_to(next, q, pc * ci);
                    }
                t = std::move(next);
            }
            SparseVec val;
            for (const auto& [p, pc] : t) val.add_scaled(c.eval(p), pc);
            SparseVec img = g.apply(val);
            if (!img.empty()) out.add_term(x, img);
        }
    }
    out.prune();
    return out;
}

AInfinityAlgebra transport(const AInfinityAlgebra& a, const SparseMatrix& g)
{
    const int n = a.dim();
    if (g.rows() != n || g.cols() != n) throw StructuralError("basis change has the wrong shape");
    SparseMatrix g_inv(n, n);
    for (int j = 0; j < n; ++j) {
        auto x = solve(g, SparseVec::unit(j));
        if (!x) throw StructuralError("basis change is not invertible");
        g_inv.set_column(j, *x);
    }
    if (!(g * g_inv == SparseMatrix::identity(n))) throw StructuralError("basis change is not invertible");
    AInfinityAlgebra out = a;
    out.m = transport(a.m, g, g_inv);
    return out;
}

}  // namespace ainf
