#include "ainf/bar.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace ainf {

void ComplexWindow::check() const
{
    if (max_weight < 2) throw StructuralError("window too small: max weight must be at least 2");
    if (max_degree < 0) throw StructuralError("window max degree must be non-negative");
}

void ComplexWindow::check(const AInfinityAlgebra& a) const
{
    check();
    if (a.space.total_dim() > 0 && a.space.high() > max_degree)
        throw WindowExceeded("algebra '" + a.name + "' has elements in degree " + std::to_string(a.space.high()) +
                             " > max degree " + std::to_string(max_degree));
}

void ComplexWindow::require_reliable(int degree, const char* what) const
{
    if (degree > reliable_bound())
        throw WindowExceeded(std::string(what) + " in degree " + std::to_string(degree) + " needs max weight >= " +
                             std::to_string(degree + 2) + " (window has " + std::to_string(max_weight) + ")");
}

BarCoalgebra::BarCoalgebra(const AInfinityAlgebra& a, const ComplexWindow& win) : basis_(a.basis()), window_(win)
{
    win.check(a);
    build();
}

BarCoalgebra::BarCoalgebra(const BasisInfo& basis, const ComplexWindow& win) : basis_(basis), window_(win)
{
    win.check();
    build();
}

void BarCoalgebra::build()
{
    std::vector<Word> all{Word{}};
    std::vector<Word> layer{Word{}};
    for (int r = 1; r <= window_.max_weight; ++r) {
        std::vector<Word> next;
        for (const auto& w : layer)
            for (int a = 0; a < basis_.size(); ++a) {
                Word x = w;
                x.push_back(a);
                next.push_back(std::move(x));
            }
        all.insert(all.end(), next.begin(), next.end());
        layer = std::move(next);
        if (layer.empty()) break;
    }
    for (const auto& w : all) {
        auto d = static_cast<std::size_t>(basis_.suspended(w));
        if (by_degree_.size() <= d) by_degree_.resize(d + 1);
        by_degree_[d].push_back(w);
    }
    std::vector<std::vector<std::string>> labels(by_degree_.size());
    for (std::size_t d = 0; d < by_degree_.size(); ++d) {
        auto& ws = by_degree_[d];
        std::stable_sort(ws.begin(), ws.end(), [](const Word& a, const Word& b) {
            return a.size() != b.size() ? a.size() < b.size() : a < b;
        });
        for (std::size_t i = 0; i < ws.size(); ++i) {
            index_[ws[i]] = static_cast<int>(i);
            labels[d].push_back(ws[i].empty() ? "1" : format_word(ws[i], basis_.label));
        }
    }
    space_ = GradedVectorSpace(0, std::move(labels));
}

const std::vector<Word>& BarCoalgebra::words(int degree) const
{
    static const std::vector<Word> none;
    if (degree < 0 || degree >= static_cast<int>(by_degree_.size())) return none;
    return by_degree_[static_cast<std::size_t>(degree)];
}

int BarCoalgebra::index(const Word& w) const
{
    auto it = index_.find(w);
    if (it == index_.end()) throw WindowExceeded("word " + format_word(w, basis_.label) + " lies outside the bar window");
    return it->second;
}

std::vector<std::vector<int>> BarCoalgebra::weight_decomposition(int n) const
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    const int top = basis_.size() == 0 ? -1 : *std::max_element(basis_.degree.begin(), basis_.degree.end());
    std::function<void(int)> rec = [&](int remaining) {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) >= window_.max_weight) return;
        for (int i = 0; i <= top && i + 1 <= remaining; ++i) {
            bool present = std::find(basis_.degree.begin(), basis_.degree.end(), i) != basis_.degree.end();
            if (!present) continue;
            cur.push_back(i);
            rec(remaining - i - 1);
            cur.pop_back();
        }
    };
    rec(n);
    return out;
}

Tensor BarCoalgebra::column_to_tensor(int degree, const SparseVec& v) const
{
    Tensor t;
    const auto& ws = words(degree);
    for (const auto& [i, c] : v) t[ws[static_cast<std::size_t>(i)]] = c;
    return t;
}

SparseVec BarCoalgebra::tensor_to_column(int degree, const Tensor& t) const
{
    std::map<int, Scalar> col;
    for (const auto& [w, c] : t) {
        if (basis_.suspended(w) != degree) throw StructuralError("tensor has the wrong bar degree");
        col[index(w)] += c;
    }
    return SparseVec::from_map(col);
}

BarCoalgebra build_bar(const AInfinityAlgebra& a, const ComplexWindow& win)
{
    return BarCoalgebra(a, win);
}

TensorPair coproduct(const Word& w)
{
    TensorPair out;
    for (std::size_t i = 0; i <= w.size(); ++i)
        out[{Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i)), Word(w.begin() + static_cast<std::ptrdiff_t>(i), w.end())}] += 1;
    return out;
}

TensorPair coproduct(const Tensor& t)
{
    TensorPair out;
    for (const auto& [w, c] : t)
        for (const auto& [p, x] : coproduct(w)) {
            auto& slot = out[p];
            slot += c * x;
            if (slot == 0) out.erase(p);
        }
    return out;
}

Tensor apply_coderivation(const Cochain& m, const Word& w, const BasisInfo& basis)
{
    Tensor out;
    const bool odd_k = (m.suspended_degree % 2) != 0;
    for (const auto& [i, comp] : m.components) {
        if (comp.empty() || i > static_cast<int>(w.size())) continue;
        int left = 0;
        for (int j = 0; j + i <= static_cast<int>(w.size()); ++j) {
            Word window(w.begin() + j, w.begin() + j + i);
            auto it = comp.find(window);
            if (it != comp.end()) {
                const Scalar sign = (odd_k && (left % 2 != 0)) ? -1 : 1;
                for (const auto& [o, c] : it->second) {
                    Word nw(w.begin(), w.begin() + j);
                    nw.push_back(o);
                    nw.insert(nw.end(), w.begin() + j + i, w.end());
                    add_to(out, nw, sign * c);
                }
            }
            if (j < static_cast<int>(w.size())) left += basis.degree[static_cast<std::size_t>(w[static_cast<std::size_t>(j)])] + 1;
        }
    }
    return out;
}

Tensor apply_coderivation(const Cochain& m, const Tensor& t, const BasisInfo& basis)
{
    Tensor out;
    for (const auto& [w, c] : t) add_to(out, apply_coderivation(m, w, basis), c);
    return out;
}

TensorPair coderivation_on_pair(const Cochain& m, const TensorPair& t, const BasisInfo& basis)
{
    TensorPair out;
    auto add = [&](const Word& a, const Word& b, const Scalar& c) {
        auto& slot = out[{a, b}];
        slot += c;
        if (slot == 0) out.erase({a, b});
    };
    const bool odd_k = (m.suspended_degree % 2) != 0;
    for (const auto& [p, c] : t) {
        const auto& [u, v] = p;
        for (const auto& [u2, x] : apply_coderivation(m, u, basis)) add(u2, v, c * x);
        const Scalar sign = (odd_k && basis.suspended(u) % 2 != 0) ? -1 : 1;
        for (const auto& [v2, x] : apply_coderivation(m, v, basis)) add(u, v2, sign * c * x);
    }
    return out;
}

GradedLinearMap coderivation_from_cochain(const Cochain& m, const BarCoalgebra& bar)
{
    m.validate(bar.basis());
    GradedLinearMap f{bar.space(), bar.space(), m.suspended_degree, {}};
    for (int n = 0; n <= bar.max_degree(); ++n) {
        const auto& ws = bar.words(n);
        if (ws.empty()) continue;
        const int target = n + m.suspended_degree;
        SparseMatrix block(bar.space().dim(target), static_cast<int>(ws.size()));
        for (std::size_t j = 0; j < ws.size(); ++j) {
            Tensor t = apply_coderivation(m, ws[j], bar.basis());
            block.set_column(static_cast<int>(j), bar.tensor_to_column(target, t));
        }
        f.set_block(n, std::move(block));
    }
    return f;
}

namespace {

Tensor apply_matrix(const GradedLinearMap& c, const BarCoalgebra& bar, const Word& w)
{
    const int n = bar.degree(w);
    SparseMatrix b = c.block(n);
    return bar.column_to_tensor(n + c.degree, b.column(bar.index(w)));
}

}  // namespace

std::optional<Word> coderivation_defect(const GradedLinearMap& c, const BarCoalgebra& bar)
{
    const bool odd_k = (c.degree % 2) != 0;
    for (int n = 0; n <= bar.max_degree(); ++n)
        for (const auto& w : bar.words(n)) {
            TensorPair lhs = coproduct(apply_matrix(c, bar, w));
            TensorPair rhs;
            for (const auto& [p, x] : coproduct(w)) {
                const auto& [u, v] = p;
                for (const auto& [u2, y] : apply_matrix(c, bar, u)) rhs[{u2, v}] += x * y;
                const Scalar sign = (odd_k && bar.degree(u) % 2 != 0) ? -1 : 1;
                for (const auto& [v2, y] : apply_matrix(c, bar, v)) rhs[{u, v2}] += sign * x * y;
            }
            std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
            if (lhs != rhs) return w;
        }
    return std::nullopt;
}

Cochain cochain_from_coderivation(const GradedLinearMap& c, const BarCoalgebra& bar)
{
    if (auto bad = coderivation_defect(c, bar))
        throw InvariantViolation("map is not a coderivation on " + format_word(*bad, bar.basis().label));
    Cochain m{c.degree, {}};
    for (int n = 0; n <= bar.max_degree(); ++n)
        for (const auto& w : bar.words(n)) {
            std::map<int, Scalar> out;
            for (const auto& [u, x] : apply_matrix(c, bar, w))
                if (u.size() == 1) out[u[0]] += x;
            SparseVec v = SparseVec::from_map(out);
            if (!v.empty()) m.add_term(w, v);
        }
    return m;
}

GradedLinearMap coalgebra_morphism_from_map(const Cochain& f, const BarCoalgebra& source, const BarCoalgebra& target)
{
    if (f.suspended_degree != 0) throw StructuralError("coalgebra morphisms come from suspended-degree-0 maps");
    for (const auto& [n, comp] : f.components)
        for (const auto& [w, v] : comp)
            for (const auto& [o, c] : v)
                if (target.basis().degree[static_cast<std::size_t>(o)] != source.basis().internal(w) + n - 1)
                    throw StructuralError("component f_" + std::to_string(n) + " has the wrong degree");
    GradedLinearMap F{source.space(), target.space(), 0, {}};
    for (int n = 0; n <= source.max_degree(); ++n) {
        const auto& ws = source.words(n);
        if (ws.empty()) continue;
        SparseMatrix block(target.space().dim(n), static_cast<int>(ws.size()));
        for (std::size_t j = 0; j < ws.size(); ++j) {
            const Word& w = ws[j];
            Tensor out;
            // Splittings of w into consecutive non-empty blocks.
            std::function<void(std::size_t, Tensor)> rec = [&](std::size_t pos, Tensor partial) {
                if (pos == w.size()) {
                    add_to(out, partial);
                    return;
                }
                for (std::size_t end = pos + 1; end <= w.size(); ++end) {
                    SparseVec val = f.eval(Word(w.begin() + static_cast<std::ptrdiff_t>(pos), w.begin() + static_cast<std::ptrdiff_t>(end)));
                    if (val.empty()) continue;
                    Tensor next;
                    for (const auto& [pw, pc] : partial)
                        for (const auto& [o, c] : val) {
                            Word x = pw;
                            x.push_back(o);
                            add_to(next, x, pc * c);
                        }
                    if (!next.empty()) rec(end, std::move(next));
                }
            };
            rec(0, Tensor{{Word{}, Scalar(1)}});
            block.set_column(static_cast<int>(j), target.tensor_to_column(n, out));
        }
        F.set_block(n, std::move(block));
    }
    return F;
}

bool is_coalgebra_morphism(const GradedLinearMap& f, const BarCoalgebra& source, const BarCoalgebra& target)
{
    auto apply = [&](const Word& w) {
        const int n = source.degree(w);
        return target.column_to_tensor(n, f.block(n).column(source.index(w)));
    };
    for (int n = 0; n <= source.max_degree(); ++n)
        for (const auto& w : source.words(n)) {
            TensorPair lhs = coproduct(apply(w));
            TensorPair rhs;
            for (const auto& [p, x] : coproduct(w)) {
                Tensor a = apply(p.first);
                Tensor b = apply(p.second);
                for (const auto& [u, y] : a)
                    for (const auto& [v, z] : b) rhs[{u, v}] += x * y * z;
            }
            std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
            if (lhs != rhs) return false;
        }
    // counit: f̂(1) = 1
    return apply(Word{}) == Tensor{{Word{}, Scalar(1)}};
}

bool is_coassociative(const BarCoalgebra& bar)
{
    using Triple = std::map<std::vector<Word>, Scalar>;
    for (int n = 0; n <= bar.max_degree(); ++n)
        for (const auto& w : bar.words(n)) {
            Triple left;
            Triple right;
            for (const auto& [p, x] : coproduct(w)) {
                for (const auto& [q, y] : coproduct(p.first)) left[{q.first, q.second, p.second}] += x * y;
                for (const auto& [q, y] : coproduct(p.second)) right[{p.first, q.first, q.second}] += x * y;
            }
            if (left != right) return false;
        }
    return true;
}

}  // namespace ainf
