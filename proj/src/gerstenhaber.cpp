#include "ainf/gerstenhaber.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace ainf {

Cochain deformation_differential(const Cochain& x, const AInfinityAlgebra& a)
{
    Cochain r = bracket(a.m, x, a.basis());
    r.suspended_degree = x.suspended_degree - 1;
    return r;
}

DeformationComplex::DeformationComplex(AInfinityAlgebra a, ComplexWindow win)
    : a_(std::move(a)), basis_(a_.basis()), win_(win)
{
    win_.check(a_);
}

void DeformationComplex::require(int s) const
{
    if (max_weight(s) > win_.max_weight)
        throw WindowExceeded("cochains of suspended degree " + std::to_string(s) + " reach weight " +
                             std::to_string(max_weight(s)) + " > max weight " + std::to_string(win_.max_weight));
}

std::vector<DeformationComplex::Entry> DeformationComplex::basis(int s) const
{
    require(s);
    std::vector<Entry> out;
    const int top = a_.top_degree();
    for (int n = 0; n <= max_weight(s); ++n) {
        Word w;
        std::function<void(int)> rec = [&](int internal) {
            if (static_cast<int>(w.size()) == n) {
                const int target = internal + n - 1 + s;
                for (int o = 0; o < basis_.size(); ++o)
                    if (basis_.degree[static_cast<std::size_t>(o)] == target) out.emplace_back(w, o);
                return;
            }
            for (int x = 0; x < basis_.size(); ++x) {
                const int d = basis_.degree[static_cast<std::size_t>(x)];
                if (internal + d + n - 1 + s > top) continue;
                w.push_back(x);
                rec(internal + d);
                w.pop_back();
            }
        };
        rec(0);
    }
    return out;
}

SparseVec DeformationComplex::to_vector(const Cochain& x) const
{
    const auto b = basis(x.suspended_degree);
    std::map<Entry, int> index;
    for (std::size_t i = 0; i < b.size(); ++i) index[b[i]] = static_cast<int>(i);
    std::map<int, Scalar> col;
    for (const auto& [n, comp] : x.components)
        for (const auto& [w, v] : comp)
            for (const auto& [o, c] : v) {
                auto it = index.find({w, o});
                if (it == index.end()) throw StructuralError("cochain entry outside the deformation complex");
                col[it->second] += c;
            }
    return SparseVec::from_map(col);
}

Cochain DeformationComplex::from_vector(int s, const SparseVec& v) const
{
    const auto b = basis(s);
    Cochain x{s, {}};
    for (const auto& [i, c] : v) {
        const auto& [w, o] = b[static_cast<std::size_t>(i)];
        x.add_term(w, SparseVec::unit(o), c);
    }
    return x;
}

SparseMatrix DeformationComplex::differential(int s) const
{
    const auto src = basis(s);
    const auto tgt = basis(s - 1);
    std::map<Entry, int> index;
    for (std::size_t i = 0; i < tgt.size(); ++i) index[tgt[i]] = static_cast<int>(i);
    SparseMatrix d(static_cast<int>(tgt.size()), static_cast<int>(src.size()));
    for (std::size_t j = 0; j < src.size(); ++j) {
        Cochain x{s, {}};
        x.add_term(src[j].first, SparseVec::unit(src[j].second));
        Cochain y = deformation_differential(x, a_);
        std::map<int, Scalar> col;
        for (const auto& [n, comp] : y.components)
            for (const auto& [w, v] : comp)
                for (const auto& [o, c] : v) col[index.at({w, o})] += c;
        d.set_column(static_cast<int>(j), SparseVec::from_map(col));
    }
    return d;
}

HomologyBasis DeformationComplex::cohomology_basis(int n) const
{
    const int s = 1 - n;
    SparseMatrix out = differential(s);
    SparseMatrix in = differential(s + 1);
    if (!(out * in).is_zero()) throw InvariantViolation("δ∘δ ≠ 0 at suspended degree " + std::to_string(s + 1));
    return HomologyBasis(dim(s), in, out);
}

int DeformationComplex::cohomology_dim(int n) const
{
    return cohomology_basis(n).dim();
}

std::optional<Cochain> DeformationComplex::primitive(const Cochain& y) const
{
    auto x = solve(differential(y.suspended_degree + 1), to_vector(y));
    if (!x) return std::nullopt;
    return from_vector(y.suspended_degree + 1, *x);
}

int hochschild_cohomology_dim(const AInfinityAlgebra& a, int n, const ComplexWindow& win)
{
    return DeformationComplex(a, win).cohomology_dim(n);
}

Cochain cup(const AInfinityAlgebra& b, const std::vector<Cochain>& fs, const BasisInfo& source, int max_weight)
{
    int k = -1;
    for (const auto& f : fs) k += f.suspended_degree;
    Cochain out{k, {}};
    const std::size_t n = fs.size();
    auto mc = b.m.component(static_cast<int>(n));
    if (!mc || mc->empty()) return out;

    // Enumerate one entry of each f_i, accumulating the word, the output
    // word of B letters and the Koszul sign.
    Word word;
    std::vector<std::pair<int, Scalar>> letters;
    std::function<void(std::size_t, int, bool, Scalar)> rec = [&](std::size_t i, int left, bool neg, Scalar coef) {
        if (i == n) {
            Word inputs;
            for (const auto& [l, c] : letters) inputs.push_back(l);
            auto it = mc->find(inputs);
            if (it == mc->end()) return;
            out.add_term(word, it->second, neg ? Scalar(-coef) : coef);
            return;
        }
        const bool odd_f = (fs[i].suspended_degree % 2) != 0;
        const bool flip = odd_f && (left % 2 != 0);
        for (const auto& [wt, comp] : fs[i].components)
            for (const auto& [u, v] : comp) {
                if (static_cast<int>(word.size() + u.size()) > max_weight) continue;
                const std::size_t mark = word.size();
                word.insert(word.end(), u.begin(), u.end());
                for (const auto& [o, c] : v) {
                    letters.emplace_back(o, c);
                    rec(i + 1, left + source.suspended(u), neg != flip, coef * c);
                    letters.pop_back();
                }
                word.resize(mark);
            }
    };
    rec(0, 0, false, Scalar(1));
    out.prune();
    return out;
}

int CupStructure::find(const Word& w, int output) const
{
    for (std::size_t i = 0; i < words.size(); ++i)
        if (words[i] == w && outputs[i] == output) return static_cast<int>(i);
    return -1;
}

SparseVec CupStructure::embed(const Cochain& f) const
{
    std::map<std::pair<Word, int>, int> index;
    for (std::size_t i = 0; i < words.size(); ++i) index[{words[i], outputs[i]}] = static_cast<int>(i);
    std::map<int, Scalar> col;
    for (const auto& [n, comp] : f.components)
        for (const auto& [w, v] : comp)
            for (const auto& [o, c] : v) {
                auto it = index.find({w, o});
                if (it == index.end()) throw WindowExceeded("cochain entry outside the Hom window");
                col[it->second] += c;
            }
    return SparseVec::from_map(col);
}

Cochain CupStructure::extract(const SparseVec& v, int suspended_degree) const
{
    Cochain f{suspended_degree, {}};
    for (const auto& [i, c] : v) f.add_term(words[static_cast<std::size_t>(i)], SparseVec::unit(outputs[static_cast<std::size_t>(i)]), c);
    return f;
}

CupStructure cup_structure(const BasisInfo& source, const AInfinityAlgebra& b, const ComplexWindow& win)
{
    win.check();
    CupStructure cs;
    BarCoalgebra bar(source, win);
    const BasisInfo tb = b.basis();
    std::vector<Word> all;
    for (int d = 0; d <= bar.max_degree(); ++d)
        for (const auto& w : bar.words(d)) all.push_back(w);
    std::sort(all.begin(), all.end(), [](const Word& x, const Word& y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    std::map<std::pair<Word, int>, int> index;
    for (const auto& w : all)
        for (int o = 0; o < tb.size(); ++o) {
            index[{w, o}] = static_cast<int>(cs.words.size());
            cs.words.push_back(w);
            cs.outputs.push_back(o);
            cs.basis.degree.push_back(tb.degree[static_cast<std::size_t>(o)] - source.suspended(w));
            cs.basis.label.push_back((w.empty() ? std::string("()") : format_word(w, source.label)) + ">" +
                                     tb.label[static_cast<std::size_t>(o)]);
        }
    cs.m = Cochain{-1, {}};
    // m̃_n((w_1>o_1),...,(w_n>o_n)) = ± (w_1...w_n > m_n(o_1..o_n)).
    for (const auto& [n, comp] : b.m.components)
        for (const auto& [outs, val] : comp) {
            std::vector<int> chosen;
            std::function<void(std::size_t, int, int, bool)> rec = [&](std::size_t i, int len, int left, bool neg) {
                if (i == outs.size()) {
                    Word cat;
                    Word inputs;
                    for (int e : chosen) {
                        cat.insert(cat.end(), cs.words[static_cast<std::size_t>(e)].begin(), cs.words[static_cast<std::size_t>(e)].end());
                        inputs.push_back(e);
                    }
                    std::map<int, Scalar> col;
                    for (const auto& [o, c] : val) col[index.at({cat, o})] += neg ? Scalar(-c) : c;
                    cs.m.add_term(inputs, SparseVec::from_map(col));
                    return;
                }
                for (const auto& w : all) {
                    if (len + static_cast<int>(w.size()) > win.max_weight) break;
                    const int e = index.at({w, outs[i]});
                    const bool odd_f = (cs.basis.degree[static_cast<std::size_t>(e)] + 1) % 2 != 0;
                    chosen.push_back(e);
                    rec(i + 1, len + static_cast<int>(w.size()), left + source.suspended(w), neg != (odd_f && left % 2 != 0));
                    chosen.pop_back();
                }
            };
            rec(0, 0, 0, false);
        }
    cs.m.prune();
    return cs;
}

}  // namespace ainf
