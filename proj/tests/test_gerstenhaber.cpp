#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ainf/fixtures.hpp"
#include "ainf/gerstenhaber.hpp"
#include "support.hpp"

using namespace ainf;
using testing_support::random_cochain;
using testing_support::sign_pow;

namespace {

// Classical Hochschild cochain complex of a degree-0 associative algebra,
// built densely from the multiplication table alone.
int classical_hh_cohomology(const AInfinityAlgebra& a, int n)
{
    const int d = a.dim();
    auto mult = [&](int x, int y) { return a.m.eval({x, y}); };
    auto words = [&](int len) {
        std::vector<Word> out{Word{}};
        for (int r = 0; r < len; ++r) {
            std::vector<Word> next;
            for (const auto& w : out)
                for (int x = 0; x < d; ++x) {
                    Word v = w;
                    v.push_back(x);
                    next.push_back(v);
                }
            out = next;
        }
        return out;
    };
    // matrix of δ : C^p -> C^{p+1}; coordinates (word index * d + output)
    auto delta = [&](int p) {
        auto src = words(p);
        auto tgt = words(p + 1);
        std::map<Word, int> tix;
        for (std::size_t i = 0; i < tgt.size(); ++i) tix[tgt[i]] = static_cast<int>(i);
        SparseMatrix m(static_cast<int>(tgt.size()) * d, static_cast<int>(src.size()) * d);
        for (std::size_t j = 0; j < src.size(); ++j)
            for (int o = 0; o < d; ++o) {
                // f = (src[j] -> o); evaluate δf on every target word
                std::map<int, Scalar> col;
                for (const auto& t : tgt) {
                    SparseVec val;
                    Word tail(t.begin() + 1, t.end());
                    if (tail == src[j]) val.add_scaled(mult(t[0], o), 1);
                    for (int i = 0; i < p; ++i) {
                        SparseVec prod = mult(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(i) + 1]);
                        for (const auto& [z, c] : prod) {
                            Word w(t.begin(), t.begin() + i);
                            w.push_back(z);
                            w.insert(w.end(), t.begin() + i + 2, t.end());
                            if (w == src[j]) val.add_scaled(SparseVec::unit(o), c * sign_pow(i + 1));
                        }
                    }
                    Word head(t.begin(), t.end() - 1);
                    if (head == src[j]) val.add_scaled(mult(o, t.back()), sign_pow(p + 1));
                    for (const auto& [z, c] : val) col[tix[t] * d + z] += c;
                }
                m.set_column(static_cast<int>(j) * d + o, SparseVec::from_map(col));
            }
        return m;
    };
    SparseMatrix out = delta(n);
    int kernel = out.cols() - rank(out);
    int image = n == 0 ? 0 : rank(delta(n - 1));
    return kernel - image;
}

}  // namespace

TEST_CASE("circle product examples")
{
    auto a = fixtures::matrix_m2();
    BasisInfo b = a.basis();
    // associative m2: (m2∘m2)(a1,a2,a3) = m2(m2(a1,a2),a3) − m2(a1,m2(a2,a3)) = 0
    CHECK(circle(a.m, a.m, b).is_zero());
    Cochain id{0, {}};
    for (int i = 0; i < b.size(); ++i) id.add_term({i}, SparseVec::unit(i));
    // m∘id inserts id in both slots of m2
    CHECK(circle(a.m, id, b) == a.m.scaled(2));
    CHECK(circle(a.m, Cochain{0, {}}, b).is_zero());

    // explicit sign on a non-associative product
    auto bad = make_algebra("bad", {{"1", "p", "q"}}, {{{"p", "p"}, "q", 1}, {{"q", "p"}, "p", 1}}, "1", true, false);
    BasisInfo bb = bad.basis();
    const int p = bb.find("p");
    Cochain mm = circle(bad.m, bad.m, bb);
    // m2(m2(p,p),p) − m2(p,m2(p,p)) = qp − pq = p
    CHECK(mm.eval({p, p, p}) == SparseVec::unit(p));
}

TEST_CASE("bracket: antisymmetry and Jacobi on 100 random triples")
{
    std::mt19937_64 rng(17);
    std::vector<AInfinityAlgebra> algs{fixtures::dual_numbers(), fixtures::dg_fixture(), fixtures::m3_fixture()};
    std::uniform_int_distribution<int> deg(-2, 1);
    for (int trial = 0; trial < 100; ++trial) {
        const auto& a = algs[static_cast<std::size_t>(trial) % algs.size()];
        BasisInfo b = a.basis();
        int kx = deg(rng), ky = deg(rng), kz = deg(rng);
        Cochain x = random_cochain(rng, b, kx, 2), y = random_cochain(rng, b, ky, 2), z = random_cochain(rng, b, kz, 2);
        CHECK(bracket(x, y, b) == bracket(y, x, b).scaled(-sign_pow(kx * ky)));
        Cochain j = bracket(x, bracket(y, z, b), b).scaled(sign_pow(kx * kz)) +
                    bracket(y, bracket(z, x, b), b).scaled(sign_pow(ky * kx)) +
                    bracket(z, bracket(x, y, b), b).scaled(sign_pow(kz * ky));
        CHECK(j.is_zero());
    }
    auto a = fixtures::dual_numbers();
    Cochain x = random_cochain(rng, a.basis(), -1, 2);
    CHECK(bracket(x, x, a.basis()) == circle(x, x, a.basis()).scaled(2));
    CHECK(bracket(a.m, a.m, a.basis()).is_zero());
    CHECK(bracket(x, Cochain{0, {}}, a.basis()).is_zero());
}

TEST_CASE("δ² = 0 and δ is a derivation of the bracket")
{
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> deg(-2, 1);
    for (int trial = 0; trial < 100; ++trial) {
        auto a = fixtures::identity_suite()[static_cast<std::size_t>(trial) % 6];
        BasisInfo b = a.basis();
        int kx = deg(rng), ky = deg(rng);
        Cochain x = random_cochain(rng, b, kx, 2, 0), y = random_cochain(rng, b, ky, 2, 0);
        Cochain dx = deformation_differential(x, a);
        CHECK(deformation_differential(dx, a).is_zero());
        Cochain lhs = deformation_differential(bracket(x, y, b), a);
        Cochain rhs = bracket(dx, y, b) + bracket(x, deformation_differential(y, a), b).scaled(sign_pow(kx));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("bracket matches the commutator of coderivations")
{
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<int> deg(-2, 1);
    for (int trial = 0; trial < 100; ++trial) {
        auto a = fixtures::identity_suite()[static_cast<std::size_t>(trial) % 6];
        BarCoalgebra bar(a, ComplexWindow{4, 4});
        BasisInfo b = a.basis();
        int kx = deg(rng), ky = deg(rng);
        Cochain x = random_cochain(rng, b, kx, 2), y = random_cochain(rng, b, ky, 2);
        auto cx = coderivation_from_cochain(x, bar), cy = coderivation_from_cochain(y, bar);
        auto comm = add(compose(cx, cy), compose(cy, cx), -sign_pow(kx * ky));
        CHECK(comm == coderivation_from_cochain(bracket(x, y, b), bar));
    }
}

TEST_CASE("deformation differential examples")
{
    auto a = fixtures::dual_numbers();
    CHECK(deformation_differential(a.m, a).is_zero());
    Cochain d = cochain_from_entries(a.basis(), 0, {{{"e"}, "e", 1}});
    CHECK(deformation_differential(d, a).is_zero());
    CHECK(deformation_differential(Cochain{0, {}}, a).is_zero());
}

TEST_CASE("Hochschild cohomology of small algebras")
{
    ComplexWindow win{8, 4};
    auto k = fixtures::ground_field();
    CHECK(hochschild_cohomology_dim(k, 0, win) == 1);
    for (int n = 1; n <= 4; ++n) CHECK(hochschild_cohomology_dim(k, n, win) == 0);
    CHECK(hochschild_cohomology_dim(fixtures::dual_numbers(), 2, win) >= 1);
    CHECK(hochschild_cohomology_dim(fixtures::zero_algebra(), 2, win) == 0);
    CHECK_THROWS_AS(hochschild_cohomology_dim(k, 9, win), WindowExceeded);
}

TEST_CASE("Hochschild cohomology agrees with the classical oracle")
{
    ComplexWindow win{8, 4};
    for (auto a : {fixtures::dual_numbers(), fixtures::truncated_poly(3), fixtures::product_kk(), fixtures::upper_triangular()})
        for (int n = 0; n <= 3; ++n) CHECK_MESSAGE(hochschild_cohomology_dim(a, n, win) == classical_hh_cohomology(a, n), a.name << " H^" << n);
    auto m2 = fixtures::matrix_m2();
    for (int n = 0; n <= 2; ++n) CHECK(hochschild_cohomology_dim(m2, n, win) == classical_hh_cohomology(m2, n));
}

TEST_CASE("cup structure is an A∞-algebra")
{
    ComplexWindow win{3, 4};
    for (auto a : {fixtures::dual_numbers(), fixtures::dg_fixture(), fixtures::m3_fixture()}) {
        auto cs = cup_structure(a.basis(), a, win);
        CHECK(check_stasheff(cs.m, cs.basis).empty());
    }
}

TEST_CASE("cup product examples")
{
    auto a = fixtures::dual_numbers();
    BasisInfo b = a.basis();
    std::mt19937_64 rng(5);
    Cochain f = random_cochain(rng, b, 0, 1), g = random_cochain(rng, b, -1, 2);
    CHECK(cup(a, {f, Cochain{0, {}}}, b, 4).is_zero());
    // m̃_1(f) = m1∘f is zero for an algebra without differential
    CHECK(cup(a, {f}, b, 4).is_zero());
    // classical cup: (f∪g)(u,v) = ± f(u)·g(v)
    Cochain c = cup(a, {f, g}, b, 4);
    const int e = b.find("e");
    Word uv{e, e, e};
    SparseVec expected;
    for (std::size_t split = 0; split <= uv.size(); ++split) {
        Word u(uv.begin(), uv.begin() + static_cast<std::ptrdiff_t>(split));
        Word v(uv.begin() + static_cast<std::ptrdiff_t>(split), uv.end());
        for (const auto& [x, cx] : f.eval(u))
            for (const auto& [y, cy] : g.eval(v))
                expected.add_scaled(a.m.eval({x, y}), cx * cy * sign_pow(g.suspended_degree * b.suspended(u)));
    }
    CHECK(c.eval(uv) == expected);

    // DG: m̃_1(f) = m1∘f
    auto dg = fixtures::dg_fixture();
    Cochain h = cochain_from_entries(dg.basis(), 1, {{{"x"}, "y", 1}});
    CHECK(cup(dg, {h}, dg.basis(), 4) == cochain_from_entries(dg.basis(), 0, {{{"x"}, "x", 1}}));
}

TEST_CASE("cup product is graded commutative in Hochschild cohomology")
{
    ComplexWindow win{8, 4};
    for (auto a : {fixtures::dual_numbers(), fixtures::truncated_poly(3)}) {
        DeformationComplex dc(a, win);
        BasisInfo b = a.basis();
        for (int p = 1; p <= 2; ++p)
            for (int q = 1; q <= 2; ++q) {
                auto hp = dc.cohomology_basis(p);
                auto hq = dc.cohomology_basis(q);
                for (const auto& fv : hp.representatives())
                    for (const auto& gv : hq.representatives()) {
                        Cochain f = dc.from_vector(1 - p, fv), g = dc.from_vector(1 - q, gv);
                        // in suspended degrees k: m̃2(f,g) + (-1)^{k_f k_g} m̃2(g,f) is exact,
                        // the usual (-1)^{pq} rule after desuspension
                        Cochain fg = cup(a, {f, g}, b, win.max_weight);
                        Cochain gf = cup(a, {g, f}, b, win.max_weight);
                        Cochain diff = fg + gf.scaled(sign_pow((1 - p) * (1 - q)));
                        diff.suspended_degree = 1 - p - q;
                        CHECK(deformation_differential(fg, a).is_zero());
                        CHECK(dc.primitive(diff).has_value());
                    }
            }
    }
}
