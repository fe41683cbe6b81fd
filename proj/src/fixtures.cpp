#include "ainf/fixtures.hpp"

#include <random>

namespace ainf::fixtures {

AInfinityAlgebra zero_algebra()
{
    return AInfinityAlgebra{"zero", GradedVectorSpace(), Cochain{-1, {}}, std::nullopt};
}

AInfinityAlgebra ground_field()
{
    return make_algebra("K", {{"1"}}, {}, "1");
}

AInfinityAlgebra dual_numbers()
{
    return make_algebra("K[e]", {{"1", "e"}}, {}, "1");
}

AInfinityAlgebra truncated_poly(int n)
{
    std::vector<std::string> labels{"1"};
    for (int i = 1; i < n; ++i) labels.push_back(i == 1 ? "x" : "x" + std::to_string(i));
    std::vector<LabelEntry> e;
    for (int i = 1; i < n; ++i)
        for (int j = 1; i + j < n; ++j) e.push_back({{labels[static_cast<std::size_t>(i)], labels[static_cast<std::size_t>(j)]}, labels[static_cast<std::size_t>(i + j)], 1});
    return make_algebra("K[x]/x^" + std::to_string(n), {labels}, e, "1");
}

AInfinityAlgebra matrix_m2()
{
    // a = e11, 1 - a = e22
    std::vector<LabelEntry> e{
        {{"a", "a"}, "a", 1},     {{"a", "e12"}, "e12", 1}, {{"e21", "a"}, "e21", 1},
        {{"e12", "e21"}, "a", 1}, {{"e21", "e12"}, "1", 1}, {{"e21", "e12"}, "a", -1},
    };
    return make_algebra("M2", {{"1", "a", "e12", "e21"}}, e, "1");
}

AInfinityAlgebra product_kk()
{
    return make_algebra("KxK", {{"1", "p"}}, {{{"p", "p"}, "p", 1}}, "1");
}

AInfinityAlgebra upper_triangular()
{
    return make_algebra("T2", {{"1", "a", "n"}}, {{{"a", "a"}, "a", 1}, {{"a", "n"}, "n", 1}}, "1");
}

AInfinityAlgebra dg_fixture()
{
    return make_algebra("DG", {{"1", "x"}, {"y"}}, {{{"y"}, "x", 1}}, "1");
}

AInfinityAlgebra m3_fixture()
{
    return make_algebra("m3", {{"1", "x"}, {"u"}}, {{{"x", "x", "x"}, "u", 1}}, "1");
}

AInfinityAlgebra augmented_fixture()
{
    return make_algebra("B", {{"1"}, {"y"}}, {}, "1");
}

std::vector<AInfinityAlgebra> identity_suite()
{
    return {ground_field(), dual_numbers(), truncated_poly(3), matrix_m2(), dg_fixture(), m3_fixture()};
}

AInfinityAlgebra random_algebra(std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<AInfinityAlgebra> bases{dual_numbers(), truncated_poly(3), matrix_m2(), product_kk(),
                                        upper_triangular(), dg_fixture(), m3_fixture(), augmented_fixture()};
    AInfinityAlgebra base = bases[static_cast<std::size_t>(rng() % bases.size())];
    const BasisInfo b = base.basis();
    const int n = b.size();
    const int u = *base.unit;
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<int> diag(0, 3);
    static const int diag_values[] = {1, -1, 2, 3};
    SparseMatrix g(n, n);
    // Unitriangular up to a nonzero diagonal, block diagonal in degree, unit fixed.
    for (int j = 0; j < n; ++j) {
        std::map<int, Scalar> col;
        if (j == u) {
            col[j] = 1;
        } else {
            col[j] = diag_values[diag(rng)];
            for (int i = 0; i < j; ++i)
                if (b.degree[static_cast<std::size_t>(i)] == b.degree[static_cast<std::size_t>(j)]) col[i] += coeff(rng);
        }
        g.set_column(j, SparseVec::from_map(col));
    }
    AInfinityAlgebra a = transport(base, g);
    a.name = base.name + "/seed" + std::to_string(seed);
    a.validate();
    return a;
}

std::vector<NamedDerivation> derivations()
{
    std::vector<NamedDerivation> out;
    {
        auto a = matrix_m2();
        // ad(e12)(z) = e12·z − z·e12
        Cochain d{0, {}};
        const BasisInfo b = a.basis();
        const int e12 = b.find("e12");
        for (int z = 0; z < b.size(); ++z) {
            SparseVec v = a.m.eval({e12, z}) - a.m.eval({z, e12});
            if (!v.empty()) d.add_term({z}, v);
        }
        out.push_back({"M2 ad(e12)", a, d});
    }
    {
        auto a = dual_numbers();
        out.push_back({"K[e] e->e", a, cochain_from_entries(a.basis(), 0, {{{"e"}, "e", 1}})});
    }
    {
        auto a = dg_fixture();
        out.push_back({"DG weight", a, cochain_from_entries(a.basis(), 0, {{{"x"}, "x", 1}, {{"y"}, "y", 1}})});
    }
    {
        auto a = m3_fixture();
        out.push_back({"m3 weight", a, cochain_from_entries(a.basis(), 0, {{{"x"}, "x", 1}, {{"u"}, "u", 3}})});
    }
    for (auto a : {ground_field(), dual_numbers(), truncated_poly(3), matrix_m2(), dg_fixture(), m3_fixture()})
        out.push_back({a.name + " D=m", a, a.m});
    return out;
}

}  // namespace ainf::fixtures
