#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ainf/exactlin/graded.hpp"
#include "ainf/exactlin/linalg.hpp"

#include <random>

using namespace ainf;

namespace {

// Dense row reduction over mpq, written independently of the sparse code.
int dense_rank(std::vector<std::vector<Scalar>> a)
{
    int r = 0;
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Scalar f = a[i][c] / a[r][c];
            for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

SparseMatrix from_dense(const std::vector<std::vector<Scalar>>& a, int rows, int cols)
{
    SparseMatrix m(rows, cols);
    for (int j = 0; j < cols; ++j) {
        std::map<int, Scalar> col;
        for (int i = 0; i < rows; ++i)
            if (a[i][j] != 0) col[i] = a[i][j];
        m.set_column(j, SparseVec::from_map(col));
    }
    return m;
}

}  // namespace

TEST_CASE("scalars are exact and print as p/q")
{
    Scalar a = parse_scalar("6/4");
    CHECK(to_string(a) == "3/2");
    CHECK(to_string(parse_scalar("-2")) == "-2");
    CHECK(parse_scalar("1/3") + parse_scalar("2/3") == 1);
    CHECK_THROWS(parse_scalar("1/0"));
    CHECK_THROWS(parse_scalar("abc"));
}

TEST_CASE("tensor_space dimensions")
{
    CHECK(tensor_space(GradedVectorSpace::with_dims({1}), GradedVectorSpace::with_dims({1})).dims() == std::vector<int>{1});
    CHECK(tensor_space(GradedVectorSpace::with_dims({2, 1}), GradedVectorSpace::with_dims({1, 1})).dims() ==
          std::vector<int>{2, 3, 1});
    auto v = GradedVectorSpace::with_dims({0, 1});
    CHECK(tensor_space(v, v).dims() == std::vector<int>{0, 0, 1});
}

TEST_CASE("shift")
{
    auto v = GradedVectorSpace::with_dims({1, 2});
    CHECK(shift(v, 0) == v);
    CHECK(shift(v, 1).dims() == std::vector<int>{0, 1, 2});
    CHECK(shift(shift(v, 1), -1) == v);
    CHECK(shift(shift(v, 2), 3) == shift(v, 5));
}

TEST_CASE("tensor_map signs and interchange")
{
    auto v = GradedVectorSpace::with_dims({1, 1});
    // f of degree 0 swapping nothing, g of degree 1 sending degree 0 to degree 1
    GradedLinearMap id = GradedLinearMap::identity(v);
    GradedLinearMap up{v, v, 1, {}};
    up.set_block(0, SparseMatrix::identity(1));
    CHECK(tensor_map(id, id) == GradedLinearMap::identity(tensor_space(v, v)));

    // a of degree 1, |g| = 1: (f⊗g)(a⊗b) = -f(a)⊗g(b)
    GradedLinearMap t = tensor_map(id, up);
    auto src = tensor_space(v, v);
    // degree 1 of V⊗V: summands (0,1) then (1,0); a⊗b with |a|=1,|b|=0 is index 1
    SparseVec img = t.block(1).column(1);
    REQUIRE(img.size() == 1);
    CHECK(img.begin()->second == -1);
    CHECK(t.block(0).column(0).begin()->second == 1);

    // graded interchange (f⊗g)∘(f'⊗g') = (-1)^{|g||f'|} (f∘f')⊗(g∘g')
    GradedLinearMap lhs = compose(tensor_map(id, up), tensor_map(up, id));
    GradedLinearMap rhs = tensor_map(compose(id, up), compose(up, id));
    CHECK(add(lhs, rhs, 1).is_zero());
}

TEST_CASE("homology_dim examples")
{
    ChainComplex zero{0, 0, {{0, 3}}, {}};
    CHECK(homology_dim(zero, 0) == 3);

    ChainComplex iso{0, 1, {{0, 1}, {1, 1}}, {{1, SparseMatrix::identity(1)}}};
    CHECK(homology_dim(iso, 0) == 0);
    CHECK(homology_dim(iso, 1) == 0);

    ChainComplex z{0, 1, {{0, 1}, {1, 1}}, {{1, SparseMatrix(1, 1)}}};
    CHECK(homology_dim(z, 0) == 1);
    CHECK(homology_dim(z, 1) == 1);
    CHECK(cohomology_dim(z, 0) == 1);

    CHECK_THROWS_AS(homology_dim(z, 5), WindowExceeded);
    SparseMatrix bad(1, 1);
    bad.set_column(0, SparseVec::unit(0));
    ChainComplex nc{0, 2, {{0, 1}, {1, 1}, {2, 1}}, {{1, bad}, {2, bad}}};
    CHECK_THROWS_AS(homology_dim(nc, 1), InvariantViolation);
}

TEST_CASE("rank agrees with a dense oracle on random matrices")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> size(1, 6), val(-3, 3), zero(0, 2);
    for (int trial = 0; trial < 300; ++trial) {
        int r = size(rng), c = size(rng);
        std::vector<std::vector<Scalar>> a(static_cast<std::size_t>(r), std::vector<Scalar>(static_cast<std::size_t>(c)));
        for (auto& row : a)
            for (auto& x : row) x = zero(rng) == 0 ? Scalar(val(rng), 1 + zero(rng)) : Scalar(0);
        CHECK(rank(from_dense(a, r, c)) == dense_rank(a));
    }
}

TEST_CASE("homology_dim agrees with the dense oracle on random complexes")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> dim(0, 5), val(-2, 2);
    for (int trial = 0; trial < 100; ++trial) {
        // d2 = P·Q-style product guarantees d1∘d2 = 0: build d1 then d2 inside ker d1.
        int c0 = dim(rng), c1 = dim(rng), c2 = dim(rng);
        std::vector<std::vector<Scalar>> d1(static_cast<std::size_t>(c0), std::vector<Scalar>(static_cast<std::size_t>(c1)));
        for (auto& row : d1)
            for (auto& x : row) x = val(rng);
        SparseMatrix m1 = from_dense(d1, c0, c1);
        auto ker = kernel_basis(m1);
        SparseMatrix m2(c1, c2);
        for (int j = 0; j < c2; ++j) {
            SparseVec col;
            for (const auto& k : ker) col.add_scaled(k, val(rng));
            m2.set_column(j, col);
        }
        ChainComplex c{0, 2, {{0, c0}, {1, c1}, {2, c2}}, {{1, m1}, {2, m2}}};
        std::vector<std::vector<Scalar>> d2(static_cast<std::size_t>(c1), std::vector<Scalar>(static_cast<std::size_t>(c2)));
        for (int i = 0; i < c1; ++i)
            for (int j = 0; j < c2; ++j) d2[i][j] = m2.at(i, j);
        int expected = c1 - dense_rank(d1) - dense_rank(d2);
        CHECK(homology_dim(c, 1) == expected);
    }
}

TEST_CASE("HomologyBasis coordinates and induced maps")
{
    // C1 = Q^2 -> C0 = Q, d = (1 1); H1 = span of (1,-1)
    SparseMatrix d(1, 2);
    d.set_column(0, SparseVec::unit(0));
    d.set_column(1, SparseVec::unit(0));
    HomologyBasis h(2, SparseMatrix(2, 0), d);
    REQUIRE(h.dim() == 1);
    SparseVec z = SparseVec::from_map({{0, 2}, {1, -2}});
    SparseVec coords = h.coordinates(z);
    CHECK(coords.size() == 1);
    CHECK_THROWS_AS(h.coordinates(SparseVec::unit(0)), InvariantViolation);
    SparseMatrix f = SparseMatrix::identity(2).scaled(3);
    SparseMatrix ind = induced_map(h, h, f);
    CHECK(ind.at(0, 0) == 3);
}

TEST_CASE("solve and kernel")
{
    SparseMatrix m(2, 3);
    m.set_column(0, SparseVec::from_map({{0, 1}}));
    m.set_column(1, SparseVec::from_map({{1, 1}}));
    m.set_column(2, SparseVec::from_map({{0, 1}, {1, 1}}));
    CHECK(kernel_basis(m).size() == 1);
    auto x = solve(m, SparseVec::from_map({{0, 2}, {1, 5}}));
    REQUIRE(x);
    CHECK(m.apply(*x) == SparseVec::from_map({{0, 2}, {1, 5}}));
    SparseMatrix z(1, 1);
    CHECK_FALSE(solve(z, SparseVec::unit(0)));
}
