#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ainf/deformation.hpp"
#include "ainf/fixtures.hpp"
#include "support.hpp"

using namespace ainf;
using testing_support::random_cochain;
using testing_support::sign_pow;

namespace {

SparseVec pull(const SparseVec& f, const SparseMatrix& m) { return m.transpose().apply(f); }

Trace trace_on(const AInfinityAlgebra& a, std::initializer_list<std::pair<const char*, int>> values)
{
    const BasisInfo b = a.basis();
    std::map<int, Scalar> m;
    for (auto [l, x] : values) m[b.find(l)] = x;
    return Trace{SparseVec::from_map(m)};
}

Trace first_trace(const AInfinityAlgebra& a) { return Trace{closed_graded_traces(a).at(0)}; }

Cochain identity_cochain(const BasisInfo& b)
{
    Cochain c{0, {}};
    for (int i = 0; i < b.size(); ++i) c.add_term({i}, SparseVec::unit(i));
    return c;
}

// Symmetric random binary cochain on a degree-0 algebra.
Cochain symmetric_binary(std::mt19937_64& rng, const BasisInfo& b)
{
    Cochain f = random_cochain(rng, b, -1, 2, 2);
    Cochain g{-1, {}};
    for (const auto& [w, v] : *f.component(2)) {
        g.add_term(w, v);
        g.add_term({w[1], w[0]}, v);
    }
    g.prune();
    return g;
}

FormalDeformation dual_numbers_deformation(const Scalar& c)
{
    auto a = fixtures::dual_numbers();
    FormalDeformation d{a, {}};
    d.terms.push_back(cochain_from_entries(a.basis(), -1, {{{"e", "e"}, "1", c}}));
    return d;
}

}  // namespace

TEST_CASE("trace pairing examples")
{
    auto a = fixtures::matrix_m2();
    CyclicChains c(a, ComplexWindow{5, 0});
    Trace tr = first_trace(a);
    TotCochain psi = pair_with_trace(identity_cochain(a.basis()), tr, c);
    CHECK(psi.degree == 1);
    // column 0 is τ(a0 a1)
    const auto& p1 = c.piece(1);
    for (std::size_t j = 0; j < p1.size(); ++j)
        CHECK(psi.columns[0].get(static_cast<int>(j)) == tr(a.m.eval(p1[j])));
    CHECK(pair_with_trace(Cochain{-1, {}}, tr, c).is_zero());
    CHECK(pair_with_trace(a.m, Trace{}, c).is_zero());
    // ψ(m2) is a cocycle because tr∘m2 is symmetric
    CHECK(dual_class(pair_with_trace(a.m, tr, c), c).cocycle);
}

TEST_CASE("first pairing is a chain map")
{
    std::mt19937_64 rng(11);
    for (const auto& a : {fixtures::matrix_m2(), fixtures::upper_triangular(), fixtures::dg_fixture(), fixtures::m3_fixture()}) {
        CAPTURE(a.name);
        CyclicChains c(a, ComplexWindow{6, 4});
        // τ ranges over closed traces and Hochschild 1-cocycles
        std::vector<PieceFunctional> taus;
        for (const auto& t : closed_graded_traces(a)) {
            Trace tr{t};
            std::map<int, Scalar> v;
            const auto& p0 = c.piece(0);
            for (std::size_t j = 0; j < p0.size(); ++j)
                if (tr(p0[j][0]) != 0) v[static_cast<int>(j)] = tr(p0[j][0]);
            taus.push_back({0, SparseVec::from_map(v)});
        }
        for (const auto& k : kernel_basis(c.b(2).transpose())) taus.push_back({1, k});
        for (const auto& tau : taus)
            for (int k = -2; k <= 0; ++k) {
                if (tau.piece + 2 - k > c.top_piece()) continue;
                for (int t = 0; t < 4; ++t) {
                    Cochain phi = random_cochain(rng, a.basis(), k, 3);
                    auto lhs = pull(pair_cochain_with_cocycle(phi, tau, c).values, c.b(tau.piece + 2 - k));
                    auto rhs = pair_cochain_with_cocycle(deformation_differential(phi, a), tau, c);
                    CHECK(rhs.piece == tau.piece + 2 - k);
                    CHECK(lhs == rhs.values.scaled(sign_pow(k + 1)));
                }
            }
    }
}

TEST_CASE("second pairing up to the norm column")
{
    std::mt19937_64 rng(12);
    for (const auto& a : {fixtures::dual_numbers(), fixtures::matrix_m2(), fixtures::dg_fixture(), fixtures::m3_fixture()}) {
        CAPTURE(a.name);
        CyclicChains c(a, ComplexWindow{6, 4});
        const TotalComplex tot = cyclic_total_complex(c, 5);
        Trace tr = first_trace(a);
        for (int k = -3; k <= 0; ++k)
            for (int t = 0; t < 5; ++t) {
                Cochain phi = random_cochain(rng, a.basis(), k, 4);
                TotCochain psi = pair_with_trace(phi, tr, c);
                TotCochain lhs = coboundary(psi, tot);
                TotCochain rhs = pair_with_trace(deformation_differential(phi, a), tr, c);
                CHECK(lhs.columns[0] == rhs.columns[0].scaled(sign_pow(k + 1)));
                CHECK(lhs.columns[1] == rhs.columns[1].scaled(sign_pow(k + 1)));
                // the remaining column is ψ_1∘N, absent from ψ(δφ)
                const int p = 1 - k;
                if (p >= 1) CHECK(lhs.columns[2] == pull(psi.columns[1], c.norm(p - 1)));
                for (const auto& [q, v] : lhs.columns)
                    if (q > 2) CHECK(v.empty());
            }
    }
}

TEST_CASE("coboundaries of closed cochains pair to coboundaries")
{
    std::mt19937_64 rng(13);
    auto a = fixtures::truncated_poly(3);
    CyclicChains c(a, ComplexWindow{6, 0});
    for (const auto& t : closed_graded_traces(a)) {
        Trace tr{t};
        for (int i = 0; i < 5; ++i) {
            Cochain x = symmetric_binary(rng, a.basis());
            CHECK_FALSE(trace_defect(x, tr, a.basis()));
            DualClass cl = dual_class(pair_with_trace(deformation_differential(x, a), tr, c), c);
            CHECK(cl.cocycle);
            CHECK(cl.coboundary);
        }
    }
}

TEST_CASE("closedness")
{
    auto a = fixtures::dual_numbers();
    Trace t = trace_on(a, {{"e", 1}});
    FormalDeformation d0{a, {}};
    CHECK(is_closed(d0, t));
    // m1(a,b) = a·D(b) with D(e) = e
    FormalDeformation d1{a, {cochain_from_entries(a.basis(), -1, {{{"1", "e"}, "e", 1}, {{"e", "e"}, "e", 0}})}};
    auto defect = closedness_defect(d1, t);
    REQUIRE(defect);
    CHECK(defect->order == 1);
    CHECK(defect->value != 0);
    CHECK(is_closed(dual_numbers_deformation(1), t));
}

TEST_CASE("extending the trivial deformation")
{
    auto a = fixtures::matrix_m2();
    FormalDeformation d{a, {}};
    auto r = obstruction_class(d, first_trace(a), ComplexWindow{6, 0});
    CHECK(r.rhs.is_zero());
    CHECK(r.exact);
    REQUIRE(r.witness);
    CHECK(r.witness_mc);
    CHECK(r.witness_closed);
}

TEST_CASE("obstruction on the dual numbers")
{
    ComplexWindow win{6, 0};
    for (Scalar c : {Scalar(1), Scalar(-3, 2)}) {
        FormalDeformation d = dual_numbers_deformation(c);
        CHECK_FALSE(d.first_mc_failure());
        for (auto tr : closed_graded_traces(d.base)) {
            Trace t{tr};
            auto r = obstruction_class(d, t, win);
            CHECK(r.rhs_closed);
            REQUIRE(r.cyclic);
            CHECK(r.cyclic->cocycle);
            CHECK(r.exact == r.cyclic->coboundary);
            REQUIRE(r.witness);
            CHECK(r.witness_mc);
            CHECK(r.witness_closed);
            // continue one more order
            FormalDeformation e = d;
            e.terms.push_back(*r.witness);
            auto r2 = obstruction_class(e, t, win);
            CHECK(r2.rhs_closed);
            if (r2.witness) CHECK(r2.witness_mc);
        }
        auto plain = obstruction_class(d, std::nullopt, win);
        CHECK_FALSE(plain.cyclic);
        CHECK(plain.unobstructed());
    }
}

TEST_CASE("obstruction independent of the representative")
{
    std::mt19937_64 rng(14);
    ComplexWindow win{6, 0};
    auto a = fixtures::truncated_poly(3);
    const BasisInfo b = a.basis();
    Trace t{closed_graded_traces(a).back()};
    for (int i = 0; i < 5; ++i) {
        Cochain m1 = symmetric_binary(rng, b);
        // symmetric binary cochains on a commutative algebra need not be cocycles
        if (!deformation_differential(m1, a).is_zero()) continue;
        Cochain y = random_cochain(rng, b, 0, 1);
        FormalDeformation d{a, {m1}};
        FormalDeformation e{a, {m1 + deformation_differential(y, a)}};
        auto r = obstruction_class(d, t, win);
        auto s = obstruction_class(e, t, win);
        DeformationComplex dc(a, win);
        CHECK(dc.primitive(s.rhs - r.rhs));
        REQUIRE(r.cyclic);
        REQUIRE(s.cyclic);
        CyclicChains c(a, win);
        TotCochain diff = pair_with_trace(s.rhs - r.rhs, t, c);
        CHECK(dual_class(diff, c).coboundary);
        CHECK(r.unobstructed() == s.unobstructed());
    }
}

TEST_CASE("equivalence obstruction")
{
    auto a = fixtures::dual_numbers();
    const BasisInfo b = a.basis();
    ComplexWindow win{6, 0};
    Trace t = trace_on(a, {{"e", 1}});
    FormalDeformation d = dual_numbers_deformation(1);
    Cochain y = cochain_from_entries(b, 0, {{{"e"}, "1", 1}});
    FormalDeformation e{a, {d.terms[0] + deformation_differential(y, a)}};
    auto r = equivalence_obstruction(d, e, std::nullopt, win);
    CHECK(r.order == 1);
    CHECK(r.difference_closed);
    CHECK(r.exact);
    CHECK(r.witness);
    auto rt = equivalence_obstruction(d, e, t, win);
    REQUIRE(rt.cyclic);
    CHECK(rt.cyclic->cocycle);
    CHECK(rt.cyclic->coboundary);
    // ε² = t and ε² = 2t differ by a nontrivial class
    auto s = equivalence_obstruction(d, dual_numbers_deformation(2), std::nullopt, win);
    CHECK(s.difference_closed);
    CHECK_FALSE(s.exact);
    CHECK_FALSE(s.witness);
}
