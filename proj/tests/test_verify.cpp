#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ainf/fixtures.hpp"
#include "ainf/verify.hpp"

using namespace ainf;

namespace {

AInfinityIdeal positive_part(const AInfinityAlgebra& a)
{
    AInfinityIdeal i;
    const BasisInfo b = a.basis();
    for (int x = 0; x < b.size(); ++x)
        if (b.degree[static_cast<std::size_t>(x)] >= 1) i.span.push_back(SparseVec::unit(x));
    return i;
}

StrictMorphism identity_morphism(const AInfinityAlgebra& a)
{
    return StrictMorphism{a, a, SparseMatrix::identity(a.dim())};
}

}  // namespace

TEST_CASE("derivations")
{
    for (const auto& d : fixtures::derivations()) {
        CAPTURE(d.name);
        CHECK(is_derivation(d.d, d.algebra).ok);
    }
    auto a = fixtures::dual_numbers();
    // 1 -> 1 breaks the Leibniz rule on (1,1)
    auto bad = is_derivation(cochain_from_entries(a.basis(), 0, {{{"1"}, "1", 1}}), a);
    CHECK_FALSE(bad.ok);
    CHECK_FALSE(bad.witness.empty());
    CHECK_FALSE(bad.value.empty());
}

TEST_CASE("Lie derivative is a chain map and kills HP")
{
    ComplexWindow win{7, 4};
    for (const auto& d : fixtures::derivations()) {
        CAPTURE(d.name);
        CyclicHomology h(d.algebra, win);
        LieReport r = lie_derivative_report(h, d.d, 4);
        CHECK(r.derivation);
        CHECK(r.chain_map);
        CHECK(r.hc_zero());
        CHECK(r.hp_zero());
    }
}

TEST_CASE("quotients")
{
    auto a = fixtures::truncated_poly(3);
    StrictMorphism id = quotient(a, AInfinityIdeal{});
    CHECK(id.target.dim() == a.dim());
    CHECK(check_strict_morphism(id).ok);

    const BasisInfo b = a.basis();
    AInfinityIdeal x2{{SparseVec::unit(b.find("x2"))}};
    CHECK(check_ideal(a, x2).ok);
    StrictMorphism q = quotient(a, x2);
    CHECK(q.target.dim() == 2);
    CHECK(check_strict_morphism(q).ok);

    AInfinityIdeal x{{SparseVec::unit(b.find("x"))}};
    IdealCheck c = check_ideal(a, x);
    CHECK_FALSE(c.ok);
    CHECK_THROWS_AS(quotient(a, x), InvariantViolation);
    AInfinityIdeal closed = ideal_closure(a, x.span);
    CHECK(closed.span.size() == 2);
    CHECK(quotient(a, closed).target.dim() == 1);

    AInfinityIdeal all = ideal_closure(a, {SparseVec::unit(b.find("1"))});
    CHECK(quotient(a, all).target.dim() == 0);
}

TEST_CASE("quotient of the augmented fixture")
{
    auto a = fixtures::augmented_fixture();
    AInfinityIdeal i = positive_part(a);
    CHECK(check_ideal(a, i).ok);
    CHECK(ideal_part(a, i, 0).empty());
    StrictMorphism q = quotient(a, i);
    CHECK(q.target.dim() == 1);
    CHECK(check_strict_morphism(q).ok);
}

TEST_CASE("homology algebras")
{
    auto dg = fixtures::dg_fixture();
    AInfinityAlgebra h = homology_algebra(dg);
    CHECK(h.dim() == 1);
    CHECK(h.unit == 0);
    CHECK(h0(dg).dim() == 1);

    auto m3 = fixtures::m3_fixture();
    AInfinityAlgebra hm = h0(m3);
    CHECK(hm.dim() == 2);
    // H0 of m3 is K[x]/x², so the classical oracle sees the dual numbers
    CyclicHomology a(hm, ComplexWindow{6, 0});
    CyclicHomology b(fixtures::dual_numbers(), ComplexWindow{6, 0});
    for (int n = 0; n <= 3; ++n) CHECK(a.hc(n) == b.hc(n));

    auto k = fixtures::truncated_poly(3);
    CHECK(homology_algebra(k).dim() == 3);
}

TEST_CASE("equivalences")
{
    for (const auto& a : fixtures::identity_suite()) {
        CAPTURE(a.name);
        CHECK(is_equivalence(identity_morphism(a)).ok);
    }
    auto dg = fixtures::dg_fixture();
    // killing x alone leaves y as a new cycle
    StrictMorphism partial = quotient(dg, ideal_closure(dg, {SparseVec::unit(dg.basis().find("x"))}));
    CHECK(partial.target.dim() == 2);
    CHECK_FALSE(is_equivalence(partial).ok);
    StrictMorphism to_k = quotient(dg, degree_zero_ideal(dg));
    CHECK(to_k.target.dim() == 1);
    CHECK(check_strict_morphism(to_k).ok);
    CHECK(is_equivalence(to_k).ok);

    auto m3 = fixtures::m3_fixture();
    StrictMorphism drop_u = quotient(m3, positive_part(m3));
    CHECK_FALSE(is_equivalence(drop_u).ok);
}

TEST_CASE("strict equivalence preserves HH, HC and HP")
{
    ComplexWindow win{7, 4};
    auto dg = fixtures::dg_fixture();
    StrictMorphism to_k = quotient(dg, degree_zero_ideal(dg));
    TheoremReport r = verify_prop23(to_k, win, 3);
    CHECK(r.precondition);
    CHECK(r.passed());
    for (const auto& row : r.rows) {
        CAPTURE(row.theory);
        CAPTURE(row.degree);
        CHECK(row.ok());
    }

    auto m3 = fixtures::m3_fixture();
    TheoremReport self = verify_prop23(identity_morphism(m3), win, 3);
    CHECK(self.passed());

    TheoremReport bad = verify_prop23(quotient(m3, positive_part(m3)), win, 3);
    CHECK_FALSE(bad.precondition);
    CHECK(bad.status() == "FAIL");
}

TEST_CASE("HP invariant under quotients with trivial degree-0 part")
{
    ComplexWindow win{7, 4};
    for (const auto& a : {fixtures::augmented_fixture(), fixtures::m3_fixture()}) {
        CAPTURE(a.name);
        TheoremReport r = verify_thm44(a, positive_part(a), win);
        CHECK(r.precondition);
        CHECK(r.status() == "PASS");
    }
    auto dg = fixtures::dg_fixture();
    TheoremReport r = verify_thm44(dg, positive_part(dg), win);
    CHECK_FALSE(r.precondition);
}

TEST_CASE("HP against classical HP of H0")
{
    ComplexWindow win{8, 4};
    for (const auto& a : {fixtures::dg_fixture(), fixtures::m3_fixture(), fixtures::augmented_fixture()}) {
        CAPTURE(a.name);
        TheoremReport r = verify_thm45(a, win);
        CHECK(r.precondition);
        CHECK(r.status() == "PASS");
    }
}

TEST_CASE("nested quotients compose")
{
    auto a = fixtures::truncated_poly(4);
    const BasisInfo b = a.basis();
    StrictMorphism q1 = quotient(a, ideal_closure(a, {SparseVec::unit(b.find("x3"))}));
    const BasisInfo b1 = q1.target.basis();
    StrictMorphism q2 = quotient(q1.target, ideal_closure(q1.target, {SparseVec::unit(b1.find("x2"))}));
    StrictMorphism comp{a, q2.target, q2.map * q1.map};
    CHECK(check_strict_morphism(comp).ok);
    StrictMorphism direct = quotient(a, ideal_closure(a, {SparseVec::unit(b.find("x2"))}));
    CHECK(direct.target.dim() == comp.target.dim());
}
