#pragma once

#include "ainf/algebra.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ainf::fixtures {

AInfinityAlgebra zero_algebra();
AInfinityAlgebra ground_field();       // K = ⟨1⟩
AInfinityAlgebra dual_numbers();       // K[e]/(e²)
AInfinityAlgebra truncated_poly(int n);  // K[x]/(x^n), basis 1, x, x2, ...
AInfinityAlgebra matrix_m2();          // M2(Q) in the basis 1, a=e11, e12, e21
AInfinityAlgebra product_kk();         // K×K = ⟨1, p⟩ with p² = p
AInfinityAlgebra upper_triangular();   // ⟨1, a, n⟩: a² = a, an = n
// A0 = K[x]/(x²), A1 = ⟨y⟩ with m1(y) = x.
AInfinityAlgebra dg_fixture();
// A0 = K[x]/(x²), A1 = ⟨u⟩, m3(x,x,x) = u, m1 = 0.
AInfinityAlgebra m3_fixture();
// B0 = K, B1 = ⟨y⟩, m1 = 0; the positive part is an ideal with I0 = 0.
AInfinityAlgebra augmented_fixture();

// The fixture list used by the operator-identity and homology suites.
std::vector<AInfinityAlgebra> identity_suite();

// Unit-fixing random change of basis applied to one of the small fixtures
// (total dimension <= 4), deterministic in the seed.
AInfinityAlgebra random_algebra(std::uint64_t seed);

struct NamedDerivation {
    std::string name;
    AInfinityAlgebra algebra;
    Cochain d;
};

// Derivations of the fixtures, including D = m on each of them.
std::vector<NamedDerivation> derivations();

}  // namespace ainf::fixtures
