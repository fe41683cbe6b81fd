#pragma once

#include "ainf/algebra.hpp"

#include <random>

namespace testing_support {

using namespace ainf;

// Random cochain of suspended degree k with weights 1..max_weight.
inline Cochain random_cochain(std::mt19937_64& rng, const BasisInfo& b, int k, int max_weight, int min_weight = 1)
{
    std::uniform_int_distribution<int> val(-2, 2);
    Cochain c{k, {}};
    std::vector<Word> layer{Word{}};
    for (int n = 0; n <= max_weight; ++n) {
        if (n >= min_weight)
            for (const auto& w : layer) {
                int target = b.internal(w) + n - 1 + k;
                std::map<int, Scalar> v;
                for (int o = 0; o < b.size(); ++o)
                    if (b.degree[static_cast<std::size_t>(o)] == target && val(rng) > 0) v[o] = val(rng);
                SparseVec sv = SparseVec::from_map(v);
                if (!sv.empty()) c.add_term(w, sv);
            }
        std::vector<Word> next;
        for (const auto& w : layer)
            for (int a = 0; a < b.size(); ++a) {
                Word x = w;
                x.push_back(a);
                next.push_back(x);
            }
        layer = next;
    }
    return c;
}

inline int sign_pow(int e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace testing_support
