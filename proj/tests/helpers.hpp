#pragma once
#include <random>

#include "bvcoho/cochain.hpp"
#include "bvcoho/decomposition.hpp"

namespace bvcoho {

inline Cochain random_cochain(const CochainSpace& S, int n, std::mt19937& rng) {
    Cochain c = S.zero_cochain(n);
    for (auto& v : c.values) v = static_cast<Scalar>(rng() % S.field().p());
    return c;
}

// random cocycle: random coefficients over a kernel basis of delta_n
inline Cochain random_cocycle(const CochainSpace& S, int n, std::mt19937& rng) {
    auto K = kernel_basis(S.differential_matrix(n));
    Cochain c = S.zero_cochain(n);
    const PrimeField& F = S.field();
    for (const auto& k : K) {
        Scalar t = static_cast<Scalar>(rng() % F.p());
        if (t == 0) continue;
        for (size_t j = 0; j < k.size(); ++j) c.values[j] = F.add(c.values[j], F.mul(t, k[j]));
    }
    return c;
}

inline bool family_equal(const FiniteGroup& G, const PrimeField& F, const ConjugacyData& cd,
                         const DecomposedClassFamily& a, const DecomposedClassFamily& b) {
    return family_is_zero(G, F, cd, family_sub(G, F, cd, a, b));
}

} // namespace bvcoho
