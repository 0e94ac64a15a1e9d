#pragma once
#include <map>

#include "cochain.hpp"
#include "group.hpp"

namespace bvcoho {

// trivial-coefficient cochain on the centralizer of a class representative
struct ComponentCochain {
    int rep;
    Cochain psi;
};

// one trivial cochain per class representative; absent keys mean zero
using DecomposedClassFamily = std::map<int, Cochain>;

CochainSpace component_space(const FiniteGroup& G, const PrimeField& F,
                             const ConjugacyData& cd, int rep);

// true when phi(g_1..g_n) is supported on g_1...g_n * (class of rep) throughout
bool in_component(const CochainSpace& hoch, const ConjugacyData& cd,
                  const Cochain& phi, int rep);
void require_component(const CochainSpace& hoch, const ConjugacyData& cd,
                       const Cochain& phi, int rep);

// keep only the coefficients of phi(g_1..g_n) lying in g_1...g_n * (class of
// rep); these projections are orthogonal idempotents summing to the identity
Cochain component_project(const CochainSpace& hoch, const ConjugacyData& cd,
                          const Cochain& phi, int rep);

// psi(h_1..h_n) = coefficient of rep*h_1...h_n in phi(h_1..h_n); phi must
// already lie in the rep component
ComponentCochain decompose(const CochainSpace& hoch, const ConjugacyData& cd,
                           const Cochain& phi, int rep);
// coefficient reading at every representative (projection built in)
DecomposedClassFamily decompose_family(const CochainSpace& hoch, const ConjugacyData& cd,
                                       const Cochain& phi);

// phi(g_1..g_n) = sum_i psi(h_{i,1}..h_{i,n}) * x_i*g_1...g_n, the h's walked
// along (g_1..g_n) from gamma_i; lands in the rep component
Cochain recompose(const CochainSpace& hoch, const ConjugacyData& cd,
                  const ComponentCochain& c);
Cochain recompose_family(const CochainSpace& hoch, const ConjugacyData& cd,
                         const DecomposedClassFamily& fam, int degree);

// psi on all of G with trivial coefficients -> phi(g) = psi(g) g_1...g_n,
// the identity-component case of recompose
Cochain embed_group_cochain(const CochainSpace& hoch, const ConjugacyData& cd,
                            const Cochain& psi);

// companion realization: psi(h_1..h_n) = (-1)^{n(n+1)/2} * coefficient of rep
// in h_1...h_n * phi(h_n^{-1},..,h_1^{-1}), with the matching inverse that
// walks along (g_n^{-1},..,g_1^{-1})
ComponentCochain decompose_first(const CochainSpace& hoch, const ConjugacyData& cd,
                                 const Cochain& phi, int rep);
DecomposedClassFamily decompose_first_family(const CochainSpace& hoch,
                                             const ConjugacyData& cd, const Cochain& phi);
Cochain recompose_first(const CochainSpace& hoch, const ConjugacyData& cd,
                        const ComponentCochain& c);
Cochain recompose_first_family(const CochainSpace& hoch, const ConjugacyData& cd,
                               const DecomposedClassFamily& fam, int degree);

// family arithmetic (component-wise over the union of supports)
DecomposedClassFamily family_add(const FiniteGroup& G, const PrimeField& F,
                                 const ConjugacyData& cd, const DecomposedClassFamily& a,
                                 const DecomposedClassFamily& b);
DecomposedClassFamily family_scale(const FiniteGroup& G, const PrimeField& F,
                                   const ConjugacyData& cd, Scalar k,
                                   const DecomposedClassFamily& a);
DecomposedClassFamily family_sub(const FiniteGroup& G, const PrimeField& F,
                                 const ConjugacyData& cd, const DecomposedClassFamily& a,
                                 const DecomposedClassFamily& b);
bool family_is_zero(const FiniteGroup& G, const PrimeField& F, const ConjugacyData& cd,
                    const DecomposedClassFamily& a);
// every component a coboundary in its centralizer complex
bool family_is_coboundary(const FiniteGroup& G, const PrimeField& F,
                          const ConjugacyData& cd, const DecomposedClassFamily& a);
bool family_cohomologous(const FiniteGroup& G, const PrimeField& F, const ConjugacyData& cd,
                         const DecomposedClassFamily& a, const DecomposedClassFamily& b);

} // namespace bvcoho
