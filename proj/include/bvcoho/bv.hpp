#pragma once
#include "cochain.hpp"
#include "decomposition.hpp"

namespace bvcoho {

// (f u g)(a_1..a_{n+m}) = f(a_1..a_n) * g(a_{n+1}..a_{n+m})
Cochain cup(const CochainSpace& S, const Cochain& f, const Cochain& g);

// f o_i g: insert g's value (expanded over group elements, identity slots
// dropping out) into slot i of f; for m = 0, insert the algebra element g.
// HochschildKG only.
Cochain brace_composition(const CochainSpace& S, const Cochain& f, const Cochain& g, int i);
// f o g = sum_i (-1)^{(m-1)(i-1)} f o_i g; zero when f has degree 0
Cochain brace(const CochainSpace& S, const Cochain& f, const Cochain& g);
// [f, g] = f o g - (-1)^{(n-1)(m-1)} g o f
Cochain bracket(const CochainSpace& S, const Cochain& f, const Cochain& g);

// delta(phi)(g_1..g_{n-1}) =
//   sum_{g_n} sum_{i=1}^n (-1)^{i(n-1)} <phi(g_i..g_{n-1},g_n,g_1..g_{i-1}),1> g_n^{-1}
// (zero on degree 0); HochschildKG only
Cochain delta(const CochainSpace& S, const Cochain& phi);

// component form on C_G(x) with trivial coefficients:
//   sum_{i=1}^n (-1)^{i(n-1)} psi(h_i..h_{n-1}, (h_1...h_{n-1})^{-1} x^{-1}, h_1..h_{i-1})
Cochain delta_hat(const CochainSpace& H, const Cochain& psi, int x);

DecomposedClassFamily delta_hat_family(const FiniteGroup& G, const PrimeField& F,
                                       const ConjugacyData& cd,
                                       const DecomposedClassFamily& fam);

// product of component classes, one output cochain per class z:
//   (psi_x u psi_y)_z(h_1..h_{n+m}) = sum_{(i,j)} psi_x(walk_x) psi_y(walk_y)
// over pairs with x_i (h_1..h_n) y_j (h_1..h_n)^{-1} = z; psi_x walks the
// first n arguments from gamma_i, psi_y the last m from gamma_j
DecomposedClassFamily cup_decomposed(const FiniteGroup& G, const PrimeField& F,
                                     const ConjugacyData& cd, const ComponentCochain& a,
                                     const ComponentCochain& b);

// companion form: sign (-1)^{nm}, pairs with
// (h_1..h_m) x_i (h_1..h_m)^{-1} y_j = z, psi_x walking the last n arguments
// and psi_y the first m
DecomposedClassFamily cup_decomposed_first(const FiniteGroup& G, const PrimeField& F,
                                           const ConjugacyData& cd, const ComponentCochain& a,
                                           const ComponentCochain& b);

DecomposedClassFamily family_cup(const FiniteGroup& G, const PrimeField& F,
                                 const ConjugacyData& cd, const DecomposedClassFamily& a,
                                 const DecomposedClassFamily& b);

// [a, b] = -(-1)^{(n-1)m} (D(a u b) - D(a) u b - (-1)^n a u D(b)),
// everything computed component-wise with D = delta_hat
DecomposedClassFamily bracket_via_bv(const FiniteGroup& G, const PrimeField& F,
                                     const ConjugacyData& cd, const DecomposedClassFamily& a,
                                     int deg_a, const DecomposedClassFamily& b, int deg_b);

// D(abc) - (-1)^{|a||b||c|} [ (-1)^{|c|} D(ab)c + aD(bc) + (-1)^{|a||b|} bD(ac)
//   - (-1)^{|a|} D(a)bc - (-1)^{|a|+|b|-|a||c|} a D(b) c
//   - (-1)^{|a|+|b|+|c|} ab D(c) ]; a coboundary family when a,b,c are cocycles
DecomposedClassFamily seven_term_residual(const FiniteGroup& G, const PrimeField& F,
                                          const ConjugacyData& cd,
                                          const DecomposedClassFamily& a, int deg_a,
                                          const DecomposedClassFamily& b, int deg_b,
                                          const DecomposedClassFamily& c, int deg_c);

} // namespace bvcoho
