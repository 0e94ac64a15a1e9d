#include "bvcoho/bv.hpp"

#include "bvcoho/errors.hpp"

namespace bvcoho {

Cochain cup(const CochainSpace& S, const Cochain& f, const Cochain& g) {
    S.require(f), S.require(g);
    const PrimeField& F = S.field();
    int n = f.degree, m = g.degree;
    Cochain out = S.zero_cochain(n + m);
    long b = S.block_size();
    for (long R = 0; R < S.tuple_count(n + m); ++R) {
        std::vector<int> T = S.unrank_tuple(n + m, R);
        std::vector<int> front(T.begin(), T.begin() + n), back(T.begin() + n, T.end());
        AlgebraElement v;
        if (S.kind() == Kind::GroupTrivial) {
            v = AlgebraElement{F.mul(S.eval(f, front)[0], S.eval(g, back)[0])};
        } else {
            v = S.algebra().mul(S.eval(f, front), S.eval(g, back));
        }
        std::copy(v.begin(), v.end(), out.values.begin() + R * b);
    }
    return out;
}

static void require_gerstenhaber(const CochainSpace& S) {
    if (S.kind() != Kind::HochschildKG)
        throw KindMismatch("brace operations need hochschild cochains");
}

Cochain brace_composition(const CochainSpace& S, const Cochain& f, const Cochain& g, int i) {
    require_gerstenhaber(S);
    S.require(f), S.require(g);
    const PrimeField& F = S.field();
    const FiniteGroup& G = S.group();
    int n = f.degree, m = g.degree;
    if (n < 1 || i < 1 || i > n) throw IndexOutOfRange("brace slot " + std::to_string(i));
    Cochain out = S.zero_cochain(n + m - 1);
    long b = S.block_size();
    for (long R = 0; R < S.tuple_count(n + m - 1); ++R) {
        std::vector<int> T = S.unrank_tuple(n + m - 1, R);
        AlgebraElement gval =
            m == 0 ? AlgebraElement(g.values) : S.eval(g, {T.begin() + (i - 1), T.begin() + (i - 1) + m});
        AlgebraElement acc(static_cast<size_t>(b), 0);
        for (int w = 0; w < G.order(); ++w) {
            Scalar c = gval[static_cast<size_t>(w)];
            if (c == 0 || w == G.identity()) continue; // identity slots drop out
            std::vector<int> ft(T.begin(), T.begin() + (i - 1));
            ft.push_back(w);
            ft.insert(ft.end(), T.begin() + (i - 1) + m, T.end());
            AlgebraElement fv = S.eval(f, ft);
            for (size_t k = 0; k < acc.size(); ++k) acc[k] = F.add(acc[k], F.mul(c, fv[k]));
        }
        std::copy(acc.begin(), acc.end(), out.values.begin() + R * b);
    }
    return out;
}

Cochain brace(const CochainSpace& S, const Cochain& f, const Cochain& g) {
    require_gerstenhaber(S);
    S.require(f), S.require(g);
    const PrimeField& F = S.field();
    int n = f.degree, m = g.degree;
    if (n + m < 1) throw DegreeMismatch("brace of two degree-0 cochains");
    if (n == 0) return S.zero_cochain(m - 1);
    Cochain out = S.zero_cochain(n + m - 1);
    for (int i = 1; i <= n; ++i) {
        Scalar sgn = F.sign(static_cast<long>(m - 1) * (i - 1));
        out = S.add(out, S.scale(sgn, brace_composition(S, f, g, i)));
    }
    return out;
}

Cochain bracket(const CochainSpace& S, const Cochain& f, const Cochain& g) {
    const PrimeField& F = S.field();
    int n = f.degree, m = g.degree;
    if (n + m < 1) throw DegreeMismatch("bracket of two degree-0 cochains");
    Scalar sgn = F.sign(static_cast<long>(n - 1) * (m - 1));
    return S.sub(brace(S, f, g), S.scale(sgn, brace(S, g, f)));
}

Cochain delta(const CochainSpace& S, const Cochain& phi) {
    require_gerstenhaber(S);
    S.require(phi);
    const PrimeField& F = S.field();
    const FiniteGroup& G = S.group();
    int n = phi.degree;
    if (n == 0) return S.zero_cochain(0);
    Cochain out = S.zero_cochain(n - 1);
    long b = S.block_size();
    for (long R = 0; R < S.tuple_count(n - 1); ++R) {
        std::vector<int> T = S.unrank_tuple(n - 1, R);
        AlgebraElement acc(static_cast<size_t>(b), 0);
        for (int gn = 1; gn < G.order(); ++gn) {
            Scalar coeff = 0;
            for (int i = 1; i <= n; ++i) {
                std::vector<int> cyc(T.begin() + (i - 1), T.end());
                cyc.push_back(gn);
                cyc.insert(cyc.end(), T.begin(), T.begin() + (i - 1));
                Scalar v = S.eval(phi, cyc)[static_cast<size_t>(G.identity())];
                coeff = F.add(coeff, F.mul(F.sign(static_cast<long>(i) * (n - 1)), v));
            }
            size_t at = static_cast<size_t>(G.inv(gn));
            acc[at] = F.add(acc[at], coeff);
        }
        std::copy(acc.begin(), acc.end(), out.values.begin() + R * b);
    }
    return out;
}

Cochain delta_hat(const CochainSpace& H, const Cochain& psi, int x) {
    if (H.kind() != Kind::GroupTrivial)
        throw KindMismatch("delta_hat needs trivial coefficients");
    H.require(psi);
    const FiniteGroup& G = H.group();
    const PrimeField& F = H.field();
    for (int h : H.subgroup())
        if (G.mult(h, x) != G.mult(x, h))
            throw KindMismatch("cochain subgroup does not centralize the marked element");
    int n = psi.degree;
    if (n == 0) return H.zero_cochain(0);
    Cochain out = H.zero_cochain(n - 1);
    for (long R = 0; R < H.tuple_count(n - 1); ++R) {
        std::vector<int> T = H.unrank_tuple(n - 1, R);
        int c = G.inv(G.mult(x, G.product(T)));
        Scalar acc = 0;
        for (int i = 1; i <= n; ++i) {
            std::vector<int> cyc(T.begin() + (i - 1), T.end());
            cyc.push_back(c);
            cyc.insert(cyc.end(), T.begin(), T.begin() + (i - 1));
            Scalar v = H.eval(psi, cyc)[0];
            acc = F.add(acc, F.mul(F.sign(static_cast<long>(i) * (n - 1)), v));
        }
        out.values[static_cast<size_t>(R)] = acc;
    }
    return out;
}

DecomposedClassFamily delta_hat_family(const FiniteGroup& G, const PrimeField& F,
                                       const ConjugacyData& cd,
                                       const DecomposedClassFamily& fam) {
    DecomposedClassFamily out;
    for (auto& [rep, psi] : fam) {
        if (psi.degree == 0) continue;
        CochainSpace H = component_space(G, F, cd, rep);
        out.emplace(rep, delta_hat(H, psi, rep));
    }
    return out;
}

static DecomposedClassFamily cup_decomposed_impl(const FiniteGroup& G, const PrimeField& F,
                                                 const ConjugacyData& cd,
                                                 const ComponentCochain& a,
                                                 const ComponentCochain& b, bool first_form) {
    int kx = cd.rep_index(a.rep), ky = cd.rep_index(b.rep);
    CochainSpace Hx = component_space(G, F, cd, a.rep);
    CochainSpace Hy = component_space(G, F, cd, b.rep);
    Hx.require(a.psi), Hy.require(b.psi);
    int n = a.psi.degree, m = b.psi.degree;
    const auto& xconjs = cd.conjugates[static_cast<size_t>(kx)];
    const auto& yconjs = cd.conjugates[static_cast<size_t>(ky)];
    Scalar sgn = first_form ? F.sign(static_cast<long>(n) * m) : 1;

    DecomposedClassFamily out;
    for (int z : cd.reps) {
        CochainSpace Hz = component_space(G, F, cd, z);
        Cochain cz = Hz.zero_cochain(n + m);
        for (long R = 0; R < Hz.tuple_count(n + m); ++R) {
            std::vector<int> T = Hz.unrank_tuple(n + m, R);
            // the x factor walks a block of n arguments, the y factor the
            // other block; membership conjugates by the leading block
            std::vector<int> xargs, yargs;
            int lead;
            if (!first_form) {
                xargs.assign(T.begin(), T.begin() + n);
                yargs.assign(T.begin() + n, T.end());
                lead = G.product(xargs);
            } else {
                yargs.assign(T.begin(), T.begin() + m);
                xargs.assign(T.begin() + m, T.end());
                lead = G.product(yargs);
            }
            std::vector<Scalar> xvals(xconjs.size()), yvals(yconjs.size());
            for (size_t i = 0; i < xconjs.size(); ++i)
                xvals[i] = Hx.eval_scalar(
                    a.psi, walk_sequence(G, cd, a.rep, static_cast<int>(i) + 1, xargs).hs);
            for (size_t j = 0; j < yconjs.size(); ++j)
                yvals[j] = Hy.eval_scalar(
                    b.psi, walk_sequence(G, cd, b.rep, static_cast<int>(j) + 1, yargs).hs);
            Scalar acc = 0;
            for (size_t i = 0; i < xconjs.size(); ++i) {
                if (xvals[i] == 0) continue;
                for (size_t j = 0; j < yconjs.size(); ++j) {
                    if (yvals[j] == 0) continue;
                    int zz = first_form
                                 ? G.mult(G.conj(lead, xconjs[i]), yconjs[j])
                                 : G.mult(xconjs[i], G.conj(lead, yconjs[j]));
                    if (zz != z) continue;
                    acc = F.add(acc, F.mul(xvals[i], yvals[j]));
                }
            }
            cz.values[static_cast<size_t>(R)] = F.mul(sgn, acc);
        }
        if (!Hz.is_zero(cz)) out.emplace(z, std::move(cz));
    }
    return out;
}

DecomposedClassFamily cup_decomposed(const FiniteGroup& G, const PrimeField& F,
                                     const ConjugacyData& cd, const ComponentCochain& a,
                                     const ComponentCochain& b) {
    return cup_decomposed_impl(G, F, cd, a, b, false);
}

DecomposedClassFamily cup_decomposed_first(const FiniteGroup& G, const PrimeField& F,
                                           const ConjugacyData& cd, const ComponentCochain& a,
                                           const ComponentCochain& b) {
    return cup_decomposed_impl(G, F, cd, a, b, true);
}

DecomposedClassFamily family_cup(const FiniteGroup& G, const PrimeField& F,
                                 const ConjugacyData& cd, const DecomposedClassFamily& a,
                                 const DecomposedClassFamily& b) {
    DecomposedClassFamily out;
    for (auto& [x, px] : a)
        for (auto& [y, py] : b)
            out = family_add(G, F, cd, out,
                             cup_decomposed(G, F, cd, ComponentCochain{x, px},
                                            ComponentCochain{y, py}));
    return out;
}

DecomposedClassFamily bracket_via_bv(const FiniteGroup& G, const PrimeField& F,
                                     const ConjugacyData& cd, const DecomposedClassFamily& a,
                                     int deg_a, const DecomposedClassFamily& b, int deg_b) {
    if (deg_a + deg_b < 1) throw DegreeMismatch("bracket of two degree-0 families");
    DecomposedClassFamily t1 = delta_hat_family(G, F, cd, family_cup(G, F, cd, a, b));
    DecomposedClassFamily t2 = family_cup(G, F, cd, delta_hat_family(G, F, cd, a), b);
    DecomposedClassFamily t3 = family_cup(G, F, cd, a, delta_hat_family(G, F, cd, b));
    DecomposedClassFamily inner =
        family_sub(G, F, cd, family_sub(G, F, cd, t1, t2),
                   family_scale(G, F, cd, F.sign(deg_a), t3));
    Scalar outer = F.neg(F.sign(static_cast<long>(deg_a - 1) * deg_b));
    return family_scale(G, F, cd, outer, inner);
}

DecomposedClassFamily seven_term_residual(const FiniteGroup& G, const PrimeField& F,
                                          const ConjugacyData& cd,
                                          const DecomposedClassFamily& a, int deg_a,
                                          const DecomposedClassFamily& b, int deg_b,
                                          const DecomposedClassFamily& c, int deg_c) {
    auto D = [&](const DecomposedClassFamily& f) { return delta_hat_family(G, F, cd, f); };
    auto cupf = [&](const DecomposedClassFamily& f, const DecomposedClassFamily& g) {
        return family_cup(G, F, cd, f, g);
    };
    auto scalef = [&](Scalar k, const DecomposedClassFamily& f) {
        return family_scale(G, F, cd, k, f);
    };
    long da = deg_a, db = deg_b, dc = deg_c;
    DecomposedClassFamily ab = cupf(a, b), bc = cupf(b, c), ac = cupf(a, c);
    DecomposedClassFamily lhs = D(cupf(ab, c));
    DecomposedClassFamily rhs = scalef(F.sign(dc), cupf(D(ab), c));
    rhs = family_add(G, F, cd, rhs, cupf(a, D(bc)));
    rhs = family_add(G, F, cd, rhs, scalef(F.sign(da * db), cupf(b, D(ac))));
    rhs = family_sub(G, F, cd, rhs, scalef(F.sign(da), cupf(cupf(D(a), b), c)));
    rhs = family_sub(G, F, cd, rhs, scalef(F.sign(da + db - da * dc), cupf(cupf(a, D(b)), c)));
    rhs = family_sub(G, F, cd, rhs, scalef(F.sign(da + db + dc), cupf(ab, D(c))));
    return family_sub(G, F, cd, lhs, scalef(F.sign(da * db * dc), rhs));
}

} // namespace bvcoho
