#include "bvcoho/decomposition.hpp"

#include "bvcoho/errors.hpp"

namespace bvcoho {

CochainSpace component_space(const FiniteGroup& G, const PrimeField& F,
                             const ConjugacyData& cd, int rep) {
    return CochainSpace(G, F, Kind::GroupTrivial,
                        cd.centralizer[static_cast<size_t>(cd.rep_index(rep))]);
}

static void require_hochschild(const CochainSpace& hoch) {
    if (hoch.kind() != Kind::HochschildKG)
        throw KindMismatch("decomposition needs hochschild cochains");
    if (hoch.subgroup_order() != hoch.group().order())
        throw KindMismatch("decomposition needs the whole-group complex");
}

static void require_rep(const ConjugacyData& cd, int rep) {
    (void)cd.rep_index(rep); // throws unless rep heads its class
}

bool in_component(const CochainSpace& hoch, const ConjugacyData& cd,
                  const Cochain& phi, int rep) {
    require_hochschild(hoch);
    require_rep(cd, rep);
    const FiniteGroup& G = hoch.group();
    int cls = cd.class_of[static_cast<size_t>(rep)];
    long b = hoch.block_size();
    for (long R = 0; R < hoch.tuple_count(phi.degree); ++R) {
        int tprod = G.product(hoch.unrank_tuple(phi.degree, R));
        for (long w = 0; w < b; ++w) {
            if (phi.values[static_cast<size_t>(R * b + w)] == 0) continue;
            int c = G.mult(G.inv(tprod), static_cast<int>(w));
            if (cd.class_of[static_cast<size_t>(c)] != cls) return false;
        }
    }
    return true;
}

void require_component(const CochainSpace& hoch, const ConjugacyData& cd,
                       const Cochain& phi, int rep) {
    if (!in_component(hoch, cd, phi, rep))
        throw NotInComponent("cochain has support outside the class of element " +
                             std::to_string(rep));
}

Cochain component_project(const CochainSpace& hoch, const ConjugacyData& cd,
                          const Cochain& phi, int rep) {
    require_hochschild(hoch);
    hoch.require(phi);
    require_rep(cd, rep);
    const FiniteGroup& G = hoch.group();
    int cls = cd.class_of[static_cast<size_t>(rep)];
    int n = phi.degree;
    long b = hoch.block_size();
    Cochain out = hoch.zero_cochain(n);
    for (long R = 0; R < hoch.tuple_count(n); ++R) {
        int tprod = G.product(hoch.unrank_tuple(n, R));
        for (long w = 0; w < b; ++w) {
            Scalar v = phi.values[static_cast<size_t>(R * b + w)];
            if (v == 0) continue;
            int c = G.mult(G.inv(tprod), static_cast<int>(w));
            if (cd.class_of[static_cast<size_t>(c)] == cls)
                out.values[static_cast<size_t>(R * b + w)] = v;
        }
    }
    return out;
}

// coefficient reading behind both decompose entry points; sound for any phi
// because it only ever looks at the rep-component coefficients
static ComponentCochain read_component(const CochainSpace& hoch, const ConjugacyData& cd,
                                       const Cochain& phi, int rep) {
    const FiniteGroup& G = hoch.group();
    CochainSpace H = component_space(G, hoch.field(), cd, rep);
    int n = phi.degree;
    Cochain psi = H.zero_cochain(n);
    for (long R = 0; R < H.tuple_count(n); ++R) {
        std::vector<int> T = H.unrank_tuple(n, R);
        AlgebraElement v = hoch.eval(phi, T);
        int target = G.mult(rep, G.product(T));
        psi.values[static_cast<size_t>(R)] = v[static_cast<size_t>(target)];
    }
    return ComponentCochain{rep, std::move(psi)};
}

ComponentCochain decompose(const CochainSpace& hoch, const ConjugacyData& cd,
                           const Cochain& phi, int rep) {
    hoch.require(phi);
    require_component(hoch, cd, phi, rep);
    return read_component(hoch, cd, phi, rep);
}

DecomposedClassFamily decompose_family(const CochainSpace& hoch, const ConjugacyData& cd,
                                       const Cochain& phi) {
    require_hochschild(hoch);
    hoch.require(phi);
    DecomposedClassFamily fam;
    for (int rep : cd.reps) fam.emplace(rep, read_component(hoch, cd, phi, rep).psi);
    return fam;
}

static void accumulate_recompose(const CochainSpace& hoch, const ConjugacyData& cd,
                                 int rep, const Cochain& psi, Cochain& phi) {
    const FiniteGroup& G = hoch.group();
    const PrimeField& F = hoch.field();
    int degree = phi.degree;
    long b = hoch.block_size();
    require_rep(cd, rep);
    CochainSpace H = component_space(G, F, cd, rep);
    H.require(psi, degree);
    int cls = cd.class_of[static_cast<size_t>(rep)];
    int ngam = static_cast<int>(cd.gammas[static_cast<size_t>(cls)].size());
    for (long R = 0; R < hoch.tuple_count(degree); ++R) {
        std::vector<int> T = hoch.unrank_tuple(degree, R);
        int tprod = G.product(T);
        for (int i = 1; i <= ngam; ++i) {
            WalkResult ws = walk_sequence(G, cd, rep, i, T);
            Scalar c = H.eval_scalar(psi, ws.hs);
            if (c == 0) continue;
            int xi = cd.conjugates[static_cast<size_t>(cls)][static_cast<size_t>(i - 1)];
            long e = G.mult(xi, tprod);
            size_t idx = static_cast<size_t>(R * b + e);
            phi.values[idx] = F.add(phi.values[idx], c);
        }
    }
}

Cochain recompose(const CochainSpace& hoch, const ConjugacyData& cd,
                  const ComponentCochain& c) {
    require_hochschild(hoch);
    Cochain phi = hoch.zero_cochain(c.psi.degree);
    accumulate_recompose(hoch, cd, c.rep, c.psi, phi);
    return phi;
}

Cochain recompose_family(const CochainSpace& hoch, const ConjugacyData& cd,
                         const DecomposedClassFamily& fam, int degree) {
    require_hochschild(hoch);
    Cochain phi = hoch.zero_cochain(degree);
    for (auto& [rep, psi] : fam) accumulate_recompose(hoch, cd, rep, psi, phi);
    return phi;
}

Cochain embed_group_cochain(const CochainSpace& hoch, const ConjugacyData& cd,
                            const Cochain& psi) {
    return recompose(hoch, cd, ComponentCochain{hoch.group().identity(), psi});
}

static ComponentCochain read_component_first(const CochainSpace& hoch,
                                             const ConjugacyData& cd, const Cochain& phi,
                                             int rep) {
    const FiniteGroup& G = hoch.group();
    const PrimeField& F = hoch.field();
    int n = phi.degree;
    Scalar sgn = F.sign(static_cast<long>(n) * (n + 1) / 2);
    CochainSpace H = component_space(G, F, cd, rep);
    Cochain psi = H.zero_cochain(n);
    for (long R = 0; R < H.tuple_count(n); ++R) {
        std::vector<int> T = H.unrank_tuple(n, R);
        std::vector<int> rev(T.rbegin(), T.rend());
        for (auto& g : rev) g = G.inv(g);
        AlgebraElement v = hoch.eval(phi, rev);
        // coefficient of rep in (h_1...h_n) * v
        int at = G.mult(G.inv(G.product(T)), rep);
        psi.values[static_cast<size_t>(R)] = F.mul(sgn, v[static_cast<size_t>(at)]);
    }
    return ComponentCochain{rep, std::move(psi)};
}

ComponentCochain decompose_first(const CochainSpace& hoch, const ConjugacyData& cd,
                                 const Cochain& phi, int rep) {
    require_hochschild(hoch);
    hoch.require(phi);
    require_rep(cd, rep);
    return read_component_first(hoch, cd, phi, rep);
}

DecomposedClassFamily decompose_first_family(const CochainSpace& hoch,
                                             const ConjugacyData& cd, const Cochain& phi) {
    require_hochschild(hoch);
    hoch.require(phi);
    DecomposedClassFamily fam;
    for (int rep : cd.reps) fam.emplace(rep, read_component_first(hoch, cd, phi, rep).psi);
    return fam;
}

static void accumulate_recompose_first(const CochainSpace& hoch, const ConjugacyData& cd,
                                       int rep, const Cochain& psi, Cochain& phi) {
    const FiniteGroup& G = hoch.group();
    const PrimeField& F = hoch.field();
    int degree = phi.degree;
    long b = hoch.block_size();
    Scalar sgn = F.sign(static_cast<long>(degree) * (degree + 1) / 2);
    require_rep(cd, rep);
    CochainSpace H = component_space(G, F, cd, rep);
    H.require(psi, degree);
    int cls = cd.class_of[static_cast<size_t>(rep)];
    int ngam = static_cast<int>(cd.gammas[static_cast<size_t>(cls)].size());
    for (long R = 0; R < hoch.tuple_count(degree); ++R) {
        std::vector<int> T = hoch.unrank_tuple(degree, R);
        std::vector<int> rev(T.rbegin(), T.rend());
        for (auto& g : rev) g = G.inv(g);
        int tprod = G.product(T);
        for (int i = 1; i <= ngam; ++i) {
            WalkResult ws = walk_sequence(G, cd, rep, i, rev);
            Scalar c = H.eval_scalar(psi, ws.hs);
            if (c == 0) continue;
            int xi = cd.conjugates[static_cast<size_t>(cls)][static_cast<size_t>(i - 1)];
            long e = G.mult(tprod, xi);
            size_t idx = static_cast<size_t>(R * b + e);
            phi.values[idx] = F.add(phi.values[idx], F.mul(sgn, c));
        }
    }
}

Cochain recompose_first(const CochainSpace& hoch, const ConjugacyData& cd,
                        const ComponentCochain& c) {
    require_hochschild(hoch);
    Cochain phi = hoch.zero_cochain(c.psi.degree);
    accumulate_recompose_first(hoch, cd, c.rep, c.psi, phi);
    return phi;
}

Cochain recompose_first_family(const CochainSpace& hoch, const ConjugacyData& cd,
                               const DecomposedClassFamily& fam, int degree) {
    require_hochschild(hoch);
    Cochain phi = hoch.zero_cochain(degree);
    for (auto& [rep, psi] : fam) accumulate_recompose_first(hoch, cd, rep, psi, phi);
    return phi;
}

DecomposedClassFamily family_add(const FiniteGroup& G, const PrimeField& F,
                                 const ConjugacyData& cd, const DecomposedClassFamily& a,
                                 const DecomposedClassFamily& b) {
    DecomposedClassFamily out = a;
    for (auto& [rep, psi] : b) {
        auto it = out.find(rep);
        if (it == out.end()) {
            out.emplace(rep, psi);
        } else {
            CochainSpace H = component_space(G, F, cd, rep);
            it->second = H.add(it->second, psi);
        }
    }
    return out;
}

DecomposedClassFamily family_scale(const FiniteGroup& G, const PrimeField& F,
                                   const ConjugacyData& cd, Scalar k,
                                   const DecomposedClassFamily& a) {
    DecomposedClassFamily out;
    for (auto& [rep, psi] : a) {
        CochainSpace H = component_space(G, F, cd, rep);
        out.emplace(rep, H.scale(k, psi));
    }
    return out;
}

DecomposedClassFamily family_sub(const FiniteGroup& G, const PrimeField& F,
                                 const ConjugacyData& cd, const DecomposedClassFamily& a,
                                 const DecomposedClassFamily& b) {
    return family_add(G, F, cd, a, family_scale(G, F, cd, F.neg(1), b));
}

bool family_is_zero(const FiniteGroup& G, const PrimeField& F, const ConjugacyData& cd,
                    const DecomposedClassFamily& a) {
    for (auto& [rep, psi] : a) {
        CochainSpace H = component_space(G, F, cd, rep);
        if (!H.is_zero(psi)) return false;
    }
    return true;
}

bool family_is_coboundary(const FiniteGroup& G, const PrimeField& F,
                          const ConjugacyData& cd, const DecomposedClassFamily& a) {
    for (auto& [rep, psi] : a) {
        CochainSpace H = component_space(G, F, cd, rep);
        if (!H.is_coboundary(psi)) return false;
    }
    return true;
}

bool family_cohomologous(const FiniteGroup& G, const PrimeField& F, const ConjugacyData& cd,
                         const DecomposedClassFamily& a, const DecomposedClassFamily& b) {
    return family_is_coboundary(G, F, cd, family_sub(G, F, cd, a, b));
}

} // namespace bvcoho
