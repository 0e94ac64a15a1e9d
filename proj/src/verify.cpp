#include "bvcoho/verify.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "bvcoho/bv.hpp"
#include "bvcoho/comparison.hpp"
#include "bvcoho/decomposition.hpp"
#include "bvcoho/errors.hpp"
#include "bvcoho/reference_tables.hpp"

namespace bvcoho {

namespace {

std::string scalars_str(const std::vector<Scalar>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::string longs_str(const std::vector<long>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

Cochain random_cochain(const CochainSpace& S, int n, std::mt19937& rng) {
    Cochain c = S.zero_cochain(n);
    for (auto& v : c.values) v = static_cast<Scalar>(rng() % S.field().p());
    return c;
}

using Runner = std::vector<CheckResult>&;

template <typename Fn>
void run(Runner out, int crit, const std::string& name, Fn&& fn) {
    bool ok = false;
    std::string detail;
    try {
        ok = fn(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    out.push_back({crit, name, ok, detail});
}

void run_semisimple(const VerifyOptions& opt, std::vector<CheckResult>& out) {
    FiniteGroup G = builtin_group("S3");
    PrimeField F(opt.prime);
    ConjugacyData cd = conjugacy_data(G);
    CochainSpace S = CochainSpace::whole_group(G, F, Kind::HochschildKG);

    out.push_back({0, "coefficient check", true,
                   "the group order 6 is invertible mod " + std::to_string(opt.prime) +
                       ", so the group algebra is semisimple and every class lives in "
                       "degree 0 (the center)"});
    run(out, 5, "dimension ledger for the full complex", [&](std::string& d) {
        std::vector<long> dims = cohomology_dims(S, 4);
        d = longs_str(dims);
        return dims == std::vector<long>{3, 0, 0, 0, 0};
    });
    run(out, 5, "dimension ledger from the centralizer complexes", [&](std::string& d) {
        std::vector<long> sums(5, 0);
        for (int x : cd.reps) {
            CochainSpace H = component_space(G, F, cd, x);
            std::vector<long> dims = cohomology_dims(H, 4);
            for (size_t n = 0; n < sums.size(); ++n) sums[n] += dims[n];
        }
        d = longs_str(sums);
        return sums == std::vector<long>{3, 0, 0, 0, 0};
    });
}

void run_full(const VerifyOptions& opt, std::vector<CheckResult>& out) {
    FiniteGroup G = builtin_group("S3");
    PrimeField F(3);
    ConjugacyData cd = conjugacy_data(G);
    CochainSpace S = CochainSpace::whole_group(G, F, Kind::HochschildKG);
    CochainSpace T = component_space(G, F, cd, 0);
    CochainSpace Ha = component_space(G, F, cd, 1);
    CochainSpace Hb = component_space(G, F, cd, 2);
    const GroupAlgebra& A = S.algebra();
    auto comp = [&](int x) -> const CochainSpace& { return x == 0 ? T : x == 1 ? Ha : Hb; };

    // identification kits: minimal resolutions against the bar complex, over
    // the whole group and over the order-3 centralizer
    auto [R, t] = s3_minimal_resolution(G, F, 9);
    BarResolution bar(G, F, 8);
    ChainMapToBar lam = build_comparison(R, bar);
    ChainMapFromBar theta = build_comparison(bar, R, t);

    FiniteGroup Ca = subgroup_as_group(G, {0, 1, 3}, "C_a");
    CochainSpace Ta = CochainSpace::whole_group(Ca, F, Kind::GroupTrivial);
    auto [Ra, ta] = cyclic_minimal_resolution(Ca, F, 8);
    BarResolution bara(Ca, F, 8);
    ChainMapToBar lama = build_comparison(Ra, bara);
    ChainMapFromBar thetaa = build_comparison(bara, Ra, ta);

    // dual coordinates of the class of a cocycle on one component; the order-2
    // centralizer is semisimple, so its positive-degree classes are decided by
    // the coboundary test alone
    auto class_of = [&](int x, const Cochain& c) -> std::vector<Scalar> {
        if (x == 0) return identify_class_minimal(T, c, lam, R, bar, c.degree);
        if (x == 1)
            return identify_class_minimal(Ta, Ta.from_values(c.degree, c.values), lama, Ra,
                                          bara, c.degree);
        if (c.degree == 0) return {c.values.at(0)};
        if (!Hb.is_cocycle(c)) throw NotACocycle("order-2 component value");
        return {Hb.is_coboundary(c) ? Scalar(0) : Scalar(1)};
    };
    auto class_zero = [&](const DecomposedClassFamily& fam, int degree, std::string& why) {
        bool ok = true;
        for (int x : cd.reps) {
            auto it = fam.find(x);
            Cochain c = it != fam.end() ? it->second : comp(x).zero_cochain(degree);
            std::vector<Scalar> cls = class_of(x, c);
            if (std::any_of(cls.begin(), cls.end(), [](Scalar s) { return s != 0; })) {
                why += (ok ? "reads" : ",") + std::string(" x=") + std::to_string(x) + ":" +
                       scalars_str(cls);
                ok = false;
            }
        }
        return ok;
    };

    /* generators: u, v span the group cohomology part (transfers of the dual
     * generators through the bar comparison), w1, w2 the order-3 centralizer
     * part, and the two central sums live in degree 0 */
    Cochain u = transfer_cochain(T, {1}, theta, 3, R);
    Cochain v = transfer_cochain(T, {1}, theta, 4, R);
    Cochain v2 = transfer_cochain(T, {1}, theta, 8, R);
    Cochain w1 = Ha.zero_cochain(1);
    Ha.set_scalar(w1, {1}, 1);
    Ha.set_scalar(w1, {3}, 2);
    Cochain w2 = Ha.zero_cochain(2);
    Ha.set_scalar(w2, {1, 3}, 1);
    Ha.set_scalar(w2, {3, 1}, 1);
    Ha.set_scalar(w2, {3, 3}, 1);

    Cochain c1 = S.zero_cochain(0);  // 1 + a + a^2
    S.set_value(c1, {}, A.add(A.basis(0), A.add(A.basis(1), A.basis(3))));
    Cochain c2 = S.zero_cochain(0);  // b + ab + a^2b
    S.set_value(c2, {}, A.add(A.basis(2), A.add(A.basis(4), A.basis(5))));

    struct Gen {
        std::string name;
        DecomposedClassFamily fam;
        int deg;
    };
    auto one_comp = [](int x, const Cochain& c) {
        DecomposedClassFamily f;
        f.emplace(x, c);
        return f;
    };
    Gen gu{"u", one_comp(0, u), 3};
    Gen gv{"v", one_comp(0, v), 4};
    Gen gC1{"C1", decompose_family(S, cd, c1), 0};
    Gen gC2{"C2", decompose_family(S, cd, c2), 0};
    Gen gX1{"X1", one_comp(1, w1), 1};
    Gen gX2{"X2", one_comp(1, w2), 2};

    // ---- criterion 1: values of the component bv operator -----------------
    run(out, 1, "the degree-3 and degree-4 transfers land on the dual generators",
        [&](std::string& d) {
            auto cu = class_of(0, u), cv = class_of(0, v);
            d = scalars_str(cu) + " " + scalars_str(cv);
            return cu == std::vector<Scalar>{1} && cv == std::vector<Scalar>{1};
        });
    run(out, 1, "delta-hat_a(w1) = -1 exactly", [&](std::string& d) {
        Cochain dh = delta_hat(Ha, w1, 1);
        d = "values " + scalars_str(dh.values);
        return dh.values == std::vector<Scalar>{F.neg(1)};
    });
    run(out, 1, "delta-hat_a(w2) = 0 exactly", [&](std::string& d) {
        Cochain dh = delta_hat(Ha, w2, 1);
        d = "values " + scalars_str(dh.values);
        return Ha.is_zero(dh);
    });
    run(out, 1, "delta-hat_a(w1 w2) is the class of -w2", [&](std::string& d) {
        std::vector<Scalar> got = class_of(1, delta_hat(Ha, cup(Ha, w1, w2), 1));
        std::vector<Scalar> want = class_of(1, Ha.scale(F.neg(1), w2));
        d = scalars_str(got) + " vs " + scalars_str(want);
        return got == want;
    });
    run(out, 1, "delta-hat_a(w2 w2) is the zero class", [&](std::string& d) {
        std::vector<Scalar> got = class_of(1, delta_hat(Ha, cup(Ha, w2, w2), 1));
        d = scalars_str(got);
        return got == std::vector<Scalar>{0};
    });
    run(out, 1, "delta-hat_1(u) is the zero class", [&](std::string& d) {
        std::vector<Scalar> got = class_of(0, delta_hat(T, u, 0));
        d = scalars_str(got);
        return got == std::vector<Scalar>{0};
    });
    run(out, 1, "delta-hat_1(v) is the zero class", [&](std::string& d) {
        std::vector<Scalar> got = class_of(0, delta_hat(T, v, 0));
        d = scalars_str(got);
        return got == std::vector<Scalar>{0};
    });
    run(out, 1, "delta-hat_1(v^2) is the zero class (degree-8 transfer)", [&](std::string& d) {
        std::vector<Scalar> got = class_of(0, delta_hat(T, v2, 0));
        d = scalars_str(got);
        return got == std::vector<Scalar>{0};
    });

    // ---- criterion 2: the bracket table ------------------------------------
    struct BracketRow {
        const Gen* a;
        const Gen* b;
        const Gen* want;  // nullptr: expected zero
        Scalar coef;
    };
    const Scalar neg = F.neg(1);
    std::vector<BracketRow> rows = {
        {&gu, &gC1, &gX2, 1},  // kept first: the flipped-sign run trips here
        {&gC1, &gu, &gX2, neg},
        {&gu, &gX1, &gu, 1},
        {&gX1, &gu, &gu, neg},
        {&gv, &gX1, &gv, neg},
        {&gX1, &gv, &gv, 1},
        {&gC1, &gX1, &gC1, 1},
        {&gX1, &gC1, &gC1, neg},
        {&gC2, &gX1, &gC2, 1},
        {&gX1, &gC2, &gC2, neg},
        {&gu, &gu, nullptr, 0},
        {&gu, &gv, nullptr, 0},
        {&gv, &gu, nullptr, 0},
        {&gu, &gC2, nullptr, 0},
        {&gC2, &gu, nullptr, 0},
        {&gu, &gX2, nullptr, 0},
        {&gX2, &gu, nullptr, 0},
        {&gv, &gv, nullptr, 0},
        {&gv, &gC1, nullptr, 0},
        {&gC1, &gv, nullptr, 0},
        {&gv, &gC2, nullptr, 0},
        {&gC2, &gv, nullptr, 0},
        {&gv, &gX2, nullptr, 0},
        {&gX2, &gv, nullptr, 0},
        {&gC1, &gC1, nullptr, 0},
        {&gC1, &gC2, nullptr, 0},
        {&gC2, &gC1, nullptr, 0},
        {&gC2, &gC2, nullptr, 0},
        {&gC1, &gX2, nullptr, 0},
        {&gX2, &gC1, nullptr, 0},
        {&gC2, &gX2, nullptr, 0},
        {&gX2, &gC2, nullptr, 0},
        {&gX1, &gX1, nullptr, 0},
        {&gX1, &gX2, nullptr, 0},
        {&gX2, &gX1, nullptr, 0},
        {&gX2, &gX2, nullptr, 0},
    };
    for (const BracketRow& row : rows) {
        std::string rhs = !row.want ? "0" : (row.coef == 1 ? "" : "-") + row.want->name;
        run(out, 2, "bracket [" + row.a->name + "," + row.b->name + "] = " + rhs,
            [&](std::string& d) {
                int deg = row.a->deg + row.b->deg - 1;
                if (deg < 0) {
                    try {
                        bracket_via_bv(G, F, cd, row.a->fam, row.a->deg, row.b->fam,
                                       row.b->deg);
                    } catch (const DegreeMismatch&) {
                        d = "vanishes below degree zero";
                        return true;
                    }
                    d = "expected the degree guard to fire";
                    return false;
                }
                DecomposedClassFamily got =
                    bracket_via_bv(G, F, cd, row.a->fam, row.a->deg, row.b->fam, row.b->deg);
                if (opt.flip_delta_sign) got = family_scale(G, F, cd, neg, got);
                DecomposedClassFamily dif =
                    row.want ? family_sub(G, F, cd, got,
                                          family_scale(G, F, cd, row.coef, row.want->fam))
                             : got;
                return class_zero(dif, deg, d);
            });
    }

    // the frozen rows above check the decomposition pipeline against the
    // expected table; this row pins the pipeline itself to the direct
    // cochain-level bracket, independent of any identification
    run(out, 2, "bv-operator bracket agrees with the direct bracket on generator pairs",
        [&](std::string& d) {
            Cochain uh = recompose(S, cd, {0, u});
            Cochain vh = recompose(S, cd, {0, v});
            Cochain x1h = recompose(S, cd, {1, w1});
            Cochain x2h = recompose(S, cd, {1, w2});
            std::vector<std::pair<std::string, const Cochain*>> hreps = {
                {"u", &uh}, {"v", &vh},   {"C1", &c1},
                {"C2", &c2}, {"X1", &x1h}, {"X2", &x2h}};
            int compared = 0;
            for (const auto& [na, ca] : hreps)
                for (const auto& [nb, cb] : hreps) {
                    int deg = ca->degree + cb->degree - 1;
                    if (deg < 0 || deg > S.degree_cap()) continue;
                    DecomposedClassFamily direct =
                        decompose_family(S, cd, bracket(S, *ca, *cb));
                    DecomposedClassFamily via = bracket_via_bv(
                        G, F, cd, decompose_family(S, cd, *ca), ca->degree,
                        decompose_family(S, cd, *cb), cb->degree);
                    if (!family_cohomologous(G, F, cd, via, direct)) {
                        d = "[" + na + "," + nb + "] disagrees";
                        return false;
                    }
                    ++compared;
                }
            d = std::to_string(compared) + " pairs within the degree cap";
            return true;
        });

    // ---- criterion 3: ring relations between the generators ----------------
    auto cupf = [&](const Gen& a, const Gen& b) { return family_cup(G, F, cd, a.fam, b.fam); };
    struct RelRow {
        std::string name;
        DecomposedClassFamily dif;
        int deg;
    };
    std::vector<RelRow> rels;
    rels.push_back({"u X1 = 0", cupf(gu, gX1), 4});
    rels.push_back({"v X1 = u X2",
                    family_sub(G, F, cd, cupf(gv, gX1), cupf(gu, gX2)), 5});
    rels.push_back({"u C2 = 0", cupf(gu, gC2), 3});
    rels.push_back({"v C2 = 0", cupf(gv, gC2), 4});
    rels.push_back({"C1 X1 = 0", cupf(gC1, gX1), 1});
    rels.push_back({"C1 X2 = 0", cupf(gC1, gX2), 2});
    rels.push_back({"C2 X1 = 0", cupf(gC2, gX1), 1});
    rels.push_back({"C2 X2 = 0", cupf(gC2, gX2), 2});
    rels.push_back({"C1 C1 = 0", cupf(gC1, gC1), 0});
    rels.push_back({"C1 C2 = 0", cupf(gC1, gC2), 0});
    rels.push_back({"C2 C1 = 0", cupf(gC2, gC1), 0});
    rels.push_back({"C2 C2 = 0", cupf(gC2, gC2), 0});
    rels.push_back({"X1 X2 = u C1",
                    family_sub(G, F, cd, cupf(gX1, gX2), cupf(gu, gC1)), 3});
    rels.push_back({"X2 X2 = v C1",
                    family_sub(G, F, cd, cupf(gX2, gX2), cupf(gv, gC1)), 4});
    for (const RelRow& rel : rels)
        run(out, 3, "ring relation " + rel.name,
            [&](std::string& d) { return class_zero(rel.dif, rel.deg, d); });

    // ---- criterion 4: frozen comparison tables ------------------------------
    run(out, 4, "comparison into the bar complex over the order-3 centralizer",
        [&](std::string& d) {
            d = reftab::check_cyclic_to_bar(Ra, bara, lama, 4);
            return d.empty();
        });
    run(out, 4, "comparison out of the bar complex over the order-3 centralizer",
        [&](std::string& d) {
            std::vector<std::string> defects;
            d = reftab::check_cyclic_from_bar(bara, Ra, thetaa, &defects);
            if (!d.empty()) return false;
            d = std::to_string(defects.size()) +
                " frozen rows differ from the chain-forced construction, as documented";
            return defects.size() == 8;
        });
    run(out, 4, "comparison into the bar complex over the order-6 group, degrees 0..8",
        [&](std::string& d) {
            d = reftab::check_s3_to_bar(R, bar, lam, 8);
            return d.empty();
        });
    run(out, 4, "comparison out of the bar complex over the order-6 group, degrees 0..8",
        [&](std::string& d) {
            d = reftab::check_s3_from_bar(bar, R, theta, 8);
            return d.empty();
        });

    // ---- criterion 5: dimension ledger --------------------------------------
    const std::vector<long> expected_dims = {3, 1, 1, 2, 2};
    std::vector<long> hoch_dims;
    run(out, 5, "dimension ledger for the full complex", [&](std::string& d) {
        hoch_dims = cohomology_dims(S, 4);
        d = longs_str(hoch_dims);
        return hoch_dims == expected_dims;
    });
    run(out, 5, "dimension ledger from the centralizer complexes", [&](std::string& d) {
        std::vector<long> sums(5, 0);
        for (int x : cd.reps) {
            std::vector<long> dims = cohomology_dims(comp(x), 4);
            for (size_t n = 0; n < sums.size(); ++n) sums[n] += dims[n];
        }
        d = longs_str(sums);
        return sums == expected_dims && sums == hoch_dims;
    });

    // ---- criterion 6: randomized structural properties ----------------------
    struct Setting {
        std::string label;
        FiniteGroup G;
        PrimeField F;
        ConjugacyData cd;
    };
    std::vector<Setting> settings;
    for (const char* nm : {"C2", "C3", "C4", "S3"})
        for (uint32_t p : {2u, 3u}) {
            FiniteGroup Gs = builtin_group(nm);
            ConjugacyData cds = conjugacy_data(Gs);
            settings.push_back(
                {std::string(nm) + " mod " + std::to_string(p), Gs, PrimeField(p), cds});
        }
    std::vector<const Setting*> all, abelian;
    for (const Setting& s : settings) {
        all.push_back(&s);
        if (s.label[0] == 'C') abelian.push_back(&s);
    }

    std::mt19937 rng(static_cast<std::mt19937::result_type>(opt.seed));
    std::map<std::pair<std::string, int>, std::vector<std::vector<Scalar>>> kernel_cache;
    auto random_cocycle = [&](const Setting& s, const CochainSpace& Sp, int n) {
        auto key = std::make_pair(s.label + kind_name(Sp.kind()), n);
        auto it = kernel_cache.find(key);
        if (it == kernel_cache.end())
            it = kernel_cache.emplace(key, kernel_basis(Sp.differential_matrix(n))).first;
        Cochain c = Sp.zero_cochain(n);
        for (const auto& k : it->second) {
            Scalar w = static_cast<Scalar>(rng() % s.F.p());
            if (w == 0) continue;
            for (size_t j = 0; j < k.size(); ++j)
                c.values[j] = s.F.add(c.values[j], s.F.mul(w, k[j]));
        }
        return c;
    };

    auto suite = [&](const std::string& name, const std::vector<const Setting*>& where,
                     auto&& body) {
        run(out, 6, name, [&](std::string& d) {
            int per = (opt.property_cases + static_cast<int>(where.size()) - 1) /
                      static_cast<int>(where.size());
            long total = 0;
            for (const Setting* s : where)
                for (int c = 0; c < per; ++c, ++total) {
                    std::string w;
                    if (!body(*s, w)) {
                        d = s->label + ", case " + std::to_string(c) +
                            (w.empty() ? "" : ": " + w);
                        return false;
                    }
                }
            d = std::to_string(total) + " cases";
            return true;
        });
    };

    const Kind kinds[3] = {Kind::HochschildKG, Kind::GroupTrivial, Kind::GroupConjugation};

    suite("coboundary operator squares to zero", all, [&](const Setting& s, std::string&) {
        CochainSpace Sp = CochainSpace::whole_group(s.G, s.F, kinds[rng() % 3]);
        Cochain c = random_cochain(Sp, static_cast<int>(rng() % 3), rng);
        return Sp.is_zero(Sp.differential(Sp.differential(c)));
    });

    suite("bv operator squares to zero", all, [&](const Setting& s, std::string&) {
        CochainSpace Sp = CochainSpace::whole_group(s.G, s.F, Kind::HochschildKG);
        Cochain c = random_cochain(Sp, 1 + static_cast<int>(rng() % 3), rng);
        return Sp.is_zero(delta(Sp, delta(Sp, c)));
    });

    suite("bv operator preserves the class components", all,
          [&](const Setting& s, std::string&) {
              CochainSpace Sp = CochainSpace::whole_group(s.G, s.F, Kind::HochschildKG);
              Cochain c = random_cochain(Sp, 1 + static_cast<int>(rng() % 2), rng);
              int x = s.cd.reps[rng() % s.cd.reps.size()];
              return in_component(Sp, s.cd, delta(Sp, component_project(Sp, s.cd, c, x)), x);
          });

    suite("decomposition intertwines the bv operator", all,
          [&](const Setting& s, std::string&) {
              CochainSpace Sp = CochainSpace::whole_group(s.G, s.F, Kind::HochschildKG);
              Cochain c = random_cochain(Sp, 1 + static_cast<int>(rng() % 2), rng);
              DecomposedClassFamily lhs = decompose_family(Sp, s.cd, delta(Sp, c));
              DecomposedClassFamily rhs =
                  delta_hat_family(s.G, s.F, s.cd, decompose_family(Sp, s.cd, c));
              return family_is_zero(s.G, s.F, s.cd, family_sub(s.G, s.F, s.cd, lhs, rhs));
          });

    suite("decomposition inverts recomposition", all, [&](const Setting& s, std::string&) {
        CochainSpace Sp = CochainSpace::whole_group(s.G, s.F, Kind::HochschildKG);
        int x = s.cd.reps[rng() % s.cd.reps.size()];
        CochainSpace Hx = component_space(s.G, s.F, s.cd, x);
        Cochain psi = random_cochain(Hx, static_cast<int>(rng() % 3), rng);
        Cochain back = recompose(Sp, s.cd, ComponentCochain{x, psi});
        return decompose(Sp, s.cd, back, x).psi.values == psi.values;
    });

    suite("class projections resolve the identity", all, [&](const Setting& s, std::string&) {
        CochainSpace Sp = CochainSpace::whole_group(s.G, s.F, Kind::HochschildKG);
        Cochain c = random_cochain(Sp, static_cast<int>(rng() % 3), rng);
        Cochain sum = Sp.zero_cochain(c.degree);
        for (int x : s.cd.reps) sum = Sp.add(sum, component_project(Sp, s.cd, c, x));
        return Sp.is_zero(Sp.sub(sum, c));
    });

    suite("cup product is associative", all, [&](const Setting& s, std::string&) {
        CochainSpace Sp = CochainSpace::whole_group(s.G, s.F, kinds[rng() % 2]);
        Cochain f = random_cochain(Sp, static_cast<int>(rng() % 2), rng);
        Cochain g = random_cochain(Sp, static_cast<int>(rng() % 2), rng);
        Cochain h = random_cochain(Sp, static_cast<int>(rng() % 2), rng);
        return Sp.is_zero(
            Sp.sub(cup(Sp, cup(Sp, f, g), h), cup(Sp, f, cup(Sp, g, h))));
    });

    suite("bracket is graded antisymmetric", all, [&](const Setting& s, std::string&) {
        CochainSpace Sp = CochainSpace::whole_group(s.G, s.F, Kind::HochschildKG);
        int n = 1 + static_cast<int>(rng() % 2), m = 1 + static_cast<int>(rng() % 2);
        Cochain f = random_cochain(Sp, n, rng), g = random_cochain(Sp, m, rng);
        Scalar sgn = s.F.neg(s.F.sign(static_cast<long>(n - 1) * (m - 1)));
        return Sp.is_zero(Sp.sub(bracket(Sp, f, g), Sp.scale(sgn, bracket(Sp, g, f))));
    });

    suite("bracket through the decomposition agrees in cohomology", all,
          [&](const Setting& s, std::string&) {
              CochainSpace Sp = CochainSpace::whole_group(s.G, s.F, Kind::HochschildKG);
              int n = 1 + static_cast<int>(rng() % 2), m = n == 2 ? 1 : 1 + static_cast<int>(rng() % 2);
              Cochain f = random_cocycle(s, Sp, n), g = random_cocycle(s, Sp, m);
              DecomposedClassFamily via_bv =
                  bracket_via_bv(s.G, s.F, s.cd, decompose_family(Sp, s.cd, f), n,
                                 decompose_family(Sp, s.cd, g), m);
              DecomposedClassFamily direct =
                  decompose_family(Sp, s.cd, bracket(Sp, f, g));
              return family_cohomologous(s.G, s.F, s.cd, via_bv, direct);
          });

    suite("seven-term relation leaves a coboundary", all, [&](const Setting& s, std::string&) {
        CochainSpace Sp = CochainSpace::whole_group(s.G, s.F, Kind::HochschildKG);
        DecomposedClassFamily fa = decompose_family(Sp, s.cd, random_cocycle(s, Sp, 1));
        DecomposedClassFamily fb = decompose_family(Sp, s.cd, random_cocycle(s, Sp, 1));
        DecomposedClassFamily fc = decompose_family(Sp, s.cd, random_cocycle(s, Sp, 1));
        return family_is_coboundary(
            s.G, s.F, s.cd, seven_term_residual(s.G, s.F, s.cd, fa, 1, fb, 1, fc, 1));
    });

    run(out, 6, "seven-term spot check on (X1,X1,C1)", [&](std::string&) {
        return family_is_coboundary(
            G, F, cd, seven_term_residual(G, F, cd, gX1.fam, 1, gX1.fam, 1, gC1.fam, 0));
    });
    run(out, 6, "seven-term identity degenerates on degree-0 triples", [&](std::string&) {
        return family_is_zero(
            G, F, cd, seven_term_residual(G, F, cd, gC1.fam, 0, gC2.fam, 0, gC1.fam, 0));
    });

    suite("componentwise bv operator on commuting fixtures", abelian,
          [&](const Setting& s, std::string& w) {
              CochainSpace Sp = CochainSpace::whole_group(s.G, s.F, Kind::HochschildKG);
              int n = 1 + static_cast<int>(rng() % 2);
              Cochain phi = random_cochain(Sp, n, rng);
              DecomposedClassFamily dfam = decompose_family(Sp, s.cd, delta(Sp, phi));
              DecomposedClassFamily pfam = decompose_family(Sp, s.cd, phi);
              for (int x : s.cd.reps) {
                  CochainSpace Hx = component_space(s.G, s.F, s.cd, x);
                  const Cochain& lhs = dfam.at(x);
                  const Cochain& psi = pfam.at(x);
                  for (long rk = 0; rk < Hx.tuple_count(n - 1); ++rk) {
                      std::vector<int> T = Hx.unrank_tuple(n - 1, rk);
                      int q = s.G.mult(s.G.inv(s.G.product(T)), s.G.inv(x));
                      Scalar acc = 0;
                      for (int i = 1; i <= n; ++i) {
                          std::vector<int> cyc(T.begin() + (i - 1), T.end());
                          cyc.push_back(q);
                          cyc.insert(cyc.end(), T.begin(), T.begin() + (i - 1));
                          acc = s.F.add(acc,
                                        s.F.mul(s.F.sign(static_cast<long>(i) * (n - 1)),
                                                Hx.eval_scalar(psi, cyc)));
                      }
                      if (lhs.values[static_cast<size_t>(rk)] != acc) {
                          w = "component " + std::to_string(x) + " at tuple " +
                              std::to_string(rk);
                          return false;
                      }
                  }
              }
              return true;
          });

    suite("embedded group cochains compose through the brace", all,
          [&](const Setting& s, std::string&) {
              CochainSpace Sp = CochainSpace::whole_group(s.G, s.F, Kind::HochschildKG);
              CochainSpace Tp = CochainSpace::whole_group(s.G, s.F, Kind::GroupTrivial);
              int n = 1 + static_cast<int>(rng() % 2), m = 1 + static_cast<int>(rng() % 2);
              int slot = 1 + static_cast<int>(rng() % n);
              Cochain f = random_cochain(Tp, n, rng), g = random_cochain(Tp, m, rng);
              // scalar composition: collapse a block through its product
              Cochain fg = Tp.zero_cochain(n + m - 1);
              for (long rk = 0; rk < Tp.tuple_count(n + m - 1); ++rk) {
                  std::vector<int> T = Tp.unrank_tuple(n + m - 1, rk);
                  std::vector<int> block(T.begin() + (slot - 1), T.begin() + (slot - 1) + m);
                  std::vector<int> ft(T.begin(), T.begin() + (slot - 1));
                  ft.push_back(s.G.product(block));
                  ft.insert(ft.end(), T.begin() + (slot - 1) + m, T.end());
                  fg.values[static_cast<size_t>(rk)] =
                      s.F.mul(Tp.eval_scalar(f, ft), Tp.eval_scalar(g, block));
              }
              Cochain lhs = brace_composition(Sp, embed_group_cochain(Sp, s.cd, f),
                                              embed_group_cochain(Sp, s.cd, g), slot);
              return Sp.is_zero(Sp.sub(lhs, embed_group_cochain(Sp, s.cd, fg)));
          });

    suite("realization bridge by the inversion twist", all,
          [&](const Setting& s, std::string& w) {
              CochainSpace Sp = CochainSpace::whole_group(s.G, s.F, Kind::HochschildKG);
              const GroupAlgebra& Ap = Sp.algebra();
              int n = 1 + static_cast<int>(rng() % 2);
              Cochain phi = random_cochain(Sp, n, rng);
              int x = s.cd.reps[rng() % s.cd.reps.size()];
              CochainSpace Hx = component_space(s.G, s.F, s.cd, x);
              Scalar sgn = s.F.sign(static_cast<long>(n) * (n + 1) / 2);
              ComponentCochain lhs = decompose_first(Sp, s.cd, phi, x);
              for (long rk = 0; rk < Hx.tuple_count(n); ++rk) {
                  std::vector<int> T = Hx.unrank_tuple(n, rk);
                  std::vector<int> rev(T.rbegin(), T.rend());
                  for (int& g : rev) g = s.G.inv(g);
                  int P = s.G.product(T);
                  AlgebraElement om =
                      Ap.right_mul(Sp.eval(phi, rev), s.G.inv(s.G.product(rev)));
                  AlgebraElement tw = Ap.left_mul(P, Ap.right_mul(om, s.G.inv(P)));
                  if (lhs.psi.values[static_cast<size_t>(rk)] !=
                      s.F.mul(sgn, tw[static_cast<size_t>(x)])) {
                      w = "component " + std::to_string(x) + " at tuple " +
                          std::to_string(rk);
                      return false;
                  }
              }
              return true;
          });
}

}  // namespace

std::vector<long> cohomology_dims(const CochainSpace& S, int top) {
    std::vector<long> out;
    long prev = 0;
    for (int n = 0; n <= top; ++n) {
        long rk = rank(S.differential_matrix(n));
        out.push_back(S.dim(n) - rk - prev);
        prev = rk;
    }
    return out;
}

std::vector<CheckResult> verify_s3_report(const VerifyOptions& opt) {
    PrimeField probe(opt.prime);  // rejects non-primes up front
    (void)probe;
    std::vector<CheckResult> out;
    if (opt.prime == 3)
        run_full(opt, out);
    else if (6 % opt.prime != 0)
        run_semisimple(opt, out);
    else
        throw BadInput("the full order-6 suite runs mod 3; other primes must not divide 6");
    return out;
}

bool all_passed(const std::vector<CheckResult>& report) {
    return std::all_of(report.begin(), report.end(),
                       [](const CheckResult& r) { return r.pass; });
}

}  // namespace bvcoho
