#include <doctest.h>

#include "bvcoho/bv.hpp"
#include "helpers.hpp"

using namespace bvcoho;

namespace {

struct S3Fixture {
    FiniteGroup G = builtin_group("S3");
    PrimeField F{3};
    ConjugacyData cd = conjugacy_data(G);
    CochainSpace S = CochainSpace::whole_group(G, F, Kind::HochschildKG);
    static constexpr int e = 0, a = 1, b = 2, a2 = 3;

    DecomposedClassFamily cocycle_family(int n, std::mt19937& rng) {
        return decompose_family(S, cd, random_cocycle(S, n, rng));
    }
};

} // namespace

TEST_CASE_FIXTURE(S3Fixture, "cup is associative and unital") {
    std::mt19937 rng(73);
    Cochain one = S.zero_cochain(0);
    one.values[e] = 1;
    for (int n = 0; n <= 2; ++n) {
        Cochain f = random_cochain(S, n, rng);
        CHECK(S.is_zero(S.sub(cup(S, one, f), f)));
        CHECK(S.is_zero(S.sub(cup(S, f, one), f)));
    }
    Cochain f = random_cochain(S, 1, rng);
    Cochain g = random_cochain(S, 1, rng);
    Cochain h = random_cochain(S, 2, rng);
    CHECK(S.is_zero(S.sub(cup(S, cup(S, f, g), h), cup(S, f, cup(S, g, h)))));

    CochainSpace T = CochainSpace::whole_group(G, F, Kind::GroupTrivial);
    Cochain tf = random_cochain(T, 2, rng), tg = random_cochain(T, 3, rng),
            th = random_cochain(T, 2, rng);
    CHECK(T.is_zero(T.sub(cup(T, cup(T, tf, tg), th), cup(T, tf, cup(T, tg, th)))));
}

TEST_CASE_FIXTURE(S3Fixture, "cup is a cochain-level derivation target") {
    // d(f u g) = df u g + (-1)^n f u dg, exactly
    std::mt19937 rng(79);
    for (auto [n, m] : std::vector<std::pair<int, int>>{{0, 1}, {1, 1}, {1, 2}, {2, 1}}) {
        Cochain f = random_cochain(S, n, rng);
        Cochain g = random_cochain(S, m, rng);
        Cochain lhs = S.differential(cup(S, f, g));
        Cochain rhs = S.add(cup(S, S.differential(f), g),
                            S.scale(F.sign(n), cup(S, f, S.differential(g))));
        CHECK(S.is_zero(S.sub(lhs, rhs)));
    }
}

TEST_CASE_FIXTURE(S3Fixture, "cup is graded commutative up to coboundary on cocycles") {
    std::mt19937 rng(83);
    for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}}) {
        Cochain f = random_cocycle(S, n, rng);
        Cochain g = random_cocycle(S, m, rng);
        Cochain comm = S.sub(cup(S, f, g), S.scale(F.sign(n * m), cup(S, g, f)));
        CHECK(S.is_cocycle(comm));
        CHECK(S.is_coboundary(comm));
    }
}

TEST_CASE_FIXTURE(S3Fixture, "bracket degree bookkeeping and antisymmetry") {
    std::mt19937 rng(89);
    for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}}) {
        Cochain f = random_cochain(S, n, rng);
        Cochain g = random_cochain(S, m, rng);
        Cochain fg = bracket(S, f, g);
        CHECK(fg.degree == n + m - 1);
        Cochain gf = bracket(S, g, f);
        Cochain anti = S.add(fg, S.scale(F.sign((n - 1) * (m - 1)), gf));
        CHECK(S.is_zero(anti));
    }
    CochainSpace T = CochainSpace::whole_group(G, F, Kind::GroupTrivial);
    Cochain t = random_cochain(T, 1, rng);
    CHECK_THROWS_AS(bracket(T, t, t), KindMismatch);
}

TEST_CASE_FIXTURE(S3Fixture, "bracket with a zero-cochain inserts the algebra element") {
    std::mt19937 rng(97);
    Cochain f = random_cochain(S, 1, rng);
    Cochain c = S.zero_cochain(0);
    c.values[a] = 1;
    c.values[b] = 2;
    Cochain br = bracket(S, f, c);
    REQUIRE(br.degree == 0);
    AlgebraElement want = S.algebra().add(S.eval(f, {a}), S.algebra().scale(2, S.eval(f, {b})));
    CHECK(br.values == want);
}

TEST_CASE_FIXTURE(S3Fixture, "graded Jacobi identity holds exactly") {
    std::mt19937 rng(101);
    for (auto [n, m, l] : std::vector<std::tuple<int, int, int>>{{1, 1, 1}, {2, 1, 1}}) {
        Cochain f = random_cochain(S, n, rng);
        Cochain g = random_cochain(S, m, rng);
        Cochain h = random_cochain(S, l, rng);
        // with these degrees every shifted sign is +1
        Cochain sum = bracket(S, bracket(S, f, g), h);
        sum = S.add(sum, bracket(S, bracket(S, g, h), f));
        sum = S.add(sum, bracket(S, bracket(S, h, f), g));
        CHECK(S.is_zero(sum));
    }
}

TEST_CASE_FIXTURE(S3Fixture, "bracket is compatible with the differential") {
    // right-sided Leibniz rule: d[f,g] = (-1)^{m-1} [df,g] + [f,dg], exactly
    std::mt19937 rng(103);
    for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}}) {
        Cochain f = random_cochain(S, n, rng);
        Cochain g = random_cochain(S, m, rng);
        Cochain lhs = S.differential(bracket(S, f, g));
        Cochain rhs = S.add(S.scale(F.sign(m - 1), bracket(S, S.differential(f), g)),
                            bracket(S, f, S.differential(g)));
        CHECK(S.is_zero(S.sub(lhs, rhs)));
    }
}

TEST_CASE_FIXTURE(S3Fixture, "bracket of cocycles is a cocycle") {
    std::mt19937 rng(107);
    Cochain f = random_cocycle(S, 1, rng);
    Cochain g = random_cocycle(S, 2, rng);
    CHECK(S.is_cocycle(bracket(S, f, g)));
    CHECK(S.is_cocycle(cup(S, f, g)));
}

TEST_CASE("delta in low degree on a cyclic group") {
    FiniteGroup G = builtin_group("C3");
    PrimeField F(3);
    CochainSpace S = CochainSpace::whole_group(G, F, Kind::HochschildKG);
    // degree 1 -> 0: delta(phi) = sum_g <phi(g),1> g^{-1}
    Cochain phi = S.zero_cochain(1);
    S.set_value(phi, {1}, {2, 0, 1}); // phi(a) = 2*1 + a^2
    S.set_value(phi, {2}, {1, 1, 0}); // phi(a^2) = 1 + a
    Cochain d = delta(S, phi);
    REQUIRE(d.degree == 0);
    // <phi(a),1> a^{-1} + <phi(a^2),1> a = 2 a^2 + a
    CHECK(d.values == std::vector<Scalar>{0, 1, 2});

    Cochain c0 = S.zero_cochain(0);
    c0.values[1] = 1;
    CHECK(S.is_zero(delta(S, c0)));
}

TEST_CASE_FIXTURE(S3Fixture, "delta squares to zero and respects components") {
    std::mt19937 rng(109);
    for (int n = 1; n <= 3; ++n) {
        Cochain phi = random_cochain(S, n, rng);
        CHECK(S.is_zero(delta(S, delta(S, phi))));
    }
    for (int x : cd.reps) {
        CochainSpace H = component_space(G, F, cd, x);
        Cochain psi = random_cochain(H, 2, rng);
        Cochain phi = recompose(S, cd, ComponentCochain{x, psi});
        CHECK(in_component(S, cd, delta(S, phi), x));
    }
    CochainSpace T = CochainSpace::whole_group(G, F, Kind::GroupTrivial);
    Cochain t = T.zero_cochain(1);
    CHECK_THROWS_AS(delta(T, t), KindMismatch);
}

TEST_CASE_FIXTURE(S3Fixture, "delta anticommutes with the differential") {
    std::mt19937 rng(111);
    for (int n = 1; n <= 3; ++n) {
        Cochain phi = random_cochain(S, n, rng);
        CHECK(S.is_zero(S.add(S.differential(delta(S, phi)), delta(S, S.differential(phi)))));
    }
}

TEST_CASE_FIXTURE(S3Fixture, "delta commutes with decomposition") {
    std::mt19937 rng(113);
    for (int n = 1; n <= 3; ++n) {
        Cochain phi = random_cochain(S, n, rng);
        DecomposedClassFamily lhs = decompose_family(S, cd, delta(S, phi));
        DecomposedClassFamily rhs = delta_hat_family(G, F, cd, decompose_family(S, cd, phi));
        CHECK(family_equal(G, F, cd, lhs, rhs));
    }
}

TEST_CASE_FIXTURE(S3Fixture, "component delta on the cyclic centralizer") {
    CochainSpace H = component_space(G, F, cd, a); // <a> with trivial coefficients
    // w1(a^i) = i
    Cochain w1 = H.zero_cochain(1);
    H.set_scalar(w1, {a}, 1);
    H.set_scalar(w1, {a2}, 2);
    Cochain d1 = delta_hat(H, w1, a);
    REQUIRE(d1.degree == 0);
    CHECK(d1.values == std::vector<Scalar>{2}); // -1

    // w2(a^i,a^j) = carry of i+j
    Cochain w2 = H.zero_cochain(2);
    H.set_scalar(w2, {a, a2}, 1);
    H.set_scalar(w2, {a2, a}, 1);
    H.set_scalar(w2, {a2, a2}, 1);
    CHECK(H.is_cocycle(w2));
    CHECK(H.is_zero(delta_hat(H, w2, a)));

    // the identity insertion that kills the terms must centralize the element
    CochainSpace Hb = component_space(G, F, cd, b);
    Cochain t = Hb.zero_cochain(1);
    CHECK_THROWS_AS(delta_hat(Hb, t, a), KindMismatch);

    // square: delta(recompose) decomposed equals delta_hat directly
    Cochain phi = recompose(S, cd, ComponentCochain{a, w1});
    ComponentCochain back = decompose(S, cd, delta(S, phi), a);
    CHECK(back.psi.values == d1.values);
}

TEST_CASE_FIXTURE(S3Fixture, "delta_hat squares to zero on families") {
    std::mt19937 rng(127);
    for (int n = 2; n <= 3; ++n) {
        Cochain phi = random_cochain(S, n, rng);
        DecomposedClassFamily fam = decompose_family(S, cd, phi);
        DecomposedClassFamily dd = delta_hat_family(G, F, cd, delta_hat_family(G, F, cd, fam));
        CHECK(family_is_zero(G, F, cd, dd));
    }
}

TEST_CASE_FIXTURE(S3Fixture, "decomposed cup agrees with the composite route") {
    std::mt19937 rng(131);
    for (auto [n, m] : std::vector<std::pair<int, int>>{{0, 0}, {0, 2}, {1, 1}}) {
        for (int x : cd.reps)
            for (int y : cd.reps) {
                CochainSpace Hx = component_space(G, F, cd, x);
                CochainSpace Hy = component_space(G, F, cd, y);
                ComponentCochain px{x, random_cochain(Hx, n, rng)};
                ComponentCochain py{y, random_cochain(Hy, m, rng)};
                DecomposedClassFamily direct = cup_decomposed(G, F, cd, px, py);
                Cochain full = cup(S, recompose(S, cd, px), recompose(S, cd, py));
                CHECK(family_equal(G, F, cd, direct, decompose_family(S, cd, full)));
            }
    }
}

TEST_CASE_FIXTURE(S3Fixture, "decomposed cup in the companion realization") {
    std::mt19937 rng(137);
    for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 1}, {0, 2}}) {
        for (int x : cd.reps)
            for (int y : cd.reps) {
                CochainSpace Hx = component_space(G, F, cd, x);
                CochainSpace Hy = component_space(G, F, cd, y);
                ComponentCochain px{x, random_cochain(Hx, n, rng)};
                ComponentCochain py{y, random_cochain(Hy, m, rng)};
                DecomposedClassFamily direct = cup_decomposed_first(G, F, cd, px, py);
                Cochain full =
                    cup(S, recompose_first(S, cd, px), recompose_first(S, cd, py));
                CHECK(family_equal(G, F, cd, direct, decompose_first_family(S, cd, full)));
            }
    }
}

TEST_CASE_FIXTURE(S3Fixture, "class sum squares decompose as expected") {
    CochainSpace Ha = component_space(G, F, cd, a);
    Cochain onea = Ha.zero_cochain(0);
    onea.values[0] = 1;
    // (a + a^2)^2 = 2 + a + a^2
    DecomposedClassFamily prod =
        family_cup(G, F, cd, DecomposedClassFamily{{a, onea}}, DecomposedClassFamily{{a, onea}});
    REQUIRE(prod.count(e) == 1);
    REQUIRE(prod.count(a) == 1);
    CHECK(prod.at(e).values == std::vector<Scalar>{2});
    CHECK(prod.at(a).values == std::vector<Scalar>{1});
    CHECK(prod.count(b) == 0);
}

TEST_CASE_FIXTURE(S3Fixture, "both bracket routes agree in cohomology") {
    std::mt19937 rng(139);
    for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}}) {
        Cochain f = random_cocycle(S, n, rng);
        Cochain g = random_cocycle(S, m, rng);
        DecomposedClassFamily ff = decompose_family(S, cd, f);
        DecomposedClassFamily fg = decompose_family(S, cd, g);
        DecomposedClassFamily via_bv = bracket_via_bv(G, F, cd, ff, n, fg, m);
        DecomposedClassFamily direct = decompose_family(S, cd, bracket(S, f, g));
        CHECK(family_cohomologous(G, F, cd, via_bv, direct));
    }
}

TEST_CASE_FIXTURE(S3Fixture, "seven-term identity holds up to coboundary") {
    std::mt19937 rng(149);
    DecomposedClassFamily fa = cocycle_family(1, rng);
    DecomposedClassFamily fb = cocycle_family(1, rng);
    DecomposedClassFamily fc = cocycle_family(1, rng);
    DecomposedClassFamily res = seven_term_residual(G, F, cd, fa, 1, fb, 1, fc, 1);
    CHECK(family_is_coboundary(G, F, cd, res));
}

TEST_CASE("decomposed operations on an abelian group act coordinatewise") {
    FiniteGroup G = builtin_group("C4");
    PrimeField F(2);
    ConjugacyData cd = conjugacy_data(G);
    CochainSpace S = CochainSpace::whole_group(G, F, Kind::HochschildKG);
    std::mt19937 rng(151);
    for (int n = 1; n <= 2; ++n) {
        Cochain phi = random_cochain(S, n, rng);
        DecomposedClassFamily lhs = decompose_family(S, cd, delta(S, phi));
        DecomposedClassFamily rhs = delta_hat_family(G, F, cd, decompose_family(S, cd, phi));
        CHECK(family_equal(G, F, cd, lhs, rhs));
    }
}
