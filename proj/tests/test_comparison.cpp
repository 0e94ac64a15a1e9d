#include <random>
#include <vector>

#include "bvcoho/comparison.hpp"
#include "bvcoho/errors.hpp"
#include "bvcoho/group.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "bvcoho/reference_tables.hpp"

using namespace bvcoho;

namespace {

const std::vector<Scalar> one = {1};

} // namespace

TEST_CASE("cyclic minimal resolution satisfies its homotopy identities") {
    FiniteGroup C3 = builtin_group("C3");
    PrimeField F(3);
    auto [R, t] = cyclic_minimal_resolution(C3, F, 6);
    CHECK(R.depth() == 6);
    CHECK(R.marker_count(4) == 1);

    HomotopyReport rep = verify_homotopy(R, t);
    CHECK_MESSAGE(rep.ok, rep.witness);

    const GroupAlgebra& kG = R.algebra();
    TermElement d1 = R.apply_diff(1, R.generator(1, 0));
    CHECK(d1[0] == kG.sub(kG.basis(1), kG.basis(0)));
    TermElement d2 = R.apply_diff(2, R.generator(2, 0));
    CHECK(d2[0] == AlgebraElement(3, 1));
    CHECK(R.apply_aug(R.generator(0, 0)) == 1);

    CHECK_THROWS_AS(cyclic_minimal_resolution(C3, PrimeField(2), 3), NotModular);
    // wrong power presentation: the symmetric group is not a power walk
    CHECK_THROWS_AS(cyclic_minimal_resolution(builtin_group("S3"), F, 3), BadInput);

    // characteristic-2 collapse: a-1 = a+1, so both differentials coincide
    FiniteGroup C2 = cyclic_group(2);
    PrimeField F2(2);
    auto [R2, t2] = cyclic_minimal_resolution(C2, F2, 4);
    CHECK(verify_homotopy(R2, t2).ok);
    CHECK(R2.apply_diff(1, R2.generator(1, 0)) == R2.apply_diff(2, R2.generator(2, 0)));

    // longer cycle in dividing characteristic
    FiniteGroup C4 = cyclic_group(4);
    auto [R4, t4] = cyclic_minimal_resolution(C4, F2, 5);
    CHECK(verify_homotopy(R4, t4).ok);
}

TEST_CASE("corrupted homotopy tables are reported with a location") {
    FiniteGroup C3 = builtin_group("C3");
    PrimeField F(3);
    auto [R, t] = cyclic_minimal_resolution(C3, F, 4);

    TableHomotopy bad = t;
    bad.table[1][0][2] = R.zero(2);
    HomotopyReport rep = verify_homotopy(R, bad);
    CHECK_FALSE(rep.ok);
    CHECK(rep.degree == 1);
    CHECK_FALSE(rep.witness.empty());

    TableHomotopy bad_unit = t;
    bad_unit.at_unit = R.zero(0);
    CHECK_FALSE(verify_homotopy(R, bad_unit).ok);
}

TEST_CASE("bar complex differentials, homotopy and ranking") {
    FiniteGroup C3 = builtin_group("C3");
    PrimeField F(3);
    BarResolution bar(C3, F, 4);
    CHECK(bar.marker_count(0) == 1);
    CHECK(bar.marker_count(3) == 8);

    HomotopyReport rep = verify_homotopy(bar);
    CHECK_MESSAGE(rep.ok, rep.witness);

    for (long r = 0; r < bar.marker_count(3); ++r)
        CHECK(bar.rank_tuple(bar.unrank_tuple(3, r)) == r);

    for (int n = 2; n <= 4; ++n)
        for (long r = 0; r < bar.marker_count(n); ++r)
            CHECK(bar.is_zero(bar.apply_diff(n - 1, bar.apply_diff(n, bar.generator(n, r)))));
    for (long r = 0; r < bar.marker_count(1); ++r)
        CHECK(bar.apply_aug(bar.apply_diff(1, bar.generator(1, r))) == 0);

    FiniteGroup S3 = builtin_group("S3");
    BarResolution sbar(S3, F, 3);
    CHECK(verify_homotopy(sbar).ok);
    CHECK_THROWS_AS(BarResolution(S3, F, 15), TooLarge);
}

TEST_CASE("cyclic comparison maps match the frozen tables") {
    FiniteGroup C3 = builtin_group("C3");
    PrimeField F(3);
    auto [R, t] = cyclic_minimal_resolution(C3, F, 4);
    BarResolution bar(C3, F, 4);

    ChainMapToBar into = build_comparison(R, bar);
    std::string msg = reftab::check_cyclic_to_bar(R, bar, into);
    CHECK_MESSAGE(msg.empty(), msg);

    ChainMapFromBar onto = build_comparison(bar, R, t);
    std::vector<std::string> defects;
    msg = reftab::check_cyclic_from_bar(bar, R, onto, &defects);
    CHECK_MESSAGE(msg.empty(), msg);
    CHECK(defects.size() == 8);

    // tampering with the homotopy breaks the verified recursion
    TableHomotopy bad = t;
    bad.table[1][0][2] = R.zero(2);
    CHECK_THROWS_AS(build_comparison(bar, R, bad), NotChainMap);
}

TEST_CASE("self comparison induces the identity on dual coordinates") {
    PrimeField F(3);
    {
        FiniteGroup C3 = builtin_group("C3");
        auto [R, t] = cyclic_minimal_resolution(C3, F, 5);
        ChainMapBased f = build_comparison(R, R, t);
        for (int n = 0; n <= 5; ++n) CHECK(R.form_values(n, f.images[n][0]) == one);
    }
    {
        FiniteGroup S3 = builtin_group("S3");
        auto [R, t] = s3_minimal_resolution(S3, F, 6);
        ChainMapBased f = build_comparison(R, R, t);
        for (int n = 0; n <= 6; ++n) CHECK(R.form_values(n, f.images[n][0]) == one);
    }
}

TEST_CASE("transfer and restrict invert each other on dual coordinates") {
    FiniteGroup C3 = builtin_group("C3");
    PrimeField F(3);
    CochainSpace S = CochainSpace::whole_group(C3, F, Kind::GroupTrivial);
    auto [R, t] = cyclic_minimal_resolution(C3, F, 5);
    BarResolution bar(C3, F, 5);
    ChainMapToBar into = build_comparison(R, bar);
    ChainMapFromBar onto = build_comparison(bar, R, t);

    for (int n = 0; n <= 4; ++n) {
        Cochain c = transfer_cochain(S, one, onto, n, R);
        CHECK(S.is_cocycle(c));
        CHECK(restrict_cochain(S, c, into, n, R, bar) == one);
    }

    Cochain w1 = transfer_cochain(S, one, onto, 1, R);
    CHECK(S.eval_scalar(w1, {1}) == 1);
    CHECK(S.eval_scalar(w1, {2}) == 2);
    Cochain w2 = transfer_cochain(S, one, onto, 2, R);
    CHECK(S.eval_scalar(w2, {1, 1}) == 0);
    CHECK(S.eval_scalar(w2, {1, 2}) == 1);
    CHECK(S.eval_scalar(w2, {2, 1}) == 1);
    CHECK(S.eval_scalar(w2, {2, 2}) == 1);

    CHECK_THROWS_AS(transfer_cochain(S, one, onto, 6, R), DegreeMismatch);
    CHECK_THROWS_AS(transfer_cochain(S, {1, 0}, onto, 3, R), DimensionMismatch);
    Cochain c3 = transfer_cochain(S, one, onto, 3, R);
    CHECK_THROWS_AS(restrict_cochain(S, c3, into, 6, R, bar), DegreeMismatch);
}

TEST_CASE("identification reads minimal dual coordinates and rejects bad input") {
    FiniteGroup C3 = builtin_group("C3");
    PrimeField F(3);
    CochainSpace S = CochainSpace::whole_group(C3, F, Kind::GroupTrivial);
    auto [R, t] = cyclic_minimal_resolution(C3, F, 5);
    BarResolution bar(C3, F, 5);
    ChainMapToBar into = build_comparison(R, bar);
    ChainMapFromBar onto = build_comparison(bar, R, t);

    Cochain w1 = transfer_cochain(S, one, onto, 1, R);
    CHECK(identify_class_minimal(S, w1, into, R, bar, 1) == one);

    std::mt19937 rng(7);
    Cochain cob = S.differential(random_cochain(S, 1, rng));
    CHECK(identify_class_minimal(S, cob, into, R, bar, 2) == std::vector<Scalar>{0});

    Cochain not_closed = S.zero_cochain(1);
    S.set_scalar(not_closed, {1}, 1);
    CHECK_FALSE(S.is_cocycle(not_closed));
    CHECK_THROWS_AS(identify_class_minimal(S, not_closed, into, R, bar, 1), NotACocycle);

    CHECK_THROWS_AS(identify_class_minimal(S, w1, into, R, bar, 5), DegreeMismatch);
}

TEST_CASE("identification refuses resolutions that are not minimal at the degree") {
    FiniteGroup C3 = builtin_group("C3");
    PrimeField F(3);
    GroupAlgebra kG(C3, F);
    AlgebraElement unit = kG.basis(0);
    AlgebraElement am1 = kG.sub(kG.basis(1), kG.basis(0));
    AlgebraElement norm(3, 1);
    ResolutionMarker free_marker{unit, {}};

    // rank-two degree 1 and 2 with a unit coefficient in the second
    // differential: a valid but non-minimal start of a resolution
    std::vector<std::vector<ResolutionMarker>> terms = {
        {free_marker}, {free_marker, free_marker}, {free_marker, free_marker}};
    std::vector<std::vector<std::vector<DiffEntry>>> diff(3);
    diff[1] = {{{0, am1}}, {{0, am1}}};
    diff[2] = {{{0, norm}}, {{0, unit}, {1, kG.scale(F.neg(1), unit)}}};
    BasedResolution R2(C3, F, terms, diff, {{1, 1, 1}}, {});

    BarResolution bar(C3, F, 3);
    ChainMapToBar into = build_comparison(R2, bar);

    CochainSpace S = CochainSpace::whole_group(C3, F, Kind::GroupTrivial);
    Cochain z = S.zero_cochain(1);
    S.set_scalar(z, {1}, 1);
    S.set_scalar(z, {2}, 2);
    CHECK(S.is_cocycle(z));
    CHECK_THROWS_AS(identify_class_minimal(S, z, into, R2, bar, 1), NotMinimalHere);
}

TEST_CASE("based resolution constructor validates its input") {
    FiniteGroup C3 = builtin_group("C3");
    PrimeField F(3);
    GroupAlgebra kG(C3, F);
    AlgebraElement unit = kG.basis(0);
    AlgebraElement am1 = kG.sub(kG.basis(1), kG.basis(0));
    ResolutionMarker free_marker{unit, {}};
    std::vector<std::vector<Scalar>> aug = {{1, 1, 1}};

    // generator that is not idempotent
    CHECK_THROWS_AS(
        BasedResolution(C3, F, {{ResolutionMarker{kG.basis(1), {}}}}, {{}}, aug, {}),
        BadInput);

    // differential that does not square to zero: (a-1)^2 is the norm, not 0
    std::vector<std::vector<std::vector<DiffEntry>>> bad_diff(3);
    bad_diff[1] = {{{0, am1}}};
    bad_diff[2] = {{{0, am1}}};
    CHECK_THROWS_AS(BasedResolution(C3, F, {{free_marker}, {free_marker}, {free_marker}},
                                    bad_diff, aug, {}),
                    BadInput);

    // dependent explicit basis
    ResolutionMarker dep{unit, {unit, kG.basis(1), kG.add(unit, kG.basis(1))}};
    CHECK_THROWS_AS(BasedResolution(C3, F, {{dep}}, {{}}, aug, {}), BadInput);
}

TEST_CASE("symmetric fixture resolution verifies and matches its tables") {
    FiniteGroup G = builtin_group("S3");
    PrimeField F(3);
    auto [R, t] = s3_minimal_resolution(G, F);
    CHECK(R.depth() == 9);
    CHECK(R.marker_count(3) == 1);
    CHECK(R.basis_size(0, 0) == 3);

    HomotopyReport rep = verify_homotopy(R, t);
    CHECK_MESSAGE(rep.ok, rep.witness);

    CHECK_THROWS_AS(s3_minimal_resolution(G, PrimeField(2), 4), NotModular);
    CHECK_THROWS_AS(s3_minimal_resolution(builtin_group("C4"), F, 4), BadInput);
    // order six but the wrong shape
    CHECK_THROWS_AS(s3_minimal_resolution(cyclic_group(6), F, 4), BadInput);

    BarResolution bar(G, F, 5);
    ChainMapToBar into = build_comparison(R, bar);
    std::string msg = reftab::check_s3_to_bar(R, bar, into, 5);
    CHECK_MESSAGE(msg.empty(), msg);

    ChainMapFromBar onto = build_comparison(bar, R, t);
    msg = reftab::check_s3_from_bar(bar, R, onto, 5);
    CHECK_MESSAGE(msg.empty(), msg);

    CochainSpace S = CochainSpace::whole_group(G, F, Kind::GroupTrivial);
    Cochain c0 = transfer_cochain(S, one, onto, 0, R);
    CHECK(restrict_cochain(S, c0, into, 0, R, bar) == one);
    Cochain u = transfer_cochain(S, one, onto, 3, R);
    Cochain v = transfer_cochain(S, one, onto, 4, R);
    CHECK(S.is_cocycle(u));
    CHECK(S.is_cocycle(v));
    CHECK_FALSE(S.is_coboundary(u));
    CHECK_FALSE(S.is_coboundary(v));
    CHECK(identify_class_minimal(S, u, into, R, bar, 3) == one);
    CHECK(identify_class_minimal(S, v, into, R, bar, 4) == one);
}

TEST_CASE("chain evaluation acts through the augmentation") {
    FiniteGroup C3 = builtin_group("C3");
    PrimeField F(3);
    CochainSpace S = CochainSpace::whole_group(C3, F, Kind::GroupTrivial);
    BarResolution bar(C3, F, 3);
    const GroupAlgebra& kG = bar.algebra();

    std::mt19937 rng(11);
    Cochain c = random_cochain(S, 2, rng);
    AlgebraElement c0 = {1, 2, 2}, v = {0, 1, 1}, w = {0, 2, 1};
    Scalar want = 0;
    for (int g = 1; g < 3; ++g)
        for (int h = 1; h < 3; ++h) {
            Scalar coef = F.mul(kG.coeffsum(c0), F.mul(v[static_cast<size_t>(g)],
                                                       w[static_cast<size_t>(h)]));
            want = F.add(want, F.mul(coef, S.eval_scalar(c, {g, h})));
        }
    CHECK(evaluate_on_chain(S, c, bar, bar.tensor({c0, v, w})) == want);

    // settings that do not describe whole-group trivial cochains are refused
    CochainSpace Sc = CochainSpace::whole_group(C3, F, Kind::GroupConjugation);
    CHECK_THROWS_AS(evaluate_on_chain(Sc, Sc.zero_cochain(1), bar, bar.generator(1, 0)),
                    KindMismatch);
    FiniteGroup S3 = builtin_group("S3");
    CochainSpace Ssub(S3, F, Kind::GroupTrivial, {0, 1, 3});
    BarResolution sbar(S3, F, 2);
    CHECK_THROWS_AS(evaluate_on_chain(Ssub, Ssub.zero_cochain(1), sbar, sbar.generator(1, 0)),
                    KindMismatch);

    auto [R, t] = cyclic_minimal_resolution(C3, F, 3);
    CHECK_THROWS_AS(build_comparison(R, sbar), KindMismatch);
}
