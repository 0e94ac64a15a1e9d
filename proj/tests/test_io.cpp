#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"

#include "bvcoho/errors.hpp"
#include "bvcoho/io.hpp"
#include "helpers.hpp"

using namespace bvcoho;

TEST_CASE("cochain files round trip bit-identically") {
    FiniteGroup G = builtin_group("S3");
    PrimeField F(3);
    ConjugacyData cd = conjugacy_data(G);
    std::mt19937 rng(211);

    auto roundtrip = [&](const CochainSpace& S, const Cochain& c, int rep) {
        StoredCochain st = store_cochain(S, c, "S3", rep);
        std::string first = to_json(st).dump(2);
        StoredCochain back = stored_cochain_from_json(json::parse(first));
        Cochain real = realize_cochain(back, space_for(back, G, F, cd));
        CHECK(S.matches(real));
        CHECK(real.values == c.values);
        CHECK(to_json(store_cochain(S, real, "S3", rep)).dump(2) == first);
    };

    CochainSpace S = CochainSpace::whole_group(G, F, Kind::HochschildKG);
    for (int n = 0; n <= 2; ++n) roundtrip(S, random_cochain(S, n, rng), -1);

    CochainSpace T = CochainSpace::whole_group(G, F, Kind::GroupTrivial);
    roundtrip(T, random_cochain(T, 3, rng), -1);

    CochainSpace H = component_space(G, F, cd, 1);
    roundtrip(H, random_cochain(H, 2, rng), 1);

    // a zero cochain stores no blocks
    StoredCochain z = store_cochain(S, S.zero_cochain(2), "S3");
    CHECK(z.values.empty());
    CHECK(realize_cochain(z, S).values == S.zero_cochain(2).values);
}

TEST_CASE("stored cochains validate their context") {
    FiniteGroup G = builtin_group("S3");
    PrimeField F(3);
    ConjugacyData cd = conjugacy_data(G);
    CochainSpace T = CochainSpace::whole_group(G, F, Kind::GroupTrivial);

    StoredCochain c;
    c.prime = 3;
    c.group = "S3";
    c.kind = Kind::GroupTrivial;
    c.degree = 1;
    c.values = {{{1}, {5}}};
    CHECK(realize_cochain(c, T).values[0] == 2);  // scalars are reduced mod p

    StoredCochain wrong_prime = c;
    wrong_prime.prime = 2;
    CHECK_THROWS_AS(realize_cochain(wrong_prime, T), KindMismatch);
    CHECK_THROWS_AS(space_for(wrong_prime, G, F, cd), KindMismatch);

    StoredCochain wrong_kind = c;
    wrong_kind.kind = Kind::HochschildKG;
    CHECK_THROWS_AS(realize_cochain(wrong_kind, T), KindMismatch);

    StoredCochain bad_block = c;
    bad_block.values = {{{1}, {1, 0}}};
    CHECK_THROWS_AS(realize_cochain(bad_block, T), DimensionMismatch);

    StoredCochain bad_len = c;
    bad_len.values = {{{1, 2}, {1}}};
    CHECK_THROWS_AS(realize_cochain(bad_len, T), DimensionMismatch);

    StoredCochain bad_tuple = c;
    bad_tuple.values = {{{0}, {1}}};
    CHECK_THROWS_AS(realize_cochain(bad_tuple, T), BadInput);

    StoredCochain comp = c;
    comp.rep = 4;  // ab is conjugate to b, not a representative
    CHECK_THROWS_AS(space_for(comp, G, F, cd), BadInput);
    comp.rep = 1;
    comp.kind = Kind::HochschildKG;
    CHECK_THROWS_AS(space_for(comp, G, F, cd), KindMismatch);

    CHECK_THROWS_AS(stored_cochain_from_json(json::parse(R"({"prime":3})")), BadInput);
    CHECK_THROWS_AS(stored_cochain_from_json(json::parse(
                        R"({"prime":3,"group":"S3","kind":"odd","degree":0,"values":[]})")),
                    BadInput);
}

TEST_CASE("family files round trip through the class decomposition") {
    FiniteGroup G = builtin_group("S3");
    PrimeField F(3);
    ConjugacyData cd = conjugacy_data(G);
    CochainSpace S = CochainSpace::whole_group(G, F, Kind::HochschildKG);
    std::mt19937 rng(223);

    Cochain phi = random_cochain(S, 2, rng);
    DecomposedClassFamily fam = decompose_family(S, cd, phi);
    StoredFamily st = store_family(G, F, cd, fam, 2, "S3");
    CHECK(st.components.size() == 3);

    std::string first = to_json(st).dump(2);
    CHECK(is_family_json(json::parse(first)));
    CHECK_FALSE(is_family_json(to_json(store_cochain(S, phi, "S3"))));

    StoredFamily back = stored_family_from_json(json::parse(first));
    DecomposedClassFamily real = realize_family(back, G, F, cd);
    CHECK(family_equal(G, F, cd, real, fam));
    CHECK(to_json(store_family(G, F, cd, real, 2, "S3")).dump(2) == first);

    StoredFamily bad = back;
    bad.components[4] = {};
    CHECK_THROWS_AS(realize_family(bad, G, F, cd), BadInput);

    CHECK_THROWS_AS(
        stored_family_from_json(json::parse(
            R"({"prime":3,"group":"S3","degree":0,"components":[[0,[]],[0,[]]]})")),
        BadInput);
}

TEST_CASE("group tables survive the file format and are validated") {
    FiniteGroup G = builtin_group("S3");
    json j = group_to_json(G);
    FiniteGroup back = group_from_json(j);
    CHECK(back.order() == 6);
    CHECK(back.name() == G.name());
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) CHECK(back.mult(a, b) == G.mult(a, b));

    json broken = j;
    broken["table"][0][0] = 1;
    CHECK_THROWS_AS(group_from_json(broken), NonGroup);
    CHECK_THROWS_AS(group_from_json(json::parse(R"({"name":"x"})")), BadInput);
}

TEST_CASE("json files are written pretty and reread exactly") {
    namespace fs = std::filesystem;
    fs::path p = fs::temp_directory_path() / "bvcoho_io_roundtrip.json";
    json j{{"degree", 1}, {"values", json::array({json::array({{1}, {2}})})}};
    write_json_file(p.string(), j);
    CHECK(read_json_file(p.string()) == j);

    std::ifstream in(p);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text.back() == '\n');
    fs::remove(p);

    CHECK_THROWS_AS(read_json_file((fs::temp_directory_path() / "missing.json").string()),
                    BadInput);
    fs::path bad = fs::temp_directory_path() / "bvcoho_io_bad.json";
    std::ofstream(bad) << "{ not json";
    CHECK_THROWS_WITH_AS(read_json_file(bad.string()),
                         doctest::Contains("parse failure"), BadInput);
    fs::remove(bad);
}
