#include "bvcoho/io.hpp"

#include <algorithm>
#include <fstream>

#include "bvcoho/errors.hpp"

namespace bvcoho {

namespace {

const json& need(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw BadInput(std::string("missing field '") + key + "'");
    return j.at(key);
}

uint32_t need_prime(const json& j) {
    const json& v = need(j, "prime");
    if (!v.is_number_unsigned()) throw BadInput("'prime' must be a positive integer");
    return v.get<uint32_t>();
}

int need_degree(const json& j) {
    const json& v = need(j, "degree");
    if (!v.is_number_integer() || v.get<long>() < 0)
        throw BadInput("'degree' must be a nonnegative integer");
    return v.get<int>();
}

std::string need_group(const json& j) {
    const json& v = need(j, "group");
    if (!v.is_string()) throw BadInput("'group' must be a string");
    return v.get<std::string>();
}

json values_to_json(const StoredValues& values) {
    json out = json::array();
    for (const auto& [tuple, block] : values) out.push_back(json::array({tuple, block}));
    return out;
}

StoredValues values_from_json(const json& j) {
    if (!j.is_array()) throw BadInput("'values' must be a list of [tuple, block] pairs");
    StoredValues out;
    for (const json& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_array() || !e[1].is_array())
            throw BadInput("'values' entries must be [tuple, block] pairs");
        std::vector<int> tuple;
        for (const json& g : e[0]) {
            if (!g.is_number_integer()) throw BadInput("tuple entries must be integers");
            tuple.push_back(g.get<int>());
        }
        std::vector<Scalar> block;
        for (const json& v : e[1]) {
            if (!v.is_number_unsigned()) throw BadInput("block entries must be nonnegative");
            block.push_back(v.get<Scalar>());
        }
        out.emplace_back(std::move(tuple), std::move(block));
    }
    return out;
}

}  // namespace

json group_to_json(const FiniteGroup& G) {
    json table = json::array();
    for (int g = 0; g < G.order(); ++g) {
        json row = json::array();
        for (int h = 0; h < G.order(); ++h) row.push_back(G.mult(g, h));
        table.push_back(std::move(row));
    }
    return json{{"name", G.name()}, {"table", std::move(table)}};
}

FiniteGroup group_from_json(const json& j) {
    const json& t = need(j, "table");
    if (!t.is_array()) throw BadInput("'table' must be a square matrix of element indices");
    std::vector<std::vector<int>> table;
    for (const json& row : t) {
        if (!row.is_array()) throw BadInput("'table' rows must be lists");
        std::vector<int> r;
        for (const json& v : row) {
            if (!v.is_number_integer()) throw BadInput("'table' entries must be integers");
            r.push_back(v.get<int>());
        }
        table.push_back(std::move(r));
    }
    std::string name = "user";
    if (j.contains("name") && j.at("name").is_string()) name = j.at("name").get<std::string>();
    return FiniteGroup::from_cayley_table(table, name);
}

json to_json(const StoredCochain& c) {
    json out{{"prime", c.prime},
             {"group", c.group},
             {"kind", kind_name(c.kind)},
             {"degree", c.degree},
             {"values", values_to_json(c.values)}};
    if (c.rep >= 0) out["rep"] = c.rep;
    return out;
}

json to_json(const StoredFamily& f) {
    json comps = json::array();
    for (const auto& [x, values] : f.components)
        comps.push_back(json::array({x, values_to_json(values)}));
    return json{{"prime", f.prime},
                {"group", f.group},
                {"degree", f.degree},
                {"components", std::move(comps)}};
}

bool is_family_json(const json& j) { return j.is_object() && j.contains("components"); }

StoredCochain stored_cochain_from_json(const json& j) {
    StoredCochain c;
    c.prime = need_prime(j);
    c.group = need_group(j);
    c.degree = need_degree(j);
    const json& k = need(j, "kind");
    if (!k.is_string()) throw BadInput("'kind' must be a string");
    c.kind = kind_from_name(k.get<std::string>());
    if (j.contains("rep")) {
        const json& r = j.at("rep");
        if (!r.is_number_integer() || r.get<long>() < 0)
            throw BadInput("'rep' must be a nonnegative element index");
        c.rep = r.get<int>();
    }
    c.values = values_from_json(need(j, "values"));
    return c;
}

StoredFamily stored_family_from_json(const json& j) {
    StoredFamily f;
    f.prime = need_prime(j);
    f.group = need_group(j);
    f.degree = need_degree(j);
    const json& comps = need(j, "components");
    if (!comps.is_array()) throw BadInput("'components' must be a list of [rep, values] pairs");
    for (const json& e : comps) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer())
            throw BadInput("'components' entries must be [rep, values] pairs");
        int x = e[0].get<int>();
        if (f.components.count(x)) throw BadInput("duplicate component " + std::to_string(x));
        f.components[x] = values_from_json(e[1]);
    }
    return f;
}

CochainSpace space_for(const StoredCochain& c, const FiniteGroup& G, const PrimeField& F,
                       const ConjugacyData& cd) {
    if (F.p() != c.prime)
        throw KindMismatch("cochain stored mod " + std::to_string(c.prime) + ", asked mod " +
                           std::to_string(F.p()));
    if (c.rep < 0) return CochainSpace::whole_group(G, F, c.kind);
    if (c.kind != Kind::GroupTrivial)
        throw KindMismatch("component cochains carry trivial coefficients");
    if (std::find(cd.reps.begin(), cd.reps.end(), c.rep) == cd.reps.end())
        throw BadInput("element " + std::to_string(c.rep) + " is not a class representative");
    return component_space(G, F, cd, c.rep);
}

StoredCochain store_cochain(const CochainSpace& S, const Cochain& c,
                            const std::string& group_label, int rep) {
    S.require(c);
    StoredCochain out;
    out.prime = S.field().p();
    out.group = group_label;
    out.kind = c.kind;
    out.degree = c.degree;
    out.rep = rep;
    const long bs = S.block_size();
    for (long r = 0; r < S.tuple_count(c.degree); ++r) {
        auto first = c.values.begin() + r * bs;
        std::vector<Scalar> block(first, first + bs);
        if (std::all_of(block.begin(), block.end(), [](Scalar v) { return v == 0; })) continue;
        out.values.emplace_back(S.unrank_tuple(c.degree, r), std::move(block));
    }
    return out;
}

Cochain realize_cochain(const StoredCochain& c, const CochainSpace& S) {
    if (S.field().p() != c.prime)
        throw KindMismatch("cochain stored mod " + std::to_string(c.prime) +
                           ", space is mod " + std::to_string(S.field().p()));
    if (c.kind != S.kind())
        throw KindMismatch(kind_name(c.kind) + " vs " + kind_name(S.kind()));
    Cochain out = S.zero_cochain(c.degree);
    const long bs = S.block_size();
    for (const auto& [tuple, block] : c.values) {
        if (static_cast<int>(tuple.size()) != c.degree)
            throw DimensionMismatch("tuple length vs degree");
        if (static_cast<long>(block.size()) != bs)
            throw DimensionMismatch("block length " + std::to_string(block.size()) +
                                    ", expected " + std::to_string(bs));
        long r = S.rank_tuple(tuple);
        for (long i = 0; i < bs; ++i)
            out.values[static_cast<size_t>(r * bs + i)] =
                static_cast<Scalar>(block[static_cast<size_t>(i)] % c.prime);
    }
    return out;
}

StoredFamily store_family(const FiniteGroup& G, const PrimeField& F, const ConjugacyData& cd,
                          const DecomposedClassFamily& fam, int degree,
                          const std::string& group_label) {
    StoredFamily out;
    out.prime = F.p();
    out.group = group_label;
    out.degree = degree;
    for (int x : cd.reps) {
        CochainSpace H = component_space(G, F, cd, x);
        auto it = fam.find(x);
        Cochain c = it == fam.end() ? H.zero_cochain(degree) : it->second;
        out.components[x] = store_cochain(H, c, group_label, x).values;
    }
    return out;
}

DecomposedClassFamily realize_family(const StoredFamily& f, const FiniteGroup& G,
                                     const PrimeField& F, const ConjugacyData& cd) {
    for (const auto& [x, values] : f.components)
        if (std::find(cd.reps.begin(), cd.reps.end(), x) == cd.reps.end())
            throw BadInput("element " + std::to_string(x) + " is not a class representative");
    DecomposedClassFamily out;
    for (int x : cd.reps) {
        StoredCochain c;
        c.prime = f.prime;
        c.group = f.group;
        c.kind = Kind::GroupTrivial;
        c.degree = f.degree;
        c.rep = x;
        auto it = f.components.find(x);
        if (it != f.components.end()) c.values = it->second;
        out[x] = realize_cochain(c, component_space(G, F, cd, x));
    }
    return out;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadInput("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw BadInput("parse failure in '" + path + "': " + e.what());
    }
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw BadInput("cannot write '" + path + "'");
    out << j.dump(2) << '\n';
    if (!out) throw BadInput("write failure on '" + path + "'");
}

}  // namespace bvcoho
