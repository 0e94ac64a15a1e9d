#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bvcoho/bv.hpp"
#include "bvcoho/decomposition.hpp"
#include "bvcoho/errors.hpp"
#include "bvcoho/io.hpp"
#include "bvcoho/verify.hpp"

using namespace bvcoho;

namespace {

int parse_rep(const std::string& s) {
    if (s == "e") return 0;
    if (s == "a") return 1;
    if (s == "b") return 2;
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used == s.size() && v >= 0) return v;
    } catch (const std::exception&) {
    }
    throw BadInput("representative must be e, a, b or a non-negative element index");
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty())
        std::printf("%s\n", j.dump(2).c_str());
    else
        write_json_file(out_path, j);
}

std::string block_str(const std::vector<int>& tuple, const std::vector<Scalar>& block) {
    std::string s = "(";
    for (size_t i = 0; i < tuple.size(); ++i) s += (i ? "," : "") + std::to_string(tuple[i]);
    s += ") -> [";
    for (size_t i = 0; i < block.size(); ++i) s += (i ? "," : "") + std::to_string(block[i]);
    return s + "]";
}

void pretty_cochain(const StoredCochain& c) {
    std::printf("group %s, prime %u, kind %s, degree %d", c.group.c_str(), c.prime,
                kind_name(c.kind).c_str(), c.degree);
    if (c.rep >= 0) std::printf(", component of representative %d", c.rep);
    std::printf("\n");
    if (c.values.empty()) std::printf("  zero cochain\n");
    for (const auto& [tuple, block] : c.values)
        std::printf("  %s\n", block_str(tuple, block).c_str());
}

void pretty_family(const StoredFamily& f) {
    std::printf("group %s, prime %u, degree %d, one block per class representative\n",
                f.group.c_str(), f.prime, f.degree);
    if (f.components.empty()) std::printf("  zero family\n");
    for (const auto& [rep, values] : f.components) {
        std::printf("  representative %d:\n", rep);
        for (const auto& [tuple, block] : values)
            std::printf("    %s\n", block_str(tuple, block).c_str());
    }
}

struct LoadedGroup {
    FiniteGroup G;
    PrimeField F;
    ConjugacyData cd;
};

LoadedGroup load_group(const std::string& name, uint32_t prime) {
    FiniteGroup G = builtin_group(name);
    PrimeField F(prime);
    ConjugacyData cd = conjugacy_data(G);
    return {std::move(G), std::move(F), std::move(cd)};
}

int run_info(const std::string& group, bool pretty, const std::string& out_path) {
    FiniteGroup G = builtin_group(group);
    ConjugacyData cd = conjugacy_data(G);
    json classes = json::array();
    for (size_t i = 0; i < cd.reps.size(); ++i)
        classes.push_back({{"rep", cd.reps[i]},
                           {"size", cd.conjugates[i].size()},
                           {"centralizer_order", cd.centralizer[i].size()}});
    json j = {{"group", G.name()},
              {"order", G.order()},
              {"class_count", cd.reps.size()},
              {"classes", classes}};
    emit(j, out_path);
    if (pretty) {
        std::printf("%s: order %d, %zu conjugacy classes\n", G.name().c_str(), G.order(),
                    cd.reps.size());
        for (size_t i = 0; i < cd.reps.size(); ++i)
            std::printf("  rep %d: class size %zu, centralizer order %zu\n", cd.reps[i],
                        cd.conjugates[i].size(), cd.centralizer[i].size());
    }
    return 0;
}

int run_cohomology(const std::string& group, uint32_t prime, const std::string& kind,
                   const std::string& rep, int max_degree, bool pretty,
                   const std::string& out_path) {
    LoadedGroup L = load_group(group, prime);
    json j = {{"group", L.G.name()}, {"prime", prime}, {"kind", kind},
              {"max_degree", max_degree}};
    std::vector<long> dims;
    if (kind == "centralizer") {
        if (rep.empty()) throw BadInput("kind 'centralizer' needs --rep");
        int x = parse_rep(rep);
        CochainSpace H = component_space(L.G, L.F, L.cd, x);
        dims = cohomology_dims(H, max_degree);
        j["rep"] = x;
    } else {
        CochainSpace S = CochainSpace::whole_group(L.G, L.F, kind_from_name(kind));
        dims = cohomology_dims(S, max_degree);
    }
    j["dims"] = dims;
    emit(j, out_path);
    if (pretty) {
        std::printf("dim H^n for n = 0..%d:", max_degree);
        for (long d : dims) std::printf(" %ld", d);
        std::printf("\n");
    }
    return 0;
}

struct OpInput {
    json raw;
    bool family = false;
    StoredCochain cochain;
    StoredFamily fam;
    std::string group;
    uint32_t prime = 0;
};

OpInput load_input(const std::string& path) {
    OpInput in;
    in.raw = read_json_file(path);
    in.family = is_family_json(in.raw);
    if (in.family) {
        in.fam = stored_family_from_json(in.raw);
        in.group = in.fam.group;
        in.prime = in.fam.prime;
    } else {
        in.cochain = stored_cochain_from_json(in.raw);
        in.group = in.cochain.group;
        in.prime = in.cochain.prime;
    }
    return in;
}

DecomposedClassFamily as_family(const OpInput& in, const LoadedGroup& L, int& degree) {
    if (in.family) {
        degree = in.fam.degree;
        return realize_family(in.fam, L.G, L.F, L.cd);
    }
    if (in.cochain.kind != Kind::GroupTrivial || in.cochain.rep < 0)
        throw KindMismatch("family operations need a family or a component cochain");
    degree = in.cochain.degree;
    CochainSpace H = space_for(in.cochain, L.G, L.F, L.cd);
    DecomposedClassFamily f;
    f.emplace(in.cochain.rep, realize_cochain(in.cochain, H));
    return f;
}

int run_op(const std::string& operation, const std::vector<std::string>& files,
           const std::string& rep, bool pretty, const std::string& out_path) {
    const bool binary = operation == "cup" || operation == "cup-decomposed" ||
                        operation == "bracket" || operation == "bracket-bv";
    if (files.size() != (binary ? 2u : 1u))
        throw BadInput("operation '" + operation + "' takes " + (binary ? "two" : "one") +
                       " input file" + (binary ? "s" : ""));
    std::vector<OpInput> in;
    for (const auto& f : files) in.push_back(load_input(f));
    if (binary && (in[0].prime != in[1].prime || in[0].group != in[1].group))
        throw KindMismatch("inputs disagree on group or prime");
    LoadedGroup L = load_group(in[0].group, in[0].prime);

    StoredCochain out_c;
    StoredFamily out_f;
    bool out_is_family = false;

    if (operation == "cup") {
        if (in[0].family || in[1].family) throw KindMismatch("cup needs two plain cochains");
        if (in[0].cochain.kind != in[1].cochain.kind || in[0].cochain.rep != in[1].cochain.rep)
            throw KindMismatch("cup factors live in different complexes");
        CochainSpace S = space_for(in[0].cochain, L.G, L.F, L.cd);
        Cochain c = cup(S, realize_cochain(in[0].cochain, S), realize_cochain(in[1].cochain, S));
        out_c = store_cochain(S, c, in[0].group, in[0].cochain.rep);
    } else if (operation == "cup-decomposed") {
        int da = 0, db = 0;
        auto need_component = [&](const OpInput& i) -> ComponentCochain {
            if (i.family || i.cochain.kind != Kind::GroupTrivial || i.cochain.rep < 0)
                throw KindMismatch("cup-decomposed needs two component cochains");
            CochainSpace H = space_for(i.cochain, L.G, L.F, L.cd);
            return {i.cochain.rep, realize_cochain(i.cochain, H)};
        };
        ComponentCochain a = need_component(in[0]), b = need_component(in[1]);
        da = a.psi.degree;
        db = b.psi.degree;
        DecomposedClassFamily f = cup_decomposed(L.G, L.F, L.cd, a, b);
        out_f = store_family(L.G, L.F, L.cd, f, da + db, in[0].group);
        out_is_family = true;
    } else if (operation == "delta") {
        if (in[0].family) throw KindMismatch("delta needs a plain cochain");
        CochainSpace S = space_for(in[0].cochain, L.G, L.F, L.cd);
        Cochain c = delta(S, realize_cochain(in[0].cochain, S));
        out_c = store_cochain(S, c, in[0].group, in[0].cochain.rep);
    } else if (operation == "delta-hat") {
        if (in[0].family || in[0].cochain.kind != Kind::GroupTrivial)
            throw KindMismatch("delta-hat needs a trivial-coefficient cochain");
        int x = !rep.empty() ? parse_rep(rep) : in[0].cochain.rep;
        if (x < 0) throw BadInput("delta-hat needs a representative (file rep or --rep)");
        if (in[0].cochain.rep >= 0 && x != in[0].cochain.rep)
            throw BadInput("--rep disagrees with the component stored in the file");
        CochainSpace H = space_for(in[0].cochain, L.G, L.F, L.cd);
        Cochain c = delta_hat(H, realize_cochain(in[0].cochain, H), x);
        out_c = store_cochain(H, c, in[0].group, x);
    } else if (operation == "bracket") {
        if (in[0].family || in[1].family) throw KindMismatch("bracket needs two plain cochains");
        if (in[0].cochain.kind != Kind::HochschildKG || in[1].cochain.kind != Kind::HochschildKG)
            throw KindMismatch("bracket needs two full group-algebra cochains");
        CochainSpace S = space_for(in[0].cochain, L.G, L.F, L.cd);
        Cochain c = bracket(S, realize_cochain(in[0].cochain, S), realize_cochain(in[1].cochain, S));
        out_c = store_cochain(S, c, in[0].group, -1);
    } else if (operation == "bracket-bv") {
        int da = 0, db = 0;
        DecomposedClassFamily a = as_family(in[0], L, da), b = as_family(in[1], L, db);
        DecomposedClassFamily f = bracket_via_bv(L.G, L.F, L.cd, a, da, b, db);
        out_f = store_family(L.G, L.F, L.cd, f, da + db - 1, in[0].group);
        out_is_family = true;
    } else {
        throw BadInput("unknown operation '" + operation +
                       "' (cup, cup-decomposed, delta, delta-hat, bracket, bracket-bv)");
    }

    emit(out_is_family ? to_json(out_f) : to_json(out_c), out_path);
    if (pretty) {
        if (out_is_family)
            pretty_family(out_f);
        else
            pretty_cochain(out_c);
    }
    return 0;
}

int run_verify(uint32_t prime, int cases, bool flip, bool pretty,
               const std::string& out_path) {
    VerifyOptions opt;
    opt.prime = prime;
    opt.property_cases = cases;
    opt.flip_delta_sign = flip;
    std::vector<CheckResult> report = verify_s3_report(opt);
    bool pass = all_passed(report);
    json checks = json::array();
    std::string first_failure;
    for (const CheckResult& r : report) {
        checks.push_back({{"criterion", r.criterion},
                          {"name", r.name},
                          {"pass", r.pass},
                          {"detail", r.detail}});
        if (!r.pass && first_failure.empty()) first_failure = r.name;
    }
    json j = {{"pass", pass}, {"checks", checks}};
    if (!pass) j["first_failure"] = first_failure;
    emit(j, out_path);
    if (pretty) {
        for (const CheckResult& r : report)
            std::printf("[%s] (%d) %s%s%s\n", r.pass ? "PASS" : "FAIL", r.criterion,
                        r.name.c_str(), r.detail.empty() ? "" : " -- ", r.detail.c_str());
        std::printf("%s\n", pass ? "PASS" : "FAIL");
        if (!pass) std::printf("first failing check: %s\n", first_failure.c_str());
    }
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hochschild cohomology of group algebras: decomposition, cup, BV operator, bracket"};
    app.require_subcommand(1);

    std::string group = "S3", kind = "hochschild", rep, out_path, operation;
    std::vector<std::string> files;
    uint32_t prime = 3;
    int max_degree = 4, cases = 200;
    bool pretty = false, flip = false;

    CLI::App* info = app.add_subcommand("info", "conjugacy classes and centralizer orders");
    info->add_option("--group", group, "builtin group name")->capture_default_str();
    info->add_flag("--pretty", pretty, "also print a human-readable table");
    info->add_option("--out", out_path, "write the JSON result to a file");

    CLI::App* coh = app.add_subcommand("cohomology", "dimensions by brute-force elimination");
    coh->add_option("--group", group, "builtin group name")->capture_default_str();
    coh->add_option("--prime", prime, "coefficient characteristic")->capture_default_str();
    coh->add_option("--kind", kind, "hochschild, trivial, conjugation or centralizer")
        ->capture_default_str();
    coh->add_option("--rep", rep, "class representative (e, a, b or index) for kind centralizer");
    coh->add_option("--max-degree", max_degree, "top degree")->capture_default_str();
    coh->add_flag("--pretty", pretty, "also print a human-readable table");
    coh->add_option("--out", out_path, "write the JSON result to a file");

    CLI::App* op = app.add_subcommand("op", "apply an operation to stored cochains");
    op->add_option("operation", operation,
                   "cup, cup-decomposed, delta, delta-hat, bracket or bracket-bv")
        ->required();
    op->add_option("files", files, "input JSON files")->required()->expected(1, 2);
    op->add_option("--rep", rep, "class representative for delta-hat");
    op->add_flag("--pretty", pretty, "also print a human-readable table");
    op->add_option("--out", out_path, "write the JSON result to a file");

    CLI::App* ver = app.add_subcommand("verify-s3", "run the order-6 self-check suite");
    ver->add_option("--prime", prime, "coefficient characteristic")->capture_default_str();
    ver->add_option("--cases", cases, "randomized cases per property suite")
        ->capture_default_str();
    ver->add_flag("--debug-flip-delta-sign", flip,
                  "debug: negate the bv-operator bracket before comparing");
    ver->add_flag("--pretty", pretty, "also print the report as a table");
    ver->add_option("--out", out_path, "write the JSON report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*info) return run_info(group, pretty, out_path);
        if (*coh) return run_cohomology(group, prime, kind, rep, max_degree, pretty, out_path);
        if (*op) return run_op(operation, files, rep, pretty, out_path);
        if (*ver) return run_verify(prime, cases, flip, pretty, out_path);
    } catch (const Error& e) {
        std::fprintf(stderr, "bvcoho: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "bvcoho: %s\n", e.what());
        return 2;
    }
    return 2;
}
