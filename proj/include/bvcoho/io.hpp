#pragma once
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "bvcoho/cochain.hpp"
#include "bvcoho/decomposition.hpp"
#include "bvcoho/group.hpp"

namespace bvcoho {

/* JSON storage for groups, cochains and decomposed class families.
 *
 * Scalars are stored already reduced into [0, p); only nonzero blocks are
 * written, ordered by tuple rank, and object keys serialize alphabetically,
 * so writing is deterministic and write -> read -> write is bit-identical. */

using json = nlohmann::json;

json group_to_json(const FiniteGroup& G);
FiniteGroup group_from_json(const json& j);

// one nonzero block: ambient tuple, then block_size() scalars
using StoredValues = std::vector<std::pair<std::vector<int>, std::vector<Scalar>>>;

struct StoredCochain {
    uint32_t prime = 0;
    std::string group;  // builtin name or the path the group table was read from
    Kind kind = Kind::GroupTrivial;
    int degree = 0;
    int rep = -1;  // >= 0: trivial-kind cochain on the centralizer of this element
    StoredValues values;
};

struct StoredFamily {
    uint32_t prime = 0;
    std::string group;
    int degree = 0;
    std::map<int, StoredValues> components;  // class representative -> blocks
};

json to_json(const StoredCochain& c);
json to_json(const StoredFamily& f);
bool is_family_json(const json& j);
StoredCochain stored_cochain_from_json(const json& j);
StoredFamily stored_family_from_json(const json& j);

// the space a stored cochain lives in (rep >= 0 selects a centralizer component)
CochainSpace space_for(const StoredCochain& c, const FiniteGroup& G, const PrimeField& F,
                       const ConjugacyData& cd);

StoredCochain store_cochain(const CochainSpace& S, const Cochain& c,
                            const std::string& group_label, int rep = -1);
Cochain realize_cochain(const StoredCochain& c, const CochainSpace& S);

StoredFamily store_family(const FiniteGroup& G, const PrimeField& F, const ConjugacyData& cd,
                          const DecomposedClassFamily& fam, int degree,
                          const std::string& group_label);
DecomposedClassFamily realize_family(const StoredFamily& f, const FiniteGroup& G,
                                     const PrimeField& F, const ConjugacyData& cd);

// pretty-printed with a trailing newline; parse errors surface as BadInput
json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace bvcoho
