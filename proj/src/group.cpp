#include "bvcoho/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace bvcoho {

static std::string triple(int a, int b, int c) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

FiniteGroup FiniteGroup::from_cayley_table(std::vector<std::vector<int>> table,
                                           std::string name) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw NonGroup("empty table");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(table[i].size()) != n)
            throw NonGroup("row " + std::to_string(i) + " has " +
                           std::to_string(table[i].size()) + " entries, want " +
                           std::to_string(n));
        for (int j = 0; j < n; ++j)
            if (table[i][j] < 0 || table[i][j] >= n)
                throw NonGroup("entry " + triple(i, j, table[i][j]) + " out of range");
    }
    for (int g = 0; g < n; ++g) {
        if (table[0][g] != g) throw NonGroup("0 is not a left identity at " + std::to_string(g));
        if (table[g][0] != g) throw NonGroup("0 is not a right identity at " + std::to_string(g));
    }
    // rows and columns must be permutations (cancellation)
    for (int g = 0; g < n; ++g) {
        std::vector<char> seen_r(n, 0), seen_c(n, 0);
        for (int h = 0; h < n; ++h) {
            if (seen_r[table[g][h]]++)
                throw NonGroup("row " + std::to_string(g) + " repeats " +
                               std::to_string(table[g][h]));
            if (seen_c[table[h][g]]++)
                throw NonGroup("column " + std::to_string(g) + " repeats " +
                               std::to_string(table[h][g]));
        }
    }
    std::vector<int> inv(n, -1);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            if (table[g][h] == 0) {
                if (table[h][g] != 0)
                    throw NonGroup(std::to_string(h) + " is a right but not left inverse of " +
                                   std::to_string(g));
                inv[g] = h;
            }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw NonGroup("associativity fails at " + triple(a, b, c));

    FiniteGroup G;
    G.name_ = std::move(name);
    G.mult_ = std::move(table);
    G.inv_ = std::move(inv);
    return G;
}

static std::vector<int> perm_compose(const std::vector<int>& g, const std::vector<int>& h) {
    std::vector<int> r(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) r[i] = g[h[i]];
    return r;
}

FiniteGroup FiniteGroup::from_permutations(int degree,
                                           const std::vector<std::vector<int>>& gens,
                                           std::string name, std::size_t order_cap) {
    if (degree <= 0) throw NonGroup("degree must be positive");
    for (const auto& g : gens) {
        if (static_cast<int>(g.size()) != degree)
            throw NonGroup("generator length != degree");
        std::vector<char> seen(degree, 0);
        for (int v : g) {
            if (v < 0 || v >= degree || seen[v]++)
                throw NonGroup("generator is not a permutation");
        }
    }
    std::vector<int> id(degree);
    std::iota(id.begin(), id.end(), 0);

    std::vector<std::vector<int>> elems{id};
    std::map<std::vector<int>, int> index{{id, 0}};
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const auto& s : gens) {
            auto next = perm_compose(elems[head], s);
            if (index.emplace(next, elems.size()).second) {
                elems.push_back(std::move(next));
                if (elems.size() > order_cap)
                    throw TooLarge("closure exceeds cap " + std::to_string(order_cap));
            }
        }
    }
    const int n = static_cast<int>(elems.size());
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            table[i][j] = index.at(perm_compose(elems[i], elems[j]));

    // closure of permutations is associative by construction; full validation
    // is cheap at fixture scale and catches bookkeeping bugs
    return from_cayley_table(std::move(table), std::move(name));
}

FiniteGroup cyclic_group(int m) {
    if (m <= 0) throw NonGroup("order must be positive");
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) t[i][j] = (i + j) % m;
    return FiniteGroup::from_cayley_table(std::move(t), "C" + std::to_string(m));
}

FiniteGroup builtin_group(const std::string& name) {
    if (name == "C2") return cyclic_group(2);
    if (name == "C3") return cyclic_group(3);
    if (name == "C4") return cyclic_group(4);
    if (name == "S3")
        return FiniteGroup::from_permutations(3, {{1, 2, 0}, {1, 0, 2}}, "S3");
    throw BadInput("unknown builtin group '" + name + "'");
}

FiniteGroup subgroup_as_group(const FiniteGroup& G, const std::vector<int>& elems,
                              std::string name) {
    const int m = static_cast<int>(elems.size());
    if (m == 0 || elems[0] != 0) throw NonGroup("subgroup must contain the identity first");
    std::vector<int> local(G.order(), -1);
    for (int i = 0; i < m; ++i) local[elems[i]] = i;
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int p = local[G.mult(elems[i], elems[j])];
            if (p < 0) throw NonGroup("element list not closed under multiplication");
            t[i][j] = p;
        }
    return FiniteGroup::from_cayley_table(std::move(t), std::move(name));
}

int ConjugacyData::rep_index(int x) const {
    for (std::size_t k = 0; k < reps.size(); ++k)
        if (reps[k] == x) return static_cast<int>(k);
    throw IndexOutOfRange("element " + std::to_string(x) + " is not a class representative");
}

ConjugacyData conjugacy_data(const FiniteGroup& G) {
    const int n = G.order();
    ConjugacyData cd;
    cd.class_of.assign(n, -1);
    for (int x = 0; x < n; ++x) {
        if (cd.class_of[x] >= 0) continue;
        int k = static_cast<int>(cd.reps.size());
        cd.reps.push_back(x);
        for (int g = 0; g < n; ++g) cd.class_of[G.conj(g, x)] = k;

        std::vector<int> cent;
        for (int g = 0; g < n; ++g)
            if (G.conj(g, x) == x) cent.push_back(g);
        cd.centralizer.push_back(cent);

        std::vector<char> covered(n, 0);
        std::vector<int> gammas, conjs;
        for (int g = 0; g < n; ++g) {
            if (covered[g]) continue;
            gammas.push_back(g);
            conjs.push_back(G.conj(G.inv(g), x)); // gamma^-1 x gamma
            for (int c : cent) covered[G.mult(c, g)] = 1; // coset C_G(x) g
        }
        cd.gammas.push_back(std::move(gammas));
        cd.conjugates.push_back(std::move(conjs));
    }
    return cd;
}

WalkStep coset_walk(const FiniteGroup& G, const ConjugacyData& cd, int x, int i, int g) {
    const int k = cd.rep_index(x);
    const auto& gam = cd.gammas[k];
    if (i < 1 || i > static_cast<int>(gam.size()))
        throw IndexOutOfRange("coset index " + std::to_string(i));
    if (g < 0 || g >= G.order()) throw IndexOutOfRange("element " + std::to_string(g));
    const int w = G.mult(gam[i - 1], g);
    // find the coset of w: w = h gamma_s  <=>  w gamma_s^-1 centralizes x
    for (int s = 1; s <= static_cast<int>(gam.size()); ++s) {
        const int h = G.mult(w, G.inv(gam[s - 1]));
        if (G.conj(h, x) == x) return {h, s};
    }
    throw Error("coset walk found no coset"); // unreachable for valid data
}

WalkResult walk_sequence(const FiniteGroup& G, const ConjugacyData& cd, int x, int i,
                         const std::vector<int>& gs) {
    WalkResult r;
    r.s = i;
    r.hs.reserve(gs.size());
    for (int g : gs) {
        WalkStep st = coset_walk(G, cd, x, r.s, g);
        r.hs.push_back(st.h);
        r.s = st.s;
    }
    return r;
}

} // namespace bvcoho
