#pragma once
#include <string>
#include <vector>

#include "errors.hpp"

namespace bvcoho {

/* Finite group as a validated Cayley table.  Element 0 is always the
 * identity; elements are dense indices 0..order-1. */
class FiniteGroup {
  public:
    // Validates: shape, identity row/column, two-sided inverses, associativity.
    // Throws NonGroup with a witness on the first violation.
    static FiniteGroup from_cayley_table(std::vector<std::vector<int>> table,
                                         std::string name = "");

    // Closure of permutation generators on {0..degree-1} under composition
    // (g*h applies h first).  Elements are ordered by first discovery in a
    // breadth-first closure from the identity, generators applied in the
    // given order.  Throws TooLarge past `order_cap`.
    static FiniteGroup from_permutations(int degree,
                                         const std::vector<std::vector<int>>& gens,
                                         std::string name = "",
                                         std::size_t order_cap = 10000);

    int order() const { return static_cast<int>(mult_.size()); }
    int identity() const { return 0; }
    int mult(int g, int h) const { return mult_[g][h]; }
    int inv(int g) const { return inv_[g]; }
    int conj(int g, int x) const { return mult(mult(g, x), inv(g)); } // g x g^-1
    const std::string& name() const { return name_; }
    const std::vector<std::vector<int>>& table() const { return mult_; }

    int product(const std::vector<int>& gs) const {
        int r = 0;
        for (int g : gs) r = mult(r, g);
        return r;
    }

    bool operator==(const FiniteGroup& o) const { return mult_ == o.mult_; }

  private:
    FiniteGroup() = default;
    std::string name_;
    std::vector<std::vector<int>> mult_;
    std::vector<int> inv_;
};

// Built-in fixtures: "C2", "C3", "C4" (cyclic), "S3" (permutation closure of
// the 3-cycle then a transposition, so index 1 is the 3-cycle a and index 2
// the transposition b; class representatives come out {1, a, b}).
FiniteGroup builtin_group(const std::string& name);
FiniteGroup cyclic_group(int m);

// The subgroup {elems} of G as a standalone group; elems must be sorted,
// contain 0 and be closed under products.  Element i of the result is
// elems[i], so tuple tables over the subgroup transfer verbatim.
FiniteGroup subgroup_as_group(const FiniteGroup& G, const std::vector<int>& elems,
                              std::string name = "");

/* Conjugacy classes with the deterministic choices every walk depends on:
 * class representatives are the minimal element index in each class; for a
 * representative x the coset transversal gamma_1=identity, gamma_{i+1} =
 * minimal-index element not in an already-covered right coset C_G(x)gamma;
 * and x_i = gamma_i^{-1} x gamma_i. */
struct ConjugacyData {
    std::vector<int> reps;                       // one per class, increasing
    std::vector<int> class_of;                   // element -> index into reps
    std::vector<std::vector<int>> centralizer;   // per class, sorted elements
    std::vector<std::vector<int>> gammas;        // per class, transversal
    std::vector<std::vector<int>> conjugates;    // per class, x_i = g_i^-1 x g_i

    int rep_index(int x) const;                  // throws unless x is a rep
};

ConjugacyData conjugacy_data(const FiniteGroup& G);

/* gamma_i * g = h * gamma_s with h in C_G(x): the unique (h, s).
 * Indices i, s are 1-based positions into the transversal of x's class. */
struct WalkStep { int h; int s; };
WalkStep coset_walk(const FiniteGroup& G, const ConjugacyData& cd, int x, int i, int g);

/* Iterated walk over gs: i -> s1 -> s2 -> ... collecting the h's.
 * Returns the h-sequence and the final coset index. */
struct WalkResult { std::vector<int> hs; int s; };
WalkResult walk_sequence(const FiniteGroup& G, const ConjugacyData& cd, int x, int i,
                         const std::vector<int>& gs);

} // namespace bvcoho
