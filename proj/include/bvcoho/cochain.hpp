#pragma once
#include <string>
#include <vector>

#include "algebra.hpp"
#include "field.hpp"
#include "group.hpp"
#include "linalg.hpp"

namespace bvcoho {

enum class Kind { HochschildKG, GroupTrivial, GroupConjugation };

std::string kind_name(Kind k);
Kind kind_from_name(const std::string& s);

/* Cochains of one fixed kind on (a subgroup of) G.  A degree-n cochain is a
 * function on n-tuples of non-identity subgroup elements (other tuples are
 * treated as zero); values live in k for GroupTrivial and in kG for the two
 * group-algebra kinds.  Storage order: tuple rank major, value index minor,
 * with the first tuple slot most significant. */
struct Cochain {
    Kind kind;
    int degree;
    std::vector<int> subgroup; // ambient element indices, identity first
    std::vector<Scalar> values;
};

class CochainSpace {
  public:
    // subgroup: ambient element indices, must contain the identity and be
    // closed under product and inverse
    CochainSpace(const FiniteGroup& G, const PrimeField& F, Kind kind,
                 std::vector<int> subgroup);
    static CochainSpace whole_group(const FiniteGroup& G, const PrimeField& F, Kind kind);

    const FiniteGroup& group() const { return *G_; }
    const GroupAlgebra& algebra() const { return kG_; }
    const PrimeField& field() const { return F_; }
    Kind kind() const { return kind_; }
    const std::vector<int>& subgroup() const { return sub_; }
    int subgroup_order() const { return static_cast<int>(sub_.size()); }
    int local_of(int ambient) const; // throws BadInput when outside subgroup
    int degree_cap() const { return cap_; }
    void check_degree(int n) const;

    long block_size() const; // 1 or |G|
    long tuple_count(int n) const;
    long dim(int n) const { return tuple_count(n) * block_size(); }
    long rank_tuple(const std::vector<int>& tuple) const; // ambient indices
    std::vector<int> unrank_tuple(int n, long r) const;

    Cochain zero_cochain(int n) const;
    bool matches(const Cochain& c) const;
    void require(const Cochain& c, int degree = -1) const;

    // value block at an ambient-index tuple; identity-containing tuples give 0
    AlgebraElement eval(const Cochain& c, const std::vector<int>& tuple) const;
    Scalar eval_scalar(const Cochain& c, const std::vector<int>& tuple) const;
    void set_value(Cochain& c, const std::vector<int>& tuple, const AlgebraElement& v) const;
    void set_scalar(Cochain& c, const std::vector<int>& tuple, Scalar v) const;

    Cochain add(const Cochain& a, const Cochain& b) const;
    Cochain sub(const Cochain& a, const Cochain& b) const;
    Cochain scale(Scalar k, const Cochain& a) const;
    bool is_zero(const Cochain& a) const;

    Cochain differential(const Cochain& c) const;
    // matrix of delta_n : C^n -> C^{n+1} in the storage bases
    SparseMatrix differential_matrix(int n) const;
    bool is_cocycle(const Cochain& c) const;
    bool is_coboundary(const Cochain& c) const;
    QuotientBasis cohomology(int n) const;
    Cochain from_values(int n, std::vector<Scalar> values) const;

  private:
    const FiniteGroup* G_;
    PrimeField F_;
    GroupAlgebra kG_;
    Kind kind_;
    std::vector<int> sub_;
    std::vector<int> local_; // ambient -> local or -1
    int cap_;
};

} // namespace bvcoho
