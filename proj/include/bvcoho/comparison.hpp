#pragma once
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "cochain.hpp"
#include "field.hpp"
#include "group.hpp"
#include "linalg.hpp"

namespace bvcoho {

/* Projective resolutions of the trivial module, presented with explicit
 * bases so chain maps between them can be built by the standard homotopy
 * recursion and checked degree by degree.
 *
 * Two presentations are used.  BasedResolution holds finitely many markers
 * per degree; marker j contributes the left module A*e_j (e_j an idempotent,
 * the unit for free markers).  BarResolution is the normalized bar complex
 * of the trivial module, whose degree-n term is free on non-identity
 * n-tuples; its elements are kept sparse because ranks grow geometrically. */

// element of one BasedResolution term: one kG coefficient per marker, the
// j-th lying in A*e_j
using TermElement = std::vector<AlgebraElement>;

// element of one bar term: tuple rank -> kG coefficient
using BarElement = std::map<long, AlgebraElement>;

struct ResolutionMarker {
    AlgebraElement idem; // generator; must satisfy e*e = e
    // linear basis of A*e with the generator first; empty means free of rank
    // one (basis = group translates of the generator)
    std::vector<AlgebraElement> basis;
};

// one summand of the image of a marker generator under the differential
struct DiffEntry {
    int target;           // marker index in the next-lower term
    AlgebraElement value; // element of A*e_target; d(x) accumulates x*value
};

class BasedResolution {
  public:
    // terms[n]: markers of the degree-n term, n = 0..depth
    // diff[n]: per marker of term n, the generator image in term n-1 (n >= 1)
    // aug: per degree-0 marker, the augmentation on that marker's basis
    // idem_family: orthogonal idempotents summing to 1 when the module
    //   structure needs splitting (empty for free resolutions)
    // Checks shapes, idempotency, basis membership/independence, d(d(x)) = 0
    // and aug(d(x)) = 0 on generators; throws BadInput/NonGroup on violation.
    BasedResolution(const FiniteGroup& G, const PrimeField& F,
                    std::vector<std::vector<ResolutionMarker>> terms,
                    std::vector<std::vector<std::vector<DiffEntry>>> diff,
                    std::vector<std::vector<Scalar>> aug,
                    std::vector<AlgebraElement> idem_family);

    const FiniteGroup& group() const { return *G_; }
    const PrimeField& field() const { return F_; }
    const GroupAlgebra& algebra() const { return kG_; }
    int depth() const { return static_cast<int>(terms_.size()) - 1; }
    int marker_count(int n) const;
    const ResolutionMarker& marker(int n, int j) const;
    long basis_size(int n, int j) const;
    AlgebraElement basis_vector(int n, int j, long k) const;
    const std::vector<AlgebraElement>& idempotent_family() const { return idems_; }

    TermElement zero(int n) const;
    TermElement generator(int n, int j) const;
    bool is_zero(const TermElement& x) const;
    TermElement add(TermElement x, const TermElement& y) const;
    TermElement scale(Scalar k, TermElement x) const;
    TermElement act(const AlgebraElement& c, TermElement x) const; // left action

    TermElement apply_diff(int n, const TermElement& x) const; // term n -> n-1
    Scalar apply_aug(const TermElement& x) const;              // term 0 -> k

    // coordinates of v in the linear basis of marker (n, j); throws BadInput
    // when v lies outside A*e_j
    std::vector<Scalar> coordinates(int n, int j, const AlgebraElement& v) const;

    // value, per marker, of the module form dual to that marker's generator
    // (the only forms to the trivial module a term carries)
    std::vector<Scalar> form_values(int n, const TermElement& x) const;

  private:
    const FiniteGroup* G_;
    PrimeField F_;
    GroupAlgebra kG_;
    std::vector<std::vector<ResolutionMarker>> terms_;
    std::vector<std::vector<std::vector<DiffEntry>>> diff_;
    std::vector<std::vector<Scalar>> aug_;
    std::vector<AlgebraElement> idems_;
    // echelon + pivot data per explicit-basis marker, for coordinates()
    mutable std::vector<std::vector<std::unique_ptr<Echelon>>> solvers_;
    void check_shapes() const;
};

/* Contracting homotopy given setwise: values on every linear basis vector,
 * extended linearly on application.  table[n][j][k] is the image in term
 * n+1 of basis vector k of marker j of term n; at_unit is the image of
 * 1 in k under t_{-1}. */
struct TableHomotopy {
    TermElement at_unit;
    std::vector<std::vector<std::vector<TermElement>>> table;
};

struct HomotopyReport {
    bool ok = true;
    int degree = -2;     // first failing degree, -2 when ok
    std::string witness; // description of the first failing basis vector
};

// Checks aug(t(1)) = 1 and t d + d t = id on every linear basis vector of
// every term that has both maps available.
HomotopyReport verify_homotopy(const BasedResolution& R, const TableHomotopy& t);

class BarResolution {
  public:
    BarResolution(const FiniteGroup& G, const PrimeField& F, int depth);

    const FiniteGroup& group() const { return *G_; }
    const PrimeField& field() const { return F_; }
    const GroupAlgebra& algebra() const { return kG_; }
    int depth() const { return depth_; }

    long marker_count(int n) const; // (|G|-1)^n
    long rank_tuple(const std::vector<int>& tuple) const;
    std::vector<int> unrank_tuple(int n, long r) const;

    BarElement zero() const { return {}; }
    BarElement generator(int n, long rank) const;
    bool is_zero(const BarElement& x) const;
    BarElement add(BarElement x, const BarElement& y) const;
    BarElement scale(Scalar k, BarElement x) const;
    BarElement act(const AlgebraElement& c, const BarElement& x) const;

    BarElement apply_diff(int n, const BarElement& x) const; // n >= 1
    Scalar apply_aug(const BarElement& x) const;
    BarElement homotopy(int n, const BarElement& x) const; // s_n: term n -> n+1
    BarElement homotopy_unit() const;                      // s_{-1}(1)

    // multilinear expansion of slots[0] (x) slots[1] (x) ... ; identity
    // components of the bar slots are dropped
    BarElement tensor(const std::vector<AlgebraElement>& slots) const;

  private:
    const FiniteGroup* G_;
    PrimeField F_;
    GroupAlgebra kG_;
    int depth_;
};

// same identity, with the canonical homotopy s(g0 (x) T) = 1 (x) g0 (x) T
HomotopyReport verify_homotopy(const BarResolution& bar, int max_degree = -1);

struct ChainMapToBar { std::vector<std::vector<BarElement>> images; };    // [n][marker]
struct ChainMapFromBar { std::vector<std::vector<TermElement>> images; }; // [n][rank]
struct ChainMapBased { std::vector<std::vector<TermElement>> images; };   // [n][marker]

// module-linear extension of a chain map to a whole term element
BarElement map_through(const BasedResolution& src, const BarResolution& bar,
                       const ChainMapToBar& f, int n, const TermElement& x);
TermElement map_through(const BarResolution& bar, const BasedResolution& tgt,
                        const ChainMapFromBar& f, int n, const BarElement& x);
TermElement map_through(const BasedResolution& src, const BasedResolution& tgt,
                        const ChainMapBased& f, int n, const TermElement& x);

/* Lift the identity of the trivial module over the target's contracting
 * homotopy: f_n(generator) = t_{n-1}(f_{n-1}(d_n(generator))), with the
 * homotopy replaced by x -> sum_e e t(e x) over the source idempotent
 * family when the source terms are not free.  The result is verified to
 * commute with the differentials in every constructed degree; NotChainMap
 * carries the first discrepancy. */
ChainMapToBar build_comparison(const BasedResolution& src, const BarResolution& bar);
ChainMapFromBar build_comparison(const BarResolution& bar, const BasedResolution& tgt,
                                 const TableHomotopy& t);
ChainMapBased build_comparison(const BasedResolution& src, const BasedResolution& tgt,
                               const TableHomotopy& t);

/* Minimal resolution of the trivial module for a cyclic group in dividing
 * characteristic: one free marker per degree, differentials alternating
 * (a - 1) and the norm element.  The group must be presented with element
 * k equal to the k-th power of element 1.  Throws NotModular when the
 * characteristic does not divide the order. */
std::pair<BasedResolution, TableHomotopy> cyclic_minimal_resolution(
    const FiniteGroup& C, const PrimeField& F, int depth);

/* Minimal resolution of the trivial module for the symmetric group on three
 * letters in characteristic 3, over the quiver idempotents of kG: terms
 * alternate A*e1, A*e2 with period four.  The group must be the standard
 * fixture (a = element 1 of order 3, b = element 2 of order 2, bab = a^2). */
std::pair<BasedResolution, TableHomotopy> s3_minimal_resolution(
    const FiniteGroup& G, const PrimeField& F, int depth = 9);

// value of the trivial-coefficient cochain c, extended module-linearly, on a
// bar chain (the module coefficient acts through the augmentation)
Scalar evaluate_on_chain(const CochainSpace& S, const Cochain& c,
                         const BarResolution& bar, const BarElement& x);

/* Move cohomology between the bar presentation (group cochains) and a based
 * resolution.  A form on term n is the vector of its values on the marker
 * generators. */
Cochain transfer_cochain(const CochainSpace& S, const std::vector<Scalar>& form,
                         const ChainMapFromBar& from_bar, int degree,
                         const BasedResolution& R);
std::vector<Scalar> restrict_cochain(const CochainSpace& S, const Cochain& c,
                                     const ChainMapToBar& to_bar, int degree,
                                     const BasedResolution& R, const BarResolution& bar);

/* Coordinates of a cohomology class on the degree-n dual basis of a minimal
 * resolution: restrict_cochain after checking that c is a cocycle
 * (NotACocycle) and that the transported differentials into and out of
 * degree n vanish (NotMinimalHere). */
std::vector<Scalar> identify_class_minimal(const CochainSpace& S, const Cochain& c,
                                           const ChainMapToBar& to_bar,
                                           const BasedResolution& R,
                                           const BarResolution& bar, int degree);

} // namespace bvcoho
