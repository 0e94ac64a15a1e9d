#pragma once
#include <vector>

#include "field.hpp"
#include "group.hpp"

namespace bvcoho {

// element of kG as a dense coefficient vector indexed by group element
using AlgebraElement = std::vector<Scalar>;

class GroupAlgebra {
  public:
    GroupAlgebra(const FiniteGroup& G, const PrimeField& F) : G_(&G), F_(F) {}

    const FiniteGroup& group() const { return *G_; }
    const PrimeField& field() const { return F_; }

    AlgebraElement zero() const { return AlgebraElement(static_cast<size_t>(G_->order()), 0); }
    AlgebraElement basis(int g) const;
    AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) const;
    AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b) const;
    AlgebraElement scale(Scalar k, const AlgebraElement& a) const;
    AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) const; // convolution
    AlgebraElement left_mul(int g, const AlgebraElement& a) const;
    AlgebraElement right_mul(const AlgebraElement& a, int g) const;
    AlgebraElement conj(int g, const AlgebraElement& a) const; // g a g^{-1}
    bool is_zero(const AlgebraElement& a) const;

    // sum of coefficients (image under the augmentation kG -> k)
    Scalar coeffsum(const AlgebraElement& a) const;
    // coefficient of the identity in a*b, i.e. sum_g a(g) b(g^{-1})
    Scalar pairing(const AlgebraElement& a, const AlgebraElement& b) const;
    Scalar coeff_at(const AlgebraElement& a, int g) const { return a[static_cast<size_t>(g)]; }

  private:
    const FiniteGroup* G_;
    PrimeField F_;
};

} // namespace bvcoho
