#pragma once
#include <cstdint>
#include <vector>

#include "errors.hpp"

namespace bvcoho {

using Scalar = std::uint32_t; // residue in [0, p)

/* GF(p) with p a runtime parameter.  Values are plain uint32_t residues;
 * all arithmetic goes through the field object so a cochain computed mod 3
 * can never silently mix with one mod 2. */
class PrimeField {
  public:
    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (p < 2) throw NotPrime("modulus " + std::to_string(p));
        for (std::uint32_t d = 2; d * d <= p; ++d)
            if (p % d == 0)
                throw NotPrime(std::to_string(p) + " = " + std::to_string(d) +
                               " * " + std::to_string(p / d));
    }

    std::uint32_t p() const { return p_; }
    bool operator==(const PrimeField& o) const { return p_ == o.p_; }
    bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

    Scalar reduce(std::int64_t x) const {
        std::int64_t r = x % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<Scalar>(r);
    }
    Scalar add(Scalar a, Scalar b) const {
        Scalar s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p_ - b; }
    Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
    Scalar mul(Scalar a, Scalar b) const {
        return static_cast<Scalar>((std::uint64_t)a * b % p_);
    }
    Scalar inv(Scalar a) const {
        if (a == 0) throw Error("inverse of zero");
        // extended Euclid
        std::int64_t t = 0, nt = 1, r = p_, nr = a;
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        return reduce(t);
    }
    // (-1)^k
    Scalar sign(long k) const { return (k % 2 == 0) ? 1u : p_ - 1u; }

  private:
    std::uint32_t p_;
};

} // namespace bvcoho
