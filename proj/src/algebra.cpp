#include "bvcoho/algebra.hpp"

#include "bvcoho/errors.hpp"

namespace bvcoho {

AlgebraElement GroupAlgebra::basis(int g) const {
    AlgebraElement a = zero();
    a[static_cast<size_t>(g)] = 1;
    return a;
}

AlgebraElement GroupAlgebra::add(const AlgebraElement& a, const AlgebraElement& b) const {
    if (a.size() != b.size()) throw DimensionMismatch("algebra add");
    AlgebraElement out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = F_.add(a[i], b[i]);
    return out;
}

AlgebraElement GroupAlgebra::sub(const AlgebraElement& a, const AlgebraElement& b) const {
    if (a.size() != b.size()) throw DimensionMismatch("algebra sub");
    AlgebraElement out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = F_.sub(a[i], b[i]);
    return out;
}

AlgebraElement GroupAlgebra::scale(Scalar k, const AlgebraElement& a) const {
    AlgebraElement out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = F_.mul(k, a[i]);
    return out;
}

AlgebraElement GroupAlgebra::mul(const AlgebraElement& a, const AlgebraElement& b) const {
    AlgebraElement out = zero();
    for (int g = 0; g < G_->order(); ++g) {
        if (a[static_cast<size_t>(g)] == 0) continue;
        for (int h = 0; h < G_->order(); ++h) {
            if (b[static_cast<size_t>(h)] == 0) continue;
            size_t gh = static_cast<size_t>(G_->mult(g, h));
            out[gh] = F_.add(out[gh], F_.mul(a[static_cast<size_t>(g)], b[static_cast<size_t>(h)]));
        }
    }
    return out;
}

AlgebraElement GroupAlgebra::left_mul(int g, const AlgebraElement& a) const {
    AlgebraElement out = zero();
    for (int h = 0; h < G_->order(); ++h)
        out[static_cast<size_t>(G_->mult(g, h))] = a[static_cast<size_t>(h)];
    return out;
}

AlgebraElement GroupAlgebra::right_mul(const AlgebraElement& a, int g) const {
    AlgebraElement out = zero();
    for (int h = 0; h < G_->order(); ++h)
        out[static_cast<size_t>(G_->mult(h, g))] = a[static_cast<size_t>(h)];
    return out;
}

AlgebraElement GroupAlgebra::conj(int g, const AlgebraElement& a) const {
    AlgebraElement out = zero();
    for (int h = 0; h < G_->order(); ++h)
        out[static_cast<size_t>(G_->conj(g, h))] = a[static_cast<size_t>(h)];
    return out;
}

bool GroupAlgebra::is_zero(const AlgebraElement& a) const {
    for (Scalar x : a)
        if (x != 0) return false;
    return true;
}

Scalar GroupAlgebra::coeffsum(const AlgebraElement& a) const {
    Scalar s = 0;
    for (Scalar x : a) s = F_.add(s, x);
    return s;
}

Scalar GroupAlgebra::pairing(const AlgebraElement& a, const AlgebraElement& b) const {
    Scalar s = 0;
    for (int g = 0; g < G_->order(); ++g)
        s = F_.add(s, F_.mul(a[static_cast<size_t>(g)], b[static_cast<size_t>(G_->inv(g))]));
    return s;
}

} // namespace bvcoho
