#include "bvcoho/cochain.hpp"

#include <algorithm>
#include <cstdlib>

#include "bvcoho/errors.hpp"

namespace bvcoho {

std::string kind_name(Kind k) {
    switch (k) {
        case Kind::HochschildKG: return "hochschild";
        case Kind::GroupTrivial: return "trivial";
        case Kind::GroupConjugation: return "conjugation";
    }
    throw BadInput("unknown kind");
}

Kind kind_from_name(const std::string& s) {
    if (s == "hochschild") return Kind::HochschildKG;
    if (s == "trivial") return Kind::GroupTrivial;
    if (s == "conjugation") return Kind::GroupConjugation;
    throw BadInput("unknown cochain kind '" + s + "'");
}

static int default_cap(Kind k) { return k == Kind::GroupTrivial ? 8 : 4; }

CochainSpace::CochainSpace(const FiniteGroup& G, const PrimeField& F, Kind kind,
                           std::vector<int> subgroup)
    : G_(&G), F_(F), kG_(G, F), kind_(kind), sub_(std::move(subgroup)),
      local_(static_cast<size_t>(G.order()), -1) {
    std::sort(sub_.begin(), sub_.end());
    sub_.erase(std::unique(sub_.begin(), sub_.end()), sub_.end());
    if (sub_.empty() || sub_[0] != G.identity())
        throw BadInput("subgroup must contain the identity");
    for (size_t i = 0; i < sub_.size(); ++i) {
        if (sub_[i] < 0 || sub_[i] >= G.order()) throw IndexOutOfRange("subgroup element");
        local_[static_cast<size_t>(sub_[i])] = static_cast<int>(i);
    }
    for (int g : sub_) {
        if (local_[static_cast<size_t>(G.inv(g))] < 0)
            throw BadInput("subgroup not closed under inverse");
        for (int h : sub_)
            if (local_[static_cast<size_t>(G.mult(g, h))] < 0)
                throw BadInput("subgroup not closed under product");
    }
    cap_ = default_cap(kind_);
    if (const char* env = std::getenv("BVCOHO_CAP_OVERRIDE")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 0) cap_ = static_cast<int>(v);
    }
}

CochainSpace CochainSpace::whole_group(const FiniteGroup& G, const PrimeField& F, Kind kind) {
    std::vector<int> all(static_cast<size_t>(G.order()));
    for (int g = 0; g < G.order(); ++g) all[static_cast<size_t>(g)] = g;
    return CochainSpace(G, F, kind, std::move(all));
}

int CochainSpace::local_of(int ambient) const {
    if (ambient < 0 || ambient >= G_->order()) throw IndexOutOfRange("element index");
    int l = local_[static_cast<size_t>(ambient)];
    if (l < 0) throw BadInput("element outside the cochain subgroup");
    return l;
}

void CochainSpace::check_degree(int n) const {
    if (n < 0) throw BadInput("negative cochain degree");
    if (n > cap_)
        throw DegreeCapExceeded("degree " + std::to_string(n) + " exceeds cap " +
                                std::to_string(cap_) + " for " + kind_name(kind_));
}

long CochainSpace::block_size() const {
    return kind_ == Kind::GroupTrivial ? 1 : G_->order();
}

long CochainSpace::tuple_count(int n) const {
    long m = static_cast<long>(sub_.size()) - 1, c = 1;
    for (int i = 0; i < n; ++i) c *= m;
    return c;
}

long CochainSpace::rank_tuple(const std::vector<int>& tuple) const {
    long m = static_cast<long>(sub_.size()) - 1, r = 0;
    for (int g : tuple) {
        int l = local_of(g);
        if (l == 0) throw BadInput("tuple contains the identity");
        r = r * m + (l - 1);
    }
    return r;
}

std::vector<int> CochainSpace::unrank_tuple(int n, long r) const {
    long m = static_cast<long>(sub_.size()) - 1;
    std::vector<int> tuple(static_cast<size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        tuple[static_cast<size_t>(i)] = sub_[static_cast<size_t>(r % m + 1)];
        r /= m;
    }
    if (r != 0) throw IndexOutOfRange("tuple rank");
    return tuple;
}

Cochain CochainSpace::zero_cochain(int n) const {
    check_degree(n);
    return Cochain{kind_, n, sub_, std::vector<Scalar>(static_cast<size_t>(dim(n)), 0)};
}

bool CochainSpace::matches(const Cochain& c) const {
    return c.kind == kind_ && c.subgroup == sub_ &&
           static_cast<long>(c.values.size()) == dim(c.degree);
}

void CochainSpace::require(const Cochain& c, int degree) const {
    if (c.kind != kind_) throw KindMismatch(kind_name(c.kind) + " vs " + kind_name(kind_));
    if (c.subgroup != sub_) throw KindMismatch("cochain subgroup differs from space");
    if (degree >= 0 && c.degree != degree)
        throw DegreeMismatch("degree " + std::to_string(c.degree) + ", expected " +
                             std::to_string(degree));
    if (static_cast<long>(c.values.size()) != dim(c.degree))
        throw DimensionMismatch("cochain value storage");
}

AlgebraElement CochainSpace::eval(const Cochain& c, const std::vector<int>& tuple) const {
    require(c);
    if (static_cast<int>(tuple.size()) != c.degree) throw DegreeMismatch("eval tuple length");
    long b = block_size();
    for (int g : tuple)
        if (local_of(g) == 0) return AlgebraElement(static_cast<size_t>(b), 0);
    long r = rank_tuple(tuple) * b;
    return AlgebraElement(c.values.begin() + r, c.values.begin() + r + b);
}

Scalar CochainSpace::eval_scalar(const Cochain& c, const std::vector<int>& tuple) const {
    if (kind_ != Kind::GroupTrivial) throw KindMismatch("scalar eval needs trivial coefficients");
    return eval(c, tuple)[0];
}

void CochainSpace::set_value(Cochain& c, const std::vector<int>& tuple,
                             const AlgebraElement& v) const {
    require(c);
    if (static_cast<long>(v.size()) != block_size()) throw DimensionMismatch("value block");
    long r = rank_tuple(tuple) * block_size();
    std::copy(v.begin(), v.end(), c.values.begin() + r);
}

void CochainSpace::set_scalar(Cochain& c, const std::vector<int>& tuple, Scalar v) const {
    set_value(c, tuple, AlgebraElement{F_.reduce(v)});
}

Cochain CochainSpace::add(const Cochain& a, const Cochain& b) const {
    require(a), require(b, a.degree);
    Cochain out = a;
    for (size_t i = 0; i < out.values.size(); ++i) out.values[i] = F_.add(a.values[i], b.values[i]);
    return out;
}

Cochain CochainSpace::sub(const Cochain& a, const Cochain& b) const {
    return add(a, scale(F_.neg(1), b));
}

Cochain CochainSpace::scale(Scalar k, const Cochain& a) const {
    require(a);
    Cochain out = a;
    for (auto& v : out.values) v = F_.mul(k, v);
    return out;
}

bool CochainSpace::is_zero(const Cochain& a) const {
    require(a);
    return std::all_of(a.values.begin(), a.values.end(), [](Scalar v) { return v == 0; });
}

/* delta(phi)(g_1..g_{n+1}) =
 *   act(g_1, phi(g_2..g_{n+1}))
 * + sum_i (-1)^i phi(.. g_i g_{i+1} ..)
 * + (-1)^{n+1} tail(phi(g_1..g_n), g_{n+1})
 * where act/tail depend on the kind: left and right multiplication for
 * HochschildKG, conjugation and identity for GroupConjugation, identity and
 * identity for GroupTrivial.  Tuples touching the identity contribute 0. */
Cochain CochainSpace::differential(const Cochain& c) const {
    require(c);
    int n = c.degree;
    check_degree(n);
    Cochain out{kind_, n + 1, sub_,
                std::vector<Scalar>(static_cast<size_t>(dim(n + 1)), 0)};
    long b = block_size();
    for (long R = 0; R < tuple_count(n + 1); ++R) {
        std::vector<int> T = unrank_tuple(n + 1, R);
        AlgebraElement acc(static_cast<size_t>(b), 0);
        auto axpy = [&](Scalar sgn, const AlgebraElement& v) {
            for (size_t i = 0; i < acc.size(); ++i) acc[i] = F_.add(acc[i], F_.mul(sgn, v[i]));
        };
        // leading term
        {
            std::vector<int> S(T.begin() + 1, T.end());
            AlgebraElement v = eval(c, S);
            if (kind_ == Kind::HochschildKG) v = kG_.left_mul(T[0], v);
            else if (kind_ == Kind::GroupConjugation) v = kG_.conj(T[0], v);
            axpy(1, v);
        }
        // merge terms
        for (int i = 1; i <= n; ++i) {
            std::vector<int> S;
            S.reserve(static_cast<size_t>(n));
            for (int j = 0; j < i - 1; ++j) S.push_back(T[static_cast<size_t>(j)]);
            S.push_back(G_->mult(T[static_cast<size_t>(i - 1)], T[static_cast<size_t>(i)]));
            for (int j = i + 1; j <= n; ++j) S.push_back(T[static_cast<size_t>(j)]);
            axpy(F_.sign(i), eval(c, S));
        }
        // trailing term
        {
            std::vector<int> S(T.begin(), T.end() - 1);
            AlgebraElement v = eval(c, S);
            if (kind_ == Kind::HochschildKG) v = kG_.right_mul(v, T[static_cast<size_t>(n)]);
            axpy(F_.sign(n + 1), v);
        }
        std::copy(acc.begin(), acc.end(), out.values.begin() + R * b);
    }
    return out;
}

SparseMatrix CochainSpace::differential_matrix(int n) const {
    check_degree(n);
    long b = block_size();
    SparseMatrix M(F_, dim(n + 1), dim(n));
    auto add_block = [&](long outT, long inT, Scalar sgn, int lmul, int rmul, bool cnj) {
        // row (outT, act(w)) += sgn * col (inT, w)
        for (long w = 0; w < b; ++w) {
            long wout = w;
            if (b > 1) {
                int g = static_cast<int>(w);
                if (cnj) g = G_->conj(lmul, g);
                else {
                    if (lmul >= 0) g = G_->mult(lmul, g);
                    if (rmul >= 0) g = G_->mult(g, rmul);
                }
                wout = g;
            }
            M.add(outT * b + wout, inT * b + w, sgn);
        }
    };
    for (long R = 0; R < tuple_count(n + 1); ++R) {
        std::vector<int> T = unrank_tuple(n + 1, R);
        auto in_rank = [&](const std::vector<int>& S) -> long {
            for (int g : S)
                if (local_of(g) == 0) return -1;
            return rank_tuple(S);
        };
        {
            std::vector<int> S(T.begin() + 1, T.end());
            long r = in_rank(S);
            if (r >= 0) {
                if (kind_ == Kind::HochschildKG) add_block(R, r, 1, T[0], -1, false);
                else if (kind_ == Kind::GroupConjugation) add_block(R, r, 1, T[0], -1, true);
                else add_block(R, r, 1, -1, -1, false);
            }
        }
        for (int i = 1; i <= n; ++i) {
            std::vector<int> S;
            for (int j = 0; j < i - 1; ++j) S.push_back(T[static_cast<size_t>(j)]);
            S.push_back(G_->mult(T[static_cast<size_t>(i - 1)], T[static_cast<size_t>(i)]));
            for (int j = i + 1; j <= n; ++j) S.push_back(T[static_cast<size_t>(j)]);
            long r = in_rank(S);
            if (r >= 0) add_block(R, r, F_.sign(i), -1, -1, false);
        }
        {
            std::vector<int> S(T.begin(), T.end() - 1);
            long r = in_rank(S);
            if (r >= 0) {
                if (kind_ == Kind::HochschildKG)
                    add_block(R, r, F_.sign(n + 1), -1, T[static_cast<size_t>(n)], false);
                else add_block(R, r, F_.sign(n + 1), -1, -1, false);
            }
        }
    }
    return M;
}

bool CochainSpace::is_cocycle(const Cochain& c) const {
    return is_zero(differential(c));
}

bool CochainSpace::is_coboundary(const Cochain& c) const {
    require(c);
    if (c.degree == 0) return std::all_of(c.values.begin(), c.values.end(),
                                          [](Scalar v) { return v == 0; });
    return solve(differential_matrix(c.degree - 1), c.values).has_value();
}

QuotientBasis CochainSpace::cohomology(int n) const {
    check_degree(n);
    SparseMatrix ker_of = differential_matrix(n);
    if (n == 0) return quotient_basis(ker_of, SparseMatrix(F_, dim(0), 0));
    return quotient_basis(ker_of, differential_matrix(n - 1));
}

Cochain CochainSpace::from_values(int n, std::vector<Scalar> values) const {
    check_degree(n);
    if (static_cast<long>(values.size()) != dim(n)) throw DimensionMismatch("cochain values");
    for (auto& v : values) v = F_.reduce(v);
    return Cochain{kind_, n, sub_, std::move(values)};
}

} // namespace bvcoho
