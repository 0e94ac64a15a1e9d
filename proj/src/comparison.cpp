#include "bvcoho/comparison.hpp"

#include <algorithm>
#include <string>

#include "bvcoho/errors.hpp"

namespace bvcoho {

namespace {

std::string loc(int n, int j) {
    return "degree " + std::to_string(n) + ", marker " + std::to_string(j);
}

std::string tuple_str(const std::vector<int>& t) {
    std::string s = "(";
    for (size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
    return s + ")";
}

} // namespace

BasedResolution::BasedResolution(const FiniteGroup& G, const PrimeField& F,
                                 std::vector<std::vector<ResolutionMarker>> terms,
                                 std::vector<std::vector<std::vector<DiffEntry>>> diff,
                                 std::vector<std::vector<Scalar>> aug,
                                 std::vector<AlgebraElement> idem_family)
    : G_(&G), F_(F), kG_(G, F), terms_(std::move(terms)), diff_(std::move(diff)),
      aug_(std::move(aug)), idems_(std::move(idem_family)) {
    check_shapes();
    solvers_.resize(terms_.size());
    for (size_t n = 0; n < terms_.size(); ++n) {
        for (size_t j = 0; j < terms_[n].size(); ++j) {
            auto& basis = terms_[n][j].basis;
            if (basis.empty()) {
                solvers_[n].push_back(nullptr);
                continue;
            }
            auto ech = std::make_unique<Echelon>(F_, G.order(),
                                                 static_cast<long>(basis.size()));
            long k = 0;
            for (auto& v : basis) {
                if (ech->add_row(to_sparse(v), {{k, 1}}) < 0)
                    throw BadInput("dependent marker basis at " +
                                   loc(static_cast<int>(n), static_cast<int>(j)));
                ++k;
            }
            solvers_[n].push_back(std::move(ech));
        }
    }
    // d(d(x)) = 0 and aug(d(x)) = 0 on every generator
    for (int n = 1; n <= depth(); ++n) {
        for (int j = 0; j < marker_count(n); ++j) {
            TermElement dx = apply_diff(n, generator(n, j));
            if (n == 1) {
                if (apply_aug(dx) != 0)
                    throw BadInput("augmentation of differential nonzero at " + loc(1, j));
            } else if (!is_zero(apply_diff(n - 1, dx))) {
                throw BadInput("differential does not square to zero at " + loc(n, j));
            }
        }
    }
}

void BasedResolution::check_shapes() const {
    const size_t ord = static_cast<size_t>(G_->order());
    if (terms_.empty()) throw BadInput("resolution needs a degree-0 term");
    if (diff_.size() != terms_.size() || !diff_[0].empty())
        throw BadInput("differential table shape");
    auto check_vec = [&](const AlgebraElement& v, const char* what) {
        if (v.size() != ord) throw BadInput(std::string(what) + ": wrong length");
    };
    for (size_t n = 0; n < terms_.size(); ++n) {
        if (terms_[n].empty()) throw BadInput("empty term at degree " + std::to_string(n));
        for (size_t j = 0; j < terms_[n].size(); ++j) {
            const auto& m = terms_[n][j];
            check_vec(m.idem, "marker idempotent");
            if (kG_.mul(m.idem, m.idem) != m.idem)
                throw BadInput("marker generator is not idempotent at " +
                               loc(static_cast<int>(n), static_cast<int>(j)));
            if (!m.basis.empty()) {
                if (m.basis.front() != m.idem)
                    throw BadInput("marker basis must start with the generator");
                for (auto& v : m.basis) {
                    check_vec(v, "marker basis vector");
                    if (kG_.mul(v, m.idem) != v)
                        throw BadInput("basis vector outside the marker module at " +
                                       loc(static_cast<int>(n), static_cast<int>(j)));
                }
            }
        }
        if (n == 0) continue;
        if (diff_[n].size() != terms_[n].size())
            throw BadInput("differential table shape at degree " + std::to_string(n));
        for (size_t j = 0; j < diff_[n].size(); ++j) {
            for (auto& entry : diff_[n][j]) {
                if (entry.target < 0 ||
                    entry.target >= static_cast<int>(terms_[n - 1].size()))
                    throw IndexOutOfRange("differential target marker");
                check_vec(entry.value, "differential value");
                const auto& tgt = terms_[n - 1][static_cast<size_t>(entry.target)];
                if (kG_.mul(entry.value, tgt.idem) != entry.value)
                    throw BadInput("differential value outside the target module at " +
                                   loc(static_cast<int>(n), static_cast<int>(j)));
            }
        }
    }
    if (aug_.size() != terms_[0].size()) throw BadInput("augmentation table shape");
    for (size_t j = 0; j < aug_.size(); ++j) {
        size_t want = terms_[0][j].basis.empty() ? ord : terms_[0][j].basis.size();
        if (aug_[j].size() != want) throw BadInput("augmentation row length");
    }
    AlgebraElement sum = kG_.zero();
    for (auto& e : idems_) {
        check_vec(e, "family idempotent");
        if (kG_.mul(e, e) != e) throw BadInput("family element is not idempotent");
        sum = kG_.add(sum, e);
    }
    if (!idems_.empty() && sum != kG_.basis(G_->identity()))
        throw BadInput("idempotent family does not sum to one");
    for (size_t i = 0; i < idems_.size(); ++i)
        for (size_t j = 0; j < idems_.size(); ++j)
            if (i != j && !kG_.is_zero(kG_.mul(idems_[i], idems_[j])))
                throw BadInput("idempotent family is not orthogonal");
}

int BasedResolution::marker_count(int n) const {
    if (n < 0 || n > depth()) throw IndexOutOfRange("term degree " + std::to_string(n));
    return static_cast<int>(terms_[static_cast<size_t>(n)].size());
}

const ResolutionMarker& BasedResolution::marker(int n, int j) const {
    if (j < 0 || j >= marker_count(n)) throw IndexOutOfRange("marker " + loc(n, j));
    return terms_[static_cast<size_t>(n)][static_cast<size_t>(j)];
}

long BasedResolution::basis_size(int n, int j) const {
    const auto& m = marker(n, j);
    return m.basis.empty() ? G_->order() : static_cast<long>(m.basis.size());
}

AlgebraElement BasedResolution::basis_vector(int n, int j, long k) const {
    const auto& m = marker(n, j);
    if (k < 0 || k >= basis_size(n, j)) throw IndexOutOfRange("basis vector");
    if (m.basis.empty()) return kG_.basis(static_cast<int>(k));
    return m.basis[static_cast<size_t>(k)];
}

TermElement BasedResolution::zero(int n) const {
    return TermElement(static_cast<size_t>(marker_count(n)), kG_.zero());
}

TermElement BasedResolution::generator(int n, int j) const {
    TermElement x = zero(n);
    x[static_cast<size_t>(j)] = marker(n, j).idem;
    return x;
}

bool BasedResolution::is_zero(const TermElement& x) const {
    for (auto& c : x)
        if (!kG_.is_zero(c)) return false;
    return true;
}

TermElement BasedResolution::add(TermElement x, const TermElement& y) const {
    if (x.size() != y.size()) throw DimensionMismatch("term element shapes");
    for (size_t j = 0; j < x.size(); ++j) x[j] = kG_.add(x[j], y[j]);
    return x;
}

TermElement BasedResolution::scale(Scalar k, TermElement x) const {
    for (auto& c : x) c = kG_.scale(k, c);
    return x;
}

TermElement BasedResolution::act(const AlgebraElement& c, TermElement x) const {
    for (auto& v : x) v = kG_.mul(c, v);
    return x;
}

TermElement BasedResolution::apply_diff(int n, const TermElement& x) const {
    if (n < 1 || n > depth()) throw IndexOutOfRange("differential degree");
    if (static_cast<int>(x.size()) != marker_count(n))
        throw DimensionMismatch("term element shape");
    TermElement out = zero(n - 1);
    for (size_t j = 0; j < x.size(); ++j) {
        if (kG_.is_zero(x[j])) continue;
        for (auto& entry : diff_[static_cast<size_t>(n)][j]) {
            auto& slot = out[static_cast<size_t>(entry.target)];
            slot = kG_.add(slot, kG_.mul(x[j], entry.value));
        }
    }
    return out;
}

Scalar BasedResolution::apply_aug(const TermElement& x) const {
    if (static_cast<int>(x.size()) != marker_count(0))
        throw DimensionMismatch("term element shape");
    Scalar out = 0;
    for (size_t j = 0; j < x.size(); ++j) {
        if (kG_.is_zero(x[j])) continue;
        auto coords = coordinates(0, static_cast<int>(j), x[j]);
        for (size_t k = 0; k < coords.size(); ++k)
            out = F_.add(out, F_.mul(aug_[j][k], coords[k]));
    }
    return out;
}

std::vector<Scalar> BasedResolution::coordinates(int n, int j,
                                                 const AlgebraElement& v) const {
    const auto& m = marker(n, j);
    if (v.size() != static_cast<size_t>(G_->order()))
        throw DimensionMismatch("coordinates: vector length");
    if (m.basis.empty()) return v;
    const Echelon& ech = *solvers_[static_cast<size_t>(n)][static_cast<size_t>(j)];
    std::vector<Scalar> coeffs;
    SparseVec rem = ech.reduce(to_sparse(v), &coeffs);
    if (!rem.empty())
        throw BadInput("element outside the marker module at " + loc(n, j));
    std::vector<Scalar> out(m.basis.size(), 0);
    for (long r = 0; r < static_cast<long>(coeffs.size()); ++r) {
        if (coeffs[static_cast<size_t>(r)] == 0) continue;
        for (auto& [i, h] : ech.history(r))
            out[static_cast<size_t>(i)] =
                F_.add(out[static_cast<size_t>(i)], F_.mul(coeffs[static_cast<size_t>(r)], h));
    }
    return out;
}

std::vector<Scalar> BasedResolution::form_values(int n, const TermElement& x) const {
    if (static_cast<int>(x.size()) != marker_count(n))
        throw DimensionMismatch("term element shape");
    std::vector<Scalar> out(x.size(), 0);
    for (size_t j = 0; j < x.size(); ++j) {
        if (terms_[static_cast<size_t>(n)][j].basis.empty())
            out[j] = kG_.coeffsum(x[j]);
        else
            out[j] = coordinates(n, static_cast<int>(j), x[j]).front();
    }
    return out;
}

namespace {

// linear extension of a table homotopy: term n -> term n+1
TermElement apply_table(const BasedResolution& R, const TableHomotopy& t, int n,
                        const TermElement& x) {
    if (n < 0 || n >= static_cast<int>(t.table.size()))
        throw IndexOutOfRange("homotopy degree " + std::to_string(n));
    const auto& level = t.table[static_cast<size_t>(n)];
    if (static_cast<int>(level.size()) != R.marker_count(n))
        throw BadInput("homotopy table shape at degree " + std::to_string(n));
    TermElement out = R.zero(n + 1);
    for (int j = 0; j < R.marker_count(n); ++j) {
        const auto& values = level[static_cast<size_t>(j)];
        if (static_cast<long>(values.size()) != R.basis_size(n, j))
            throw BadInput("homotopy table row length at " + loc(n, j));
        if (R.algebra().is_zero(x[static_cast<size_t>(j)])) continue;
        auto coords = R.coordinates(n, j, x[static_cast<size_t>(j)]);
        for (size_t k = 0; k < coords.size(); ++k) {
            if (coords[k] == 0) continue;
            out = R.add(std::move(out), R.scale(coords[k], values[k]));
        }
    }
    return out;
}

bool term_equal(const BasedResolution& R, const TermElement& a, const TermElement& b) {
    return R.is_zero(R.add(R.scale(R.field().neg(1), a), b));
}

} // namespace

HomotopyReport verify_homotopy(const BasedResolution& R, const TableHomotopy& t) {
    HomotopyReport rep;
    if (R.apply_aug(t.at_unit) != 1) {
        rep.ok = false;
        rep.degree = -1;
        rep.witness = "augmentation of the unit lift is not 1";
        return rep;
    }
    int top = std::min(R.depth() - 1, static_cast<int>(t.table.size()) - 1);
    for (int n = 0; n <= top; ++n) {
        for (int j = 0; j < R.marker_count(n); ++j) {
            for (long k = 0; k < R.basis_size(n, j); ++k) {
                TermElement v = R.zero(n);
                v[static_cast<size_t>(j)] = R.basis_vector(n, j, k);
                TermElement lhs =
                    n == 0 ? R.scale(R.apply_aug(v), t.at_unit)
                           : apply_table(R, t, n - 1, R.apply_diff(n, v));
                lhs = R.add(std::move(lhs), R.apply_diff(n + 1, apply_table(R, t, n, v)));
                if (!term_equal(R, lhs, v)) {
                    rep.ok = false;
                    rep.degree = n;
                    rep.witness = loc(n, j) + ", basis " + std::to_string(k);
                    return rep;
                }
            }
        }
    }
    return rep;
}

BarResolution::BarResolution(const FiniteGroup& G, const PrimeField& F, int depth)
    : G_(&G), F_(F), kG_(G, F), depth_(depth) {
    if (depth < 0) throw BadInput("negative depth");
    double count = 1;
    for (int n = 0; n < depth; ++n) count *= G.order() - 1;
    if (count > 5e8) throw TooLarge("bar resolution depth");
}

long BarResolution::marker_count(int n) const {
    if (n < 0 || n > depth_) throw IndexOutOfRange("bar degree " + std::to_string(n));
    long out = 1;
    for (int i = 0; i < n; ++i) out *= G_->order() - 1;
    return out;
}

long BarResolution::rank_tuple(const std::vector<int>& tuple) const {
    const int m = G_->order() - 1;
    long r = 0;
    for (int g : tuple) {
        if (g <= 0 || g > m) throw IndexOutOfRange("bar tuple entry " + std::to_string(g));
        r = r * m + (g - 1);
    }
    return r;
}

std::vector<int> BarResolution::unrank_tuple(int n, long r) const {
    const int m = G_->order() - 1;
    std::vector<int> tuple(static_cast<size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        tuple[static_cast<size_t>(i)] = static_cast<int>(r % m) + 1;
        r /= m;
    }
    if (r != 0) throw IndexOutOfRange("bar tuple rank");
    return tuple;
}

BarElement BarResolution::generator(int n, long rank) const {
    if (rank < 0 || rank >= marker_count(n)) throw IndexOutOfRange("bar tuple rank");
    return {{rank, kG_.basis(G_->identity())}};
}

bool BarResolution::is_zero(const BarElement& x) const {
    for (auto& [r, c] : x)
        if (!kG_.is_zero(c)) return false;
    return true;
}

BarElement BarResolution::add(BarElement x, const BarElement& y) const {
    for (auto& [r, c] : y) {
        auto it = x.find(r);
        if (it == x.end()) {
            x.emplace(r, c);
        } else {
            it->second = kG_.add(it->second, c);
            if (kG_.is_zero(it->second)) x.erase(it);
        }
    }
    return x;
}

BarElement BarResolution::scale(Scalar k, BarElement x) const {
    if (k == 0) return {};
    for (auto& [r, c] : x) c = kG_.scale(k, c);
    return x;
}

BarElement BarResolution::act(const AlgebraElement& c, const BarElement& x) const {
    BarElement out;
    for (auto& [r, v] : x) {
        AlgebraElement w = kG_.mul(c, v);
        if (!kG_.is_zero(w)) out.emplace(r, std::move(w));
    }
    return out;
}

BarElement BarResolution::apply_diff(int n, const BarElement& x) const {
    if (n < 1) throw IndexOutOfRange("bar differential degree");
    BarElement out;
    auto accum = [&](long rank, const AlgebraElement& v) {
        auto it = out.find(rank);
        if (it == out.end())
            out.emplace(rank, v);
        else
            it->second = kG_.add(it->second, v);
    };
    for (auto& [r, c] : x) {
        if (kG_.is_zero(c)) continue;
        std::vector<int> T = unrank_tuple(n, r);
        std::vector<int> head(T.begin() + 1, T.end());
        accum(rank_tuple(head), kG_.right_mul(c, T[0]));
        for (int pos = 1; pos < n; ++pos) {
            int merged = G_->mult(T[static_cast<size_t>(pos - 1)], T[static_cast<size_t>(pos)]);
            if (merged == G_->identity()) continue;
            std::vector<int> mid;
            mid.reserve(static_cast<size_t>(n) - 1);
            mid.insert(mid.end(), T.begin(), T.begin() + (pos - 1));
            mid.push_back(merged);
            mid.insert(mid.end(), T.begin() + (pos + 1), T.end());
            accum(rank_tuple(mid), kG_.scale(F_.sign(pos), c));
        }
        std::vector<int> tail(T.begin(), T.end() - 1);
        accum(rank_tuple(tail), kG_.scale(F_.sign(n), c));
    }
    for (auto it = out.begin(); it != out.end();)
        it = kG_.is_zero(it->second) ? out.erase(it) : std::next(it);
    return out;
}

Scalar BarResolution::apply_aug(const BarElement& x) const {
    Scalar out = 0;
    for (auto& [r, c] : x) {
        if (r != 0) throw IndexOutOfRange("augmentation of a positive-degree element");
        out = F_.add(out, kG_.coeffsum(c));
    }
    return out;
}

BarElement BarResolution::homotopy(int n, const BarElement& x) const {
    BarElement out;
    const int m = G_->order() - 1;
    for (auto& [r, c] : x) {
        for (int g = 1; g <= m; ++g) {
            Scalar v = c[static_cast<size_t>(g)];
            if (v == 0) continue;
            long rank2 = (static_cast<long>(g) - 1) * marker_count(n) + r;
            auto it = out.find(rank2);
            if (it == out.end())
                out.emplace(rank2, kG_.scale(v, kG_.basis(G_->identity())));
            else
                it->second = kG_.add(it->second, kG_.scale(v, kG_.basis(G_->identity())));
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = kG_.is_zero(it->second) ? out.erase(it) : std::next(it);
    return out;
}

BarElement BarResolution::homotopy_unit() const { return {{0, kG_.basis(G_->identity())}}; }

BarElement BarResolution::tensor(const std::vector<AlgebraElement>& slots) const {
    if (slots.empty()) throw BadInput("tensor needs a coefficient slot");
    const size_t ord = static_cast<size_t>(G_->order());
    for (auto& s : slots)
        if (s.size() != ord) throw DimensionMismatch("tensor slot length");
    BarElement out;
    std::vector<int> tuple(slots.size() - 1);
    auto rec = [&](auto&& self, size_t pos, Scalar coeff) -> void {
        if (pos == slots.size()) {
            AlgebraElement v = kG_.scale(coeff, slots[0]);
            if (kG_.is_zero(v)) return;
            long r = rank_tuple(tuple);
            auto it = out.find(r);
            if (it == out.end())
                out.emplace(r, std::move(v));
            else
                it->second = kG_.add(it->second, v);
            return;
        }
        for (int g = 1; g < G_->order(); ++g) {
            Scalar c = slots[pos][static_cast<size_t>(g)];
            if (c == 0) continue;
            tuple[pos - 1] = g;
            self(self, pos + 1, F_.mul(coeff, c));
        }
    };
    rec(rec, 1, 1);
    for (auto it = out.begin(); it != out.end();)
        it = kG_.is_zero(it->second) ? out.erase(it) : std::next(it);
    return out;
}

namespace {

bool bar_equal(const BarResolution& bar, const BarElement& a, const BarElement& b) {
    return bar.is_zero(bar.add(bar.scale(bar.field().neg(1), a), b));
}

} // namespace

HomotopyReport verify_homotopy(const BarResolution& bar, int max_degree) {
    HomotopyReport rep;
    const FiniteGroup& G = bar.group();
    if (bar.apply_aug(bar.homotopy_unit()) != 1) {
        rep.ok = false;
        rep.degree = -1;
        rep.witness = "augmentation of the unit lift is not 1";
        return rep;
    }
    int top = bar.depth() - 1;
    if (max_degree >= 0) top = std::min(top, max_degree);
    for (int n = 0; n <= top; ++n) {
        for (long r = 0; r < bar.marker_count(n); ++r) {
            for (int g = 0; g < G.order(); ++g) {
                BarElement v = bar.act(bar.algebra().basis(g), bar.generator(n, r));
                BarElement lhs =
                    n == 0 ? bar.scale(bar.apply_aug(v), bar.homotopy_unit())
                           : bar.homotopy(n - 1, bar.apply_diff(n, v));
                lhs = bar.add(std::move(lhs), bar.apply_diff(n + 1, bar.homotopy(n, v)));
                if (!bar_equal(bar, lhs, v)) {
                    rep.ok = false;
                    rep.degree = n;
                    rep.witness = "degree " + std::to_string(n) + ", coefficient g" +
                                  std::to_string(g) + ", tuple " +
                                  tuple_str(bar.unrank_tuple(n, r));
                    return rep;
                }
            }
        }
    }
    return rep;
}

BarElement map_through(const BasedResolution& src, const BarResolution& bar,
                       const ChainMapToBar& f, int n, const TermElement& x) {
    if (n < 0 || n >= static_cast<int>(f.images.size()))
        throw IndexOutOfRange("chain map degree " + std::to_string(n));
    BarElement out;
    for (size_t j = 0; j < x.size(); ++j) {
        if (src.algebra().is_zero(x[j])) continue;
        out = bar.add(std::move(out), bar.act(x[j], f.images[static_cast<size_t>(n)][j]));
    }
    return out;
}

TermElement map_through(const BarResolution& bar, const BasedResolution& tgt,
                        const ChainMapFromBar& f, int n, const BarElement& x) {
    if (n < 0 || n >= static_cast<int>(f.images.size()))
        throw IndexOutOfRange("chain map degree " + std::to_string(n));
    TermElement out = tgt.zero(n);
    for (auto& [r, c] : x) {
        if (bar.algebra().is_zero(c)) continue;
        out = tgt.add(std::move(out),
                      tgt.act(c, f.images[static_cast<size_t>(n)][static_cast<size_t>(r)]));
    }
    return out;
}

TermElement map_through(const BasedResolution& src, const BasedResolution& tgt,
                        const ChainMapBased& f, int n, const TermElement& x) {
    if (n < 0 || n >= static_cast<int>(f.images.size()))
        throw IndexOutOfRange("chain map degree " + std::to_string(n));
    TermElement out = tgt.zero(n);
    for (size_t j = 0; j < x.size(); ++j) {
        if (src.algebra().is_zero(x[j])) continue;
        out = tgt.add(std::move(out), tgt.act(x[j], f.images[static_cast<size_t>(n)][j]));
    }
    return out;
}

namespace {

void require_same_setting(const FiniteGroup& a, const PrimeField& Fa,
                          const FiniteGroup& b, const PrimeField& Fb) {
    if (&a != &b) throw KindMismatch("resolutions over different groups");
    if (Fa != Fb) throw KindMismatch("resolutions over different primes");
}

std::vector<AlgebraElement> family_or_unit(const BasedResolution& src) {
    auto fam = src.idempotent_family();
    if (fam.empty()) fam = {src.algebra().basis(src.group().identity())};
    return fam;
}

} // namespace

ChainMapToBar build_comparison(const BasedResolution& src, const BarResolution& bar) {
    require_same_setting(src.group(), src.field(), bar.group(), bar.field());
    const GroupAlgebra& kG = bar.algebra();
    const PrimeField& F = bar.field();
    auto fam = family_or_unit(src);
    const int top = std::min(src.depth(), bar.depth());
    ChainMapToBar f;
    f.images.resize(static_cast<size_t>(top) + 1);
    for (int n = 0; n <= top; ++n) {
        f.images[static_cast<size_t>(n)].resize(static_cast<size_t>(src.marker_count(n)));
        for (int j = 0; j < src.marker_count(n); ++j) {
            BarElement y;
            if (n == 0) {
                Scalar lam = src.apply_aug(src.generator(0, j));
                for (auto& e : fam)
                    y = bar.add(std::move(y),
                                bar.scale(F.mul(kG.coeffsum(e), lam),
                                          bar.act(e, bar.homotopy_unit())));
                if (bar.apply_aug(y) != lam)
                    throw NotChainMap("augmentation mismatch at " + loc(0, j));
            } else {
                BarElement z;
                TermElement dg = src.apply_diff(n, src.generator(n, j));
                z = map_through(src, bar, f, n - 1, dg);
                for (auto& e : fam)
                    y = bar.add(std::move(y),
                                bar.act(e, bar.homotopy(n - 1, bar.act(e, z))));
                if (!bar_equal(bar, bar.apply_diff(n, y), z))
                    throw NotChainMap("differential mismatch at " + loc(n, j));
            }
            f.images[static_cast<size_t>(n)][static_cast<size_t>(j)] = std::move(y);
        }
    }
    return f;
}

ChainMapFromBar build_comparison(const BarResolution& bar, const BasedResolution& tgt,
                                 const TableHomotopy& t) {
    require_same_setting(bar.group(), bar.field(), tgt.group(), tgt.field());
    const int top = std::min({bar.depth(), tgt.depth(),
                              static_cast<int>(t.table.size())});
    ChainMapFromBar f;
    f.images.resize(static_cast<size_t>(top) + 1);
    for (int n = 0; n <= top; ++n) {
        f.images[static_cast<size_t>(n)].resize(static_cast<size_t>(bar.marker_count(n)));
        for (long r = 0; r < bar.marker_count(n); ++r) {
            TermElement y;
            if (n == 0) {
                y = t.at_unit; // augmentation of the bar generator is 1
                if (tgt.apply_aug(y) != 1)
                    throw NotChainMap("augmentation mismatch at degree 0");
            } else {
                BarElement db = bar.apply_diff(n, bar.generator(n, r));
                TermElement z = map_through(bar, tgt, f, n - 1, db);
                y = apply_table(tgt, t, n - 1, z);
                if (!term_equal(tgt, tgt.apply_diff(n, y), z))
                    throw NotChainMap("differential mismatch at degree " +
                                      std::to_string(n) + ", tuple " +
                                      tuple_str(bar.unrank_tuple(n, r)));
            }
            f.images[static_cast<size_t>(n)][static_cast<size_t>(r)] = std::move(y);
        }
    }
    return f;
}

ChainMapBased build_comparison(const BasedResolution& src, const BasedResolution& tgt,
                               const TableHomotopy& t) {
    require_same_setting(src.group(), src.field(), tgt.group(), tgt.field());
    const GroupAlgebra& kG = tgt.algebra();
    const PrimeField& F = tgt.field();
    auto fam = family_or_unit(src);
    const int top = std::min({src.depth(), tgt.depth(),
                              static_cast<int>(t.table.size())});
    ChainMapBased f;
    f.images.resize(static_cast<size_t>(top) + 1);
    for (int n = 0; n <= top; ++n) {
        f.images[static_cast<size_t>(n)].resize(static_cast<size_t>(src.marker_count(n)));
        for (int j = 0; j < src.marker_count(n); ++j) {
            TermElement y = tgt.zero(n);
            if (n == 0) {
                Scalar lam = src.apply_aug(src.generator(0, j));
                for (auto& e : fam)
                    y = tgt.add(std::move(y),
                                tgt.scale(F.mul(kG.coeffsum(e), lam),
                                          tgt.act(e, t.at_unit)));
                if (tgt.apply_aug(y) != lam)
                    throw NotChainMap("augmentation mismatch at " + loc(0, j));
            } else {
                TermElement dg = src.apply_diff(n, src.generator(n, j));
                TermElement z = map_through(src, tgt, f, n - 1, dg);
                for (auto& e : fam)
                    y = tgt.add(std::move(y),
                                tgt.act(e, apply_table(tgt, t, n - 1, tgt.act(e, z))));
                if (!term_equal(tgt, tgt.apply_diff(n, y), z))
                    throw NotChainMap("differential mismatch at " + loc(n, j));
            }
            f.images[static_cast<size_t>(n)][static_cast<size_t>(j)] = std::move(y);
        }
    }
    return f;
}

std::pair<BasedResolution, TableHomotopy> cyclic_minimal_resolution(
    const FiniteGroup& C, const PrimeField& F, int depth) {
    const int m = C.order();
    if (depth < 1) throw BadInput("depth must be positive");
    if (m % static_cast<int>(F.p()) != 0)
        throw NotModular("characteristic " + std::to_string(F.p()) +
                         " does not divide the order " + std::to_string(m));
    int cur = C.identity();
    for (int k = 0; k < m; ++k) {
        if (cur != k) throw BadInput("cyclic group must list powers of element 1 in order");
        cur = C.mult(cur, 1);
    }
    GroupAlgebra kG(C, F);
    ResolutionMarker free_marker{kG.basis(C.identity()), {}};
    AlgebraElement gen_minus_one = kG.sub(kG.basis(1), kG.basis(C.identity()));
    AlgebraElement norm(static_cast<size_t>(m), 1);

    std::vector<std::vector<ResolutionMarker>> terms(static_cast<size_t>(depth) + 1,
                                                     {free_marker});
    std::vector<std::vector<std::vector<DiffEntry>>> diff(static_cast<size_t>(depth) + 1);
    for (int n = 1; n <= depth; ++n)
        diff[static_cast<size_t>(n)] = {{DiffEntry{0, n % 2 == 1 ? gen_minus_one : norm}}};
    std::vector<std::vector<Scalar>> aug = {std::vector<Scalar>(static_cast<size_t>(m), 1)};

    TableHomotopy t;
    t.at_unit = {kG.basis(C.identity())};
    t.table.resize(static_cast<size_t>(depth));
    for (int n = 0; n < depth; ++n) {
        auto& row = t.table[static_cast<size_t>(n)];
        row.resize(1);
        for (int k = 0; k < m; ++k) {
            AlgebraElement v = kG.zero();
            if (n % 2 == 0) {
                for (int i = 0; i < k; ++i) v[static_cast<size_t>(i)] = 1;
            } else if (k == m - 1) {
                v = kG.basis(C.identity());
            }
            row[0].push_back({v});
        }
    }
    return {BasedResolution(C, F, std::move(terms), std::move(diff), std::move(aug), {}),
            std::move(t)};
}

std::pair<BasedResolution, TableHomotopy> s3_minimal_resolution(const FiniteGroup& G,
                                                                const PrimeField& F,
                                                                int depth) {
    if (F.p() != 3) throw NotModular("this resolution needs characteristic 3");
    if (depth < 1) throw BadInput("depth must be positive");
    const int a = 1, b = 2;
    if (G.order() != 6 || G.mult(b, b) != G.identity() ||
        G.product({a, a, a}) != G.identity() || G.mult(a, a) == G.identity() ||
        G.conj(b, a) != G.mult(a, a))
        throw BadInput("need the standard order-6 fixture with a = element 1, b = element 2");
    const int a2 = G.mult(a, a), ab = G.mult(a, b), a2b = G.mult(a2, b);
    GroupAlgebra kG(G, F);
    const Scalar neg1 = F.neg(1);
    auto vec = [&](std::initializer_list<std::pair<int, Scalar>> entries) {
        AlgebraElement v = kG.zero();
        for (auto& [g, c] : entries) v[static_cast<size_t>(g)] = c;
        return v;
    };
    AlgebraElement e1 = vec({{G.identity(), neg1}, {b, neg1}});
    AlgebraElement e2 = vec({{G.identity(), neg1}, {b, 1}});
    AlgebraElement alpha = vec({{a, neg1}, {a2, 1}, {ab, neg1}, {a2b, 1}});
    AlgebraElement beta = vec({{a, neg1}, {a2, 1}, {ab, 1}, {a2b, neg1}});
    AlgebraElement beta_alpha(static_cast<size_t>(6), neg1);
    AlgebraElement alpha_beta =
        vec({{G.identity(), neg1}, {a, neg1}, {b, 1}, {a2, neg1}, {ab, 1}, {a2b, 1}});

    ResolutionMarker M1{e1, {e1, alpha, beta_alpha}};
    ResolutionMarker M2{e2, {e2, beta, alpha_beta}};
    auto term_kind = [&](int n) { return n == 0 ? 0 : ((n - 1) % 4 < 2 ? 1 : 0); };

    std::vector<std::vector<ResolutionMarker>> terms;
    for (int n = 0; n <= depth; ++n) terms.push_back({term_kind(n) == 0 ? M1 : M2});
    std::vector<std::vector<std::vector<DiffEntry>>> diff(static_cast<size_t>(depth) + 1);
    for (int n = 1; n <= depth; ++n) {
        const AlgebraElement* image = nullptr;
        switch ((n - 1) % 4) {
            case 0: image = &alpha; break;      // A e2 -> A e1
            case 1: image = &alpha_beta; break; // A e2 -> A e2
            case 2: image = &beta; break;       // A e1 -> A e2
            case 3: image = &beta_alpha; break; // A e1 -> A e1
        }
        diff[static_cast<size_t>(n)] = {{DiffEntry{0, *image}}};
    }
    std::vector<std::vector<Scalar>> aug = {{1, 0, 0}};

    TableHomotopy t;
    t.at_unit = {e1};
    t.table.resize(static_cast<size_t>(depth));
    for (int n = 0; n < depth; ++n) {
        std::vector<TermElement> row;
        AlgebraElement z = kG.zero();
        switch (n % 4) {
            case 0: row = {{z}, {e2}, {beta}}; break;   // e1 -> 0, alpha -> e2, beta alpha -> beta
            case 1: row = {{z}, {z}, {e2}}; break;      // e2 -> 0, beta -> 0, alpha beta -> e2
            case 2: row = {{z}, {e1}, {alpha}}; break;  // e2 -> 0, beta -> e1, alpha beta -> alpha
            case 3: row = {{z}, {z}, {e1}}; break;      // e1 -> 0, alpha -> 0, beta alpha -> e1
        }
        t.table[static_cast<size_t>(n)] = {std::move(row)};
    }
    return {BasedResolution(G, F, std::move(terms), std::move(diff), std::move(aug),
                            {e1, e2}),
            std::move(t)};
}

namespace {

void require_trivial_whole(const CochainSpace& S, const FiniteGroup& G) {
    if (S.kind() != Kind::GroupTrivial)
        throw KindMismatch("need trivial-coefficient cochains, got " + kind_name(S.kind()));
    if (&S.group() != &G || S.subgroup_order() != G.order())
        throw KindMismatch("cochain space does not cover the resolution group");
}

} // namespace

Scalar evaluate_on_chain(const CochainSpace& S, const Cochain& c,
                         const BarResolution& bar, const BarElement& x) {
    require_trivial_whole(S, bar.group());
    S.require(c);
    Scalar out = 0;
    const PrimeField& F = S.field();
    for (auto& [r, v] : x) {
        Scalar t = S.eval_scalar(c, bar.unrank_tuple(c.degree, r));
        out = F.add(out, F.mul(bar.algebra().coeffsum(v), t));
    }
    return out;
}

Cochain transfer_cochain(const CochainSpace& S, const std::vector<Scalar>& form,
                         const ChainMapFromBar& from_bar, int degree,
                         const BasedResolution& R) {
    require_trivial_whole(S, R.group());
    if (degree < 0 || degree >= static_cast<int>(from_bar.images.size()))
        throw DegreeMismatch("chain map not built to degree " + std::to_string(degree));
    if (static_cast<int>(form.size()) != R.marker_count(degree))
        throw DimensionMismatch("form length vs marker count");
    const PrimeField& F = S.field();
    Cochain out = S.zero_cochain(degree);
    const auto& images = from_bar.images[static_cast<size_t>(degree)];
    for (long r = 0; r < static_cast<long>(images.size()); ++r) {
        auto fv = R.form_values(degree, images[static_cast<size_t>(r)]);
        Scalar v = 0;
        for (size_t j = 0; j < form.size(); ++j) v = F.add(v, F.mul(form[j], fv[j]));
        out.values[static_cast<size_t>(r)] = v;
    }
    return out;
}

std::vector<Scalar> restrict_cochain(const CochainSpace& S, const Cochain& c,
                                     const ChainMapToBar& to_bar, int degree,
                                     const BasedResolution& R, const BarResolution& bar) {
    require_trivial_whole(S, R.group());
    S.require(c, degree);
    if (degree < 0 || degree >= static_cast<int>(to_bar.images.size()))
        throw DegreeMismatch("chain map not built to degree " + std::to_string(degree));
    std::vector<Scalar> out;
    for (int j = 0; j < R.marker_count(degree); ++j)
        out.push_back(evaluate_on_chain(
            S, c, bar, to_bar.images[static_cast<size_t>(degree)][static_cast<size_t>(j)]));
    return out;
}

std::vector<Scalar> identify_class_minimal(const CochainSpace& S, const Cochain& c,
                                           const ChainMapToBar& to_bar,
                                           const BasedResolution& R,
                                           const BarResolution& bar, int degree) {
    require_trivial_whole(S, R.group());
    S.require(c, degree);
    if (degree + 1 > R.depth())
        throw DegreeMismatch("resolution too shallow to certify degree " +
                             std::to_string(degree));
    if (!S.is_cocycle(c)) throw NotACocycle("identification needs a cocycle");
    auto check_radical = [&](int n) {
        for (int j = 0; j < R.marker_count(n); ++j) {
            auto fv = R.form_values(n - 1, R.apply_diff(n, R.generator(n, j)));
            for (Scalar v : fv)
                if (v != 0)
                    throw NotMinimalHere("transported differential nonzero at " +
                                         loc(n, j));
        }
    };
    if (degree >= 1) check_radical(degree);
    check_radical(degree + 1);
    return restrict_cochain(S, c, to_bar, degree, R, bar);
}

} // namespace bvcoho
