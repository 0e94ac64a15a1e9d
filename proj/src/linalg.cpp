#include "bvcoho/linalg.hpp"

#include <algorithm>
#include <limits>

#include "bvcoho/errors.hpp"

namespace bvcoho {

SparseVec to_sparse(const std::vector<Scalar>& dense) {
    SparseVec out;
    for (long i = 0; i < static_cast<long>(dense.size()); ++i)
        if (dense[i] != 0) out.emplace_back(i, dense[i]);
    return out;
}

std::vector<Scalar> to_dense(const SparseVec& v, long len) {
    std::vector<Scalar> out(static_cast<size_t>(len), 0);
    for (auto& [i, x] : v) {
        if (i < 0 || i >= len) throw IndexOutOfRange("sparse index " + std::to_string(i));
        out[static_cast<size_t>(i)] = x;
    }
    return out;
}

void SparseMatrix::add(long r, long c, Scalar v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw IndexOutOfRange("matrix entry (" + std::to_string(r) + "," + std::to_string(c) + ")");
    v = F_.reduce(v);
    if (v != 0) entries_.push_back({r, c, v});
}

std::vector<SparseVec> SparseMatrix::row_vectors() const {
    std::vector<SparseVec> rows(static_cast<size_t>(rows_));
    auto sorted = entries_;
    std::sort(sorted.begin(), sorted.end(),
              [](const Entry& a, const Entry& b) { return a.r != b.r ? a.r < b.r : a.c < b.c; });
    for (auto& e : sorted) {
        auto& row = rows[static_cast<size_t>(e.r)];
        if (!row.empty() && row.back().first == e.c) {
            row.back().second = F_.add(row.back().second, e.v);
            if (row.back().second == 0) row.pop_back();
        } else {
            row.emplace_back(e.c, e.v);
        }
    }
    return rows;
}

std::vector<SparseVec> SparseMatrix::col_vectors() const {
    std::vector<SparseVec> cols(static_cast<size_t>(cols_));
    auto sorted = entries_;
    std::sort(sorted.begin(), sorted.end(),
              [](const Entry& a, const Entry& b) { return a.c != b.c ? a.c < b.c : a.r < b.r; });
    for (auto& e : sorted) {
        auto& col = cols[static_cast<size_t>(e.c)];
        if (!col.empty() && col.back().first == e.r) {
            col.back().second = F_.add(col.back().second, e.v);
            if (col.back().second == 0) col.pop_back();
        } else {
            col.emplace_back(e.r, e.v);
        }
    }
    return cols;
}

std::vector<Scalar> SparseMatrix::apply(const std::vector<Scalar>& x) const {
    if (static_cast<long>(x.size()) != cols_) throw DimensionMismatch("apply: vector length");
    std::vector<Scalar> out(static_cast<size_t>(rows_), 0);
    for (auto& e : entries_)
        out[static_cast<size_t>(e.r)] =
            F_.add(out[static_cast<size_t>(e.r)], F_.mul(e.v, x[static_cast<size_t>(e.c)]));
    return out;
}

Echelon::Echelon(const PrimeField& F, long cols, long history_len)
    : F_(F), cols_(cols), hist_len_(history_len),
      dense_scratch_(cols <= kDenseScratchCols),
      pivot_row_(static_cast<size_t>(cols), -1) {}

namespace {

// out += tail of a (from index `start`) plus k*b, two-pointer merge
void merge_axpy(const PrimeField& F, SparseVec& out, const SparseVec& a, size_t start,
                const SparseVec& b, Scalar k) {
    size_t i = start, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j >= b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i >= a.size() || b[j].first < a[i].first) {
            Scalar v = F.mul(k, b[j].second);
            if (v != 0) out.emplace_back(b[j].first, v);
            ++j;
        } else {
            Scalar v = F.add(a[i].second, F.mul(k, b[j].second));
            if (v != 0) out.emplace_back(a[i].first, v);
            ++i, ++j;
        }
    }
}

SparseVec scaled(const PrimeField& F, const SparseVec& v, Scalar k) {
    SparseVec out;
    out.reserve(v.size());
    for (auto& [i, x] : v) {
        Scalar y = F.mul(k, x);
        if (y != 0) out.emplace_back(i, y);
    }
    return out;
}

} // namespace

SparseVec Echelon::reduce(SparseVec v, std::vector<Scalar>* coeffs) const {
    if (coeffs) coeffs->assign(rows_.size(), 0);
    if (dense_scratch_) {
        std::vector<std::uint64_t> scratch(static_cast<size_t>(cols_), 0);
        for (auto& [i, x] : v) scratch[static_cast<size_t>(i)] = x;
        const std::uint64_t p = F_.p();
        const std::uint64_t step = (p - 1) * (p - 1) + 1;
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / step;
        std::uint64_t ops = 0;
        for (long c = 0; c < cols_; ++c) {
            Scalar val = static_cast<Scalar>(scratch[static_cast<size_t>(c)] % p);
            scratch[static_cast<size_t>(c)] = val;
            if (val == 0) continue;
            long r = pivot_row_[static_cast<size_t>(c)];
            if (r < 0) continue;
            if (coeffs) (*coeffs)[static_cast<size_t>(r)] = F_.add((*coeffs)[static_cast<size_t>(r)], val);
            std::uint64_t k = p - val; // adding k*row == subtracting val*row
            for (auto& [j, x] : rows_[static_cast<size_t>(r)])
                scratch[static_cast<size_t>(j)] += k * x;
            if (++ops >= limit) {
                for (auto& s : scratch) s %= p;
                ops = 0;
            }
        }
        SparseVec out;
        for (long c = 0; c < cols_; ++c) {
            Scalar val = static_cast<Scalar>(scratch[static_cast<size_t>(c)] % p);
            if (val != 0) out.emplace_back(c, val);
        }
        return out;
    }
    SparseVec cur = std::move(v);
    size_t i = 0;
    while (i < cur.size()) {
        auto [c, val] = cur[i];
        long r = pivot_row_[static_cast<size_t>(c)];
        if (r < 0) {
            ++i;
            continue;
        }
        if (coeffs) (*coeffs)[static_cast<size_t>(r)] = F_.add((*coeffs)[static_cast<size_t>(r)], val);
        SparseVec next(cur.begin(), cur.begin() + static_cast<long>(i));
        merge_axpy(F_, next, cur, i, rows_[static_cast<size_t>(r)], F_.neg(val));
        cur = std::move(next);
    }
    return cur;
}

long Echelon::add_row(SparseVec row, SparseVec history) {
    std::vector<Scalar> coeffs;
    SparseVec rem = reduce(std::move(row), hist_len_ > 0 ? &coeffs : nullptr);
    if (rem.empty()) return -1;
    long piv = rem.front().first;
    Scalar lead = rem.front().second;
    Scalar inv = F_.inv(lead);
    if (hist_len_ > 0) {
        SparseVec h = std::move(history);
        for (long r = 0; r < static_cast<long>(coeffs.size()); ++r) {
            if (coeffs[static_cast<size_t>(r)] == 0) continue;
            SparseVec next;
            merge_axpy(F_, next, h, 0, hist_[static_cast<size_t>(r)],
                       F_.neg(coeffs[static_cast<size_t>(r)]));
            h = std::move(next);
        }
        hist_.push_back(scaled(F_, h, inv));
    }
    rows_.push_back(scaled(F_, rem, inv));
    pivots_.push_back(piv);
    pivot_row_[static_cast<size_t>(piv)] = static_cast<long>(rows_.size()) - 1;
    return piv;
}

void Echelon::back_substitute() {
    // decreasing pivot order: each row's tail only meets already-final rows
    std::vector<long> order(rows_.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<long>(i);
    std::sort(order.begin(), order.end(),
              [&](long a, long b) { return pivots_[static_cast<size_t>(a)] > pivots_[static_cast<size_t>(b)]; });
    for (long idx : order) {
        auto& row = rows_[static_cast<size_t>(idx)];
        bool again = true;
        while (again) {
            again = false;
            for (size_t k = 1; k < row.size(); ++k) {
                long c = row[k].first;
                long owner = pivot_row_[static_cast<size_t>(c)];
                if (owner < 0 || owner == idx) continue;
                Scalar val = row[k].second;
                SparseVec next;
                merge_axpy(F_, next, row, 0, rows_[static_cast<size_t>(owner)], F_.neg(val));
                row = std::move(next);
                if (hist_len_ > 0) {
                    SparseVec nh;
                    merge_axpy(F_, nh, hist_[static_cast<size_t>(idx)], 0,
                               hist_[static_cast<size_t>(owner)], F_.neg(val));
                    hist_[static_cast<size_t>(idx)] = std::move(nh);
                }
                again = true;
                break;
            }
        }
    }
}

std::vector<long> Echelon::free_columns() const {
    std::vector<long> out;
    for (long c = 0; c < cols_; ++c)
        if (pivot_row_[static_cast<size_t>(c)] < 0) out.push_back(c);
    return out;
}

long rank(const SparseMatrix& M) {
    Echelon ech(M.field(), M.cols());
    for (auto& row : M.row_vectors()) ech.add_row(row);
    return ech.rank();
}

std::vector<std::vector<Scalar>> kernel_basis(const SparseMatrix& M) {
    const PrimeField& F = M.field();
    Echelon ech(F, M.cols());
    for (auto& row : M.row_vectors()) ech.add_row(row);
    ech.back_substitute();
    std::vector<std::vector<Scalar>> out;
    for (long f : ech.free_columns()) {
        std::vector<Scalar> v(static_cast<size_t>(M.cols()), 0);
        v[static_cast<size_t>(f)] = 1;
        for (long r = 0; r < ech.rank(); ++r) {
            for (auto& [c, x] : ech.row(r)) {
                if (c == f) v[static_cast<size_t>(ech.pivot_of_row(r))] = F.neg(x);
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<std::vector<Scalar>> solve(const SparseMatrix& M, const std::vector<Scalar>& b) {
    if (static_cast<long>(b.size()) != M.rows()) throw DimensionMismatch("solve: rhs length");
    const PrimeField& F = M.field();
    Echelon ech(F, M.rows(), M.cols());
    long j = 0;
    for (auto& col : M.col_vectors()) ech.add_row(col, {{j++, 1}});
    std::vector<Scalar> coeffs;
    SparseVec rem = ech.reduce(to_sparse(b), &coeffs);
    if (!rem.empty()) return std::nullopt;
    std::vector<Scalar> x(static_cast<size_t>(M.cols()), 0);
    for (long r = 0; r < static_cast<long>(coeffs.size()); ++r) {
        if (coeffs[static_cast<size_t>(r)] == 0) continue;
        for (auto& [i, v] : ech.history(r))
            x[static_cast<size_t>(i)] = F.add(x[static_cast<size_t>(i)],
                                              F.mul(coeffs[static_cast<size_t>(r)], v));
    }
    return x;
}

QuotientBasis quotient_basis(const SparseMatrix& kernel_of, const SparseMatrix& image_of) {
    const PrimeField& F = kernel_of.field();
    long len = kernel_of.cols();
    if (image_of.rows() != len) throw DimensionMismatch("quotient_basis: image target length");
    QuotientBasis Q(F, len);
    for (auto& col : image_of.col_vectors()) Q.space_.add_row(col);
    Q.image_rank_ = Q.space_.rank();
    for (auto& v : kernel_basis(kernel_of)) {
        long piv = Q.space_.add_row(to_sparse(v));
        if (piv >= 0) Q.reps_.push_back(to_dense(Q.space_.row(Q.space_.rank() - 1), len));
    }
    return Q;
}

std::optional<std::vector<Scalar>> QuotientBasis::reduce(const std::vector<Scalar>& v) const {
    std::vector<Scalar> coeffs;
    SparseVec rem = space_.reduce(to_sparse(v), &coeffs);
    if (!rem.empty()) return std::nullopt;
    return std::vector<Scalar>(coeffs.begin() + image_rank_, coeffs.end());
}

} // namespace bvcoho
