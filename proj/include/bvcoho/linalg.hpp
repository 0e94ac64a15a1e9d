#pragma once
#include <optional>
#include <utility>
#include <vector>

#include "field.hpp"

namespace bvcoho {

// sorted-by-index sparse vector with nonzero values
using SparseVec = std::vector<std::pair<long, Scalar>>;

SparseVec to_sparse(const std::vector<Scalar>& dense);
std::vector<Scalar> to_dense(const SparseVec& v, long len);

/* Triplet-storage matrix over GF(p).  add() accumulates duplicates in the
 * field; zero entries are dropped on normalization. */
class SparseMatrix {
  public:
    SparseMatrix(const PrimeField& F, long rows, long cols)
        : F_(F), rows_(rows), cols_(cols) {}

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    const PrimeField& field() const { return F_; }

    void add(long r, long c, Scalar v);
    std::vector<SparseVec> row_vectors() const; // duplicates combined
    std::vector<SparseVec> col_vectors() const;
    std::vector<Scalar> apply(const std::vector<Scalar>& x) const; // M x
    long nnz() const { return static_cast<long>(entries_.size()); }

  private:
    PrimeField F_;
    long rows_, cols_;
    struct Entry { long r, c; Scalar v; };
    std::vector<Entry> entries_;
};

/* Incremental row echelon over GF(p).  Rows are offered in caller order and
 * reduced against existing pivots; the leading column of a surviving row
 * becomes its pivot (so: smallest row index first, then smallest column).
 * Rows are stored pivot-normalized to 1.  Dense scratch is used below a
 * column threshold; both paths produce identical echelons. */
class Echelon {
  public:
    Echelon(const PrimeField& F, long cols, long history_len = 0);

    // Reduce `row` against the echelon; if nonzero remains, install it as a
    // new pivot row and return its pivot column, else return -1.
    long add_row(SparseVec row, SparseVec history = {});

    // Reduce v; optionally record, per echelon row, the coefficient with
    // which that row was subtracted.
    SparseVec reduce(SparseVec v, std::vector<Scalar>* coeffs = nullptr) const;

    // Eliminate pivot-column entries across rows (full RREF).
    void back_substitute();

    long rank() const { return static_cast<long>(rows_.size()); }
    long cols() const { return cols_; }
    const SparseVec& row(long i) const { return rows_[i]; }
    const SparseVec& history(long i) const { return hist_[i]; }
    long pivot_of_row(long i) const { return pivots_[i]; }
    long row_of_pivot(long col) const { return pivot_row_[col]; } // -1 if free
    std::vector<long> free_columns() const;

  private:
    PrimeField F_;
    long cols_, hist_len_;
    bool dense_scratch_;
    std::vector<SparseVec> rows_, hist_;
    std::vector<long> pivots_;     // per stored row
    std::vector<long> pivot_row_;  // per column, -1 when free
};

// behavior knob only; semantics identical on both sides of the threshold
inline constexpr long kDenseScratchCols = 4096;

long rank(const SparseMatrix& M);

// Basis of {x : Mx = 0}, echelonized, ordered by increasing free column.
std::vector<std::vector<Scalar>> kernel_basis(const SparseMatrix& M);

// One x with Mx = b, or nullopt.  Deterministic: columns considered in order.
std::optional<std::vector<Scalar>> solve(const SparseMatrix& M,
                                         const std::vector<Scalar>& b);

/* Basis data for ker(kernel_of) / im(image_of), with a linear `reduce` onto
 * quotient coordinates.  Representatives are kernel vectors reduced against
 * the image (and against earlier representatives), so reduce(rep_i) = e_i. */
class QuotientBasis {
  public:
    long dim() const { return static_cast<long>(reps_.size()); }
    const std::vector<std::vector<Scalar>>& representatives() const { return reps_; }
    // coordinates of [v]; nullopt when v is not in ker + im span
    std::optional<std::vector<Scalar>> reduce(const std::vector<Scalar>& v) const;

    friend QuotientBasis quotient_basis(const SparseMatrix& kernel_of,
                                        const SparseMatrix& image_of);

  private:
    QuotientBasis(const PrimeField& F, long len) : space_(F, len) {}
    Echelon space_; // image rows first, then representative rows
    long image_rank_ = 0;
    std::vector<std::vector<Scalar>> reps_;
};

QuotientBasis quotient_basis(const SparseMatrix& kernel_of,
                             const SparseMatrix& image_of);

} // namespace bvcoho
