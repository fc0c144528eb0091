#pragma once

#include <cstddef>
#include <vector>

#include "cutlab/rational.hpp"

namespace cutlab {

/// Dense rational matrix. Row-major; immutable use after construction is the norm.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

  static RatMatrix identity(int n);
  static RatMatrix from_rows(const std::vector<RatVec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  RatVec row(int i) const;
  /// Submatrix restricted to the given rows (kept in the given order).
  RatMatrix select_rows(const std::vector<int>& idx) const;
  RatMatrix transpose() const;
  void append_row(const RatVec& r);

  bool operator==(const RatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  int rows_, cols_;
  std::vector<Rational> data_;
};

/// Exact rank over Q via fraction-free (Bareiss) elimination on the
/// denominator-cleared integer matrix.
int rank(const RatMatrix& m);

/// Exact solution of a square nonsingular system M x = rhs.
/// Throws SingularMatrix.
RatVec solve_square(const RatMatrix& m, const RatVec& rhs);

/// Extends the independent row set `base` (indices into `pool`) to a set of
/// size pool.cols() whose rows are linearly independent, scanning candidate
/// rows in `try_order` (or 0..rows-1 if empty) and greedily keeping those
/// that increase the rank. Throws CompletionImpossible if the pool's rank is
/// insufficient.
std::vector<int> complete_to_nonsingular(const std::vector<int>& base, const RatMatrix& pool,
                                         const std::vector<int>& try_order = {});

Rational det(const RatMatrix& m);

}  // namespace cutlab
