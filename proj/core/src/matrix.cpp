#include "cutlab/matrix.hpp"

#include <algorithm>
#include <numeric>

#include "cutlab/errors.hpp"

namespace cutlab {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVec>& rows) {
  if (rows.empty()) return RatMatrix();
  RatMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols()) throw DimensionMismatch("ragged row list");
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

RatVec RatMatrix::row(int i) const {
  RatVec r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

RatMatrix RatMatrix::select_rows(const std::vector<int>& idx) const {
  RatMatrix m(static_cast<int>(idx.size()), cols_);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(idx[i], j);
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

void RatMatrix::append_row(const RatVec& r) {
  if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(r.size());
  if (static_cast<int>(r.size()) != cols_) throw DimensionMismatch("appended row has wrong width");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

namespace {

/// Clears denominators row-wise; scaling rows by positive integers preserves
/// rank and determinant sign pattern needs no care here.
std::vector<std::vector<mpz_class>> to_integer_rows(const RatMatrix& m) {
  std::vector<std::vector<mpz_class>> rows(m.rows(), std::vector<mpz_class>(m.cols()));
  for (int i = 0; i < m.rows(); ++i) {
    mpz_class lcm_den = 1;
    for (int j = 0; j < m.cols(); ++j) {
      mpz_class den = m.at(i, j).denominator();
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
    }
    for (int j = 0; j < m.cols(); ++j) {
      const Rational& v = m.at(i, j);
      rows[i][j] = v.numerator() * (lcm_den / v.denominator());
    }
  }
  return rows;
}

}  // namespace

int rank(const RatMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  auto a = to_integer_rows(m);
  const int nr = m.rows(), nc = m.cols();
  // Bareiss fraction-free elimination; prev divides exactly at every step.
  mpz_class prev = 1;
  int r = 0;
  for (int c = 0; c < nc && r < nr; ++c) {
    int piv = -1;
    for (int i = r; i < nr; ++i)
      if (a[i][c] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    for (int i = r + 1; i < nr; ++i) {
      for (int j = c + 1; j < nc; ++j) {
        mpz_class t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

RatVec solve_square(const RatMatrix& m, const RatVec& rhs) {
  const int n = m.rows();
  if (m.cols() != n) throw DimensionMismatch("solve_square needs a square matrix");
  if (static_cast<int>(rhs.size()) != n) throw DimensionMismatch("rhs size mismatch");
  // Rational Gauss-Jordan with first-nonzero pivoting (deterministic).
  std::vector<RatVec> a(n, RatVec(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
    a[i][n] = rhs[i];
  }
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (!a[i][c].is_zero()) { piv = i; break; }
    if (piv < 0) throw SingularMatrix();
    std::swap(a[c], a[piv]);
    const Rational p = a[c][c];
    for (int j = c; j <= n; ++j) a[c][j] /= p;
    for (int i = 0; i < n; ++i) {
      if (i == c || a[i][c].is_zero()) continue;
      const Rational f = a[i][c];
      for (int j = c; j <= n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  RatVec x(n);
  for (int i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

std::vector<int> complete_to_nonsingular(const std::vector<int>& base, const RatMatrix& pool,
                                         const std::vector<int>& try_order) {
  const int n = pool.cols();
  std::vector<int> chosen = base;
  RatMatrix work = pool.select_rows(base);
  int current = rank(work);
  if (current != static_cast<int>(base.size()))
    throw CompletionImpossible("base rows are not linearly independent");
  std::vector<int> order = try_order;
  if (order.empty()) {
    order.resize(pool.rows());
    std::iota(order.begin(), order.end(), 0);
  }
  for (int idx : order) {
    if (current == n) break;
    if (std::find(chosen.begin(), chosen.end(), idx) != chosen.end()) continue;
    RatMatrix trial = work;
    trial.append_row(pool.row(idx));
    if (rank(trial) == current + 1) {
      work = std::move(trial);
      chosen.push_back(idx);
      ++current;
    }
  }
  if (current != n) throw CompletionImpossible("pool rank is below the column count");
  return chosen;
}

Rational det(const RatMatrix& m) {
  const int n = m.rows();
  if (m.cols() != n) throw DimensionMismatch("det needs a square matrix");
  std::vector<RatVec> a(n, RatVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
  Rational d(1);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (!a[i][c].is_zero()) { piv = i; break; }
    if (piv < 0) return Rational(0);
    if (piv != c) { std::swap(a[c], a[piv]); d = -d; }
    d *= a[c][c];
    const Rational p = a[c][c];
    for (int i = c + 1; i < n; ++i) {
      if (a[i][c].is_zero()) continue;
      const Rational f = a[i][c] / p;
      for (int j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return d;
}

}  // namespace cutlab
