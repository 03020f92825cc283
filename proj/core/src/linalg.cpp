#include "fredholm/linalg.hpp"

#include "fredholm/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace fredholm {

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

DenseMatrix DenseMatrix::identity(std::size_t m) {
  DenseMatrix out(m, m);
  for (std::size_t i = 0; i < m; ++i) out(i, i) = 1.0;
  return out;
}

DenseMatrix DenseMatrix::transposed() const {
  DenseMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

std::vector<double> DenseMatrix::multiply(std::span<const double> v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
  std::vector<double> out(rows_, 0.0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  return out;
}

DenseMatrix DenseMatrix::multiply(const DenseMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionMismatch("matrix-matrix size mismatch");
  DenseMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k)
      for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) += (*this)(r, k) * rhs(k, c);
  return out;
}

double DenseMatrix::norm_inf() const {
  double best = 0.0;
  for (std::size_t r = 0; r < rows_; ++r) {
    double s = 0.0;
    for (std::size_t c = 0; c < cols_; ++c) s += std::abs((*this)(r, c));
    best = std::max(best, s);
  }
  return best;
}

double DenseMatrix::norm_1() const {
  double best = 0.0;
  for (std::size_t c = 0; c < cols_; ++c) {
    double s = 0.0;
    for (std::size_t r = 0; r < rows_; ++r) s += std::abs((*this)(r, c));
    best = std::max(best, s);
  }
  return best;
}

DenseMatrix LUFactors::lower() const {
  const std::size_t m = dimension();
  DenseMatrix l = DenseMatrix::identity(m);
  for (std::size_t r = 1; r < m; ++r)
    for (std::size_t c = 0; c < r; ++c) l(r, c) = packed(r, c);
  return l;
}

DenseMatrix LUFactors::upper() const {
  const std::size_t m = dimension();
  DenseMatrix u(m, m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = r; c < m; ++c) u(r, c) = packed(r, c);
  return u;
}

DenseMatrix LUFactors::permute(const DenseMatrix& a) const {
  DenseMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(permutation[r], c);
  return out;
}

LUFactors lu_factor(const DenseMatrix& a, std::optional<double> pivot_tol) {
  if (!a.is_square()) throw DimensionMismatch("lu_factor requires a square matrix");
  for (double v : a.data())
    if (!std::isfinite(v)) throw DimensionMismatch("lu_factor: matrix has non-finite entries");
  const double tol = pivot_tol.value_or(1e-13 * a.norm_inf());
  if (tol < 0.0) throw InputError("pivot tolerance must be nonnegative");

  const std::size_t m = a.rows();
  LUFactors f;
  f.packed = a;
  f.permutation.resize(m);
  std::iota(f.permutation.begin(), f.permutation.end(), std::size_t{0});
  DenseMatrix& lu = f.packed;

  for (std::size_t k = 0; k < m; ++k) {
    std::size_t pivot = k;
    for (std::size_t r = k + 1; r < m; ++r)
      if (std::abs(lu(r, k)) > std::abs(lu(pivot, k))) pivot = r;
    if (std::abs(lu(pivot, k)) <= tol) throw SingularMatrix(k);
    if (pivot != k) {
      for (std::size_t c = 0; c < m; ++c) std::swap(lu(k, c), lu(pivot, c));
      std::swap(f.permutation[k], f.permutation[pivot]);
      f.parity = -f.parity;
      ++f.swaps;
    }
    for (std::size_t r = k + 1; r < m; ++r) {
      const double factor = lu(r, k) / lu(k, k);
      lu(r, k) = factor;
      for (std::size_t c = k + 1; c < m; ++c) lu(r, c) -= factor * lu(k, c);
    }
  }
  return f;
}

std::vector<double> lu_solve(const LUFactors& factors, std::span<const double> b) {
  const std::size_t m = factors.dimension();
  if (b.size() != m) throw DimensionMismatch("lu_solve: right-hand side has wrong length");
  const DenseMatrix& lu = factors.packed;
  std::vector<double> x(m);
  for (std::size_t r = 0; r < m; ++r) {
    double s = b[factors.permutation[r]];
    for (std::size_t c = 0; c < r; ++c) s -= lu(r, c) * x[c];
    x[r] = s;
  }
  for (std::size_t r = m; r-- > 0;) {
    double s = x[r];
    for (std::size_t c = r + 1; c < m; ++c) s -= lu(r, c) * x[c];
    x[r] = s / lu(r, r);
  }
  return x;
}

double condition_1norm(const DenseMatrix& a, const LUFactors& factors) {
  const std::size_t m = a.rows();
  if (m > 64) throw DimensionMismatch("condition_1norm supports m <= 64");
  double inv_norm = 0.0;
  std::vector<double> e(m, 0.0);
  for (std::size_t c = 0; c < m; ++c) {
    std::fill(e.begin(), e.end(), 0.0);
    e[c] = 1.0;
    const auto col = lu_solve(factors, e);
    double s = 0.0;
    for (double v : col) s += std::abs(v);
    inv_norm = std::max(inv_norm, s);
  }
  return a.norm_1() * inv_norm;
}

double condition_1norm(const DenseMatrix& a) {
  if (a.rows() > 64) throw DimensionMismatch("condition_1norm supports m <= 64");
  return condition_1norm(a, lu_factor(a));
}

double norm_inf(std::span<const double> v) {
  double best = 0.0;
  for (double x : v) best = std::max(best, std::abs(x));
  return best;
}

}  // namespace fredholm
