#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace fredholm {

/// Row-major dense matrix of doubles.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  DenseMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static DenseMatrix identity(std::size_t m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const double> data() const { return data_; }

  DenseMatrix transposed() const;
  std::vector<double> multiply(std::span<const double> v) const;
  DenseMatrix multiply(const DenseMatrix& rhs) const;

  double norm_inf() const;  // max row sum
  double norm_1() const;    // max column sum

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// P A = L U with L unit lower and U upper packed into one matrix.
struct LUFactors {
  DenseMatrix packed;
  /// permutation[k] is the row of A that ended up in row k.
  std::vector<std::size_t> permutation;
  int parity = 1;  // +1 for an even number of swaps, -1 for odd
  std::size_t swaps = 0;

  std::size_t dimension() const { return packed.rows(); }
  DenseMatrix lower() const;
  DenseMatrix upper() const;
  /// Rows of A reordered by the permutation.
  DenseMatrix permute(const DenseMatrix& a) const;
};

/// Partial pivoting by largest column magnitude. A pivot with magnitude
/// <= pivot_tol throws SingularMatrix; default tolerance 1e-13 * ||A||_inf.
LUFactors lu_factor(const DenseMatrix& a, std::optional<double> pivot_tol = std::nullopt);

std::vector<double> lu_solve(const LUFactors& factors, std::span<const double> b);

/// ||A||_1 ||A^-1||_1, inverse built column by column. Requires m <= 64.
double condition_1norm(const DenseMatrix& a);
double condition_1norm(const DenseMatrix& a, const LUFactors& factors);

double norm_inf(std::span<const double> v);

}  // namespace fredholm
