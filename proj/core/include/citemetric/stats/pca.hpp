// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

namespace citemetric::stats {

/// Dense row-major matrix; just enough for small covariance work.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix from_columns(const std::vector<std::vector<double>>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::vector<double> column(std::size_t c) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

struct EigenSystem {
  std::vector<double> values;   // descending
  Matrix vectors;               // column i pairs with values[i]
  std::size_t sweeps = 0;
};

/// Cyclic Jacobi for a symmetric matrix; iterates until the off-diagonal
/// Frobenius norm is below 1e-12 (NonConvergence after 100 sweeps).
EigenSystem jacobi_eigen(Matrix symmetric);

/// Pearson correlation matrix of the columns of `data` (n x p).
Matrix correlation_matrix(const Matrix& data);

struct FactorResult {
  std::vector<double> eigenvalues;  // descending
  std::size_t retained = 0;         // eigenvalues > 1
  std::vector<double> loadings;     // first factor, one per variable
  std::vector<double> communalities;
  // loading^2 / eigenvalue: each variable's share of the first factor's variance
  std::vector<double> contributions;
  double variance_explained = 0.0;  // eigenvalue_1 / p
};

/// Unrotated principal-component extraction on the correlation matrix.
/// Loadings are eigenvector_1 * sqrt(lambda_1), signed so the largest
/// magnitude is positive; communalities are loading^2 for one factor.
/// Requires n > p >= 2; throws ConstantColumn, DegenerateInput.
FactorResult pca_unrotated(const Matrix& data);

}  // namespace citemetric::stats
