// SPDX-License-Identifier: Apache-2.0
#include "citemetric/stats/pca.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "citemetric/error.hpp"
#include "citemetric/stats/summation.hpp"

namespace citemetric::stats {

Matrix Matrix::from_columns(const std::vector<std::vector<double>>& columns) {
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows)
      throw Error(Errc::LengthMismatch, "matrix columns have different lengths");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

std::vector<double> Matrix::column(std::size_t c) const {
  std::vector<double> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

namespace {

constexpr double kOffDiagonalTolerance = 1e-12;
constexpr std::size_t kMaxSweeps = 100;

double off_diagonal_norm(const Matrix& a) {
  CompensatedSum s;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s.value());
}

}  // namespace

EigenSystem jacobi_eigen(Matrix a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw Error(Errc::DomainError, "jacobi_eigen: matrix is not square");
  Matrix v(n, n);
  for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;

  std::size_t sweep = 0;
  while (off_diagonal_norm(a) >= kOffDiagonalTolerance) {
    if (sweep == kMaxSweeps)
      throw Error(Errc::NonConvergence, "jacobi_eigen: no convergence after 100 sweeps");
    ++sweep;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });
  EigenSystem out;
  out.sweeps = sweep;
  out.vectors = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    out.values.push_back(a(order[i], order[i]));
    for (std::size_t k = 0; k < n; ++k) out.vectors(k, i) = v(k, order[i]);
  }
  return out;
}

Matrix correlation_matrix(const Matrix& data) {
  const std::size_t n = data.rows();
  const std::size_t p = data.cols();
  std::vector<std::vector<double>> z(p);
  for (std::size_t c = 0; c < p; ++c) {
    auto col = data.column(c);
    const double m = mean(col);
    const double ss = centered_ss(col);
    if (!(ss > 0.0))
      throw Error(Errc::ConstantColumn, "column " + std::to_string(c) + " is constant");
    const double norm = std::sqrt(ss);
    for (double& x : col) x = (x - m) / norm;
    z[c] = std::move(col);
  }
  Matrix r(p, p);
  for (std::size_t i = 0; i < p; ++i) {
    r(i, i) = 1.0;
    for (std::size_t j = i + 1; j < p; ++j) {
      CompensatedSum s;
      for (std::size_t k = 0; k < n; ++k) s += z[i][k] * z[j][k];
      r(i, j) = r(j, i) = std::clamp(s.value(), -1.0, 1.0);
    }
  }
  return r;
}

FactorResult pca_unrotated(const Matrix& data) {
  const std::size_t n = data.rows();
  const std::size_t p = data.cols();
  if (p < 2 || n <= p)
    throw Error(Errc::DegenerateInput, "pca: need n > p >= 2 (n = " + std::to_string(n) +
                                           ", p = " + std::to_string(p) + ")");
  const EigenSystem eig = jacobi_eigen(correlation_matrix(data));

  FactorResult out;
  out.eigenvalues = eig.values;
  out.retained = static_cast<std::size_t>(
      std::count_if(eig.values.begin(), eig.values.end(), [](double l) { return l > 1.0; }));
  const double lambda1 = std::max(eig.values.front(), 0.0);
  const double root = std::sqrt(lambda1);
  std::size_t largest = 0;
  for (std::size_t k = 0; k < p; ++k) {
    out.loadings.push_back(eig.vectors(k, 0) * root);
    if (std::abs(out.loadings[k]) > std::abs(out.loadings[largest])) largest = k;
  }
  if (out.loadings[largest] < 0.0)
    for (double& l : out.loadings) l = -l;
  for (double l : out.loadings) {
    out.communalities.push_back(l * l);
    out.contributions.push_back(lambda1 > 0.0 ? l * l / lambda1 : 0.0);
  }
  out.variance_explained = lambda1 / static_cast<double>(p);
  return out;
}

}  // namespace citemetric::stats
