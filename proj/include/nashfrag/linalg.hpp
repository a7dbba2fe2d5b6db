// Copyright 2026 The nashfrag Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NASHFRAG_LINALG_HPP_
#define NASHFRAG_LINALG_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

namespace nashfrag {

// Row-major dense matrix; only what the solvers need.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  double operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Solves A x = b by Gaussian elimination with partial pivoting. A may be
// rectangular: an inconsistent system yields nullopt, an underdetermined one
// yields the basic solution with every free variable set to 0. Pivots and
// residual rows are judged against `tol` scaled by the largest |A| entry.
inline std::optional<std::vector<double>> solve_linear_system(
    Matrix a, std::vector<double> b, double tol = 1e-12) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  double scale = 0.0;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      scale = std::max(scale, std::abs(a(r, c)));
    }
  }
  if (scale == 0.0) scale = 1.0;
  const double pivot_tol = tol * scale;

  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t best = row;
    for (std::size_t r = row + 1; r < rows; ++r) {
      if (std::abs(a(r, col)) > std::abs(a(best, col))) best = r;
    }
    if (std::abs(a(best, col)) <= pivot_tol) continue;
    if (best != row) {
      for (std::size_t c = 0; c < cols; ++c) std::swap(a(row, c), a(best, c));
      std::swap(b[row], b[best]);
    }
    for (std::size_t r = row + 1; r < rows; ++r) {
      const double f = a(r, col) / a(row, col);
      if (f == 0.0) continue;
      for (std::size_t c = col; c < cols; ++c) a(r, c) -= f * a(row, c);
      b[r] -= f * b[row];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  double rhs_scale = 1.0;
  for (double v : b) rhs_scale = std::max(rhs_scale, std::abs(v));
  for (std::size_t r = row; r < rows; ++r) {
    if (std::abs(b[r]) > 1e3 * tol * rhs_scale * scale) return std::nullopt;
  }
  std::vector<double> x(cols, 0.0);
  for (std::size_t k = pivot_cols.size(); k-- > 0;) {
    const std::size_t col = pivot_cols[k];
    double v = b[k];
    for (std::size_t c = col + 1; c < cols; ++c) v -= a(k, c) * x[c];
    x[col] = v / a(k, col);
  }
  return x;
}

}  // namespace nashfrag

#endif  // NASHFRAG_LINALG_HPP_
