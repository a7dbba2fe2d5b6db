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

#ifndef NASHFRAG_LP_HPP_
#define NASHFRAG_LP_HPP_

// Dense two-phase tableau simplex with Bland's anti-cycling rule.
//
//   maximize    c . x
//   subject to  A_r . x  (<=, >=, =)  b_r   for every row r
//               x >= 0
//
// Entering column: lowest index with positive reduced cost. Leaving row:
// minimum ratio, ties broken by the lowest basic-variable index. Pivoting is
// fully deterministic.

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "nashfrag/error.hpp"
#include "nashfrag/linalg.hpp"

namespace nashfrag {

enum class Relation { kLessEqual, kGreaterEqual, kEqual };

struct LinearProgram {
  Matrix constraints;
  std::vector<double> bounds;
  // Empty means every row is <=.
  std::vector<Relation> relations;
  std::vector<double> objective;
};

struct LpOptions {
  double tol = 1e-9;
  std::size_t max_iterations = 10000;
};

struct LpSolution {
  std::vector<double> x;
  double objective = 0.0;
  std::size_t iterations = 0;
};

namespace detail {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : cols_(cols), cells_(rows, std::vector<double>(cols + 1, 0.0)) {}

  std::size_t rows() const { return cells_.size(); }
  std::size_t cols() const { return cols_; }
  double& at(std::size_t r, std::size_t c) { return cells_[r][c]; }
  double at(std::size_t r, std::size_t c) const { return cells_[r][c]; }
  double& rhs(std::size_t r) { return cells_[r][cols_]; }
  double rhs(std::size_t r) const { return cells_[r][cols_]; }

  void Pivot(std::size_t row, std::size_t col) {
    const double p = cells_[row][col];
    for (double& v : cells_[row]) v /= p;
    cells_[row][col] = 1.0;
    for (std::size_t r = 0; r < cells_.size(); ++r) {
      if (r == row) continue;
      const double f = cells_[r][col];
      if (f == 0.0) continue;
      for (std::size_t c = 0; c <= cols_; ++c) {
        cells_[r][c] -= f * cells_[row][c];
      }
      cells_[r][col] = 0.0;
    }
  }

  void EraseRow(std::size_t row) {
    cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(row));
  }

 private:
  std::size_t cols_;
  std::vector<std::vector<double>> cells_;
};

// Maximizes cost . x over the current tableau using only `allowed` columns.
// Returns false when unbounded.
inline bool RunSimplex(Tableau& t, std::vector<std::size_t>& basis,
                       const std::vector<double>& cost,
                       const std::vector<bool>& allowed, const LpOptions& opt,
                       std::size_t& iterations) {
  for (;;) {
    std::size_t entering = t.cols();
    for (std::size_t j = 0; j < t.cols(); ++j) {
      if (!allowed[j]) continue;
      double reduced = cost[j];
      for (std::size_t r = 0; r < t.rows(); ++r) {
        reduced -= cost[basis[r]] * t.at(r, j);
      }
      if (reduced > opt.tol) {
        entering = j;
        break;
      }
    }
    if (entering == t.cols()) return true;

    std::size_t leaving = t.rows();
    double best_ratio = 0.0;
    for (std::size_t r = 0; r < t.rows(); ++r) {
      const double a = t.at(r, entering);
      if (a <= opt.tol) continue;
      const double ratio = t.rhs(r) / a;
      if (leaving == t.rows() || ratio < best_ratio - 1e-12 ||
          (std::abs(ratio - best_ratio) <= 1e-12 &&
           basis[r] < basis[leaving])) {
        leaving = r;
        best_ratio = ratio;
      }
    }
    if (leaving == t.rows()) return false;

    if (++iterations > opt.max_iterations) {
      throw LpError(LpError::Kind::kIterationLimit,
                    "simplex iteration cap of " +
                        std::to_string(opt.max_iterations) + " exceeded");
    }
    t.Pivot(leaving, entering);
    basis[leaving] = entering;
  }
}

}  // namespace detail

inline LpSolution lp_solve(const LinearProgram& lp, const LpOptions& opt = {}) {
  const std::size_t m = lp.constraints.rows();
  const std::size_t n = lp.constraints.cols();
  if (lp.bounds.size() != m) {
    throw InvalidArgument("LP has " + std::to_string(m) + " rows but " +
                          std::to_string(lp.bounds.size()) + " bounds");
  }
  if (lp.objective.size() != n) {
    throw InvalidArgument("LP has " + std::to_string(n) + " columns but " +
                          std::to_string(lp.objective.size()) +
                          " objective coefficients");
  }
  if (!lp.relations.empty() && lp.relations.size() != m) {
    throw InvalidArgument("LP relation list does not match the row count");
  }

  // Normalize each row to a non-negative right-hand side.
  std::vector<Relation> rel(m, Relation::kLessEqual);
  std::vector<double> sign(m, 1.0);
  for (std::size_t r = 0; r < m; ++r) {
    if (!lp.relations.empty()) rel[r] = lp.relations[r];
    if (lp.bounds[r] < 0.0) {
      sign[r] = -1.0;
      if (rel[r] == Relation::kLessEqual) {
        rel[r] = Relation::kGreaterEqual;
      } else if (rel[r] == Relation::kGreaterEqual) {
        rel[r] = Relation::kLessEqual;
      }
    }
  }

  std::size_t num_slack = 0;
  std::size_t num_artificial = 0;
  for (std::size_t r = 0; r < m; ++r) {
    if (rel[r] != Relation::kEqual) ++num_slack;
    if (rel[r] != Relation::kLessEqual) ++num_artificial;
  }
  const std::size_t total = n + num_slack + num_artificial;
  const std::size_t first_artificial = n + num_slack;

  detail::Tableau t(m, total);
  std::vector<std::size_t> basis(m);
  std::size_t next_slack = n;
  std::size_t next_artificial = first_artificial;
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      t.at(r, c) = sign[r] * lp.constraints(r, c);
    }
    t.rhs(r) = sign[r] * lp.bounds[r];
    if (rel[r] == Relation::kLessEqual) {
      t.at(r, next_slack) = 1.0;
      basis[r] = next_slack++;
    } else {
      if (rel[r] == Relation::kGreaterEqual) t.at(r, next_slack++) = -1.0;
      t.at(r, next_artificial) = 1.0;
      basis[r] = next_artificial++;
    }
  }

  LpSolution solution;
  std::vector<bool> allowed(total, true);
  if (num_artificial > 0) {
    std::vector<double> phase1(total, 0.0);
    for (std::size_t c = first_artificial; c < total; ++c) phase1[c] = -1.0;
    detail::RunSimplex(t, basis, phase1, allowed, opt, solution.iterations);
    double infeasibility = 0.0;
    for (std::size_t r = 0; r < t.rows(); ++r) {
      if (basis[r] >= first_artificial) infeasibility += t.rhs(r);
    }
    if (infeasibility > opt.tol) {
      throw LpError(LpError::Kind::kInfeasible, "LP is infeasible");
    }
    // Drive remaining (zero-valued) artificials out of the basis.
    for (std::size_t r = t.rows(); r-- > 0;) {
      if (basis[r] < first_artificial) continue;
      std::size_t col = first_artificial;
      for (std::size_t c = 0; c < first_artificial; ++c) {
        if (std::abs(t.at(r, c)) > opt.tol) {
          col = c;
          break;
        }
      }
      if (col == first_artificial) {
        t.EraseRow(r);
        basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(r));
      } else {
        t.Pivot(r, col);
        basis[r] = col;
      }
    }
    for (std::size_t c = first_artificial; c < total; ++c) allowed[c] = false;
  }

  std::vector<double> cost(total, 0.0);
  for (std::size_t c = 0; c < n; ++c) cost[c] = lp.objective[c];
  if (!detail::RunSimplex(t, basis, cost, allowed, opt, solution.iterations)) {
    throw LpError(LpError::Kind::kUnbounded, "LP is unbounded");
  }

  solution.x.assign(n, 0.0);
  for (std::size_t r = 0; r < t.rows(); ++r) {
    if (basis[r] < n) solution.x[basis[r]] = std::max(0.0, t.rhs(r));
  }
  for (std::size_t c = 0; c < n; ++c) {
    solution.objective += lp.objective[c] * solution.x[c];
  }
  return solution;
}

// Convenience form: every row is A_r . x <= b_r.
inline LpSolution lp_solve(Matrix constraints, std::vector<double> bounds,
                           std::vector<double> objective,
                           const LpOptions& opt = {}) {
  LinearProgram lp{std::move(constraints), std::move(bounds), {},
                   std::move(objective)};
  return lp_solve(lp, opt);
}

}  // namespace nashfrag

#endif  // NASHFRAG_LP_HPP_
