// Copyright 2026 The qsw Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "qsw/errors.hpp"

namespace qsw::lp {

struct Feasibility {
  bool feasible = false;
  // Phase-1 objective at termination: total artificial mass left, i.e. the
  // l1 residual of the best attainable A x = b with x >= 0.
  double residual = 0.0;
  std::vector<double> solution;
};

// Decides existence of x >= 0 with A x = b via a dense phase-1 simplex.
// Bland's smallest-index rule on both the entering and leaving choice, so the
// method terminates on degenerate systems. Feasible iff the minimized
// artificial mass is <= tol.
inline Feasibility solve_equality_feasibility(
    const std::vector<std::vector<double>>& a, const std::vector<double>& b,
    double tol) {
  const size_t m = a.size();
  const size_t n = m == 0 ? 0 : a[0].size();
  if (b.size() != m) throw DomainError("feasibility: A and b sizes differ");
  for (const auto& row : a) {
    if (row.size() != n) throw DomainError("feasibility: ragged matrix");
  }
  if (m == 0) return {true, 0.0, std::vector<double>(n, 0.0)};

  constexpr double kPivotEps = 1e-12;
  const size_t cols = n + m + 1;  // originals, artificials, rhs

  // Rows 0..m-1: [A | I | b] with b flipped non-negative.
  // Row m: reduced costs for min(sum of artificials); entry `cols-1` holds
  // the negated objective.
  std::vector<std::vector<double>> t(m + 1, std::vector<double>(cols, 0.0));
  for (size_t i = 0; i < m; ++i) {
    const double sign = b[i] < 0.0 ? -1.0 : 1.0;
    for (size_t j = 0; j < n; ++j) t[i][j] = sign * a[i][j];
    t[i][n + i] = 1.0;
    t[i][cols - 1] = sign * b[i];
  }
  for (size_t j = 0; j < n; ++j) {
    for (size_t i = 0; i < m; ++i) t[m][j] -= t[i][j];
  }
  for (size_t i = 0; i < m; ++i) t[m][cols - 1] -= t[i][cols - 1];

  std::vector<size_t> basis(m);
  for (size_t i = 0; i < m; ++i) basis[i] = n + i;

  const size_t max_iterations = 1000 * (m + n) + 1000;
  for (size_t iteration = 0;; ++iteration) {
    if (iteration > max_iterations) {
      throw SolverError("phase-1 simplex exceeded its iteration cap");
    }
    // Entering column: smallest index with negative reduced cost.
    size_t enter = cols - 1;
    for (size_t j = 0; j + 1 < cols; ++j) {
      if (t[m][j] < -kPivotEps) {
        enter = j;
        break;
      }
    }
    if (enter == cols - 1) break;  // optimal

    // Leaving row: minimum ratio, ties broken by smallest basis index.
    size_t leave = m;
    double best_ratio = 0.0;
    for (size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= kPivotEps) continue;
      const double ratio = t[i][cols - 1] / t[i][enter];
      if (leave == m || ratio < best_ratio - kPivotEps ||
          (ratio < best_ratio + kPivotEps && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) {
      // Phase-1 objective is bounded below by zero, so an unbounded ray
      // cannot occur with exact arithmetic.
      throw SolverError("phase-1 simplex detected an unbounded direction");
    }

    const double pivot = t[leave][enter];
    for (size_t j = 0; j < cols; ++j) t[leave][j] /= pivot;
    for (size_t i = 0; i <= m; ++i) {
      if (i == leave) continue;
      const double factor = t[i][enter];
      if (factor == 0.0) continue;
      for (size_t j = 0; j < cols; ++j) t[i][j] -= factor * t[leave][j];
    }
    basis[leave] = enter;
  }

  Feasibility result;
  result.residual = -t[m][cols - 1];
  if (result.residual < 0.0) result.residual = 0.0;
  result.feasible = result.residual <= tol;
  result.solution.assign(n, 0.0);
  for (size_t i = 0; i < m; ++i) {
    if (basis[i] < n) {
      result.solution[basis[i]] = t[i][cols - 1];
    }
  }
  return result;
}

// Is `target` a convex combination of `points`? Feasibility of the 3x|points|
// system (two coordinates plus normalization).
inline bool in_convex_hull(const std::vector<std::array<double, 2>>& points,
                           const std::array<double, 2>& target, double tol) {
  std::vector<std::vector<double>> a(3, std::vector<double>(points.size()));
  for (size_t k = 0; k < points.size(); ++k) {
    a[0][k] = points[k][0];
    a[1][k] = points[k][1];
    a[2][k] = 1.0;
  }
  return solve_equality_feasibility(a, {target[0], target[1], 1.0}, tol)
      .feasible;
}

}  // namespace qsw::lp
