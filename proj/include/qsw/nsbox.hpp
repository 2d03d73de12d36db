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
#include <span>
#include <string>
#include <vector>

#include "qsw/errors.hpp"
#include "qsw/lp.hpp"

namespace qsw {

inline constexpr double kBoxValidityTol = 1e-12;
inline constexpr double kNoSignalingTol = 1e-9;
inline constexpr double kLocalFeasibilityTol = 1e-9;

// 2-input 2-output bipartite conditional distribution P(o_A,o_B|x_A,x_B).
// Rows are input pairs (x_A,x_B), columns outcome pairs (o_A,o_B). Outcomes
// are +1/-1; bit 0 encodes +1 and bit 1 encodes -1 everywhere.
struct FullTable {
  std::array<double, 16> p{};

  static constexpr int index(int x_a, int x_b, int o_a, int o_b) {
    return ((x_a * 2 + x_b) * 2 + o_a) * 2 + o_b;
  }
  double at(int x_a, int x_b, int o_a, int o_b) const {
    return p[index(x_a, x_b, o_a, o_b)];
  }
  double& at(int x_a, int x_b, int o_a, int o_b) {
    return p[index(x_a, x_b, o_a, o_b)];
  }
};

// No-signaling box in the canonical 8-parameter form: c_kj = P(++|k,j),
// m_k = P(o_A=+1|x_A=k), n_j = P(o_B=+1|x_B=j). The full table is what is
// stored; the canonical parameters are recovered exactly as sums, so
// from_table and to_table round-trip bit for bit.
class NSBox {
 public:
  // Builds the table
  //   ( c_kj, m_k - c_kj, n_j - c_kj, 1 - m_k - n_j + c_kj )
  // per input row and checks all 16 entries lie in [0,1].
  NSBox(double c00, double c01, double c10, double c11, double m0, double m1,
        double n0, double n1) {
    const std::array<double, 2> m = {m0, m1};
    const std::array<double, 2> n = {n0, n1};
    const std::array<std::array<double, 2>, 2> c = {{{c00, c01}, {c10, c11}}};
    for (int k = 0; k < 2; ++k) {
      for (int j = 0; j < 2; ++j) {
        table_.at(k, j, 0, 0) = c[k][j];
        table_.at(k, j, 0, 1) = m[k] - c[k][j];
        table_.at(k, j, 1, 0) = n[j] - c[k][j];
        table_.at(k, j, 1, 1) = 1.0 - m[k] - n[j] + c[k][j];
      }
    }
    validate_entries();
  }

  // Canonical parameters as exact sums over the stored table, averaged over
  // the two no-signaling-equivalent contexts (identical halves for any box
  // built by this class, so the average costs nothing).
  double c(int k, int j) const { return table_.at(k, j, 0, 0); }
  double m(int k) const {
    return 0.5 * ((table_.at(k, 0, 0, 0) + table_.at(k, 0, 0, 1)) +
                  (table_.at(k, 1, 0, 0) + table_.at(k, 1, 0, 1)));
  }
  double n(int j) const {
    return 0.5 * ((table_.at(0, j, 0, 0) + table_.at(0, j, 1, 0)) +
                  (table_.at(1, j, 0, 0) + table_.at(1, j, 1, 0)));
  }

  std::array<double, 8> canonical() const {
    return {c(0, 0), c(0, 1), c(1, 0), c(1, 1), m(0), m(1), n(0), n(1)};
  }

  const FullTable& table() const { return table_; }

  friend bool operator==(const NSBox& x, const NSBox& y) {
    return x.table_.p == y.table_.p;
  }

  friend NSBox from_table(const FullTable& table);

 private:
  NSBox() = default;

  void validate_entries() const {
    for (double v : table_.p) {
      if (v < -kBoxValidityTol || v > 1.0 + kBoxValidityTol) {
        throw InvalidDistribution("canonical box entry " + std::to_string(v) +
                                  " outside [0,1]");
      }
    }
  }

  FullTable table_;
};

// Validates positivity, normalization, and the no-signaling marginals, then
// adopts the table as-is.
inline NSBox from_table(const FullTable& table) {
  for (double v : table.p) {
    if (v < -kBoxValidityTol) {
      throw InvalidDistribution("table entry " + std::to_string(v) +
                                " is negative");
    }
  }
  for (int x_a = 0; x_a < 2; ++x_a) {
    for (int x_b = 0; x_b < 2; ++x_b) {
      double total = 0.0;
      for (int o = 0; o < 4; ++o) total += table.at(x_a, x_b, o / 2, o % 2);
      if (std::abs(total - 1.0) > kBoxValidityTol) {
        throw InvalidDistribution("input pair (" + std::to_string(x_a) + "," +
                                  std::to_string(x_b) + ") sums to " +
                                  std::to_string(total));
      }
    }
  }
  double worst = 0.0;
  for (int o = 0; o < 2; ++o) {
    for (int x_a = 0; x_a < 2; ++x_a) {
      const double via0 = table.at(x_a, 0, o, 0) + table.at(x_a, 0, o, 1);
      const double via1 = table.at(x_a, 1, o, 0) + table.at(x_a, 1, o, 1);
      worst = std::max(worst, std::abs(via0 - via1));
    }
    for (int x_b = 0; x_b < 2; ++x_b) {
      const double via0 = table.at(0, x_b, 0, o) + table.at(0, x_b, 1, o);
      const double via1 = table.at(1, x_b, 0, o) + table.at(1, x_b, 1, o);
      worst = std::max(worst, std::abs(via0 - via1));
    }
  }
  if (worst > kNoSignalingTol) {
    throw NotNoSignaling(
        "marginals depend on the remote input (worst mismatch " +
            std::to_string(worst) + ")",
        worst);
  }
  NSBox box;
  box.table_ = table;
  return box;
}

inline FullTable to_table(const NSBox& box) { return box.table(); }

// Deterministic box o_A = alpha*x_A + beta, o_B = gamma*x_B + delta (mod 2).
inline NSBox local_vertex(int alpha, int beta, int gamma, int delta) {
  for (int v : {alpha, beta, gamma, delta}) {
    if (v != 0 && v != 1) throw DomainError("vertex labels must be bits");
  }
  FullTable table;
  for (int x_a = 0; x_a < 2; ++x_a) {
    for (int x_b = 0; x_b < 2; ++x_b) {
      const int o_a = (alpha * x_a + beta) % 2;
      const int o_b = (gamma * x_b + delta) % 2;
      table.at(x_a, x_b, o_a, o_b) = 1.0;
    }
  }
  return from_table(table);
}

// Extremal nonlocal box: uniform over the outcome pairs with
// o_A + o_B = x_A*x_B + alpha*x_A + beta*x_B + gamma (mod 2).
inline NSBox pr_vertex(int alpha, int beta, int gamma) {
  for (int v : {alpha, beta, gamma}) {
    if (v != 0 && v != 1) throw DomainError("vertex labels must be bits");
  }
  FullTable table;
  for (int x_a = 0; x_a < 2; ++x_a) {
    for (int x_b = 0; x_b < 2; ++x_b) {
      const int parity = (x_a * x_b + alpha * x_a + beta * x_b + gamma) % 2;
      for (int o_a = 0; o_a < 2; ++o_a) {
        table.at(x_a, x_b, o_a, (o_a + parity) % 2) = 0.5;
      }
    }
  }
  return from_table(table);
}

// The 16 deterministic vertices in (alpha,beta,gamma,delta) lexicographic
// order. On a 2-type/2-action game with inputs read as types, vertex
// (alpha,beta,gamma,delta) plays Alice's pure strategy t -> alpha*t+beta and
// Bob's t -> gamma*t+delta (mod 2).
inline const std::array<NSBox, 16>& local_vertices() {
  static const std::array<NSBox, 16> vertices = [] {
    std::array<NSBox, 16> out = {
        local_vertex(0, 0, 0, 0), local_vertex(0, 0, 0, 1),
        local_vertex(0, 0, 1, 0), local_vertex(0, 0, 1, 1),
        local_vertex(0, 1, 0, 0), local_vertex(0, 1, 0, 1),
        local_vertex(0, 1, 1, 0), local_vertex(0, 1, 1, 1),
        local_vertex(1, 0, 0, 0), local_vertex(1, 0, 0, 1),
        local_vertex(1, 0, 1, 0), local_vertex(1, 0, 1, 1),
        local_vertex(1, 1, 0, 0), local_vertex(1, 1, 0, 1),
        local_vertex(1, 1, 1, 0), local_vertex(1, 1, 1, 1)};
    return out;
  }();
  return vertices;
}

inline const std::array<NSBox, 8>& pr_vertices() {
  static const std::array<NSBox, 8> vertices = {
      pr_vertex(0, 0, 0), pr_vertex(0, 0, 1), pr_vertex(0, 1, 0),
      pr_vertex(0, 1, 1), pr_vertex(1, 0, 0), pr_vertex(1, 0, 1),
      pr_vertex(1, 1, 0), pr_vertex(1, 1, 1)};
  return vertices;
}

// All 24 extremal points of the no-signaling polytope, local ones first.
inline std::vector<NSBox> polytope_vertices() {
  std::vector<NSBox> out(local_vertices().begin(), local_vertices().end());
  out.insert(out.end(), pr_vertices().begin(), pr_vertices().end());
  return out;
}

// <<x_A,x_B>> = sum o_A o_B P(o_A,o_B|x_A,x_B) with o encoded +1/-1.
inline double correlator(const NSBox& box, int x_a, int x_b) {
  if ((x_a != 0 && x_a != 1) || (x_b != 0 && x_b != 1)) {
    throw DomainError("inputs must be bits");
  }
  const FullTable& t = box.table();
  return t.at(x_a, x_b, 0, 0) - t.at(x_a, x_b, 0, 1) - t.at(x_a, x_b, 1, 0) +
         t.at(x_a, x_b, 1, 1);
}

// E00 + E01 + E10 - E11.
inline double chsh_value(const NSBox& box) {
  return correlator(box, 0, 0) + correlator(box, 0, 1) + correlator(box, 1, 0) -
         correlator(box, 1, 1);
}

// Same expression through the canonical parameters:
// 4 (sum_kj (-1)^{kj} c_kj - m_0 - n_0 + 1/2).
inline double chsh_value_canonical(const NSBox& box) {
  return 4.0 * (box.c(0, 0) + box.c(0, 1) + box.c(1, 0) - box.c(1, 1) -
                box.m(0) - box.n(0) + 0.5);
}

// B_CHSH + 2 zeta m_0. Local bound 2 + 2 zeta over the deterministic boxes.
inline double tilted_chsh_value(const NSBox& box, double zeta) {
  if (!(zeta >= 0.0 && zeta < 2.0)) {
    throw DomainError("tilt parameter must lie in [0,2)");
  }
  return chsh_value(box) + 2.0 * zeta * box.m(0);
}

// K1 * value + K2 with K1 > 0; rescales any Bell expression together with its
// local bound without moving the maximizer.
inline double affine_bell(double box_value, double k1, double k2) {
  if (!(k1 > 0.0)) throw DomainError("affine Bell scale K1 must be positive");
  return k1 * box_value + k2;
}

// Membership in the convex hull of the 16 deterministic vertices, decided by
// phase-1 simplex feasibility on the canonical coordinates.
inline bool is_local(const NSBox& box, double tol = kLocalFeasibilityTol) {
  const auto& vertices = local_vertices();
  std::vector<std::vector<double>> a(9, std::vector<double>(16));
  for (size_t v = 0; v < 16; ++v) {
    const auto params = vertices[v].canonical();
    for (size_t r = 0; r < 8; ++r) a[r][v] = params[r];
    a[8][v] = 1.0;
  }
  const auto params = box.canonical();
  std::vector<double> b(params.begin(), params.end());
  b.push_back(1.0);
  return lp::solve_equality_feasibility(a, b, tol).feasible;
}

// Entrywise convex combination.
inline NSBox mix(std::span<const NSBox> boxes, std::span<const double> weights) {
  if (boxes.empty() || boxes.size() != weights.size()) {
    throw DomainError("mix needs matching, non-empty boxes and weights");
  }
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw DomainError("mix weights must be non-negative");
    total += w;
  }
  if (std::abs(total - 1.0) > kBoxValidityTol) {
    throw DomainError("mix weights sum to " + std::to_string(total));
  }
  FullTable table;
  for (size_t i = 0; i < boxes.size(); ++i) {
    for (int e = 0; e < 16; ++e) table.p[e] += weights[i] * boxes[i].table().p[e];
  }
  return from_table(table);
}

}  // namespace qsw
