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

#include <cmath>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "qsw/game.hpp"
#include "qsw/nsbox.hpp"
#include "qsw/quantum.hpp"

namespace qsw {

inline constexpr double kAdvantageTol = 1e-9;

// Parameters of the two-player game family whose payoff sum is an affine
// image of the tilted CHSH expression.
class GameParams {
 public:
  GameParams(double zeta, double eta) : zeta_(zeta), eta_(eta) {
    if (!(zeta >= 0.0 && zeta < 2.0)) {
      throw DomainError("zeta must lie in [0,2)");
    }
    if (!(eta > 0.0)) throw DomainError("eta must be positive");
  }

  double zeta() const { return zeta_; }
  double eta() const { return eta_; }

 private:
  double zeta_;
  double eta_;
};

// One sample of the incentive curves at Schmidt angle theta.
struct IncentivePoint {
  double theta = 0.0;
  double eta = 0.0;
  double zeta = 0.0;
  double delta_va = 0.0;  // quantum payoff minus classical equilibrium, Alice
  double delta_vb = 0.0;
  double payoff_a = 0.0;
  double payoff_b = 0.0;
  double welfare = 0.0;
};

// The 2-type/2-action Bayesian game with uniform type prior and the family's
// utility table. Cells are grouped by joint type (t_A,t_B), each holding the
// four (s_A,s_B) payoff pairs in row-major order.
inline BayesianGame build_game(const GameParams& params) {
  const double z = params.zeta();
  const double e = params.eta();
  const std::vector<PayoffVector> utilities = {
      // (t_A,t_B) = (0,0)
      {(e * z + 1) / 4, (e * z - 1) / 4},
      {(-2 * e + e * z + 1) / 4, (-2 * e + e * z - 1) / 4},
      {0, 0},
      {0, 0},
      // (0,1)
      {(2 * e + 3) / 4, 3 * e / 4},
      {3.0 / 4, e / 4},
      {3.0 / 4, e / 4},
      {3.0 / 4, e / 4},
      // (1,0)
      {-1.0 / 4, 1.0 / 4},
      {0, 0},
      {(-2 * e - 1) / 4, (-2 * e + 1) / 4},
      {0, 0},
      // (1,1)
      {-e / 4, (-2 * e + 9) / 4},
      {e / 4, 9.0 / 4},
      {e / 4, 9.0 / 4},
      {e / 4, 9.0 / 4},
  };
  return BayesianGame({2, 2}, {2, 2}, {0.25, 0.25, 0.25, 0.25}, utilities);
}

// Payoffs of the payoff-dominant pure equilibria, in closed form:
// ((3 + eta + eta zeta)/16, (9 + eta + eta zeta)/16).
inline PayoffVector classical_equilibrium_payoffs(const GameParams& params) {
  const double common = params.eta() + params.eta() * params.zeta();
  return {(3.0 + common) / 16.0, (9.0 + common) / 16.0};
}

// Player payoffs when the advice is a no-signaling box, read off the box's
// canonical parameters:
//   v_A = [3 + (eta/2)(B_CHSH + 2 zeta m_0) + (m_0 - n_0)] / 16
//   v_B = [9 + (eta/2)(B_CHSH + 2 zeta m_0) - (m_0 - n_0)] / 16
inline PayoffVector payoff_from_box(const GameParams& params, const NSBox& box) {
  const double tilted = tilted_chsh_value(box, params.zeta());
  const double common = 0.5 * params.eta() * tilted;
  const double skew = box.m(0) - box.n(0);
  return {(3.0 + common + skew) / 16.0, (9.0 + common - skew) / 16.0};
}

// v_A + v_B = [12 + eta (B_CHSH + 2 zeta m_0)] / 16; the skew terms cancel.
inline double payoff_sum(const GameParams& params, const NSBox& box) {
  return (12.0 + params.eta() * tilted_chsh_value(box, params.zeta())) / 16.0;
}

// Payoffs of the optimal tilted strategy at Schmidt angle theta, from the
// closed-form box components rather than the Born-rule pipeline.
inline PayoffVector quantum_payoffs(double theta, double eta) {
  if (!(eta > 0.0)) throw DomainError("eta must be positive");
  const ClosedFormComponents parts = closed_form_components(theta);
  const double zeta = zeta_from_theta(theta);
  const double common = 0.5 * eta * (parts.bchsh + 2.0 * zeta * parts.m0);
  const double skew = parts.m0 - parts.n0;
  return {(3.0 + common + skew) / 16.0, (9.0 + common - skew) / 16.0};
}

// Incentives of the quantum strategy over the classical equilibrium of the
// game instance whose tilt matches theta.
inline IncentivePoint delta_v(double theta, double eta) {
  const double zeta = zeta_from_theta(theta);
  const PayoffVector quantum = quantum_payoffs(theta, eta);
  const PayoffVector classical =
      classical_equilibrium_payoffs(GameParams(zeta, eta));
  IncentivePoint point;
  point.theta = theta;
  point.eta = eta;
  point.zeta = zeta;
  point.delta_va = quantum.a - classical.a;
  point.delta_vb = quantum.b - classical.b;
  point.payoff_a = quantum.a;
  point.payoff_b = quantum.b;
  point.welfare = quantum.a + quantum.b;
  return point;
}

inline bool is_quantum_advantageous(double theta, double eta,
                                    double tol = kAdvantageTol) {
  const IncentivePoint p = delta_v(theta, eta);
  return p.delta_va >= -tol && p.delta_vb >= -tol &&
         std::max(p.delta_va, p.delta_vb) > tol;
}

// Smallest Schmidt angle past which Bob's incentive turns positive: the root
// of delta_vb on (0, pi/4], located by a step-1e-3 bracketing scan and
// bisection down to an interval below 1e-6. Throws NoThresholdError when the
// scan sees no sign change and SolverError when it sees more than one.
inline double theta0(double eta) {
  if (!(eta > 0.0)) throw DomainError("eta must be positive");
  constexpr double kScanStep = 1e-3;
  constexpr double kBisectWidth = 1e-6;

  const auto delta_vb_at = [eta](double theta) {
    return delta_v(theta, eta).delta_vb;
  };

  double bracket_lo = 0.0, bracket_hi = 0.0;
  int sign_changes = 0;
  double prev_theta = kScanStep;
  double prev_value = delta_vb_at(prev_theta);
  for (double theta = 2 * kScanStep;; theta += kScanStep) {
    if (theta > kQuarterPi) theta = kQuarterPi;
    const double value = delta_vb_at(theta);
    if ((prev_value < 0.0) != (value < 0.0)) {
      ++sign_changes;
      bracket_lo = prev_theta;
      bracket_hi = theta;
    }
    if (theta >= kQuarterPi) break;
    prev_theta = theta;
    prev_value = value;
  }
  if (sign_changes == 0) {
    const std::string sign = delta_vb_at(kQuarterPi) >= 0.0 ? "positive" : "negative";
    throw NoThresholdError("delta_vB is " + sign +
                           " across the scanned range at eta = " +
                           std::to_string(eta));
  }
  if (sign_changes > 1) {
    throw SolverError("delta_vB changes sign " + std::to_string(sign_changes) +
                      " times at eta = " + std::to_string(eta) +
                      "; threshold is not unique");
  }

  while (bracket_hi - bracket_lo > kBisectWidth) {
    const double mid = 0.5 * (bracket_lo + bracket_hi);
    if (delta_vb_at(mid) < 0.0) {
      bracket_lo = mid;
    } else {
      bracket_hi = mid;
    }
  }
  return 0.5 * (bracket_lo + bracket_hi);
}

// Incentive series over theta in [theta_min, theta_max] at the given step,
// ordered by theta. A non-positive theta_min starts the grid one step in.
inline std::vector<IncentivePoint> scan(double theta_min, double theta_max,
                                        double eta, double step) {
  if (!(step > 0.0 && step < theta_max - theta_min)) {
    throw DomainError("scan step must lie in (0, range width)");
  }
  if (theta_max > kQuarterPi + 1e-12) {
    throw DomainError("scan range must end at or below pi/4");
  }
  std::vector<IncentivePoint> out;
  const double eps = step * 1e-9;
  for (int k = 0;; ++k) {
    const double theta = theta_min + k * step;
    if (theta <= 0.0) continue;
    if (theta > theta_max + eps) break;
    out.push_back(delta_v(std::min(theta, kQuarterPi), eta));
  }
  return out;
}

// theta0 over a log-spaced eta grid. Samples are independent, so they may be
// computed on up to num_threads workers; results are stored by index and the
// output never depends on the thread count.
inline std::vector<std::pair<double, double>> theta0_curve(double eta_min,
                                                           double eta_max,
                                                           int samples,
                                                           int num_threads = 1) {
  if (!(eta_min > 0.0) || !(eta_max > eta_min)) {
    throw DomainError("eta range must satisfy 0 < eta_min < eta_max");
  }
  if (samples < 2) throw DomainError("need at least two samples");

  std::vector<double> etas(samples);
  const double log_ratio = std::log(eta_max / eta_min);
  for (int k = 0; k < samples; ++k) {
    etas[k] = eta_min * std::exp(log_ratio * k / (samples - 1));
  }

  std::vector<std::pair<double, double>> out(samples);
  const int workers =
      std::max(1, std::min(num_threads, samples));
  if (workers == 1) {
    for (int k = 0; k < samples; ++k) out[k] = {etas[k], theta0(etas[k])};
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int k = w; k < samples; k += workers) {
        out[k] = {etas[k], theta0(etas[k])};
      }
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace qsw
