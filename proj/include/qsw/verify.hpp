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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "qsw/game.hpp"
#include "qsw/io.hpp"
#include "qsw/lp.hpp"
#include "qsw/nsbox.hpp"
#include "qsw/quantum.hpp"
#include "qsw/swgame.hpp"

// Self-check suites over the library's structural identities, runnable from
// the CLI. Each check re-derives its expectation through a route different
// from the implementation it exercises.

namespace qsw::verify {

struct CheckResult {
  std::string group;
  std::string name;
  bool passed = false;
  std::string detail;  // first counterexample or worst deviation
};

namespace detail {

class Recorder {
 public:
  explicit Recorder(std::string group) : group_(std::move(group)) {}

  void check(const std::string& name, bool passed,
             const std::string& detail = "") {
    results_.push_back({group_, name, passed, detail});
  }

  // Runs body() and records any exception as a failure.
  template <typename Body>
  void guarded(const std::string& name, Body&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      results_.push_back({group_, name, false, e.what()});
    }
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::string group_;
  std::vector<CheckResult> results_;
};

inline std::vector<double> dirichlet(std::mt19937_64& rng, size_t size) {
  std::exponential_distribution<double> exp1(1.0);
  std::vector<double> w(size);
  double total = 0.0;
  for (double& v : w) {
    v = exp1(rng);
    total += v;
  }
  for (double& v : w) v /= total;
  // Renormalize the rounding residue onto the largest entry so the weights
  // pass the 1e-12 sum check.
  double sum = 0.0;
  for (double v : w) sum += v;
  *std::max_element(w.begin(), w.end()) += 1.0 - sum;
  return w;
}

inline NSBox random_polytope_box(std::mt19937_64& rng) {
  static const std::vector<NSBox> vertices = polytope_vertices();
  const auto weights = dirichlet(rng, vertices.size());
  return mix(vertices, weights);
}

inline std::array<double, 3> random_bloch(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::array<double, 3> v;
  double norm = 0.0;
  do {
    for (double& c : v) c = gauss(rng);
    norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  } while (norm < 1e-6);
  for (double& c : v) c /= norm;
  // Snap the norm's last ulp so the unit-length validation never trips.
  const double exact = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  for (double& c : v) c /= exact;
  return v;
}

inline QuantumStrategy random_strategy(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, kQuarterPi);
  return QuantumStrategy{SchmidtState(angle(rng)),
                         {ProjectiveMeasurement(random_bloch(rng)),
                          ProjectiveMeasurement(random_bloch(rng))},
                         {ProjectiveMeasurement(random_bloch(rng)),
                          ProjectiveMeasurement(random_bloch(rng))}};
}

inline BayesianGame random_game(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> size(1, 2);
  std::uniform_real_distribution<double> value(-5.0, 5.0);
  const std::array<int, 2> types = {size(rng), size(rng)};
  const std::array<int, 2> actions = {size(rng) + 1, size(rng) + 1};
  auto prior = dirichlet(rng, static_cast<size_t>(types[0]) * types[1]);
  std::vector<PayoffVector> utilities(static_cast<size_t>(types[0]) *
                                      types[1] * actions[0] * actions[1]);
  for (auto& u : utilities) u = {value(rng), value(rng)};
  return BayesianGame(types, actions, std::move(prior), std::move(utilities));
}

inline BehavioralStrategy random_behavioral(std::mt19937_64& rng,
                                            const BayesianGame& game) {
  BehavioralStrategy strat;
  for (int t = 0; t < game.num_types(0); ++t) {
    strat.alice.push_back(dirichlet(rng, game.num_actions(0)));
  }
  for (int t = 0; t < game.num_types(1); ++t) {
    strat.bob.push_back(dirichlet(rng, game.num_actions(1)));
  }
  return strat;
}

// Independent route for the behavioral-strategy payoff: enumerate pure
// profiles and mix their payoffs with the product of per-type probabilities.
inline PayoffVector payoff_by_profile_mixture(const BayesianGame& game,
                                              const BehavioralStrategy& strat) {
  PayoffVector total;
  for (const auto& profile : enumerate_pure_profiles(game)) {
    double weight = 1.0;
    for (int t = 0; t < game.num_types(0); ++t) {
      weight *= strat.alice[t][profile.alice[t]];
    }
    for (int t = 0; t < game.num_types(1); ++t) {
      weight *= strat.bob[t][profile.bob[t]];
    }
    const PayoffVector v = expected_payoff(game, profile);
    total.a += weight * v.a;
    total.b += weight * v.b;
  }
  return total;
}

// Independent route for the box payoff: average the family game's utilities
// against the full conditional table, types as inputs, outcome bits as
// actions.
inline PayoffVector payoff_by_table_average(const GameParams& params,
                                            const NSBox& box) {
  const BayesianGame game = build_game(params);
  const FullTable table = to_table(box);
  PayoffVector total;
  for (int ta = 0; ta < 2; ++ta) {
    for (int tb = 0; tb < 2; ++tb) {
      for (int oa = 0; oa < 2; ++oa) {
        for (int ob = 0; ob < 2; ++ob) {
          const double w = 0.25 * table.at(ta, tb, oa, ob);
          const PayoffVector& u = game.utility(ta, tb, oa, ob);
          total.a += w * u.a;
          total.b += w * u.b;
        }
      }
    }
  }
  return total;
}

inline BayesianGame battle_of_sexes() {
  return BayesianGame({1, 1}, {2, 2}, {1.0},
                      {{2, 1}, {0, 0}, {0, 0}, {1, 2}});
}

inline BayesianGame chicken() {
  return BayesianGame({1, 1}, {2, 2}, {1.0},
                      {{6, 6}, {2, 7}, {7, 2}, {0, 0}});
}

}  // namespace detail

inline std::vector<CheckResult> run_game_core(uint64_t seed) {
  detail::Recorder rec("game_core");
  std::mt19937_64 rng(seed);

  rec.guarded("payoff_vs_profile_mixture", [&] {
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
      const BayesianGame game = detail::random_game(rng);
      const BehavioralStrategy strat = detail::random_behavioral(rng, game);
      const PayoffVector direct = expected_payoff(game, strat);
      const PayoffVector mixture = detail::payoff_by_profile_mixture(game, strat);
      worst = std::max({worst, std::abs(direct.a - mixture.a),
                        std::abs(direct.b - mixture.b)});
    }
    rec.check("payoff_vs_profile_mixture", worst <= 1e-12,
              "worst deviation " + io::format_number(worst));
  });

  rec.guarded("point_mass_advice", [&] {
    bool ok = true;
    std::string detail;
    for (int trial = 0; trial < 100 && ok; ++trial) {
      const BayesianGame game = detail::random_game(rng);
      const auto profiles = enumerate_pure_profiles(game);
      for (const auto& profile : profiles) {
        const PayoffVector direct = expected_payoff(game, profile);
        const PayoffVector via_advice = expected_payoff_correlated(
            game, CorrelatedAdvice::point_mass(game, profile));
        if (direct.a != via_advice.a || direct.b != via_advice.b) {
          ok = false;
          detail = "trial " + std::to_string(trial);
          break;
        }
      }
    }
    rec.check("point_mass_advice", ok, detail);
  });

  rec.guarded("advice_convexity", [&] {
    double worst = 0.0;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
      const BayesianGame game = detail::random_game(rng);
      const int na = qsw::detail::pure_strategy_count(game, 0);
      const int nb = qsw::detail::pure_strategy_count(game, 1);
      const CorrelatedAdvice mu(na, nb,
                                detail::dirichlet(rng, static_cast<size_t>(na) * nb));
      const CorrelatedAdvice nu(na, nb,
                                detail::dirichlet(rng, static_cast<size_t>(na) * nb));
      const double lambda = unit(rng);
      std::vector<double> blended(static_cast<size_t>(na) * nb);
      for (size_t i = 0; i < blended.size(); ++i) {
        blended[i] = lambda * mu.prob_flat()[i] + (1.0 - lambda) * nu.prob_flat()[i];
      }
      double sum = 0.0;
      for (double v : blended) sum += v;
      blended[0] += 1.0 - sum;
      const PayoffVector left = expected_payoff_correlated(
          game, CorrelatedAdvice(na, nb, blended));
      const PayoffVector pm = expected_payoff_correlated(game, mu);
      const PayoffVector pn = expected_payoff_correlated(game, nu);
      worst = std::max(
          {worst,
           std::abs(left.a - (lambda * pm.a + (1.0 - lambda) * pn.a)),
           std::abs(left.b - (lambda * pm.b + (1.0 - lambda) * pn.b))});
    }
    rec.check("advice_convexity", worst <= 1e-12,
              "worst deviation " + io::format_number(worst));
  });

  rec.guarded("nash_filter_consistency", [&] {
    const BayesianGame game = build_game(GameParams(1.0, 16.0));
    const auto equilibria = find_pure_nash(game);
    bool ok = true;
    for (const auto& profile : enumerate_pure_profiles(game)) {
      const bool member =
          std::find(equilibria.begin(), equilibria.end(), profile) !=
          equilibria.end();
      if (member != is_pure_nash(game, profile)) {
        ok = false;
        break;
      }
    }
    rec.check("nash_filter_consistency", ok);
  });

  rec.guarded("reference_games", [&] {
    const BayesianGame bos = detail::battle_of_sexes();
    const BayesianGame chicken = detail::chicken();
    const auto bos_nash = find_pure_nash(bos);
    const auto chicken_nash = find_pure_nash(chicken);
    const bool bos_ok = bos_nash.size() == 2 &&
                        bos_nash[0] == PureStrategyProfile{{0}, {0}} &&
                        bos_nash[1] == PureStrategyProfile{{1}, {1}};
    const bool chicken_ok = chicken_nash.size() == 2 &&
                            chicken_nash[0] == PureStrategyProfile{{0}, {1}} &&
                            chicken_nash[1] == PureStrategyProfile{{1}, {0}};
    const CorrelatedAdvice advice = CorrelatedAdvice::uniform_over(
        chicken, {{{0}, {0}}, {{0}, {1}}, {{1}, {0}}});
    const PayoffVector five = expected_payoff_correlated(chicken, advice);
    const bool ce_ok = is_correlated_equilibrium(chicken, advice) &&
                       std::abs(five.a - 5.0) <= 1e-12 &&
                       std::abs(five.b - 5.0) <= 1e-12;
    rec.check("reference_games", bos_ok && chicken_ok && ce_ok);
  });

  rec.guarded("chicken_ce_outside_nash_hull", [&] {
    const bool inside = lp::in_convex_hull(
        {{2.0, 7.0}, {7.0, 2.0}, {14.0 / 3.0, 14.0 / 3.0}}, {5.0, 5.0}, 1e-9);
    rec.check("chicken_ce_outside_nash_hull", !inside);
  });

  return rec.take();
}

inline std::vector<CheckResult> run_ns_box(uint64_t seed) {
  detail::Recorder rec("ns_box");
  std::mt19937_64 rng(seed);

  rec.guarded("table_round_trip", [&] {
    bool ok = true;
    for (int trial = 0; trial < 500 && ok; ++trial) {
      const NSBox box = detail::random_polytope_box(rng);
      ok = from_table(to_table(box)) == box;
    }
    rec.check("table_round_trip", ok);
  });

  rec.guarded("chsh_two_routes", [&] {
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
      const NSBox box = detail::random_polytope_box(rng);
      worst = std::max(worst,
                       std::abs(chsh_value(box) - chsh_value_canonical(box)));
    }
    rec.check("chsh_two_routes", worst <= 1e-12,
              "worst deviation " + io::format_number(worst));
  });

  rec.guarded("vertex_locality", [&] {
    bool ok = true;
    for (const NSBox& v : local_vertices()) ok = ok && is_local(v);
    for (const NSBox& v : pr_vertices()) ok = ok && !is_local(v);
    rec.check("vertex_locality", ok);
  });

  rec.guarded("deterministic_chsh", [&] {
    bool ok = true;
    for (const NSBox& v : local_vertices()) {
      ok = ok && std::abs(std::abs(chsh_value(v)) - 2.0) <= 1e-12;
    }
    ok = ok && std::abs(chsh_value(pr_vertex(0, 0, 0)) - 4.0) <= 1e-12;
    rec.check("deterministic_chsh", ok);
  });

  rec.guarded("tilted_local_bound", [&] {
    double worst = 0.0;
    for (double zeta = 0.0; zeta < 2.0; zeta += 0.05) {
      double best = -1e300;
      for (const NSBox& v : local_vertices()) {
        best = std::max(best, tilted_chsh_value(v, zeta));
      }
      worst = std::max(worst, std::abs(best - (2.0 + 2.0 * zeta)));
    }
    rec.check("tilted_local_bound", worst <= 1e-12,
              "worst deviation " + io::format_number(worst));
  });

  rec.guarded("pr_sign_symmetries", [&] {
    bool ok = true;
    for (const NSBox& v : pr_vertices()) {
      int hits = 0;
      for (int p = 0; p < 2; ++p) {
        for (int q = 0; q < 2; ++q) {
          for (int r = 0; r < 2; ++r) {
            double value = 0.0;
            for (int x = 0; x < 2; ++x) {
              for (int y = 0; y < 2; ++y) {
                const int sign_bit = (x * y + p * x + q * y + r) % 2;
                value += (sign_bit == 0 ? 1.0 : -1.0) * correlator(v, x, y);
              }
            }
            if (std::abs(value - 4.0) <= 1e-12) ++hits;
          }
        }
      }
      ok = ok && hits == 1;
    }
    rec.check("pr_sign_symmetries", ok);
  });

  rec.guarded("affine_argmax_invariance", [&] {
    std::uniform_real_distribution<double> k1_dist(0.1, 5.0);
    std::uniform_real_distribution<double> k2_dist(-5.0, 5.0);
    bool ok = true;
    for (int trial = 0; trial < 50 && ok; ++trial) {
      std::vector<NSBox> boxes;
      for (int i = 0; i < 6; ++i) boxes.push_back(detail::random_polytope_box(rng));
      const double k1 = k1_dist(rng);
      const double k2 = k2_dist(rng);
      size_t best_raw = 0, best_affine = 0;
      for (size_t i = 1; i < boxes.size(); ++i) {
        if (chsh_value(boxes[i]) > chsh_value(boxes[best_raw])) best_raw = i;
        if (affine_bell(chsh_value(boxes[i]), k1, k2) >
            affine_bell(chsh_value(boxes[best_affine]), k1, k2)) {
          best_affine = i;
        }
      }
      ok = best_raw == best_affine;
    }
    rec.check("affine_argmax_invariance", ok);
  });

  rec.guarded("mix_stays_valid", [&] {
    bool ok = true;
    const std::vector<NSBox> vertices = polytope_vertices();
    for (int trial = 0; trial < 200 && ok; ++trial) {
      const auto weights = detail::dirichlet(rng, vertices.size());
      const NSBox box = mix(vertices, weights);  // throws if invalid
      const FullTable t = to_table(box);
      for (double v : t.p) ok = ok && v >= -kBoxValidityTol;
    }
    // Uniform mixture of the local vertices is the maximally noisy box.
    const std::vector<double> uniform(16, 1.0 / 16.0);
    const std::vector<NSBox> locals(local_vertices().begin(),
                                    local_vertices().end());
    const NSBox noise = mix(locals, uniform);
    for (double v : to_table(noise).p) ok = ok && std::abs(v - 0.25) <= 1e-12;
    rec.check("mix_stays_valid", ok);
  });

  return rec.take();
}

inline std::vector<CheckResult> run_quantum(uint64_t seed) {
  detail::Recorder rec("quantum");
  std::mt19937_64 rng(seed);

  rec.guarded("born_box_is_no_signaling", [&] {
    bool ok = true;
    for (int trial = 0; trial < 1000 && ok; ++trial) {
      const NSBox box = born_box(detail::random_strategy(rng));
      for (double v : to_table(box).p) {
        ok = ok && v >= -kBoxValidityTol && v <= 1.0 + kBoxValidityTol;
      }
    }
    rec.check("born_box_is_no_signaling", ok);
  });

  rec.guarded("tsirelson_respected", [&] {
    double best = -4.0;
    for (int trial = 0; trial < 1000; ++trial) {
      best = std::max(best, chsh_value(born_box(detail::random_strategy(rng))));
    }
    rec.check("tsirelson_respected", best <= 2.0 * std::sqrt(2.0) + 1e-9,
              "largest sampled value " + io::format_number(best));
  });

  rec.guarded("closed_forms_match_born", [&] {
    double worst = 0.0;
    for (double theta = 0.001; theta <= kQuarterPi; theta += 0.001) {
      const NSBox box = born_box(optimal_tilted_strategy(theta));
      const ClosedFormComponents parts = closed_form_components(theta);
      worst = std::max({worst, std::abs(box.m(0) - parts.m0),
                        std::abs(box.n(0) - parts.n0),
                        std::abs(chsh_value(box) - parts.bchsh)});
    }
    rec.check("closed_forms_match_born", worst <= 1e-12,
              "worst deviation " + io::format_number(worst));
  });

  rec.guarded("angle_maps_inverse", [&] {
    double worst = 0.0;
    for (double theta = 0.001; theta <= kQuarterPi; theta += 0.001) {
      worst = std::max(worst,
                       std::abs(theta_from_zeta(zeta_from_theta(theta)) - theta));
    }
    for (double zeta = 0.0; zeta < 2.0; zeta += 0.01) {
      worst = std::max(worst,
                       std::abs(zeta_from_theta(theta_from_zeta(zeta)) - zeta));
    }
    rec.check("angle_maps_inverse", worst <= 1e-12,
              "worst deviation " + io::format_number(worst));
  });

  rec.guarded("tilted_max_dominates_samples", [&] {
    std::uniform_real_distribution<double> zeta_dist(0.0, 1.999);
    bool ok = true;
    for (int trial = 0; trial < 300 && ok; ++trial) {
      const double zeta = zeta_dist(rng);
      const double sampled =
          tilted_chsh_value(born_box(detail::random_strategy(rng)), zeta);
      ok = sampled <= tilted_quantum_max(zeta) + 1e-9;
    }
    for (double zeta = 0.0; zeta < 2.0; zeta += 0.05) {
      ok = ok && tilted_quantum_max(zeta) > 2.0 + 2.0 * zeta;
    }
    rec.check("tilted_max_dominates_samples", ok);
  });

  rec.guarded("construction_attains_max", [&] {
    double worst = 0.0;
    for (double zeta = 0.0; zeta < 2.0; zeta += 0.05) {
      const double theta = theta_from_zeta(zeta);
      const double attained =
          tilted_chsh_value(born_box(optimal_tilted_strategy(theta)), zeta);
      worst = std::max(worst, std::abs(attained - tilted_quantum_max(zeta)));
    }
    rec.check("construction_attains_max", worst <= 1e-9,
              "worst deviation " + io::format_number(worst));
  });

  return rec.take();
}

inline std::vector<CheckResult> run_swgame(uint64_t seed) {
  detail::Recorder rec("swgame");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> zeta_dist(0.0, 1.999);
  std::uniform_real_distribution<double> eta_dist(0.1, 300.0);

  rec.guarded("box_payoff_vs_table_average", [&] {
    double worst = 0.0;
    for (int trial = 0; trial < 500; ++trial) {
      const GameParams params(zeta_dist(rng), eta_dist(rng));
      const NSBox box = detail::random_polytope_box(rng);
      const PayoffVector closed = payoff_from_box(params, box);
      const PayoffVector brute = detail::payoff_by_table_average(params, box);
      worst = std::max({worst, std::abs(closed.a - brute.a),
                        std::abs(closed.b - brute.b)});
    }
    rec.check("box_payoff_vs_table_average", worst <= 1e-12,
              "worst deviation " + io::format_number(worst));
  });

  rec.guarded("payoff_sum_cancellation", [&] {
    double worst = 0.0;
    for (int trial = 0; trial < 500; ++trial) {
      const GameParams params(zeta_dist(rng), eta_dist(rng));
      const NSBox box = detail::random_polytope_box(rng);
      const PayoffVector v = payoff_from_box(params, box);
      worst = std::max(worst, std::abs(payoff_sum(params, box) - (v.a + v.b)));
    }
    rec.check("payoff_sum_cancellation", worst <= 1e-12,
              "worst deviation " + io::format_number(worst));
  });

  rec.guarded("incentive_order_and_sign", [&] {
    bool ordered = true;
    bool alice_positive = true;
    bool welfare_strict = true;
    for (double theta = 0.001; theta <= kQuarterPi; theta += 0.001) {
      const IncentivePoint p = delta_v(theta, 16.0);
      ordered = ordered && p.delta_va >= p.delta_vb - 1e-15;
      alice_positive = alice_positive && p.delta_va > 0.0;
      const PayoffVector classical =
          classical_equilibrium_payoffs(GameParams(p.zeta, 16.0));
      welfare_strict =
          welfare_strict && p.welfare > classical.a + classical.b;
    }
    rec.check("incentive_order_and_sign",
              ordered && alice_positive && welfare_strict);
  });

  rec.guarded("nash_census", [&] {
    // Payoff-dominant equilibria (always-0, identity/always-0 pairs) plus the
    // weak always-1 equilibrium; see the equilibrium analysis in the tests.
    const std::vector<PureStrategyProfile> expected = {
        {{0, 0}, {0, 0}}, {{0, 0}, {0, 1}}, {{0, 1}, {0, 0}}, {{1, 1}, {1, 1}}};
    bool ok = true;
    for (double zeta : {0.0, 0.5, 1.0, 1.5}) {
      auto found = find_pure_nash(build_game(GameParams(zeta, 16.0)));
      std::vector<PureStrategyProfile> sorted_expected = expected;
      auto order = [](const PureStrategyProfile& x, const PureStrategyProfile& y) {
        return std::tie(x.alice, x.bob) < std::tie(y.alice, y.bob);
      };
      std::sort(found.begin(), found.end(), order);
      std::sort(sorted_expected.begin(), sorted_expected.end(), order);
      ok = ok && found == sorted_expected;
    }
    rec.check("nash_census", ok);
  });

  rec.guarded("pure_profile_payoffs_match_family_table", [&] {
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
      const double z = zeta_dist(rng);
      const double e = eta_dist(rng);
      const BayesianGame game = build_game(GameParams(z, e));
      // Expected payoffs for the 16 pure profiles as rational expressions in
      // (zeta, eta); rows are Alice strategies in lexicographic order
      // (always-0, identity, flip, always-1), columns Bob likewise.
      const auto expect = [&](int ia, int ib) -> PayoffVector {
        const double ez = e * z;
        const PayoffVector grid[4][4] = {
            {{(3 + e + ez) / 16, (9 + e + ez) / 16},
             {(3 + e + ez) / 16, (9 + e + ez) / 16},
             {(4 - e + ez) / 16, (8 - e + ez) / 16},
             {(4 - e + ez) / 16, (8 - e + ez) / 16}},
            {{(3 + e + ez) / 16, (9 + e + ez) / 16},
             {(3 - e + ez) / 16, (9 - e + ez) / 16},
             {(4 + e + ez) / 16, (8 + e + ez) / 16},
             {(4 - e + ez) / 16, (8 - e + ez) / 16}},
            {{(2 - e) / 16, (10 - e) / 16},
             {(2 + e) / 16, (10 + e) / 16},
             {(3 - e) / 16, (9 - e) / 16},
             {(3 + e) / 16, (9 + e) / 16}},
            {{(2 - e) / 16, (10 - e) / 16},
             {(2 - e) / 16, (10 - e) / 16},
             {(3 + e) / 16, (9 + e) / 16},
             {(3 + e) / 16, (9 + e) / 16}}};
        return grid[ia][ib];
      };
      const auto profiles = enumerate_pure_profiles(game);
      for (size_t i = 0; i < profiles.size(); ++i) {
        const PayoffVector actual = expected_payoff(game, profiles[i]);
        const PayoffVector wanted = expect(static_cast<int>(i) / 4,
                                           static_cast<int>(i) % 4);
        worst = std::max({worst, std::abs(actual.a - wanted.a),
                          std::abs(actual.b - wanted.b)});
      }
    }
    rec.check("pure_profile_payoffs_match_family_table", worst <= 1e-12,
              "worst deviation " + io::format_number(worst));
  });

  return rec.take();
}

inline std::vector<CheckResult> check_corpus(const std::string& dir) {
  detail::Recorder rec("corpus");

  rec.guarded("bos_json", [&] {
    const BayesianGame loaded = io::load_game(dir + "/bos.json");
    const BayesianGame reference = detail::battle_of_sexes();
    bool ok = loaded.num_types(0) == 1 && loaded.num_types(1) == 1 &&
              loaded.num_actions(0) == 2 && loaded.num_actions(1) == 2;
    for (int sa = 0; sa < 2 && ok; ++sa) {
      for (int sb = 0; sb < 2 && ok; ++sb) {
        ok = loaded.utility(0, 0, sa, sb).a == reference.utility(0, 0, sa, sb).a &&
             loaded.utility(0, 0, sa, sb).b == reference.utility(0, 0, sa, sb).b;
      }
    }
    rec.check("bos_json", ok, ok ? "" : dir + "/bos.json does not match");
  });

  rec.guarded("chicken_json", [&] {
    const BayesianGame loaded = io::load_game(dir + "/chicken.json");
    const BayesianGame reference = detail::chicken();
    bool ok = loaded.num_types(0) == 1 && loaded.num_types(1) == 1;
    for (int sa = 0; sa < 2 && ok; ++sa) {
      for (int sb = 0; sb < 2 && ok; ++sb) {
        ok = loaded.utility(0, 0, sa, sb).a == reference.utility(0, 0, sa, sb).a &&
             loaded.utility(0, 0, sa, sb).b == reference.utility(0, 0, sa, sb).b;
      }
    }
    rec.check("chicken_json", ok, ok ? "" : dir + "/chicken.json does not match");
  });

  return rec.take();
}

inline const std::vector<std::string>& group_names() {
  static const std::vector<std::string> names = {"game_core", "ns_box",
                                                 "quantum", "swgame"};
  return names;
}

inline std::vector<CheckResult> run_group(const std::string& name,
                                          uint64_t seed) {
  if (name == "game_core") return run_game_core(seed);
  if (name == "ns_box") return run_ns_box(seed);
  if (name == "quantum") return run_quantum(seed);
  if (name == "swgame") return run_swgame(seed);
  throw DomainError("unknown verification group: " + name);
}

inline std::vector<CheckResult> run_all(uint64_t seed) {
  std::vector<CheckResult> all;
  for (const auto& name : group_names()) {
    auto results = run_group(name, seed);
    all.insert(all.end(), results.begin(), results.end());
  }
  return all;
}

}  // namespace qsw::verify
