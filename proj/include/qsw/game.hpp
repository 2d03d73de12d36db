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
#include <cstdint>
#include <string>
#include <vector>

#include "qsw/errors.hpp"

namespace qsw {

inline constexpr double kDistributionTol = 1e-12;
inline constexpr double kEquilibriumTol = 1e-9;

struct PayoffVector {
  double a = 0.0;
  double b = 0.0;
};

inline double social_welfare(const PayoffVector& v) { return v.a + v.b; }

// Deterministic type -> action map for each player.
struct PureStrategyProfile {
  std::vector<int> alice;  // alice[t] = action played on Alice type t
  std::vector<int> bob;

  friend bool operator==(const PureStrategyProfile& x,
                         const PureStrategyProfile& y) = default;
};

// Per-type conditional distribution over actions, one table per player.
// alice[t][s] = probability of action s given type t.
struct BehavioralStrategy {
  std::vector<std::vector<double>> alice;
  std::vector<std::vector<double>> bob;
};

// Two-player Bayesian game with finite type and action sets. Complete
// information games are the singleton-type special case. Utilities are dense
// over (t_A, t_B, s_A, s_B).
class BayesianGame {
 public:
  BayesianGame(std::array<int, 2> num_types, std::array<int, 2> num_actions,
               std::vector<double> prior, std::vector<PayoffVector> utilities)
      : num_types_(num_types),
        num_actions_(num_actions),
        prior_(std::move(prior)),
        utilities_(std::move(utilities)) {
    if (num_types_[0] < 1 || num_types_[1] < 1 || num_actions_[0] < 1 ||
        num_actions_[1] < 1) {
      throw DomainError("game dimensions must be positive");
    }
    if (prior_.size() != static_cast<size_t>(num_types_[0] * num_types_[1])) {
      throw DomainError("prior size does not match the joint type space");
    }
    double total = 0.0;
    for (double p : prior_) {
      if (p < 0.0) throw InvalidDistribution("type prior has a negative entry");
      total += p;
    }
    if (std::abs(total - 1.0) > kDistributionTol) {
      throw InvalidDistribution("type prior sums to " + std::to_string(total));
    }
    const size_t expected = static_cast<size_t>(num_types_[0]) * num_types_[1] *
                            num_actions_[0] * num_actions_[1];
    if (utilities_.size() != expected) {
      throw DomainError("utility table is not total over (types x actions)");
    }
  }

  int num_types(int player) const { return num_types_[player]; }
  int num_actions(int player) const { return num_actions_[player]; }

  double prior(int t_a, int t_b) const {
    return prior_[static_cast<size_t>(t_a) * num_types_[1] + t_b];
  }

  const PayoffVector& utility(int t_a, int t_b, int s_a, int s_b) const {
    return utilities_[((static_cast<size_t>(t_a) * num_types_[1] + t_b) *
                           num_actions_[0] +
                       s_a) *
                          num_actions_[1] +
                      s_b];
  }

  const std::vector<double>& prior_flat() const { return prior_; }
  const std::vector<PayoffVector>& utilities_flat() const { return utilities_; }

 private:
  std::array<int, 2> num_types_;
  std::array<int, 2> num_actions_;
  std::vector<double> prior_;          // row-major [t_A][t_B]
  std::vector<PayoffVector> utilities_;  // row-major [t_A][t_B][s_A][s_B]
};

namespace detail {

inline void check_strategy_shape(const BayesianGame& game,
                                 const BehavioralStrategy& strat) {
  const std::array<const std::vector<std::vector<double>>*, 2> per_player = {
      &strat.alice, &strat.bob};
  for (int i = 0; i < 2; ++i) {
    if (per_player[i]->size() != static_cast<size_t>(game.num_types(i))) {
      throw DomainError("behavioral strategy does not cover the type set");
    }
    for (const auto& row : *per_player[i]) {
      if (row.size() != static_cast<size_t>(game.num_actions(i))) {
        throw DomainError("behavioral strategy does not cover the action set");
      }
      double total = 0.0;
      for (double p : row) {
        if (p < 0.0) {
          throw InvalidDistribution("action probability is negative");
        }
        total += p;
      }
      if (std::abs(total - 1.0) > kDistributionTol) {
        throw InvalidDistribution("per-type action probabilities sum to " +
                                  std::to_string(total));
      }
    }
  }
}

inline void check_profile_shape(const BayesianGame& game,
                                const PureStrategyProfile& profile) {
  if (profile.alice.size() != static_cast<size_t>(game.num_types(0)) ||
      profile.bob.size() != static_cast<size_t>(game.num_types(1))) {
    throw DomainError("pure strategy profile does not cover the type sets");
  }
  for (int a : profile.alice) {
    if (a < 0 || a >= game.num_actions(0)) {
      throw DomainError("profile action out of range for Alice");
    }
  }
  for (int b : profile.bob) {
    if (b < 0 || b >= game.num_actions(1)) {
      throw DomainError("profile action out of range for Bob");
    }
  }
}

}  // namespace detail

// <v_i> = sum_{t,s} P(t) v_i(t,s) g_A(s_A|t_A) g_B(s_B|t_B)
inline PayoffVector expected_payoff(const BayesianGame& game,
                                    const BehavioralStrategy& strat) {
  detail::check_strategy_shape(game, strat);
  PayoffVector result;
  for (int ta = 0; ta < game.num_types(0); ++ta) {
    for (int tb = 0; tb < game.num_types(1); ++tb) {
      const double pt = game.prior(ta, tb);
      if (pt == 0.0) continue;
      for (int sa = 0; sa < game.num_actions(0); ++sa) {
        for (int sb = 0; sb < game.num_actions(1); ++sb) {
          const double w = pt * strat.alice[ta][sa] * strat.bob[tb][sb];
          const PayoffVector& u = game.utility(ta, tb, sa, sb);
          result.a += w * u.a;
          result.b += w * u.b;
        }
      }
    }
  }
  return result;
}

inline PayoffVector expected_payoff(const BayesianGame& game,
                                    const PureStrategyProfile& profile) {
  detail::check_profile_shape(game, profile);
  PayoffVector result;
  for (int ta = 0; ta < game.num_types(0); ++ta) {
    for (int tb = 0; tb < game.num_types(1); ++tb) {
      const double pt = game.prior(ta, tb);
      const PayoffVector& u =
          game.utility(ta, tb, profile.alice[ta], profile.bob[tb]);
      result.a += pt * u.a;
      result.b += pt * u.b;
    }
  }
  return result;
}

// All type -> action maps for one player, lexicographic in
// (action on type 0, action on type 1, ...).
inline std::vector<std::vector<int>> enumerate_pure_strategies(
    int num_types, int num_actions) {
  std::vector<std::vector<int>> out;
  std::vector<int> current(num_types, 0);
  while (true) {
    out.push_back(current);
    int pos = num_types - 1;
    while (pos >= 0 && current[pos] == num_actions - 1) {
      current[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++current[pos];
  }
  return out;
}

// All |S_A|^|T_A| * |S_B|^|T_B| profiles, Alice-major lexicographic order.
inline std::vector<PureStrategyProfile> enumerate_pure_profiles(
    const BayesianGame& game) {
  const auto alice =
      enumerate_pure_strategies(game.num_types(0), game.num_actions(0));
  const auto bob =
      enumerate_pure_strategies(game.num_types(1), game.num_actions(1));
  std::vector<PureStrategyProfile> out;
  out.reserve(alice.size() * bob.size());
  for (const auto& ga : alice) {
    for (const auto& gb : bob) {
      out.push_back({ga, gb});
    }
  }
  return out;
}

// Distribution over joint pure strategy profiles, handed to the players as
// common advice. Profile indices follow enumerate_pure_strategies order, so
// for a complete-information game the index is just the action.
class CorrelatedAdvice {
 public:
  CorrelatedAdvice(int num_alice_strategies, int num_bob_strategies,
                   std::vector<double> prob)
      : num_alice_(num_alice_strategies),
        num_bob_(num_bob_strategies),
        prob_(std::move(prob)) {
    if (num_alice_ < 1 || num_bob_ < 1 ||
        prob_.size() != static_cast<size_t>(num_alice_) * num_bob_) {
      throw DomainError("advice table does not match the profile space");
    }
    double total = 0.0;
    for (double p : prob_) {
      if (p < 0.0) throw InvalidDistribution("advice has a negative entry");
      total += p;
    }
    if (std::abs(total - 1.0) > kDistributionTol) {
      throw InvalidDistribution("advice sums to " + std::to_string(total));
    }
  }

  static CorrelatedAdvice point_mass(const BayesianGame& game,
                                     const PureStrategyProfile& profile);
  static CorrelatedAdvice uniform_over(
      const BayesianGame& game, const std::vector<PureStrategyProfile>& support);

  int num_alice_strategies() const { return num_alice_; }
  int num_bob_strategies() const { return num_bob_; }
  double prob(int ia, int ib) const {
    return prob_[static_cast<size_t>(ia) * num_bob_ + ib];
  }
  const std::vector<double>& prob_flat() const { return prob_; }

 private:
  int num_alice_;
  int num_bob_;
  std::vector<double> prob_;  // row-major [alice strategy][bob strategy]
};

namespace detail {

inline int strategy_index(const std::vector<int>& strategy, int num_actions) {
  int idx = 0;
  for (int a : strategy) idx = idx * num_actions + a;
  return idx;
}

inline int pure_strategy_count(const BayesianGame& game, int player) {
  int count = 1;
  for (int t = 0; t < game.num_types(player); ++t) {
    count *= game.num_actions(player);
  }
  return count;
}

inline void check_advice_shape(const BayesianGame& game,
                               const CorrelatedAdvice& advice) {
  if (advice.num_alice_strategies() != pure_strategy_count(game, 0) ||
      advice.num_bob_strategies() != pure_strategy_count(game, 1)) {
    throw DomainError("advice is over the wrong profile space for this game");
  }
}

}  // namespace detail

inline CorrelatedAdvice CorrelatedAdvice::point_mass(
    const BayesianGame& game, const PureStrategyProfile& profile) {
  detail::check_profile_shape(game, profile);
  const int na = detail::pure_strategy_count(game, 0);
  const int nb = detail::pure_strategy_count(game, 1);
  std::vector<double> prob(static_cast<size_t>(na) * nb, 0.0);
  const int ia = detail::strategy_index(profile.alice, game.num_actions(0));
  const int ib = detail::strategy_index(profile.bob, game.num_actions(1));
  prob[static_cast<size_t>(ia) * nb + ib] = 1.0;
  return CorrelatedAdvice(na, nb, std::move(prob));
}

inline CorrelatedAdvice CorrelatedAdvice::uniform_over(
    const BayesianGame& game, const std::vector<PureStrategyProfile>& support) {
  if (support.empty()) throw DomainError("advice support is empty");
  const int na = detail::pure_strategy_count(game, 0);
  const int nb = detail::pure_strategy_count(game, 1);
  std::vector<double> prob(static_cast<size_t>(na) * nb, 0.0);
  for (const auto& profile : support) {
    detail::check_profile_shape(game, profile);
    const int ia = detail::strategy_index(profile.alice, game.num_actions(0));
    const int ib = detail::strategy_index(profile.bob, game.num_actions(1));
    prob[static_cast<size_t>(ia) * nb + ib] += 1.0 / support.size();
  }
  return CorrelatedAdvice(na, nb, std::move(prob));
}

// Probability-weighted average of expected_payoff over the advice's support.
inline PayoffVector expected_payoff_correlated(const BayesianGame& game,
                                               const CorrelatedAdvice& advice) {
  detail::check_advice_shape(game, advice);
  const auto alice =
      enumerate_pure_strategies(game.num_types(0), game.num_actions(0));
  const auto bob =
      enumerate_pure_strategies(game.num_types(1), game.num_actions(1));
  PayoffVector result;
  for (size_t ia = 0; ia < alice.size(); ++ia) {
    for (size_t ib = 0; ib < bob.size(); ++ib) {
      const double p = advice.prob(static_cast<int>(ia), static_cast<int>(ib));
      if (p == 0.0) continue;
      const PayoffVector v = expected_payoff(game, {alice[ia], bob[ib]});
      result.a += p * v.a;
      result.b += p * v.b;
    }
  }
  return result;
}

// True iff no unilateral pure-strategy deviation improves the deviator's
// expected payoff by more than tol. Ties count as equilibrium. Deviating to a
// mixed strategy can never beat the best pure deviation, so checking the pure
// ones decides the general case.
inline bool is_pure_nash(const BayesianGame& game,
                         const PureStrategyProfile& profile,
                         double tol = kEquilibriumTol) {
  if (tol < 0.0) throw DomainError("tolerance must be non-negative");
  detail::check_profile_shape(game, profile);
  const PayoffVector base = expected_payoff(game, profile);
  for (const auto& ga :
       enumerate_pure_strategies(game.num_types(0), game.num_actions(0))) {
    if (expected_payoff(game, {ga, profile.bob}).a > base.a + tol) return false;
  }
  for (const auto& gb :
       enumerate_pure_strategies(game.num_types(1), game.num_actions(1))) {
    if (expected_payoff(game, {profile.alice, gb}).b > base.b + tol) {
      return false;
    }
  }
  return true;
}

inline std::vector<PureStrategyProfile> find_pure_nash(
    const BayesianGame& game, double tol = kEquilibriumTol) {
  std::vector<PureStrategyProfile> out;
  for (const auto& profile : enumerate_pure_profiles(game)) {
    if (is_pure_nash(game, profile, tol)) out.push_back(profile);
  }
  return out;
}

// Aumann obedience: for every player, every recommended pure strategy with
// positive marginal, and every alternative pure strategy, the conditional
// expected gain from switching is at most tol.
inline bool is_correlated_equilibrium(const BayesianGame& game,
                                      const CorrelatedAdvice& advice,
                                      double tol = kEquilibriumTol) {
  if (tol < 0.0) throw DomainError("tolerance must be non-negative");
  detail::check_advice_shape(game, advice);
  const auto alice =
      enumerate_pure_strategies(game.num_types(0), game.num_actions(0));
  const auto bob =
      enumerate_pure_strategies(game.num_types(1), game.num_actions(1));
  const int na = static_cast<int>(alice.size());
  const int nb = static_cast<int>(bob.size());

  std::vector<PayoffVector> payoff(static_cast<size_t>(na) * nb);
  for (int ia = 0; ia < na; ++ia) {
    for (int ib = 0; ib < nb; ++ib) {
      payoff[static_cast<size_t>(ia) * nb + ib] =
          expected_payoff(game, {alice[ia], bob[ib]});
    }
  }
  const auto at = [&](int ia, int ib) -> const PayoffVector& {
    return payoff[static_cast<size_t>(ia) * nb + ib];
  };

  for (int ia = 0; ia < na; ++ia) {
    double marginal = 0.0;
    for (int ib = 0; ib < nb; ++ib) marginal += advice.prob(ia, ib);
    if (marginal <= 0.0) continue;
    for (int ja = 0; ja < na; ++ja) {
      double gain = 0.0;
      for (int ib = 0; ib < nb; ++ib) {
        gain += advice.prob(ia, ib) * (at(ja, ib).a - at(ia, ib).a);
      }
      if (gain / marginal > tol) return false;
    }
  }
  for (int ib = 0; ib < nb; ++ib) {
    double marginal = 0.0;
    for (int ia = 0; ia < na; ++ia) marginal += advice.prob(ia, ib);
    if (marginal <= 0.0) continue;
    for (int jb = 0; jb < nb; ++jb) {
      double gain = 0.0;
      for (int ia = 0; ia < na; ++ia) {
        gain += advice.prob(ia, ib) * (at(ia, jb).b - at(ia, ib).b);
      }
      if (gain / marginal > tol) return false;
    }
  }
  return true;
}

}  // namespace qsw
