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

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsw/game.hpp"
#include "qsw/nsbox.hpp"
#include "qsw/quantum.hpp"

namespace qsw::io {

using nlohmann::json;

// Fixed 12-significant-digit rendering for CSV output.
inline std::string format_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

inline json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  json parsed;
  try {
    in >> parsed;
  } catch (const json::exception& e) {
    throw DomainError(path + ": " + e.what());
  }
  return parsed;
}

// Game files: {"types":[|T_A|,|T_B|], "actions":[|S_A|,|S_B|],
// "prior":[row-major over (t_A,t_B)], "utilities":[{tA,tB,sA,sB,vA,vB},...]}.
inline BayesianGame game_from_json(const json& j) {
  try {
    const std::array<int, 2> types = {j.at("types").at(0).get<int>(),
                                      j.at("types").at(1).get<int>()};
    const std::array<int, 2> actions = {j.at("actions").at(0).get<int>(),
                                        j.at("actions").at(1).get<int>()};
    const auto prior = j.at("prior").get<std::vector<double>>();

    const size_t cells = static_cast<size_t>(types[0]) * types[1] *
                         actions[0] * actions[1];
    std::vector<PayoffVector> utilities(cells);
    std::vector<bool> seen(cells, false);
    for (const auto& record : j.at("utilities")) {
      const int ta = record.at("tA").get<int>();
      const int tb = record.at("tB").get<int>();
      const int sa = record.at("sA").get<int>();
      const int sb = record.at("sB").get<int>();
      if (ta < 0 || ta >= types[0] || tb < 0 || tb >= types[1] || sa < 0 ||
          sa >= actions[0] || sb < 0 || sb >= actions[1]) {
        throw DomainError("utility record indices out of range");
      }
      const size_t idx =
          ((static_cast<size_t>(ta) * types[1] + tb) * actions[0] + sa) *
              actions[1] +
          sb;
      utilities[idx] = {record.at("vA").get<double>(),
                        record.at("vB").get<double>()};
      seen[idx] = true;
    }
    for (bool s : seen) {
      if (!s) throw DomainError("utility table is missing a cell");
    }
    return BayesianGame(types, actions, prior, std::move(utilities));
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed game: ") + e.what());
  }
}

inline json game_to_json(const BayesianGame& game) {
  json j;
  j["types"] = {game.num_types(0), game.num_types(1)};
  j["actions"] = {game.num_actions(0), game.num_actions(1)};
  j["prior"] = game.prior_flat();
  json utilities = json::array();
  for (int ta = 0; ta < game.num_types(0); ++ta) {
    for (int tb = 0; tb < game.num_types(1); ++tb) {
      for (int sa = 0; sa < game.num_actions(0); ++sa) {
        for (int sb = 0; sb < game.num_actions(1); ++sb) {
          const PayoffVector& u = game.utility(ta, tb, sa, sb);
          utilities.push_back({{"tA", ta},
                               {"tB", tb},
                               {"sA", sa},
                               {"sB", sb},
                               {"vA", u.a},
                               {"vB", u.b}});
        }
      }
    }
  }
  j["utilities"] = std::move(utilities);
  return j;
}

inline BayesianGame load_game(const std::string& path) {
  try {
    return game_from_json(load_json(path));
  } catch (const DomainError& e) {
    throw DomainError(path + ": " + e.what());
  }
}

// Box files carry either {"canonical":{c00,c01,c10,c11,m0,m1,n0,n1}} or
// {"table":[16 reals]} row-major by (x_A,x_B) then (o_A,o_B).
inline NSBox box_from_json(const json& j) {
  try {
    if (j.contains("canonical")) {
      const json& c = j.at("canonical");
      return NSBox(c.at("c00").get<double>(), c.at("c01").get<double>(),
                   c.at("c10").get<double>(), c.at("c11").get<double>(),
                   c.at("m0").get<double>(), c.at("m1").get<double>(),
                   c.at("n0").get<double>(), c.at("n1").get<double>());
    }
    if (j.contains("table")) {
      const auto flat = j.at("table").get<std::vector<double>>();
      if (flat.size() != 16) {
        throw DomainError("box table must have 16 entries");
      }
      FullTable table;
      std::copy(flat.begin(), flat.end(), table.p.begin());
      return from_table(table);
    }
    throw DomainError("box JSON needs a 'canonical' or 'table' field");
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed box: ") + e.what());
  }
}

inline json box_to_json(const NSBox& box) {
  const auto params = box.canonical();
  json j;
  j["canonical"] = {{"c00", params[0]}, {"c01", params[1]},
                    {"c10", params[2]}, {"c11", params[3]},
                    {"m0", params[4]},  {"m1", params[5]},
                    {"n0", params[6]},  {"n1", params[7]}};
  j["table"] = std::vector<double>(box.table().p.begin(), box.table().p.end());
  return j;
}

inline NSBox load_box(const std::string& path) {
  try {
    return box_from_json(load_json(path));
  } catch (const DomainError& e) {
    throw DomainError(path + ": " + e.what());
  }
}

// Strategy files: {"theta":r, "alice":[[x,y,z],[x,y,z]], "bob":[...]}.
inline QuantumStrategy strategy_from_json(const json& j) {
  try {
    const auto measurement = [](const json& row) {
      return ProjectiveMeasurement({row.at(0).get<double>(),
                                    row.at(1).get<double>(),
                                    row.at(2).get<double>()});
    };
    return QuantumStrategy{
        SchmidtState(j.at("theta").get<double>()),
        {measurement(j.at("alice").at(0)), measurement(j.at("alice").at(1))},
        {measurement(j.at("bob").at(0)), measurement(j.at("bob").at(1))}};
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed strategy: ") + e.what());
  }
}

inline json strategy_to_json(const QuantumStrategy& strategy) {
  const auto row = [](const ProjectiveMeasurement& m) {
    return std::vector<double>(m.bloch().begin(), m.bloch().end());
  };
  json j;
  j["theta"] = strategy.state.theta();
  j["alice"] = {row(strategy.alice[0]), row(strategy.alice[1])};
  j["bob"] = {row(strategy.bob[0]), row(strategy.bob[1])};
  return j;
}

inline QuantumStrategy load_strategy(const std::string& path) {
  try {
    return strategy_from_json(load_json(path));
  } catch (const DomainError& e) {
    throw DomainError(path + ": " + e.what());
  }
}

// Advice files: {"advice":[{"profile":p, "p":weight}, ...]} where a profile
// is [s_A,s_B] for singleton-type games or [[Alice actions],[Bob actions]]
// listing one action per type.
inline CorrelatedAdvice advice_from_json(const json& j,
                                         const BayesianGame& game) {
  try {
    const int na = detail::pure_strategy_count(game, 0);
    const int nb = detail::pure_strategy_count(game, 1);
    std::vector<double> prob(static_cast<size_t>(na) * nb, 0.0);
    for (const auto& record : j.at("advice")) {
      const json& profile = record.at("profile");
      PureStrategyProfile parsed;
      if (profile.size() == 2 && profile.at(0).is_array()) {
        parsed.alice = profile.at(0).get<std::vector<int>>();
        parsed.bob = profile.at(1).get<std::vector<int>>();
      } else {
        parsed.alice = {profile.at(0).get<int>()};
        parsed.bob = {profile.at(1).get<int>()};
      }
      detail::check_profile_shape(game, parsed);
      const int ia = detail::strategy_index(parsed.alice, game.num_actions(0));
      const int ib = detail::strategy_index(parsed.bob, game.num_actions(1));
      prob[static_cast<size_t>(ia) * nb + ib] += record.at("p").get<double>();
    }
    return CorrelatedAdvice(na, nb, std::move(prob));
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed advice: ") + e.what());
  }
}

inline CorrelatedAdvice load_advice(const std::string& path,
                                    const BayesianGame& game) {
  try {
    return advice_from_json(load_json(path), game);
  } catch (const DomainError& e) {
    throw DomainError(path + ": " + e.what());
  }
}

}  // namespace qsw::io
