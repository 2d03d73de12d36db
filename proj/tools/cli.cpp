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

#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "qsw/game.hpp"
#include "qsw/io.hpp"
#include "qsw/nsbox.hpp"
#include "qsw/quantum.hpp"
#include "qsw/swgame.hpp"
#include "qsw/verify.hpp"

namespace qsw::cli {
namespace {

using nlohmann::json;

void emit(const std::string& data, const std::string& out_path,
          std::ostream& fallback) {
  if (out_path.empty()) {
    fallback << data;
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw DomainError("cannot write " + out_path);
  file << data;
}

int thread_cap(int wanted) {
  int threads = std::max(1, wanted);
  if (const char* env = std::getenv("QSW_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || parsed < 1) {
      throw DomainError("QSW_THREADS must be a positive integer");
    }
    threads = std::min<long>(threads, parsed);
  }
  return threads;
}

std::vector<int> parse_bits(const std::string& text, size_t count,
                            const std::string& what) {
  std::vector<int> bits;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item == "0") {
      bits.push_back(0);
    } else if (item == "1") {
      bits.push_back(1);
    } else {
      throw DomainError(what + " must be comma-separated bits");
    }
  }
  if (bits.size() != count) {
    throw DomainError(what + " needs exactly " + std::to_string(count) +
                      " bits");
  }
  return bits;
}

PureStrategyProfile parse_profile(const std::string& text,
                                  const BayesianGame& game) {
  const auto semicolon = text.find(';');
  if (semicolon == std::string::npos) {
    throw DomainError("profile must look like \"aliceActions;bobActions\"");
  }
  const auto parse_side = [](const std::string& side) {
    std::vector<int> actions;
    std::stringstream stream(side);
    std::string item;
    while (std::getline(stream, item, ',')) {
      try {
        actions.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw DomainError("profile actions must be integers");
      }
    }
    return actions;
  };
  PureStrategyProfile profile{parse_side(text.substr(0, semicolon)),
                              parse_side(text.substr(semicolon + 1))};
  detail::check_profile_shape(game, profile);
  return profile;
}

json profile_to_json(const BayesianGame& game,
                     const PureStrategyProfile& profile) {
  if (game.num_types(0) == 1 && game.num_types(1) == 1) {
    return json::array({profile.alice[0], profile.bob[0]});
  }
  return json::array({profile.alice, profile.bob});
}

std::string profile_digits(const std::vector<int>& actions) {
  std::string digits;
  for (int a : actions) digits += std::to_string(a);
  return digits;
}

// Flags shared by the game-consuming subcommands: either a JSON file or the
// family parameters.
struct GameSource {
  std::string path;
  double eta = 0.0;
  double zeta = 0.0;
  bool has_eta = false;
  bool has_zeta = false;

  BayesianGame resolve() const {
    if (!path.empty()) {
      if (has_eta || has_zeta) {
        throw DomainError("--game excludes --eta/--zeta");
      }
      return io::load_game(path);
    }
    if (!has_eta) {
      throw DomainError("need --game or --eta (with optional --zeta)");
    }
    return build_game(GameParams(has_zeta ? zeta : 0.0, eta));
  }

  void attach(CLI::App* cmd) {
    cmd->add_option("--game", path, "game JSON file");
    cmd->add_option("--eta", eta, "family payoff scale (eta > 0)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--zeta", zeta, "family tilt (0 <= zeta < 2)");
  }
};

NSBox box_from_flags(const std::string& box_path, const std::string& local_bits,
                     const std::string& pr_bits) {
  const int sources = (!box_path.empty()) + (!local_bits.empty()) +
                      (!pr_bits.empty());
  if (sources != 1) {
    throw DomainError("need exactly one of --box, --local, --pr");
  }
  if (!box_path.empty()) return io::load_box(box_path);
  if (!local_bits.empty()) {
    const auto b = parse_bits(local_bits, 4, "--local");
    return local_vertex(b[0], b[1], b[2], b[3]);
  }
  const auto b = parse_bits(pr_bits, 3, "--pr");
  return pr_vertex(b[0], b[1], b[2]);
}

std::string render_eval_rows(
    const BayesianGame& game,
    const std::vector<PureStrategyProfile>& profiles,
    const std::string& format) {
  if (format == "json") {
    json rows = json::array();
    for (const auto& profile : profiles) {
      const PayoffVector v = expected_payoff(game, profile);
      rows.push_back({{"profile", profile_to_json(game, profile)},
                      {"payoff", {v.a, v.b}},
                      {"welfare", social_welfare(v)}});
    }
    return rows.dump(2) + "\n";
  }
  std::string csv = "profile_a,profile_b,payoff_A,payoff_B,welfare\n";
  for (const auto& profile : profiles) {
    const PayoffVector v = expected_payoff(game, profile);
    csv += profile_digits(profile.alice) + "," + profile_digits(profile.bob) +
           "," + io::format_number(v.a) + "," + io::format_number(v.b) + "," +
           io::format_number(social_welfare(v)) + "\n";
  }
  return csv;
}

// The subcommand the parser got furthest into, for targeted help output.
const CLI::App* deepest_parsed(const CLI::App& app) {
  const CLI::App* target = &app;
  while (!target->get_subcommands().empty()) {
    target = target->get_subcommands().back();
  }
  return target;
}

int run_verify(const std::string& group, uint64_t seed,
               const std::string& corpus_dir, std::ostream& out) {
  std::vector<verify::CheckResult> results;
  const bool corpus_only = group == "corpus";
  if (group.empty()) {
    results = verify::run_all(seed);
  } else if (!corpus_only) {
    results = verify::run_group(group, seed);
  }
  std::string corpus = corpus_dir;
  if (corpus.empty() && (group.empty() || corpus_only) &&
      std::filesystem::exists("corpus")) {
    corpus = "corpus";
  }
  if (!corpus.empty() && (group.empty() || corpus_only)) {
    const auto extra = verify::check_corpus(corpus);
    results.insert(results.end(), extra.begin(), extra.end());
  }
  if (results.empty()) {
    throw DomainError("nothing to verify (unknown group or missing corpus)");
  }

  int failures = 0;
  for (const auto& r : results) {
    out << (r.passed ? "[PASS] " : "[FAIL] ") << r.group << "/" << r.name;
    if (!r.detail.empty()) out << ": " << r.detail;
    out << "\n";
    if (!r.passed) ++failures;
  }
  out << (failures == 0 ? "all checks passed"
                        : std::to_string(failures) + " check(s) failed")
      << " (" << results.size() << " total)\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Bayesian games with no-signaling and quantum advice", "qsw"};
  app.require_subcommand(1);

  // eval
  GameSource eval_source;
  std::string eval_profile, eval_box, eval_out, eval_format = "csv";
  CLI::App* eval_cmd = app.add_subcommand(
      "eval", "expected payoffs of pure profiles or of a box advice");
  eval_source.attach(eval_cmd);
  eval_cmd->add_option("--profile", eval_profile,
                       "single profile, e.g. \"0,1;0,1\" (actions per type)");
  eval_cmd->add_option("--box", eval_box, "box JSON file (family game only)");
  eval_cmd->add_option("--out", eval_out, "write output to file");
  eval_cmd->add_option("--format", eval_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  // equilibria
  GameSource eq_source;
  double eq_tol = kEquilibriumTol;
  std::string eq_out, eq_format = "json";
  CLI::App* eq_cmd =
      app.add_subcommand("equilibria", "pure Nash equilibria of a game");
  eq_source.attach(eq_cmd);
  eq_cmd->add_option("--tol", eq_tol, "deviation-gain tolerance")
      ->check(CLI::NonNegativeNumber);
  eq_cmd->add_option("--out", eq_out, "write output to file");
  eq_cmd->add_option("--format", eq_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  // ce-check
  std::string ce_game, ce_advice, ce_out;
  double ce_tol = kEquilibriumTol;
  CLI::App* ce_cmd = app.add_subcommand(
      "ce-check", "test a correlated advice for the obedience constraints");
  ce_cmd->add_option("--game", ce_game, "game JSON file")->required();
  ce_cmd->add_option("--advice", ce_advice, "advice JSON file")->required();
  ce_cmd->add_option("--tol", ce_tol, "deviation-gain tolerance")
      ->check(CLI::NonNegativeNumber);
  ce_cmd->add_option("--out", ce_out, "write output to file");

  // box
  CLI::App* box_cmd = app.add_subcommand("box", "no-signaling box tools");
  box_cmd->require_subcommand(1);
  struct BoxFlags {
    std::string path, local_bits, pr_bits, out;
  };
  BoxFlags validate_flags, chsh_flags, local_flags;
  double chsh_zeta = -1.0, chsh_k1 = 0.0, chsh_k2 = 0.0;
  bool chsh_has_zeta = false, chsh_has_k = false;
  double local_tol = kLocalFeasibilityTol;
  const auto attach_box_flags = [](CLI::App* sub, BoxFlags& flags) {
    sub->add_option("--box", flags.path, "box JSON file");
    sub->add_option("--local", flags.local_bits,
                    "deterministic vertex bits alpha,beta,gamma,delta");
    sub->add_option("--pr", flags.pr_bits, "nonlocal vertex bits alpha,beta,gamma");
    sub->add_option("--out", flags.out, "write output to file");
  };
  CLI::App* box_validate =
      box_cmd->add_subcommand("validate", "check and print a box");
  attach_box_flags(box_validate, validate_flags);
  CLI::App* box_chsh = box_cmd->add_subcommand("chsh", "CHSH value of a box");
  attach_box_flags(box_chsh, chsh_flags);
  box_chsh->add_option("--zeta", chsh_zeta, "also report the tilted value")
      ->check(CLI::Range(0.0, 2.0));
  box_chsh->add_option("--k1", chsh_k1, "affine rescale: K1*value + K2")
      ->check(CLI::PositiveNumber);
  box_chsh->add_option("--k2", chsh_k2, "affine offset");
  CLI::App* box_local =
      box_cmd->add_subcommand("local", "local-polytope membership");
  attach_box_flags(box_local, local_flags);
  box_local->add_option("--tol", local_tol, "feasibility slack")
      ->check(CLI::NonNegativeNumber);

  // quantum
  CLI::App* quantum_cmd =
      app.add_subcommand("quantum", "two-qubit strategy tools");
  quantum_cmd->require_subcommand(1);
  double born_theta = 0.0;
  std::string born_strategy, born_out;
  CLI::App* quantum_born = quantum_cmd->add_subcommand(
      "born", "box generated by a strategy via the Born rule");
  quantum_born->add_option("--theta", born_theta,
                           "Schmidt angle; uses the optimal measurements");
  quantum_born->add_option("--strategy", born_strategy, "strategy JSON file");
  quantum_born->add_option("--out", born_out, "write output to file");

  double optimal_theta = 0.0;
  std::string optimal_out;
  CLI::App* quantum_optimal = quantum_cmd->add_subcommand(
      "optimal", "optimal tilted strategy at a Schmidt angle");
  quantum_optimal->add_option("--theta", optimal_theta, "Schmidt angle")
      ->required();
  quantum_optimal->add_option("--out", optimal_out, "write output to file");

  double max_zeta = 0.0, max_theta = 0.0, max_eta = 0.0;
  bool max_has_zeta = false, max_has_theta = false, max_has_eta = false;
  std::string max_out;
  CLI::App* quantum_max = quantum_cmd->add_subcommand(
      "max", "quantum maximum of the tilted expression");
  quantum_max->add_option("--zeta", max_zeta, "tilt in [0,2)");
  quantum_max->add_option("--theta", max_theta, "Schmidt angle in (0,pi/4]");
  quantum_max->add_option("--eta", max_eta,
                          "also report payoffs and incentives at this eta")
      ->check(CLI::PositiveNumber);
  quantum_max->add_option("--out", max_out, "write output to file");

  // scan
  double scan_eta = 0.0, scan_step = 1e-3, scan_min = 0.0,
         scan_max = kQuarterPi;
  std::string scan_out, scan_format = "csv";
  CLI::App* scan_cmd =
      app.add_subcommand("scan", "incentive curves over a theta grid");
  scan_cmd->add_option("--eta", scan_eta, "payoff scale")->required()
      ->check(CLI::PositiveNumber);
  scan_cmd->add_option("--step", scan_step, "theta step")
      ->check(CLI::PositiveNumber);
  scan_cmd->add_option("--theta-min", scan_min, "grid start (exclusive at 0)");
  scan_cmd->add_option("--theta-max", scan_max, "grid end");
  scan_cmd->add_option("--out", scan_out, "write output to file");
  scan_cmd->add_option("--format", scan_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  // theta0
  double theta0_eta = 0.0;
  std::string theta0_out, theta0_format = "csv";
  CLI::App* theta0_cmd = app.add_subcommand(
      "theta0", "smallest Schmidt angle with positive Bob incentive");
  theta0_cmd->add_option("--eta", theta0_eta, "payoff scale")->required()
      ->check(CLI::PositiveNumber);
  theta0_cmd->add_option("--out", theta0_out, "write output to file");
  theta0_cmd->add_option("--format", theta0_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  // fig2
  double fig2_min = 16.0, fig2_max = 5000.0;
  int fig2_samples = 200;
  std::string fig2_out;
  CLI::App* fig2_cmd = app.add_subcommand(
      "fig2", "theta0 over a log-spaced eta grid (CSV)");
  fig2_cmd->add_option("--eta-min", fig2_min, "grid start")
      ->check(CLI::PositiveNumber);
  fig2_cmd->add_option("--eta-max", fig2_max, "grid end")
      ->check(CLI::PositiveNumber);
  fig2_cmd->add_option("--samples", fig2_samples, "number of grid points")
      ->check(CLI::Range(2, 100000));
  fig2_cmd->add_option("--out", fig2_out, "write output to file");

  // verify
  std::string verify_group, verify_corpus;
  uint64_t verify_seed = 42;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "run the library's structural self-checks");
  verify_cmd->add_option("--group", verify_group,
                         "game_core, ns_box, quantum, swgame, or corpus");
  verify_cmd->add_option("--seed", verify_seed, "seed for randomized checks");
  verify_cmd->add_option("--corpus", verify_corpus,
                         "directory holding the bundled game files");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << deepest_parsed(app)->help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << deepest_parsed(app)->help();
    return 1;
  }

  try {
    if (eval_cmd->parsed()) {
      eval_source.has_eta = eval_cmd->count("--eta") > 0;
      eval_source.has_zeta = eval_cmd->count("--zeta") > 0;
      if (!eval_box.empty()) {
        if (!eval_source.path.empty() || !eval_profile.empty()) {
          throw DomainError("--box excludes --game and --profile");
        }
        if (!eval_source.has_eta) throw DomainError("--box needs --eta");
        const GameParams params(eval_source.has_zeta ? eval_source.zeta : 0.0,
                                eval_source.eta);
        const NSBox box = io::load_box(eval_box);
        const PayoffVector v = payoff_from_box(params, box);
        if (eval_format == "json") {
          const json j = {{"payoff", {v.a, v.b}},
                          {"welfare", payoff_sum(params, box)}};
          emit(j.dump(2) + "\n", eval_out, out);
        } else {
          emit("payoff_A,payoff_B,welfare\n" + io::format_number(v.a) + "," +
                   io::format_number(v.b) + "," +
                   io::format_number(payoff_sum(params, box)) + "\n",
               eval_out, out);
        }
        return 0;
      }
      const BayesianGame game = eval_source.resolve();
      std::vector<PureStrategyProfile> profiles;
      if (!eval_profile.empty()) {
        profiles.push_back(parse_profile(eval_profile, game));
      } else {
        profiles = enumerate_pure_profiles(game);
      }
      emit(render_eval_rows(game, profiles, eval_format), eval_out, out);
      return 0;
    }

    if (eq_cmd->parsed()) {
      eq_source.has_eta = eq_cmd->count("--eta") > 0;
      eq_source.has_zeta = eq_cmd->count("--zeta") > 0;
      const BayesianGame game = eq_source.resolve();
      const auto equilibria = find_pure_nash(game, eq_tol);
      if (eq_format == "json") {
        json rows = json::array();
        for (const auto& profile : equilibria) {
          rows.push_back({{"profile", profile_to_json(game, profile)}});
        }
        emit(rows.dump(2) + "\n", eq_out, out);
      } else {
        std::string csv = "profile_a,profile_b\n";
        for (const auto& profile : equilibria) {
          csv += profile_digits(profile.alice) + "," +
                 profile_digits(profile.bob) + "\n";
        }
        emit(csv, eq_out, out);
      }
      return 0;
    }

    if (ce_cmd->parsed()) {
      const BayesianGame game = io::load_game(ce_game);
      const CorrelatedAdvice advice = io::load_advice(ce_advice, game);
      const PayoffVector v = expected_payoff_correlated(game, advice);
      const json j = {
          {"correlated_equilibrium", is_correlated_equilibrium(game, advice, ce_tol)},
          {"payoff", {v.a, v.b}},
          {"welfare", social_welfare(v)}};
      emit(j.dump(2) + "\n", ce_out, out);
      return 0;
    }

    if (box_validate->parsed()) {
      const NSBox box = box_from_flags(validate_flags.path,
                                       validate_flags.local_bits,
                                       validate_flags.pr_bits);
      emit(io::box_to_json(box).dump(2) + "\n", validate_flags.out, out);
      return 0;
    }

    if (box_chsh->parsed()) {
      chsh_has_zeta = box_chsh->count("--zeta") > 0;
      chsh_has_k = box_chsh->count("--k1") > 0;
      if (box_chsh->count("--k2") > 0 && !chsh_has_k) {
        throw DomainError("--k2 needs --k1");
      }
      const NSBox box = box_from_flags(chsh_flags.path, chsh_flags.local_bits,
                                       chsh_flags.pr_bits);
      json j;
      j["chsh"] = chsh_value(box);
      j["correlators"] = {correlator(box, 0, 0), correlator(box, 0, 1),
                          correlator(box, 1, 0), correlator(box, 1, 1)};
      double value = chsh_value(box);
      if (chsh_has_zeta) {
        value = tilted_chsh_value(box, chsh_zeta);
        j["tilted"] = value;
      }
      if (chsh_has_k) j["affine"] = affine_bell(value, chsh_k1, chsh_k2);
      emit(j.dump(2) + "\n", chsh_flags.out, out);
      return 0;
    }

    if (box_local->parsed()) {
      const NSBox box = box_from_flags(local_flags.path, local_flags.local_bits,
                                       local_flags.pr_bits);
      const json j = {{"local", is_local(box, local_tol)}};
      emit(j.dump(2) + "\n", local_flags.out, out);
      return 0;
    }

    if (quantum_born->parsed()) {
      if ((quantum_born->count("--theta") > 0) == !born_strategy.empty()) {
        throw DomainError("need exactly one of --theta, --strategy");
      }
      const QuantumStrategy strategy =
          born_strategy.empty() ? optimal_tilted_strategy(born_theta)
                                : io::load_strategy(born_strategy);
      const NSBox box = born_box(strategy);
      json j = io::box_to_json(box);
      j["chsh"] = chsh_value(box);
      emit(j.dump(2) + "\n", born_out, out);
      return 0;
    }

    if (quantum_optimal->parsed()) {
      const QuantumStrategy strategy = optimal_tilted_strategy(optimal_theta);
      json j = io::strategy_to_json(strategy);
      const ClosedFormComponents parts = closed_form_components(optimal_theta);
      j["zeta"] = zeta_from_theta(optimal_theta);
      j["m0"] = parts.m0;
      j["n0"] = parts.n0;
      j["bchsh"] = parts.bchsh;
      emit(j.dump(2) + "\n", optimal_out, out);
      return 0;
    }

    if (quantum_max->parsed()) {
      max_has_zeta = quantum_max->count("--zeta") > 0;
      max_has_theta = quantum_max->count("--theta") > 0;
      max_has_eta = quantum_max->count("--eta") > 0;
      if (max_has_zeta == max_has_theta) {
        throw DomainError("need exactly one of --zeta, --theta");
      }
      const double zeta = max_has_zeta ? max_zeta : zeta_from_theta(max_theta);
      const double theta = max_has_theta ? max_theta : theta_from_zeta(max_zeta);
      const double pipeline =
          tilted_chsh_value(born_box(optimal_tilted_strategy(theta)), zeta);
      json j;
      j["zeta"] = zeta;
      j["theta"] = theta;
      j["tilted_max"] = tilted_quantum_max(zeta);
      j["pipeline_value"] = pipeline;
      j["local_bound"] = 2.0 + 2.0 * zeta;
      if (max_has_eta) {
        const IncentivePoint p = delta_v(theta, max_eta);
        j["payoff"] = {p.payoff_a, p.payoff_b};
        j["delta_v"] = {p.delta_va, p.delta_vb};
        j["welfare"] = p.welfare;
        j["advantageous"] = is_quantum_advantageous(theta, max_eta);
      }
      emit(j.dump(2) + "\n", max_out, out);
      return 0;
    }

    if (scan_cmd->parsed()) {
      const auto points = scan(scan_min, scan_max, scan_eta, scan_step);
      if (scan_format == "json") {
        json rows = json::array();
        for (const auto& p : points) {
          rows.push_back({{"theta", p.theta},
                          {"eta", p.eta},
                          {"zeta", p.zeta},
                          {"delta_vA", p.delta_va},
                          {"delta_vB", p.delta_vb},
                          {"payoff_A", p.payoff_a},
                          {"payoff_B", p.payoff_b},
                          {"welfare", p.welfare}});
        }
        emit(rows.dump(2) + "\n", scan_out, out);
      } else {
        std::string csv =
            "theta,eta,zeta,delta_vA,delta_vB,payoff_A,payoff_B,welfare\n";
        for (const auto& p : points) {
          csv += io::format_number(p.theta) + "," + io::format_number(p.eta) +
                 "," + io::format_number(p.zeta) + "," +
                 io::format_number(p.delta_va) + "," +
                 io::format_number(p.delta_vb) + "," +
                 io::format_number(p.payoff_a) + "," +
                 io::format_number(p.payoff_b) + "," +
                 io::format_number(p.welfare) + "\n";
        }
        emit(csv, scan_out, out);
      }
      return 0;
    }

    if (theta0_cmd->parsed()) {
      const double threshold = theta0(theta0_eta);
      if (theta0_format == "json") {
        const json j = {{"eta", theta0_eta}, {"theta0", threshold}};
        emit(j.dump(2) + "\n", theta0_out, out);
      } else {
        emit("eta,theta0\n" + io::format_number(theta0_eta) + "," +
                 io::format_number(threshold) + "\n",
             theta0_out, out);
      }
      return 0;
    }

    if (fig2_cmd->parsed()) {
      const int threads =
          thread_cap(static_cast<int>(std::thread::hardware_concurrency()));
      const auto curve = theta0_curve(fig2_min, fig2_max, fig2_samples, threads);
      std::string csv = "eta,theta0\n";
      for (const auto& [eta, threshold] : curve) {
        csv += io::format_number(eta) + "," + io::format_number(threshold) +
               "\n";
      }
      emit(csv, fig2_out, out);
      return 0;
    }

    if (verify_cmd->parsed()) {
      return run_verify(verify_group, verify_seed, verify_corpus, out);
    }

    throw DomainError("no subcommand selected");
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace qsw::cli
