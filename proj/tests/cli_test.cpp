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

#include <gtest/gtest.h>

#include <cstdio>
#include <iomanip>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#ifndef QSW_CORPUS_DIR
#define QSW_CORPUS_DIR "corpus"
#endif

// Coverage audit: every library operation is reachable from a subcommand.
//   expected_payoff, enumerate_pure_profiles, social_welfare ... eval
//   payoff_from_box, payoff_sum ............................... eval --box
//   find_pure_nash, is_pure_nash .............................. equilibria
//   expected_payoff_correlated, is_correlated_equilibrium ..... ce-check
//   from_table, to_table, local_vertex ........................ box validate
//   correlator, chsh_value, tilted_chsh_value, affine_bell .... box chsh
//   is_local, pr_vertex ....................................... box local
//   born_box .................................................. quantum born
//   optimal_tilted_strategy, closed_form_components,
//   zeta_from_theta ........................................... quantum optimal
//   theta_from_zeta, tilted_quantum_max, delta_v,
//   is_quantum_advantageous ................................... quantum max
//   scan, quantum_payoffs ..................................... scan
//   theta0 .................................................... theta0
//   theta0_curve .............................................. fig2
//   mix, build_game, classical_equilibrium_payoffs (also via
//   eval/quantum max) and the invariant suites ................ verify
namespace qsw::cli {
namespace {

using nlohmann::json;

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string corpus(const std::string& name) {
  return std::string(QSW_CORPUS_DIR) + "/" + name;
}

TEST(Cli, equilibria_on_chicken) {
  const RunResult r = invoke({"equilibria", "--game", corpus("chicken.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const json parsed = json::parse(r.out);
  ASSERT_EQ(parsed.size(), 2u);
  EXPECT_EQ(parsed[0]["profile"], json::array({0, 1}));
  EXPECT_EQ(parsed[1]["profile"], json::array({1, 0}));
}

TEST(Cli, equilibria_on_family_game) {
  const RunResult r =
      invoke({"equilibria", "--eta", "16", "--zeta", "1", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out,
            "profile_a,profile_b\n"
            "00,00\n"
            "00,01\n"
            "01,00\n"
            "11,11\n");
}

TEST(Cli, theta0_csv) {
  const RunResult r = invoke({"theta0", "--eta", "16"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, 11), "eta,theta0\n");
  EXPECT_EQ(r.out.substr(11, 7), "16,0.12");
}

TEST(Cli, scan_schema_and_determinism) {
  const std::vector<std::string> args = {"scan", "--eta", "16", "--step", "0.01"};
  const RunResult first = invoke(args);
  ASSERT_EQ(first.code, 0) << first.err;
  std::istringstream lines(first.out);
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header,
            "theta,eta,zeta,delta_vA,delta_vB,payoff_A,payoff_B,welfare");
  size_t rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  EXPECT_EQ(rows, 78u);  // 0.01 .. 0.78 inclusive
  const RunResult second = invoke(args);
  EXPECT_EQ(first.out, second.out);
}

TEST(Cli, eval_lists_all_16_family_profiles) {
  const RunResult r = invoke({"eval", "--eta", "16", "--zeta", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "profile_a,profile_b,payoff_A,payoff_B,welfare");
  std::getline(lines, line);
  EXPECT_EQ(line, "00,00,2.1875,2.5625,4.75");  // (35/16, 41/16)
  size_t rows = 1;
  for (; std::getline(lines, line);) ++rows;
  EXPECT_EQ(rows, 16u);
}

TEST(Cli, eval_single_profile_on_corpus_game) {
  const RunResult r = invoke({"eval", "--game", corpus("bos.json"),
                              "--profile", "0;0", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json parsed = json::parse(r.out);
  ASSERT_EQ(parsed.size(), 1u);
  EXPECT_EQ(parsed[0]["payoff"], json::array({2.0, 1.0}));
  EXPECT_EQ(parsed[0]["welfare"], 3.0);
}

TEST(Cli, eval_box_payoff) {
  const auto path =
      std::filesystem::temp_directory_path() / "qsw_cli_test_box.json";
  {
    std::ofstream file(path);
    file << R"({"canonical":{"c00":1,"c01":1,"c10":1,"c11":1,)"
            R"("m0":1,"m1":1,"n0":1,"n1":1}})";
  }
  const RunResult r = invoke({"eval", "--eta", "16", "--zeta", "1", "--box",
                              path.string(), "--format", "json"});
  std::filesystem::remove(path);
  ASSERT_EQ(r.code, 0) << r.err;
  const json parsed = json::parse(r.out);
  EXPECT_NEAR(parsed["payoff"][0].get<double>(), 35.0 / 16.0, 1e-12);
  EXPECT_NEAR(parsed["payoff"][1].get<double>(), 41.0 / 16.0, 1e-12);
  EXPECT_NEAR(parsed["welfare"].get<double>(), 76.0 / 16.0, 1e-12);
}

TEST(Cli, ce_check_uniform_chicken_advice) {
  const auto path =
      std::filesystem::temp_directory_path() / "qsw_cli_test_advice.json";
  {
    std::ofstream file(path);
    file << R"({"advice":[{"profile":[0,0],"p":0.3333333333333333},)"
            R"({"profile":[0,1],"p":0.3333333333333333},)"
            R"({"profile":[1,0],"p":0.3333333333333334}]})";
  }
  const RunResult r =
      invoke({"ce-check", "--game", corpus("chicken.json"), "--advice",
              path.string()});
  std::filesystem::remove(path);
  ASSERT_EQ(r.code, 0) << r.err;
  const json parsed = json::parse(r.out);
  EXPECT_TRUE(parsed["correlated_equilibrium"].get<bool>());
  EXPECT_NEAR(parsed["payoff"][0].get<double>(), 5.0, 1e-9);
  EXPECT_NEAR(parsed["welfare"].get<double>(), 10.0, 1e-9);
}

TEST(Cli, box_subcommands) {
  const RunResult validate = invoke({"box", "validate", "--local", "0,0,0,0"});
  ASSERT_EQ(validate.code, 0) << validate.err;
  EXPECT_EQ(json::parse(validate.out)["canonical"]["m0"].get<double>(), 1.0);

  const RunResult chsh = invoke({"box", "chsh", "--pr", "0,0,0"});
  ASSERT_EQ(chsh.code, 0) << chsh.err;
  EXPECT_EQ(json::parse(chsh.out)["chsh"].get<double>(), 4.0);

  const RunResult tilted =
      invoke({"box", "chsh", "--local", "0,0,0,0", "--zeta", "1.5"});
  ASSERT_EQ(tilted.code, 0) << tilted.err;
  EXPECT_NEAR(json::parse(tilted.out)["tilted"].get<double>(), 5.0, 1e-12);

  const RunResult affine = invoke({"box", "chsh", "--pr", "0,0,0", "--k1",
                                   "2", "--k2", "1"});
  ASSERT_EQ(affine.code, 0) << affine.err;
  EXPECT_EQ(json::parse(affine.out)["affine"].get<double>(), 9.0);

  const RunResult pr_local = invoke({"box", "local", "--pr", "0,0,0"});
  ASSERT_EQ(pr_local.code, 0) << pr_local.err;
  EXPECT_FALSE(json::parse(pr_local.out)["local"].get<bool>());

  const RunResult det_local = invoke({"box", "local", "--local", "1,0,1,1"});
  ASSERT_EQ(det_local.code, 0) << det_local.err;
  EXPECT_TRUE(json::parse(det_local.out)["local"].get<bool>());

  const RunResult conflicting =
      invoke({"box", "chsh", "--pr", "0,0,0", "--local", "0,0,0,0"});
  EXPECT_EQ(conflicting.code, 1);
}

TEST(Cli, quantum_subcommands) {
  const RunResult optimal = invoke({"quantum", "optimal", "--theta", "0.7853981633974483"});
  ASSERT_EQ(optimal.code, 0) << optimal.err;
  const json strategy = json::parse(optimal.out);
  EXPECT_NEAR(strategy["bchsh"].get<double>(), 2.0 * std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(strategy["zeta"].get<double>(), 0.0, 1e-15);

  const RunResult born = invoke({"quantum", "born", "--theta", "0.3"});
  ASSERT_EQ(born.code, 0) << born.err;
  const json box = json::parse(born.out);
  EXPECT_NEAR(box["canonical"]["m0"].get<double>(),
              std::cos(0.3) * std::cos(0.3), 1e-12);

  const RunResult max = invoke({"quantum", "max", "--zeta", "1", "--eta", "16"});
  ASSERT_EQ(max.code, 0) << max.err;
  const json report = json::parse(max.out);
  EXPECT_NEAR(report["tilted_max"].get<double>(), std::sqrt(10.0) + 1.0, 1e-12);
  EXPECT_NEAR(report["pipeline_value"].get<double>(),
              report["tilted_max"].get<double>(), 1e-9);
  EXPECT_EQ(report["local_bound"].get<double>(), 4.0);
  EXPECT_TRUE(report["advantageous"].get<bool>());

  const RunResult neither = invoke({"quantum", "max"});
  EXPECT_EQ(neither.code, 1);
}

TEST(Cli, quantum_born_accepts_strategy_files) {
  const auto path =
      std::filesystem::temp_directory_path() / "qsw_cli_strategy.json";
  {
    const double isq = 1.0 / std::sqrt(2.0);
    std::ofstream file(path);
    file << std::setprecision(17) << R"({"theta":0.7853981633974483,)"
         << R"("alice":[[0,0,1],[1,0,0]],)"
         << R"("bob":[[)" << isq << ",0," << isq << R"(],[)" << -isq << ",0,"
         << isq << "]]}";
  }
  const RunResult r = invoke({"quantum", "born", "--strategy", path.string()});
  std::filesystem::remove(path);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(json::parse(r.out)["chsh"].get<double>(), 2.0 * std::sqrt(2.0),
              1e-9);
}

TEST(Cli, box_accepts_table_form_files) {
  const auto path =
      std::filesystem::temp_directory_path() / "qsw_cli_table_box.json";
  {
    std::ofstream file(path);
    file << R"({"table":[0.5,0,0,0.5, 0.5,0,0,0.5, 0.5,0,0,0.5, 0,0.5,0.5,0]})";
  }
  const RunResult r = invoke({"box", "chsh", "--box", path.string()});
  std::filesystem::remove(path);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["chsh"].get<double>(), 4.0);  // PR box
}

TEST(Cli, fig2_respects_thread_cap_and_stays_deterministic) {
  const std::vector<std::string> args = {"fig2", "--eta-min", "16",
                                         "--eta-max", "64", "--samples", "4"};
  const RunResult baseline = invoke(args);
  ASSERT_EQ(baseline.code, 0) << baseline.err;

  setenv("QSW_THREADS", "3", 1);
  const RunResult capped = invoke(args);
  setenv("QSW_THREADS", "zero", 1);
  const RunResult invalid = invoke(args);
  unsetenv("QSW_THREADS");

  EXPECT_EQ(capped.code, 0);
  EXPECT_EQ(capped.out, baseline.out);
  EXPECT_EQ(invalid.code, 1);
  EXPECT_NE(invalid.err.find("QSW_THREADS"), std::string::npos);
}

TEST(Cli, fig2_small_grid) {
  const RunResult r = invoke({"fig2", "--eta-min", "16", "--eta-max", "256",
                              "--samples", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header, "eta,theta0");
  std::vector<double> thresholds;
  for (std::string line; std::getline(lines, line);) {
    const auto comma = line.find(',');
    thresholds.push_back(std::stod(line.substr(comma + 1)));
  }
  ASSERT_EQ(thresholds.size(), 5u);
  for (size_t i = 1; i < thresholds.size(); ++i) {
    EXPECT_LT(thresholds[i], thresholds[i - 1]);
  }
}

TEST(Cli, verify_group_runs_clean) {
  const RunResult r = invoke({"verify", "--group", "ns_box", "--seed", "7"});
  ASSERT_EQ(r.code, 0) << r.out + r.err;
  EXPECT_NE(r.out.find("[PASS] ns_box/vertex_locality"), std::string::npos);
  EXPECT_EQ(r.out.find("[FAIL]"), std::string::npos);
}

TEST(Cli, verify_reports_corrupted_corpus) {
  namespace fs = std::filesystem;
  const auto dir = fs::temp_directory_path() / "qsw_cli_bad_corpus";
  fs::create_directories(dir);
  {
    std::ofstream bos(dir / "bos.json");
    bos << "{ not json";
    std::ofstream chicken(dir / "chicken.json");
    chicken << R"({"types":[1,1],"actions":[2,2],"prior":[1.0],"utilities":[]})";
  }
  const RunResult r =
      invoke({"verify", "--group", "corpus", "--corpus", dir.string()});
  fs::remove_all(dir);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("[FAIL] corpus/bos_json"), std::string::npos);
  EXPECT_NE(r.out.find("bos.json"), std::string::npos);
}

TEST(Cli, out_flag_writes_file) {
  const auto path = std::filesystem::temp_directory_path() / "qsw_theta0.csv";
  const RunResult r =
      invoke({"theta0", "--eta", "16", "--out", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream file(path);
  std::string header;
  std::getline(file, header);
  EXPECT_EQ(header, "eta,theta0");
  std::filesystem::remove(path);
}

TEST(Cli, error_paths_and_exit_codes) {
  EXPECT_EQ(invoke({"unknown-subcommand"}).code, 1);
  EXPECT_EQ(invoke({"scan", "--eta", "16", "--bogus-flag"}).code, 1);
  EXPECT_EQ(invoke({}).code, 1);
  EXPECT_EQ(invoke({"scan"}).code, 1);  // missing required --eta

  const RunResult missing_game = invoke({"eval", "--game", "/no/such/file.json"});
  EXPECT_EQ(missing_game.code, 1);
  EXPECT_NE(missing_game.err.find("error:"), std::string::npos);
  EXPECT_TRUE(missing_game.out.empty());

  const RunResult bad_domain = invoke({"theta0", "--eta", "-3"});
  EXPECT_EQ(bad_domain.code, 1);

  // eta too large for the scan resolution: threshold sits below the grid.
  const RunResult no_threshold = invoke({"theta0", "--eta", "10000000"});
  EXPECT_EQ(no_threshold.code, 1);
  EXPECT_NE(no_threshold.err.find("positive"), std::string::npos);

  const RunResult help = invoke({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("Usage"), std::string::npos);
}

}  // namespace
}  // namespace qsw::cli
