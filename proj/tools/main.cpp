// Copyright 2026 The qwc Authors
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

// qwc: run walk-to-cocycle convergence scenarios.
//
//   qwc run <config.json> [--out results.csv] [--summary]
//   qwc selftest
//   qwc order <results.csv>
//
// Exit status: 0 when everything passes, 1 on a failed check, 2 on a
// configuration or input error.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qwc/qwc.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

int cmd_run(const std::string& config, const std::string& out_path, bool summary) {
  const qwc::ScenarioConfig cfg = qwc::load_scenario(config);
  const qwc::ConvergenceReport report = qwc::run_scenario(cfg);
  if (out_path.empty()) {
    qwc::write_csv(report, std::cout);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw qwc::ConfigError("cannot write " + out_path);
    qwc::write_csv(report, out);
  }
  if (summary) {
    qwc::write_summary(cfg, report, out_path.empty() ? std::cerr : std::cout);
  }
  return report.all_pass() ? kExitPass : kExitFail;
}

int cmd_selftest() {
  bool ok = true;
  for (const auto& r : qwc::run_selftest()) {
    std::printf("%-46s residual %.3e (tol %.1e)  %s\n", r.name.c_str(), r.residual, r.tolerance,
                r.pass() ? "PASS" : "FAIL");
    ok = ok && r.pass();
  }
  return ok ? kExitPass : kExitFail;
}

int cmd_order(const std::string& csv) {
  std::ifstream in(csv, std::ios::binary);
  if (!in) throw qwc::ConfigError("cannot open " + csv);
  const qwc::ConvergenceReport report = qwc::recompute_orders(qwc::read_csv(in));
  for (std::size_t p = 0; p < report.pair_count(); ++p) {
    const auto rows = report.pair_rows(p);
    if (rows.empty()) continue;
    std::printf("pair %zu: order %.6f over the last %zu step sizes\n", p,
                rows.back().order_estimate, std::min<std::size_t>(rows.size(), 4));
  }
  return report.all_pass() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convergence of quantum random walks to quantum stochastic cocycles"};
  app.require_subcommand(1);

  std::string config;
  std::string out_path;
  bool summary = false;
  auto* run = app.add_subcommand("run", "Sweep a scenario and write the convergence CSV");
  run->add_option("config", config, "Scenario JSON file")->required();
  run->add_option("--out", out_path, "CSV output path (default: stdout)");
  run->add_flag("--summary", summary, "Print a per-pair summary");

  auto* selftest = app.add_subcommand("selftest", "Run the built-in property sweep");

  std::string csv;
  auto* order = app.add_subcommand("order", "Recompute empirical orders from a CSV");
  order->add_option("csv", csv, "CSV written by `run`")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitConfig;
  }

  try {
    if (*run) return cmd_run(config, out_path, summary);
    if (*selftest) return cmd_selftest();
    if (*order) return cmd_order(csv);
  } catch (const qwc::ConfigError& e) {
    std::cerr << "qwc: " << e.what() << '\n';
    return kExitConfig;
  } catch (const qwc::DilationRequiredError& e) {
    std::cerr << "qwc: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "qwc: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitConfig;
}
