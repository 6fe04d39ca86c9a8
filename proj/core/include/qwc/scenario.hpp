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

#pragma once

// Declarative convergence experiments, read from JSON documents.
//
// Top-level keys:
//   dims             {"d_h": n, "d_k": m}  (bipartite: "d_h1", "d_h2", "d_k")
//   family           {"type": <name>, "params": {...}}
//   noise_embedding  optional {"d_K": n, "J": <matrix> | "first_columns"}
//   test_functions   [{"f": <step>, "g": <step>}, ...]
//   horizon, h_grid, time_grid_extra, seed, tolerances
//
// A step function is {"breakpoints": [...], "values": [[z, ...], ...]}; the
// leading 0 breakpoint may be omitted. A complex number is [re, im] or a
// bare real. A matrix is a row-major nested array, or one of the generator
// names "zero", "identity", "random_gaussian", "random_hermitian",
// "random_skewadjoint", "random_unitary", "random_contraction",
// "random_phases" (Hermitian with spectrum in [0.1, 2 pi - 0.1]), drawn from
// the scenario seed in a fixed per-family parameter order.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qwc/models.hpp"
#include "qwc/walk.hpp"

namespace qwc {

struct ScenarioTolerances {
  /// Errors at or below this count as exact.
  double zero_tol = 1e-12;
  /// Final error must be at most final_ratio times the first.
  double final_ratio = 1.0;
  std::optional<double> order_min;
  std::optional<double> order_max;
};

struct TestPair {
  StepFunction f;
  StepFunction g;
};

struct ScenarioConfig {
  Index dim_h = 0;
  Index dim_k = 0;
  std::string family_type;
  GeneratorFamily family;
  std::vector<TestPair> test_functions;
  double horizon = 1.0;
  std::vector<double> h_grid;
  int time_grid_extra = 0;
  std::uint64_t seed = 0;
  ScenarioTolerances tolerances;
};

/// Throws ConfigError with a path-qualified message on schema violations.
ScenarioConfig parse_scenario(const std::string& json_text);
ScenarioConfig load_scenario(const std::string& path);

}  // namespace qwc
