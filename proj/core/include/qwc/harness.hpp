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

// Convergence sweeps: sup-over-time distance between embedded-walk and
// limit-cocycle matrix elements for each test pair and step size, empirical
// orders, pass/fail flags, and CSV round-tripping.

#include <iosfwd>
#include <string>
#include <vector>

#include "qwc/cocycle.hpp"
#include "qwc/scenario.hpp"

namespace qwc {

struct ConvergenceRow {
  std::size_t pair_index = 0;
  double h = 0.0;
  double sup_error = 0.0;
  double order_estimate = 0.0;  // NaN until two rows are available
  bool pass = false;
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;  // grouped by pair, in h_grid order

  bool all_pass() const;
  /// Rows of one pair, in order.
  std::vector<ConvergenceRow> pair_rows(std::size_t pair_index) const;
  std::size_t pair_count() const;
};

/// Least-squares slope of log(error) against log(h). Throws
/// PreconditionError on mismatched lengths, fewer than two points or
/// nonpositive values.
double estimate_order(const std::vector<double>& errors, const std::vector<double>& hs);

/// max over the evaluation grid of |walk element - cocycle element|.
double sup_error(const GeneratorFamily& family, const TestPair& pair, double h, double horizon,
                 int extra_points);

/// Fills order estimates (over the last <= 4 rows) and pass flags of one
/// pair's rows, in h order.
void annotate_rows(std::vector<ConvergenceRow>& rows, const ScenarioTolerances& tol);

/// Worker count: QWC_THREADS if set and positive, else the hardware count,
/// never more than `cells`.
unsigned worker_count(std::size_t cells);

ConvergenceReport run_scenario(const ScenarioConfig& cfg);

void write_csv(const ConvergenceReport& report, std::ostream& out);
std::string to_csv(const ConvergenceReport& report);
ConvergenceReport read_csv(std::istream& in);

/// Recomputes order estimates from stored errors; pass flags are kept.
ConvergenceReport recompute_orders(const ConvergenceReport& report);

void write_summary(const ScenarioConfig& cfg, const ConvergenceReport& report, std::ostream& out);

struct FlowCauchyReport {
  std::vector<int> steps;              // n, with h = horizon / n
  std::vector<ComplexMatrix> values;   // vacuum blocks of the flow applied to x
  std::vector<double> differences;     // |values[i+1] - values[i]|
  std::vector<double> ratios;          // differences[i+1] / differences[i]
  bool decreasing = false;             // every ratio <= max_ratio (or differences ~ 0)
};

/// Resolution-halving Cauchy differences of the toy Fock flow at fixed
/// horizon: n runs over `steps` and h = horizon / n.
FlowCauchyReport flow_cauchy_check(const GeneratorFamily& family, const ComplexMatrix& x,
                                   double horizon, const std::vector<int>& steps,
                                   double max_ratio = 0.75, double zero_tol = 1e-13);

}  // namespace qwc
