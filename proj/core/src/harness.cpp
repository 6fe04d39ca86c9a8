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

#include "qwc/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <istream>
#include <limits>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

namespace qwc {

bool ConvergenceReport::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const ConvergenceRow& r) { return r.pass; });
}

std::vector<ConvergenceRow> ConvergenceReport::pair_rows(std::size_t pair_index) const {
  std::vector<ConvergenceRow> out;
  for (const auto& r : rows) {
    if (r.pair_index == pair_index) out.push_back(r);
  }
  return out;
}

std::size_t ConvergenceReport::pair_count() const {
  std::size_t n = 0;
  for (const auto& r : rows) n = std::max(n, r.pair_index + 1);
  return n;
}

double estimate_order(const std::vector<double>& errors, const std::vector<double>& hs) {
  if (errors.size() != hs.size() || errors.size() < 2) {
    throw PreconditionError("estimate_order: need at least two (h, error) pairs");
  }
  const double n = static_cast<double>(errors.size());
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (!(errors[i] > 0.0) || !(hs[i] > 0.0)) {
      throw PreconditionError("estimate_order: errors and step sizes must be positive");
    }
    sx += std::log(hs[i]);
    sy += std::log(errors[i]);
  }
  const double mx = sx / n;
  const double my = sy / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < errors.size(); ++i) {
    const double dx = std::log(hs[i]) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(errors[i]) - my);
  }
  if (sxx == 0.0) {
    throw PreconditionError("estimate_order: step sizes must not all coincide");
  }
  return sxy / sxx;
}

double sup_error(const GeneratorFamily& family, const TestPair& pair, double h, double horizon,
                 int extra_points) {
  const std::vector<double> grid = evaluation_grid(h, horizon, pair.f, pair.g, extra_points);
  const BlockOperator g = family(h);
  const std::vector<ComplexMatrix> walk = walk_matrix_elements(g, pair.f, pair.g, h, grid);
  const std::vector<ComplexMatrix> limit =
      cocycle_matrix_elements(family.limit, pair.f, pair.g, grid);
  double sup = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    sup = std::max(sup, op_norm(walk[i] - limit[i]));
  }
  return sup;
}

namespace {

constexpr std::size_t kOrderWindow = 4;

// Slope over the last <= kOrderWindow rows ending at i with positive error.
double window_order(const std::vector<ConvergenceRow>& rows, std::size_t i) {
  const std::size_t lo = (i + 1 > kOrderWindow) ? i + 1 - kOrderWindow : 0;
  std::vector<double> errs, hs;
  for (std::size_t j = lo; j <= i; ++j) {
    if (rows[j].sup_error > 0.0) {
      errs.push_back(rows[j].sup_error);
      hs.push_back(rows[j].h);
    }
  }
  if (errs.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  try {
    return estimate_order(errs, hs);
  } catch (const PreconditionError&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

}  // namespace

void annotate_rows(std::vector<ConvergenceRow>& rows, const ScenarioTolerances& tol) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].order_estimate = window_order(rows, i);
    const double e = rows[i].sup_error;
    bool ok = std::isfinite(e);
    if (ok && i > 0 && e > tol.zero_tol) {
      ok = e < rows[i - 1].sup_error;
    }
    if (ok && i + 1 == rows.size() && rows.size() > 1 && e > tol.zero_tol) {
      ok = e <= tol.final_ratio * rows.front().sup_error;
      const double order = rows[i].order_estimate;
      if (tol.order_min) ok = ok && std::isfinite(order) && order >= *tol.order_min;
      if (tol.order_max) ok = ok && std::isfinite(order) && order <= *tol.order_max;
    }
    rows[i].pass = ok;
  }
}

unsigned worker_count(std::size_t cells) {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("QWC_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) n = static_cast<unsigned>(v);
  }
  return static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(n, cells)));
}

ConvergenceReport run_scenario(const ScenarioConfig& cfg) {
  const std::size_t pairs = cfg.test_functions.size();
  const std::size_t hs = cfg.h_grid.size();
  const std::size_t cells = pairs * hs;
  std::vector<double> errors(cells, 0.0);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto work = [&]() {
    for (std::size_t c = next++; c < cells; c = next++) {
      try {
        errors[c] = sup_error(cfg.family, cfg.test_functions[c / hs], cfg.h_grid[c % hs],
                              cfg.horizon, cfg.time_grid_extra);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned workers = worker_count(cells);
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  ConvergenceReport report;
  for (std::size_t p = 0; p < pairs; ++p) {
    std::vector<ConvergenceRow> rows;
    for (std::size_t k = 0; k < hs; ++k) {
      rows.push_back({p, cfg.h_grid[k], errors[p * hs + k], 0.0, false});
    }
    annotate_rows(rows, cfg.tolerances);
    report.rows.insert(report.rows.end(), rows.begin(), rows.end());
  }
  return report;
}

namespace {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

double parse_double(const std::string& s) {
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw ConfigError("CSV: bad number \"" + s + "\"");
  return v;
}

}  // namespace

void write_csv(const ConvergenceReport& report, std::ostream& out) {
  out << "pair_index,h,sup_error,order_estimate,pass\n";
  for (const auto& r : report.rows) {
    out << r.pair_index << ',' << format_double(r.h) << ',' << format_double(r.sup_error) << ','
        << format_double(r.order_estimate) << ',' << (r.pass ? 1 : 0) << '\n';
  }
}

std::string to_csv(const ConvergenceReport& report) {
  std::ostringstream out;
  write_csv(report, out);
  return out.str();
}

ConvergenceReport read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "pair_index,h,sup_error,order_estimate,pass") {
    throw ConfigError("CSV: missing or unexpected header");
  }
  ConvergenceReport report;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    for (std::string f; std::getline(ss, f, ',');) fields.push_back(f);
    if (fields.size() != 5) {
      throw ConfigError("CSV line " + std::to_string(lineno) + ": expected 5 fields");
    }
    try {
      ConvergenceRow r;
      r.pair_index = static_cast<std::size_t>(std::stoul(fields[0]));
      r.h = parse_double(fields[1]);
      r.sup_error = parse_double(fields[2]);
      r.order_estimate = parse_double(fields[3]);
      r.pass = fields[4] == "1";
      report.rows.push_back(r);
    } catch (const std::logic_error&) {
      throw ConfigError("CSV line " + std::to_string(lineno) + ": malformed field");
    }
  }
  return report;
}

ConvergenceReport recompute_orders(const ConvergenceReport& report) {
  ConvergenceReport out;
  for (std::size_t p = 0; p < report.pair_count(); ++p) {
    std::vector<ConvergenceRow> rows = report.pair_rows(p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      rows[i].order_estimate = window_order(rows, i);
    }
    out.rows.insert(out.rows.end(), rows.begin(), rows.end());
  }
  return out;
}

void write_summary(const ScenarioConfig& cfg, const ConvergenceReport& report, std::ostream& out) {
  out << "family " << cfg.family_type << " (" << to_string(cfg.family.kind) << "), d_h "
      << cfg.dim_h << ", d_k " << cfg.dim_k << ", horizon " << format_double(cfg.horizon)
      << '\n';
  for (std::size_t p = 0; p < report.pair_count(); ++p) {
    const auto rows = report.pair_rows(p);
    if (rows.empty()) continue;
    const bool ok = std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.pass; });
    char buf[160];
    std::snprintf(buf, sizeof(buf), "pair %zu: error %.3e -> %.3e, order %.3f  %s\n", p,
                  rows.front().sup_error, rows.back().sup_error, rows.back().order_estimate,
                  ok ? "PASS" : "FAIL");
    out << buf;
  }
  out << (report.all_pass() ? "all pairs pass" : "some pairs fail") << '\n';
}

FlowCauchyReport flow_cauchy_check(const GeneratorFamily& family, const ComplexMatrix& x,
                                   double horizon, const std::vector<int>& steps,
                                   double max_ratio, double zero_tol) {
  if (steps.size() < 2) {
    throw PreconditionError("flow_cauchy_check: need at least two resolutions");
  }
  FlowCauchyReport report;
  report.steps = steps;
  for (const int n : steps) {
    if (n < 1) throw PreconditionError("flow_cauchy_check: step counts must be positive");
    const double h = horizon / static_cast<double>(n);
    report.values.push_back(toyfock_flow_vacuum(family(h), x, n));
  }
  for (std::size_t i = 0; i + 1 < report.values.size(); ++i) {
    report.differences.push_back(op_norm(report.values[i + 1] - report.values[i]));
  }
  report.decreasing = true;
  for (std::size_t i = 0; i + 1 < report.differences.size(); ++i) {
    const double prev = report.differences[i];
    const double cur = report.differences[i + 1];
    report.ratios.push_back(prev > 0.0 ? cur / prev : 0.0);
    if (cur > zero_tol && cur > max_ratio * prev) report.decreasing = false;
  }
  return report;
}

}  // namespace qwc
