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

#include "qwc/cocycle.hpp"

#include <algorithm>
#include <cmath>

namespace qwc {

ComplexMatrix semigroup_generator(const BlockOperator& f, const ComplexVector& c,
                                  const ComplexVector& d) {
  ComplexMatrix gen = compress(f, c, d);
  gen.diagonal().array() += c.dot(d);
  return gen;
}

ComplexMatrix cocycle_matrix_element(const BlockOperator& f_op, const StepFunction& f,
                                     const StepFunction& g, double t) {
  return cocycle_matrix_elements(f_op, f, g, {t}).front();
}

std::vector<ComplexMatrix> cocycle_matrix_elements(const BlockOperator& f_op,
                                                   const StepFunction& f,
                                                   const StepFunction& g,
                                                   const std::vector<double>& times) {
  if (f.dim_k() != f_op.dim_k() || g.dim_k() != f_op.dim_k()) {
    throw DimensionError("cocycle_matrix_elements: test functions in the wrong noise space");
  }
  std::vector<ComplexMatrix> out;
  out.reserve(times.size());
  ComplexMatrix x = ComplexMatrix::Identity(f_op.dim_h(), f_op.dim_h());
  double now = 0.0;
  for (const double t : times) {
    if (!(t >= now)) {
      throw PreconditionError("cocycle_matrix_elements: times must be ascending and nonnegative");
    }
    std::vector<double> cuts = f.breakpoints_in(now, t);
    const std::vector<double> more = g.breakpoints_in(now, t);
    cuts.insert(cuts.end(), more.begin(), more.end());
    cuts.push_back(t);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (const double next : cuts) {
      if (next > now) {
        x = x * mat_exp((next - now) * semigroup_generator(f_op, f(now), g(now)));
        now = next;
      }
    }
    out.push_back(x);
  }
  return out;
}

double euler_compare(const ComplexMatrix& a_target, const MatrixFamily& a_of_h, double h,
                     double r, double t) {
  if (!(r >= 0.0) || !(t >= r) || !(h > 0.0)) {
    throw PreconditionError("euler_compare: need 0 <= r <= t and h > 0");
  }
  const ComplexMatrix id = ComplexMatrix::Identity(a_target.rows(), a_target.cols());
  const ComplexMatrix step = id + h * a_of_h(h);
  const long k = walk_steps(t, h) - walk_steps(r, h);
  ComplexMatrix power = id;
  ComplexMatrix base = step;
  for (long e = k; e > 0; e >>= 1) {
    if (e & 1) power = power * base;
    base = base * base;
  }
  return op_norm(power - mat_exp((t - r) * a_target));
}

double euler_sup_error(const ComplexMatrix& a_target, const MatrixFamily& a_of_h, double h,
                       double horizon) {
  const ComplexMatrix id = ComplexMatrix::Identity(a_target.rows(), a_target.cols());
  const ComplexMatrix step = id + h * a_of_h(h);
  double sup = 0.0;
  for (const double r : {0.0, 0.5 * h}) {
    ComplexMatrix power = id;
    long applied = 0;
    const long r_steps = walk_steps(r, h);
    for (long m = 0;; ++m) {
      const double t = r + 0.5 * h * static_cast<double>(m);
      if (t > horizon + 1e-12) break;
      const long k = walk_steps(t, h) - r_steps;
      for (; applied < k; ++applied) power = power * step;
      sup = std::max(sup, op_norm(power - mat_exp((t - r) * a_target)));
    }
  }
  return sup;
}

double jgj_cocycle_defect(const BlockOperator& f_big, const ComplexMatrix& j,
                          const StepFunction& f, const StepFunction& g, double t) {
  const BlockOperator small = embed_noise_compress(f_big, j);
  return op_norm(cocycle_matrix_element(small, f, g, t) -
                 cocycle_matrix_element(f_big, f.mapped(j), g.mapped(j), t));
}

double jgj_walk_defect(const BlockOperator& g_big, const ComplexMatrix& j,
                       const StepFunction& f, const StepFunction& g, double h, double t) {
  const BlockOperator small = embed_noise_compress(g_big, j);
  return op_norm(walk_matrix_element(small, f, g, h, t) -
                 walk_matrix_element(g_big, f.mapped(j), g.mapped(j), h, t));
}

std::vector<double> evaluation_grid(double h, double horizon, const StepFunction& f,
                                    const StepFunction& g, int extra) {
  if (!(h > 0.0) || !(horizon > 0.0)) {
    throw PreconditionError("evaluation_grid: h and horizon must be positive");
  }
  std::vector<double> grid;
  const long steps = walk_steps(horizon, h);
  grid.reserve(static_cast<std::size_t>(steps + 2 + extra) + f.breakpoints().size() +
               g.breakpoints().size());
  for (long n = 0; n <= steps; ++n) {
    const double t = h * static_cast<double>(n);
    if (t <= horizon) grid.push_back(t);
  }
  for (const auto* fn : {&f, &g}) {
    for (const double t : fn->breakpoints()) {
      if (t <= horizon) grid.push_back(t);
    }
  }
  grid.push_back(horizon);
  for (int i = 1; i <= extra; ++i) {
    grid.push_back(horizon * static_cast<double>(i) / static_cast<double>(extra + 1));
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

}  // namespace qwc
