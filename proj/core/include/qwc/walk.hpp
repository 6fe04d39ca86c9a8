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

// Step functions in k, quantum random walks on toy Fock space, and matrix
// elements of the embedded walk at time scale h between exponential vectors
// of step functions.

#include <vector>

#include "qwc/block.hpp"

namespace qwc {

/// Right-continuous step function [0, inf) -> C^{d_k}. values[j] holds on
/// [breakpoints[j], breakpoints[j+1]); the last value holds to infinity.
/// breakpoints[0] is always 0.
class StepFunction {
 public:
  StepFunction() = default;
  StepFunction(std::vector<double> breakpoints, std::vector<ComplexVector> values);

  static StepFunction constant(const ComplexVector& c);
  static StepFunction zero(Index dim_k);

  Index dim_k() const { return values_.front().size(); }
  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<ComplexVector>& values() const { return values_; }

  const ComplexVector& operator()(double t) const;
  /// Integral of f over [a, b].
  ComplexVector integral(double a, double b) const;
  /// Breakpoints strictly inside (a, b).
  std::vector<double> breakpoints_in(double a, double b) const;
  /// t -> f(t + s).
  StepFunction shifted(double s) const;
  /// t -> J f(t).
  StepFunction mapped(const ComplexMatrix& j) const;

 private:
  std::size_t interval_index(double t) const;

  std::vector<double> breakpoints_;
  std::vector<ComplexVector> values_;
};

/// Integral over [a, b] of <f(s), g(s)>, conjugate-linear in f.
Complex inner_integral(const StepFunction& f, const StepFunction& g, double a, double b);

/// f[n, h], the mean of f over [nh, (n+1)h).
ComplexVector step_average(const StepFunction& f, long n, double h);

/// floor(t/h), tolerant to rounding when t is a multiple of h.
long walk_steps(double t, double h);

/// I + h E^{f^[n,h]} s_h(G - Delta-perp) E_{g^[n,h]}.
ComplexMatrix walk_step_matrix(const BlockOperator& g_op, const StepFunction& f,
                               const StepFunction& g, long n, double h);

/// Matrix element of the embedded walk at time t: the time-ordered product
/// of walk_step_matrix over n < floor(t/h), times exp(int_{h floor(t/h)}^t <f, g>).
ComplexMatrix walk_matrix_element(const BlockOperator& g_op, const StepFunction& f,
                                  const StepFunction& g, double h, double t);

/// walk_matrix_element at each of the ascending times, sharing the product.
std::vector<ComplexMatrix> walk_matrix_elements(const BlockOperator& g_op,
                                                const StepFunction& f,
                                                const StepFunction& g, double h,
                                                const std::vector<double>& times);

inline constexpr Index kToyFockSizeCap = 20000;

/// Operator on h (x) k^{(x)n}, stored in Kronecker order (h index, then the
/// k^ factors in time order). The vacuum sector is the rows a (1+d_k)^n.
struct ToyFockOperator {
  Index dim_h = 0;
  Index dim_k = 0;
  int n_steps = 0;
  ComplexMatrix matrix;

  Index vacuum_index(Index a) const;
  /// The d_h x d_h block between vacuum-sector vectors.
  ComplexMatrix vacuum_block() const;
};

/// Dimension d_h (1+d_k)^n, throwing SizeCapError above `cap`.
Index toyfock_dimension(Index dim_h, Index dim_k, int n, Index cap = kToyFockSizeCap);

/// G_0 G_1 ... G_{n-1}, with G_i acting on h and the i-th k^ factor.
ToyFockOperator toyfock_walk(const BlockOperator& g_op, int n, Index cap = kToyFockSizeCap);

/// W_n (x (x) I) W_n*.
ToyFockOperator toyfock_flow(const BlockOperator& g_op, const ComplexMatrix& x, int n,
                             Index cap = kToyFockSizeCap);

/// The vacuum block of toyfock_flow, computed from W_n* applied to the
/// vacuum sector without forming W_n.
ComplexMatrix toyfock_flow_vacuum(const BlockOperator& g_op, const ComplexMatrix& x, int n,
                                  Index cap = kToyFockSizeCap);

}  // namespace qwc
