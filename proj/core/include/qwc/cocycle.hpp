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

// Matrix elements of the limit cocycle X^F between exponential vectors of
// step functions, evaluated exactly as a time-ordered product of
// semigroups, plus Euler exponential-formula comparisons.

#include <functional>
#include <vector>

#include "qwc/walk.hpp"

namespace qwc {

/// E^{c^} F E_{d^} + <c, d> I, the generator of P^{c,d}.
ComplexMatrix semigroup_generator(const BlockOperator& f, const ComplexVector& c,
                                  const ComplexVector& d);

/// <e(f_{[0,t)}), X_t e(g_{[0,t)})> as an operator on h.
ComplexMatrix cocycle_matrix_element(const BlockOperator& f_op, const StepFunction& f,
                                     const StepFunction& g, double t);

/// cocycle_matrix_element at each of the ascending times, sharing the product.
std::vector<ComplexMatrix> cocycle_matrix_elements(const BlockOperator& f_op,
                                                   const StepFunction& f,
                                                   const StepFunction& g,
                                                   const std::vector<double>& times);

using MatrixFamily = std::function<ComplexMatrix(double h)>;

/// |(I + h a(h))^{floor(t/h) - floor(r/h)} - e^{(t - r) a}|.
double euler_compare(const ComplexMatrix& a_target, const MatrixFamily& a_of_h, double h,
                     double r, double t);

/// Sup of euler_compare over r in {0, h/2} and t in the multiples of h/2 in
/// [r, horizon].
double euler_sup_error(const ComplexMatrix& a_target, const MatrixFamily& a_of_h, double h,
                       double horizon);

/// |element of X^{J* F J} against (f, g) - element of X^F against (Jf, Jg)|.
double jgj_cocycle_defect(const BlockOperator& f_big, const ComplexMatrix& j,
                          const StepFunction& f, const StepFunction& g, double t);

/// The same comparison for the embedded walk of G at scale h.
double jgj_walk_defect(const BlockOperator& g_big, const ComplexMatrix& j,
                       const StepFunction& f, const StepFunction& g, double h, double t);

/// Multiples of h in [0, T], the breakpoints of f and g in [0, T], T itself
/// and `extra` further uniform points, sorted and deduplicated.
std::vector<double> evaluation_grid(double h, double horizon, const StepFunction& f,
                                    const StepFunction& g, int extra = 0);

}  // namespace qwc
