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

// The Holevo transform F[Q] of an operator on h (x) k^, the Q_{A,B,D}
// parameterisation, the passage between skewadjoint Q and unitary
// F_{Z,L,W}, and checks of the scaled limits of P^n and exp(Q_h).

#include <functional>
#include <utility>
#include <vector>

#include "qwc/ito.hpp"

namespace qwc {

/// Scalar entire functions and their companions.
namespace scalar {

Complex e0(Complex z);
/// (e^z - 1) / z.
Complex e1(Complex z);
/// (e^z - 1 - z) / z^2.
Complex e2(Complex z);
/// (sinh z - z) / z^2.
Complex e(Complex z);
/// (i/2)(sin t - t)/(cos t - 1), 0 at t = 0.
Complex e_a(double t);
/// it / (e^{it} - 1), 1 at t = 0.
Complex e_b(double t);
/// sum_{k=2}^{n} C(n,k) n^{-k} z^{k-2}, so that (1 + z/n)^n = 1 + z + z^2 p_n(z).
/// Horner on the coefficients for |z| <= 1, the closed form beyond.
Complex p_n(int n, Complex z);

}  // namespace scalar

/// Q_{A,B,D} = [[A, -B*], [B, D]].
struct QParams {
  ComplexMatrix a;
  ComplexMatrix b;
  ComplexMatrix d;

  Index dim_h() const { return a.rows(); }
  Index dim_k() const { return a.rows() == 0 ? 0 : b.rows() / a.rows(); }
  void validate() const;
};

BlockOperator assemble_Q(const QParams& q);

/// F[Q] = [[A + C e2(D) B, C e1(D)], [e1(D) B, e0(D) - I]].
BlockOperator holevo_transform(const BlockOperator& q);

/// The same transform computed as tau^-1(exp(tau Q) - I), where
/// tau(Q) = [[0, C, A], [0, D, B], [0, 0, 0]] on h (+) h(x)k (+) h.
BlockOperator tau_exp_oracle(const BlockOperator& q);

struct PrincipalLog {
  ComplexMatrix r;         // Hermitian, e^{iR} = W
  RealVector phases;       // eigenvalues of R, each in [0, 2 pi)
  ComplexMatrix vectors;   // common eigenbasis
  double residual = 0.0;   // |V e^{i phases} V* - W|
};

inline constexpr double kPhaseWrapTol = 1e-9;

/// Hermitian R with spectrum in [0, 2 pi) and e^{iR} = W for unitary W.
/// Throws PreconditionError if W is not unitary to 1e-8 or the eigenbasis
/// reconstruction residual exceeds `residual_tol`.
PrincipalLog principal_log(const ComplexMatrix& w, double residual_tol = 1e-9);

/// For Z skewadjoint and W unitary: A = Z + L* e_a(R) L, B = e_b(R) L,
/// D = iR, with e^{iR} = W. F[Q_{A,B,D}] = F_{Z,L,W}.
QParams q_from_unitary_params(const GeneratorParams& p);

/// For D skewadjoint: W = e0(D), L = e1(D) B, Z = A - B* e(D) B.
GeneratorParams f_from_skew_params(const QParams& q);

struct ScaledPowerRow {
  double h = 0.0;
  int n = 0;
  double hypothesis_error = 0.0;  // |n s_h(P - I) - Q|
  double limit_error = 0.0;       // |s_h(P^n - I) - F[Q]|
};

using PowerFamily = std::function<BlockOperator(double h, int n)>;
using ScaledFamily = std::function<BlockOperator(double h)>;

std::vector<ScaledPowerRow> scaled_power_limit_check(
    const PowerFamily& p, const BlockOperator& q,
    const std::vector<std::pair<double, int>>& grid);

struct ScaledLimitRow {
  double h = 0.0;
  double error = 0.0;
};

/// |s_h(exp(Q_h) - I) - F[Q]| for each h.
std::vector<ScaledLimitRow> exp_dissipative_limit(const ScaledFamily& q_h,
                                                  const BlockOperator& q,
                                                  const std::vector<double>& hs);

struct TransformPairRow {
  double h = 0.0;
  double product_error = 0.0;  // |s_h(e^{Q1(h)} e^{Q2(h)} - I) - F[Q1] <| F[Q2]|
  double sum_error = 0.0;      // |s_h(e^{Q1(h) + Q2(h)} - I) - F[Q1 + Q2]|
};

std::vector<TransformPairRow> series_of_transforms_check(
    const BlockOperator& q1, const BlockOperator& q2, const ScaledFamily& q1_h,
    const ScaledFamily& q2_h, const std::vector<double>& hs);

/// P^n by repeated squaring.
BlockOperator block_power(const BlockOperator& p, int n);

}  // namespace qwc
