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

#include "qwc/holevo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qwc {
namespace scalar {
namespace {

constexpr int kSeriesTerms = 30;
constexpr double kSeriesRadius = 1.0;

// sum_{k>=0} z^k / (k + shift)!
Complex shifted_exp_series(Complex z, int shift) {
  Complex term = 1.0;
  for (int j = 1; j <= shift; ++j) {
    term /= static_cast<double>(j);
  }
  Complex sum = term;
  for (int k = 1; k < kSeriesTerms; ++k) {
    term *= z / static_cast<double>(k + shift);
    sum += term;
  }
  return sum;
}

}  // namespace

Complex e0(Complex z) { return std::exp(z); }

Complex e1(Complex z) {
  if (std::abs(z) <= kSeriesRadius) {
    return shifted_exp_series(z, 1);
  }
  return (std::exp(z) - 1.0) / z;
}

Complex e2(Complex z) {
  if (std::abs(z) <= kSeriesRadius) {
    return shifted_exp_series(z, 2);
  }
  return (std::exp(z) - 1.0 - z) / (z * z);
}

Complex e(Complex z) {
  if (std::abs(z) <= kSeriesRadius) {
    // z/3! + z^3/5! + ...
    const Complex z2 = z * z;
    Complex term = z / 6.0;
    Complex sum = term;
    for (int k = 1; k < kSeriesTerms / 2; ++k) {
      term *= z2 / static_cast<double>((2 * k + 2) * (2 * k + 3));
      sum += term;
    }
    return sum;
  }
  return (std::sinh(z) - z) / (z * z);
}

Complex e_a(double t) {
  const double at = std::abs(t);
  if (at < 1e-3) {
    const double t2 = t * t;
    return kI * (t / 6.0) * (1.0 + t2 / 30.0 + t2 * t2 / 840.0);
  }
  // cos t - 1 = -2 sin^2(t/2); sin t - t summed directly where it cancels.
  const double s = std::sin(0.5 * t);
  const double denom = -2.0 * s * s;
  double numer = 0.0;
  if (at < 1.0) {
    const double t2 = t * t;
    double term = -t * t2 / 6.0;
    numer = term;
    for (int k = 2; k < 12; ++k) {
      term *= -t2 / static_cast<double>((2 * k) * (2 * k + 1));
      numer += term;
    }
  } else {
    numer = std::sin(t) - t;
  }
  return 0.5 * kI * numer / denom;
}

Complex e_b(double t) {
  if (std::abs(t) < 1e-3) {
    const Complex x = kI * t;
    const Complex x2 = x * x;
    return 1.0 - x / 2.0 + x2 / 12.0 - x2 * x2 / 720.0 + x2 * x2 * x2 / 30240.0;
  }
  // e^{it} - 1 = 2i sin(t/2) e^{it/2}.
  return (0.5 * t / std::sin(0.5 * t)) * std::exp(-0.5 * kI * t);
}

Complex p_n(int n, Complex z) {
  if (n < 1) {
    throw PreconditionError("p_n: n must be positive");
  }
  // The monomial form cancels badly once |z| > 1 (terms grow like |z|^k/k!
  // while the sum stays moderate); there the closed form is accurate.
  if (std::abs(z) > 1.0) {
    const double nn = static_cast<double>(n);
    return (std::pow(1.0 + z / nn, n) - 1.0 - z) / (z * z);
  }
  // Coefficient of z^{k-2} is C(n,k) n^{-k}; build them by the ratio
  // c_{k+1}/c_k = (n - k) / ((k + 1) n).
  std::vector<double> coeff;
  const double nn = static_cast<double>(n);
  double c = (n >= 2) ? (nn - 1.0) / (2.0 * nn) : 0.0;
  for (int k = 2; k <= n; ++k) {
    coeff.push_back(c);
    c *= (nn - k) / ((k + 1.0) * nn);
  }
  Complex acc = 0.0;
  for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) {
    acc = acc * z + *it;
  }
  return acc;
}

}  // namespace scalar

void QParams::validate() const {
  const Index dh = a.rows();
  if (dh < 1 || a.cols() != dh || b.cols() != dh || b.rows() % dh != 0 || b.rows() < dh ||
      d.rows() != b.rows() || d.cols() != b.rows()) {
    throw DimensionError("QParams: inconsistent shapes for A, B, D");
  }
  require_finite(a, "QParams A");
  require_finite(b, "QParams B");
  require_finite(d, "QParams D");
}

BlockOperator assemble_Q(const QParams& q) {
  q.validate();
  return BlockOperator::from_blocks(q.a, -q.b.adjoint(), q.b, q.d);
}

BlockOperator holevo_transform(const BlockOperator& q) {
  require_finite(q.matrix(), "holevo_transform");
  const PhiFunctions phi = phi_funcs(q.d());
  const ComplexMatrix c = q.c();
  const ComplexMatrix b = q.b();
  const ComplexMatrix id = ComplexMatrix::Identity(phi.e0.rows(), phi.e0.cols());
  return BlockOperator::from_blocks(q.a() + c * phi.e2 * b, c * phi.e1, phi.e1 * b,
                                    phi.e0 - id);
}

BlockOperator tau_exp_oracle(const BlockOperator& q) {
  require_finite(q.matrix(), "tau_exp_oracle");
  const Index dh = q.dim_h();
  const Index dn = dh * q.dim_k();
  const Index n = 2 * dh + dn;
  ComplexMatrix tau = ComplexMatrix::Zero(n, n);
  tau.block(0, dh, dh, dn) = q.c();
  tau.block(0, dh + dn, dh, dh) = q.a();
  tau.block(dh, dh, dn, dn) = q.d();
  tau.block(dh, dh + dn, dn, dh) = q.b();
  ComplexMatrix ex = mat_exp(tau);
  ex -= ComplexMatrix::Identity(n, n);
  return BlockOperator::from_blocks(ex.block(0, dh + dn, dh, dh), ex.block(0, dh, dh, dn),
                                    ex.block(dh, dh + dn, dn, dh), ex.block(dh, dh, dn, dn));
}

PrincipalLog principal_log(const ComplexMatrix& w, double residual_tol) {
  require_square(w, "principal_log");
  require_finite(w, "principal_log");
  const Index n = w.rows();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  if (op_norm(w.adjoint() * w - id) > 1e-8) {
    throw PreconditionError("principal_log: W is not unitary");
  }

  const HermitianEigen re = herm_eig(real_part(w));
  const ComplexMatrix im = imag_part(w);
  ComplexMatrix v = re.vectors;

  // cos(theta) cannot tell theta from 2 pi - theta; separate those (and any
  // other near-degenerate directions) with the imaginary part.
  constexpr double kClusterTol = 1e-7;
  Index start = 0;
  while (start < n) {
    Index stop = start + 1;
    while (stop < n && re.values(stop) - re.values(stop - 1) <= kClusterTol) {
      ++stop;
    }
    const Index len = stop - start;
    if (len > 1) {
      const ComplexMatrix block = v.middleCols(start, len);
      const ComplexMatrix compressed = block.adjoint() * im * block;
      const HermitianEigen sub = herm_eig(0.5 * (compressed + compressed.adjoint()));
      v.middleCols(start, len) = block * sub.vectors;
    }
    start = stop;
  }

  const ComplexMatrix diag = v.adjoint() * w * v;
  PrincipalLog out;
  out.phases.resize(n);
  ComplexVector unit_phases(n);
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  for (Index i = 0; i < n; ++i) {
    double theta = std::arg(diag(i, i));
    if (theta < 0.0) {
      theta += kTwoPi;
    }
    if (theta > kTwoPi - kPhaseWrapTol) {
      theta = 0.0;
    }
    out.phases(i) = theta;
    unit_phases(i) = std::polar(1.0, theta);
  }
  out.vectors = v;
  const ComplexMatrix rebuilt = v * unit_phases.asDiagonal() * v.adjoint();
  out.residual = op_norm(rebuilt - w);
  if (out.residual > residual_tol) {
    throw PreconditionError("principal_log: eigenbasis reconstruction residual too large");
  }
  const ComplexMatrix r = v * out.phases.cast<Complex>().asDiagonal() * v.adjoint();
  out.r = 0.5 * (r + r.adjoint());
  return out;
}

QParams q_from_unitary_params(const GeneratorParams& p) {
  p.validate();
  const PrincipalLog log = principal_log(p.w);
  const Index n = log.phases.size();
  ComplexVector fa(n);
  ComplexVector fb(n);
  for (Index i = 0; i < n; ++i) {
    fa(i) = scalar::e_a(log.phases(i));
    fb(i) = scalar::e_b(log.phases(i));
  }
  const ComplexMatrix ea = log.vectors * fa.asDiagonal() * log.vectors.adjoint();
  const ComplexMatrix eb = log.vectors * fb.asDiagonal() * log.vectors.adjoint();
  QParams q;
  q.a = p.z + p.l.adjoint() * ea * p.l;
  q.b = eb * p.l;
  q.d = kI * log.r;
  return q;
}

GeneratorParams f_from_skew_params(const QParams& q) {
  q.validate();
  if (op_norm(q.d + q.d.adjoint()) > 1e-8) {
    throw PreconditionError("f_from_skew_params: D is not skewadjoint");
  }
  const PhiFunctions phi = phi_funcs(q.d);
  GeneratorParams p;
  p.w = phi.e0;
  p.l = phi.e1 * q.b;
  p.z = q.a - q.b.adjoint() * phi.e * q.b;
  return p;
}

BlockOperator block_power(const BlockOperator& p, int n) {
  if (n < 0) {
    throw PreconditionError("block_power: negative exponent");
  }
  BlockOperator result = BlockOperator::identity(p.dim_h(), p.dim_k());
  BlockOperator base = p;
  while (n > 0) {
    if (n & 1) {
      result = result * base;
    }
    n >>= 1;
    if (n > 0) {
      base = base * base;
    }
  }
  return result;
}

std::vector<ScaledPowerRow> scaled_power_limit_check(
    const PowerFamily& p, const BlockOperator& q,
    const std::vector<std::pair<double, int>>& grid) {
  if (grid.empty()) {
    throw PreconditionError("scaled_power_limit_check: empty grid");
  }
  const BlockOperator fq = holevo_transform(q);
  const BlockOperator id = BlockOperator::identity(q.dim_h(), q.dim_k());
  std::vector<ScaledPowerRow> rows;
  rows.reserve(grid.size());
  for (const auto& [h, n] : grid) {
    const BlockOperator ph = p(h, n);
    ScaledPowerRow row;
    row.h = h;
    row.n = n;
    row.hypothesis_error =
        op_norm((Complex(n, 0.0) * scale_h(ph - id, h) - q).matrix());
    row.limit_error = op_norm((scale_h(block_power(ph, n) - id, h) - fq).matrix());
    rows.push_back(row);
  }
  return rows;
}

std::vector<ScaledLimitRow> exp_dissipative_limit(const ScaledFamily& q_h,
                                                  const BlockOperator& q,
                                                  const std::vector<double>& hs) {
  const BlockOperator fq = holevo_transform(q);
  const BlockOperator id = BlockOperator::identity(q.dim_h(), q.dim_k());
  std::vector<ScaledLimitRow> rows;
  rows.reserve(hs.size());
  for (const double h : hs) {
    if (!(h > 0.0)) {
      throw PreconditionError("exp_dissipative_limit: h must be positive");
    }
    const BlockOperator qh = q_h(h);
    const BlockOperator g(qh.dim_h(), qh.dim_k(), mat_exp(qh.matrix()));
    rows.push_back({h, op_norm((scale_h(g - id, h) - fq).matrix())});
  }
  return rows;
}

std::vector<TransformPairRow> series_of_transforms_check(
    const BlockOperator& q1, const BlockOperator& q2, const ScaledFamily& q1_h,
    const ScaledFamily& q2_h, const std::vector<double>& hs) {
  const BlockOperator product_limit = series_product(holevo_transform(q1), holevo_transform(q2));
  const BlockOperator sum_limit = holevo_transform(q1 + q2);
  const BlockOperator id = BlockOperator::identity(q1.dim_h(), q1.dim_k());
  std::vector<TransformPairRow> rows;
  rows.reserve(hs.size());
  for (const double h : hs) {
    const BlockOperator a = q1_h(h);
    const BlockOperator b = q2_h(h);
    const BlockOperator prod(a.dim_h(), a.dim_k(),
                             mat_exp(a.matrix()) * mat_exp(b.matrix()));
    const BlockOperator sum(a.dim_h(), a.dim_k(), mat_exp(a.matrix() + b.matrix()));
    TransformPairRow row;
    row.h = h;
    row.product_error = op_norm((scale_h(prod - id, h) - product_limit).matrix());
    row.sum_error = op_norm((scale_h(sum - id, h) - sum_limit).matrix());
    rows.push_back(row);
  }
  return rows;
}

}  // namespace qwc
