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

#include "qwc/walk.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qwc {

StepFunction::StepFunction(std::vector<double> breakpoints, std::vector<ComplexVector> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (breakpoints_.empty() || breakpoints_.size() != values_.size()) {
    throw DimensionError("StepFunction: need one value per breakpoint");
  }
  if (breakpoints_.front() != 0.0) {
    throw PreconditionError("StepFunction: first breakpoint must be 0");
  }
  for (std::size_t j = 0; j < breakpoints_.size(); ++j) {
    if (!std::isfinite(breakpoints_[j])) {
      throw NonFiniteError("StepFunction: non-finite breakpoint");
    }
    if (j > 0 && !(breakpoints_[j] > breakpoints_[j - 1])) {
      throw PreconditionError("StepFunction: breakpoints must be strictly ascending");
    }
    if (values_[j].size() != values_.front().size() || values_[j].size() < 1) {
      throw DimensionError("StepFunction: values of different lengths");
    }
    require_finite(values_[j], "StepFunction value");
  }
}

StepFunction StepFunction::constant(const ComplexVector& c) { return StepFunction({0.0}, {c}); }

StepFunction StepFunction::zero(Index dim_k) { return constant(ComplexVector::Zero(dim_k)); }

std::size_t StepFunction::interval_index(double t) const {
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  if (it == breakpoints_.begin()) {
    return 0;
  }
  return static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
}

const ComplexVector& StepFunction::operator()(double t) const {
  return values_[interval_index(t)];
}

ComplexVector StepFunction::integral(double a, double b) const {
  ComplexVector sum = ComplexVector::Zero(dim_k());
  if (!(b > a)) {
    return sum;
  }
  for (std::size_t j = interval_index(a); j < breakpoints_.size(); ++j) {
    const double lo = std::max(a, breakpoints_[j]);
    const double hi = (j + 1 < breakpoints_.size()) ? std::min(b, breakpoints_[j + 1]) : b;
    if (hi > lo) {
      sum += (hi - lo) * values_[j];
    }
    if (j + 1 < breakpoints_.size() && breakpoints_[j + 1] >= b) {
      break;
    }
  }
  return sum;
}

std::vector<double> StepFunction::breakpoints_in(double a, double b) const {
  std::vector<double> out;
  for (double t : breakpoints_) {
    if (t > a && t < b) {
      out.push_back(t);
    }
  }
  return out;
}

StepFunction StepFunction::shifted(double s) const {
  if (!(s >= 0.0)) {
    throw PreconditionError("StepFunction::shifted: shift must be nonnegative");
  }
  std::vector<double> bps{0.0};
  std::vector<ComplexVector> vals{(*this)(s)};
  for (std::size_t j = 0; j < breakpoints_.size(); ++j) {
    if (breakpoints_[j] > s) {
      bps.push_back(breakpoints_[j] - s);
      vals.push_back(values_[j]);
    }
  }
  return StepFunction(std::move(bps), std::move(vals));
}

StepFunction StepFunction::mapped(const ComplexMatrix& j) const {
  if (j.cols() != dim_k()) {
    throw DimensionError("StepFunction::mapped: J has the wrong number of columns");
  }
  std::vector<ComplexVector> vals;
  vals.reserve(values_.size());
  for (const auto& v : values_) {
    vals.emplace_back(j * v);
  }
  return StepFunction(breakpoints_, std::move(vals));
}

Complex inner_integral(const StepFunction& f, const StepFunction& g, double a, double b) {
  if (f.dim_k() != g.dim_k()) {
    throw DimensionError("inner_integral: step functions in different spaces");
  }
  if (!(b > a)) {
    return 0.0;
  }
  std::vector<double> cuts = f.breakpoints_in(a, b);
  const std::vector<double> more = g.breakpoints_in(a, b);
  cuts.insert(cuts.end(), more.begin(), more.end());
  cuts.push_back(a);
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  Complex sum = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    sum += (cuts[i + 1] - cuts[i]) * f(cuts[i]).dot(g(cuts[i]));
  }
  return sum;
}

ComplexVector step_average(const StepFunction& f, long n, double h) {
  if (!(h > 0.0)) {
    throw PreconditionError("step_average: h must be positive");
  }
  const double a = h * static_cast<double>(n);
  return f.integral(a, a + h) / h;
}

long walk_steps(double t, double h) {
  return static_cast<long>(std::floor(t / h + 1e-9));
}

ComplexMatrix walk_step_matrix(const BlockOperator& g_op, const StepFunction& f,
                               const StepFunction& g, long n, double h) {
  if (!(h > 0.0)) {
    throw PreconditionError("walk_step_matrix: h must be positive");
  }
  // I + h E^c s_h(G - Delta-perp) E_d equals E^{sqrt(h) c} G E_{sqrt(h) d}.
  const double rh = std::sqrt(h);
  return compress(g_op, rh * step_average(f, n, h), rh * step_average(g, n, h));
}

ComplexMatrix walk_matrix_element(const BlockOperator& g_op, const StepFunction& f,
                                  const StepFunction& g, double h, double t) {
  return walk_matrix_elements(g_op, f, g, h, {t}).front();
}

std::vector<ComplexMatrix> walk_matrix_elements(const BlockOperator& g_op,
                                                const StepFunction& f,
                                                const StepFunction& g, double h,
                                                const std::vector<double>& times) {
  if (!(h > 0.0)) {
    throw PreconditionError("walk_matrix_elements: h must be positive");
  }
  if (f.dim_k() != g_op.dim_k() || g.dim_k() != g_op.dim_k()) {
    throw DimensionError("walk_matrix_elements: test functions in the wrong noise space");
  }
  std::vector<ComplexMatrix> out;
  out.reserve(times.size());
  ComplexMatrix product = ComplexMatrix::Identity(g_op.dim_h(), g_op.dim_h());
  long done = 0;
  double last = -1.0;
  for (const double t : times) {
    if (!(t >= 0.0) || t < last) {
      throw PreconditionError("walk_matrix_elements: times must be ascending and nonnegative");
    }
    last = t;
    const long steps = walk_steps(t, h);
    for (; done < steps; ++done) {
      product = product * walk_step_matrix(g_op, f, g, done, h);
    }
    const double edge = std::min(h * static_cast<double>(steps), t);
    out.push_back(product * std::exp(inner_integral(f, g, edge, t)));
  }
  return out;
}

namespace {

// Left-multiplies X (rows in Kronecker order h, k^_0, ..., k^_{n-1}) by the
// Kronecker-order matrix `local` acting on h and factor i.
void apply_local(const ComplexMatrix& local, ComplexMatrix& x, Index dim_h, Index m, int n,
                 int i) {
  Index stride = 1;
  for (int l = i + 1; l < n; ++l) stride *= m;
  Index head = 1;
  for (int l = 0; l < i; ++l) head *= m;
  const Index sector = head * m * stride;  // m^n
  const Index local_dim = dim_h * m;

  std::vector<Index> rows(static_cast<std::size_t>(local_dim));
  ComplexMatrix gathered(local_dim, x.cols());
  for (Index hi = 0; hi < head; ++hi) {
    for (Index lo = 0; lo < stride; ++lo) {
      for (Index a = 0; a < dim_h; ++a) {
        for (Index j = 0; j < m; ++j) {
          const Index r = a * sector + hi * m * stride + j * stride + lo;
          rows[static_cast<std::size_t>(a * m + j)] = r;
          gathered.row(a * m + j) = x.row(r);
        }
      }
      const ComplexMatrix result = local * gathered;
      for (Index q = 0; q < local_dim; ++q) {
        x.row(rows[static_cast<std::size_t>(q)]) = result.row(q);
      }
    }
  }
}

}  // namespace

Index ToyFockOperator::vacuum_index(Index a) const {
  Index sector = 1;
  for (int l = 0; l < n_steps; ++l) sector *= (1 + dim_k);
  return a * sector;
}

ComplexMatrix ToyFockOperator::vacuum_block() const {
  ComplexMatrix out(dim_h, dim_h);
  for (Index a = 0; a < dim_h; ++a) {
    for (Index b = 0; b < dim_h; ++b) {
      out(a, b) = matrix(vacuum_index(a), vacuum_index(b));
    }
  }
  return out;
}

Index toyfock_dimension(Index dim_h, Index dim_k, int n, Index cap) {
  if (n < 0) {
    throw PreconditionError("toyfock_dimension: negative step count");
  }
  Index dim = dim_h;
  for (int l = 0; l < n; ++l) {
    dim *= (1 + dim_k);
    if (dim > cap) {
      throw SizeCapError("toy Fock dimension exceeds the cap of " + std::to_string(cap));
    }
  }
  return dim;
}

ToyFockOperator toyfock_walk(const BlockOperator& g_op, int n, Index cap) {
  const Index dim = toyfock_dimension(g_op.dim_h(), g_op.dim_k(), n, cap);
  const ComplexMatrix local = to_kron(g_op);
  ToyFockOperator w{g_op.dim_h(), g_op.dim_k(), n, ComplexMatrix::Identity(dim, dim)};
  for (int i = n - 1; i >= 0; --i) {
    apply_local(local, w.matrix, g_op.dim_h(), 1 + g_op.dim_k(), n, i);
  }
  return w;
}

ToyFockOperator toyfock_flow(const BlockOperator& g_op, const ComplexMatrix& x, int n,
                             Index cap) {
  if (x.rows() != g_op.dim_h() || x.cols() != g_op.dim_h()) {
    throw DimensionError("toyfock_flow: x must act on the initial space");
  }
  ToyFockOperator w = toyfock_walk(g_op, n, cap);
  const Index rest = w.matrix.rows() / g_op.dim_h();
  const ComplexMatrix amp = kron(x, ComplexMatrix::Identity(rest, rest));
  w.matrix = w.matrix * amp * w.matrix.adjoint();
  return w;
}

ComplexMatrix toyfock_flow_vacuum(const BlockOperator& g_op, const ComplexMatrix& x, int n,
                                  Index cap) {
  if (x.rows() != g_op.dim_h() || x.cols() != g_op.dim_h()) {
    throw DimensionError("toyfock_flow_vacuum: x must act on the initial space");
  }
  const Index dh = g_op.dim_h();
  const Index dim = toyfock_dimension(dh, g_op.dim_k(), n, cap);
  const Index rest = dim / dh;
  // Y = W* (I (x) Omega), built as G_{n-1}* ... G_0* applied to the vacuum.
  ComplexMatrix y = ComplexMatrix::Zero(dim, dh);
  for (Index a = 0; a < dh; ++a) {
    y(a * rest, a) = 1.0;
  }
  const ComplexMatrix local_adj = to_kron(g_op).adjoint();
  for (int i = 0; i < n; ++i) {
    apply_local(local_adj, y, dh, 1 + g_op.dim_k(), n, i);
  }
  // <a Omega, W (x (x) I) W* b Omega> = Y* (x (x) I) Y.
  ComplexMatrix xy = ComplexMatrix::Zero(dim, dh);
  for (Index a = 0; a < dh; ++a) {
    for (Index b = 0; b < dh; ++b) {
      xy.middleRows(a * rest, rest) += x(a, b) * y.middleRows(b * rest, rest);
    }
  }
  return y.adjoint() * xy;
}

}  // namespace qwc
