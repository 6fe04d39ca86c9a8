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

#include "qwc/ito.hpp"

#include <cmath>

namespace qwc {

void GeneratorParams::validate() const {
  const Index dh = z.rows();
  if (dh < 1 || z.cols() != dh || l.cols() != dh || l.rows() % dh != 0 || l.rows() < dh ||
      w.rows() != l.rows() || w.cols() != l.rows()) {
    throw DimensionError("GeneratorParams: inconsistent shapes for Z, L, W");
  }
  require_finite(z, "GeneratorParams Z");
  require_finite(l, "GeneratorParams L");
  require_finite(w, "GeneratorParams W");
}

GeneratorParams GeneratorParams::trivial(Index dim_h, Index dim_k) {
  return {ComplexMatrix::Zero(dim_h, dim_h), ComplexMatrix::Zero(dim_h * dim_k, dim_h),
          ComplexMatrix::Identity(dim_h * dim_k, dim_h * dim_k)};
}

BlockOperator series_product(const BlockOperator& f1, const BlockOperator& f2) {
  if (!f1.same_shape(f2)) {
    throw DimensionError("series_product: generators on different spaces");
  }
  const Index dh = f1.dim_h();
  const Index n = f1.size();
  // F1 Delta F2 only involves the h(x)k columns of F1 and rows of F2.
  ComplexMatrix m = f1.matrix() + f2.matrix();
  m.noalias() += f1.matrix().rightCols(n - dh) * f2.matrix().bottomRows(n - dh);
  return BlockOperator(dh, f1.dim_k(), std::move(m));
}

BlockOperator assemble_FZLW(const GeneratorParams& p) {
  p.validate();
  const ComplexMatrix ldag_w = p.l.adjoint() * p.w;
  const ComplexMatrix id = ComplexMatrix::Identity(p.w.rows(), p.w.cols());
  return BlockOperator::from_blocks(p.z - 0.5 * p.l.adjoint() * p.l, -ldag_w, p.l, p.w - id);
}

GeneratorParams compose_params(const GeneratorParams& p1, const GeneratorParams& p2) {
  p1.validate();
  p2.validate();
  if (p1.dim_h() != p2.dim_h() || p1.dim_k() != p2.dim_k()) {
    throw DimensionError("compose_params: parameters on different spaces");
  }
  const ComplexMatrix id = ComplexMatrix::Identity(p1.w.rows(), p1.w.cols());
  GeneratorParams out;
  out.w = p1.w * p2.w;
  out.l = p1.l + p1.w * p2.l;
  const ComplexMatrix cross = p1.l.adjoint() * p1.w * p2.l;
  out.z = p1.z + p2.z - 0.5 * p2.l.adjoint() * (id - p1.w.adjoint() * p1.w) * p2.l -
          kI * imag_part(cross);
  return out;
}

BlockOperator dual_generator(const BlockOperator& f) { return f.adjoint(); }

std::string to_string(StructureClass c) {
  switch (c) {
    case StructureClass::unitary: return "unitary";
    case StructureClass::isometric: return "isometric";
    case StructureClass::coisometric: return "coisometric";
    case StructureClass::quasicontractive: return "quasicontractive";
    case StructureClass::none: return "none";
  }
  return "none";
}

bool quasicontractive_bound_holds(const BlockOperator& f, double beta, double psd_tol) {
  const BlockOperator gram = series_product(f.adjoint(), f);
  const BlockOperator bound =
      Complex(2.0 * beta, 0.0) * delta_perp(f.dim_h(), f.dim_k()) - gram;
  return min_eigenvalue(bound.matrix()) >= -psd_tol;
}

StructureReport structure_report(const BlockOperator& f, double tol) {
  StructureReport report;
  report.iso_defect = op_norm(series_product(f.adjoint(), f).matrix());
  report.coiso_defect = op_norm(series_product(f, f.adjoint()).matrix());

  const double fnorm = op_norm(f.matrix());
  const double psd_tol = tol * (1.0 + fnorm * fnorm);
  double lo = -(fnorm * fnorm + fnorm);
  double hi = fnorm * fnorm + fnorm;

  if (quasicontractive_bound_holds(f, lo, psd_tol)) {
    report.beta0 = lo;
  } else if (!quasicontractive_bound_holds(f, hi, psd_tol)) {
    report.beta0 = std::numeric_limits<double>::infinity();
  } else {
    while (hi - lo > kBetaBisectionTol) {
      const double mid = 0.5 * (lo + hi);
      if (quasicontractive_bound_holds(f, mid, psd_tol)) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    report.beta0 = hi;
  }

  const bool iso = report.iso_defect <= tol;
  const bool coiso = report.coiso_defect <= tol;
  if (iso && coiso) {
    report.classification = StructureClass::unitary;
  } else if (iso) {
    report.classification = StructureClass::isometric;
  } else if (coiso) {
    report.classification = StructureClass::coisometric;
  } else if (std::isfinite(report.beta0)) {
    report.classification = StructureClass::quasicontractive;
  } else {
    report.classification = StructureClass::none;
  }
  return report;
}

}  // namespace qwc
