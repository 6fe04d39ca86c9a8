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

#include "qwc/models.hpp"

#include <cmath>
#include <numbers>

namespace qwc {

std::string to_string(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::unitary: return "unitary";
    case GeneratorKind::isometric: return "isometric";
    case GeneratorKind::coisometric: return "coisometric";
    case GeneratorKind::quasicontractive: return "quasicontractive";
    case GeneratorKind::general: return "general";
  }
  return "general";
}

double scaled_generator_error(const GeneratorFamily& family, double h) {
  const BlockOperator g = family(h);
  const BlockOperator id = BlockOperator::identity(g.dim_h(), g.dim_k());
  return op_norm((scale_h(g - id, h) - family.limit).matrix());
}

void certify_kind(GeneratorFamily& family, GeneratorKind fallback, double tol) {
  bool iso = true;
  bool coiso = true;
  for (const double h : {1.0, 0.125, 1.0 / 64.0}) {
    const ComplexMatrix g = family(h).matrix();
    const ComplexMatrix id = ComplexMatrix::Identity(g.rows(), g.cols());
    iso = iso && op_norm(g.adjoint() * g - id) <= tol;
    coiso = coiso && op_norm(g * g.adjoint() - id) <= tol;
  }
  if (iso && coiso) {
    family.kind = GeneratorKind::unitary;
  } else if (iso) {
    family.kind = GeneratorKind::isometric;
  } else if (coiso) {
    family.kind = GeneratorKind::coisometric;
  } else {
    family.kind = fallback;
  }
}

BlockOperator v_l(const ComplexMatrix& l) {
  require_finite(l, "v_l");
  const Index dh = l.cols();
  if (dh < 1 || l.rows() % dh != 0 || l.rows() < dh) {
    throw DimensionError("v_l: L must map h into h (x) k");
  }
  const auto inv_sqrt = [](double x) { return Complex(1.0 / std::sqrt(x), 0.0); };
  const ComplexMatrix ih = ComplexMatrix::Identity(dh, dh);
  const ComplexMatrix ik = ComplexMatrix::Identity(l.rows(), l.rows());
  const ComplexMatrix left = func_of_hermitian(ih + l.adjoint() * l, inv_sqrt);
  const ComplexMatrix right = func_of_hermitian(ik + l * l.adjoint(), inv_sqrt);
  return BlockOperator::from_blocks(left, -l.adjoint() * right, l * left, right);
}

BlockOperator v_zlw(const ComplexMatrix& z, const ComplexMatrix& l, const ComplexMatrix& w) {
  const BlockOperator v = v_l(l);
  const Index dh = v.dim_h();
  const Index dk = v.dim_k();
  const ComplexMatrix ez = mat_exp(z);
  ComplexMatrix m = v.matrix();
  m.topRows(dh) = ez * m.topRows(dh);
  m.rightCols(dh * dk) = m.rightCols(dh * dk) * w;
  return BlockOperator(dh, dk, std::move(m));
}

GeneratorFamily realize_isometric(const GeneratorParams& p) {
  p.validate();
  const BlockOperator f = assemble_FZLW(p);
  if (structure_report(f, 1e-8).iso_defect > 1e-8) {
    throw PreconditionError("realize_isometric: F_{Z,L,W} is not isometric");
  }
  GeneratorFamily fam;
  fam.evaluator = [p](double h) {
    if (!(h > 0.0)) throw PreconditionError("generator family: h must be positive");
    return v_zlw(h * p.z, std::sqrt(h) * p.l, p.w);
  };
  fam.limit = f;
  fam.beta = op_norm(positive_part(p.z));
  certify_kind(fam, GeneratorKind::quasicontractive);
  return fam;
}

GeneratorFamily realize_general(const BlockOperator& t, const GeneratorParams& p) {
  p.validate();
  if (t.dim_h() != p.dim_h() || t.dim_k() != p.dim_k()) {
    throw DimensionError("realize_general: T and (Z, L, W) on different spaces");
  }
  if (op_norm(p.w) > 1.0 + 1e-10) {
    throw PreconditionError("realize_general: W is not a contraction");
  }
  GeneratorFamily fam;
  const ComplexMatrix tm = t.matrix();
  fam.evaluator = [tm, p](double h) {
    if (!(h > 0.0)) throw PreconditionError("generator family: h must be positive");
    const BlockOperator v = v_zlw(h * p.z, std::sqrt(h) * p.l, p.w);
    return BlockOperator(v.dim_h(), v.dim_k(), mat_exp(h * tm) * v.matrix());
  };
  fam.limit = assemble_FZLW({t.a() + p.z, p.l, p.w});
  fam.beta = op_norm(positive_part(tm)) + op_norm(positive_part(p.z));
  certify_kind(fam, GeneratorKind::quasicontractive);
  return fam;
}

GeneratorFamily realize_unitary_exp(const ComplexMatrix& z, const ComplexMatrix& l,
                                    const ComplexMatrix& r) {
  const HermitianEigen eig = herm_eig(r);
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  if (eig.values.size() > 0 &&
      (eig.values(0) < -1e-9 || eig.values(eig.values.size() - 1) >= kTwoPi)) {
    throw PreconditionError("realize_unitary_exp: spectrum of R outside [0, 2 pi)");
  }
  const Index n = eig.values.size();
  ComplexVector fa(n);
  ComplexVector fb(n);
  ComplexVector fw(n);
  for (Index i = 0; i < n; ++i) {
    fa(i) = scalar::e_a(eig.values(i));
    fb(i) = scalar::e_b(eig.values(i));
    fw(i) = std::exp(kI * eig.values(i));
  }
  const ComplexMatrix& v = eig.vectors;
  const ComplexMatrix a = z + l.adjoint() * (v * fa.asDiagonal() * v.adjoint()) * l;
  const ComplexMatrix b = v * fb.asDiagonal() * v.adjoint() * l;
  const ComplexMatrix d = kI * r;
  const ComplexMatrix w = v * fw.asDiagonal() * v.adjoint();

  GeneratorFamily fam;
  fam.evaluator = [a, b, d](double h) {
    if (!(h > 0.0)) throw PreconditionError("generator family: h must be positive");
    const BlockOperator q = assemble_Q({h * a, std::sqrt(h) * b, d});
    return BlockOperator(q.dim_h(), q.dim_k(), mat_exp(q.matrix()));
  };
  fam.limit = assemble_FZLW({z, l, w});
  fam.beta = op_norm(positive_part(z));
  certify_kind(fam, GeneratorKind::quasicontractive);
  return fam;
}

GeneratorFamily realize_from_generator(const BlockOperator& f, double tol) {
  const Index dh = f.dim_h();
  const Index dk = f.dim_k();
  GeneratorParams p;
  p.l = f.b();
  p.w = f.d() + ComplexMatrix::Identity(dh * dk, dh * dk);
  p.z = f.a() + 0.5 * p.l.adjoint() * p.l;
  const double scale = 1.0 + op_norm(f.matrix());
  if (op_norm(f.c() + p.l.adjoint() * p.w) > tol * scale || op_norm(p.w) > 1.0 + tol) {
    throw DilationRequiredError(
        "realize_from_generator: F is not of the form F_{Z,L,W} with contractive W; "
        "a walk approximation needs a dilation of F to a larger noise space");
  }
  return realize_general(BlockOperator(dh, dk), p);
}

GeneratorFamily compress_noise(const GeneratorFamily& big, const ComplexMatrix& j) {
  GeneratorFamily fam;
  fam.evaluator = [big, j](double h) { return embed_noise_compress(big(h), j); };
  fam.limit = embed_noise_compress(big.limit, j);
  fam.beta = big.beta;
  certify_kind(fam, GeneratorKind::quasicontractive);
  return fam;
}

void RQIParams::validate() const {
  const Index dh = h_s.rows();
  if (dh < 1 || h_s.cols() != dh || h_p.rows() < 2 || h_p.cols() != h_p.rows()) {
    throw DimensionError("RQIParams: H_S must be square and H_P at least 2 x 2");
  }
  const Index dk = h_p.rows() - 1;
  if (v_d.rows() != dh * dk || v_d.cols() != dh || h_sc.rows() != dh * dk ||
      h_sc.cols() != dh * dk) {
    throw DimensionError("RQIParams: V_D or H_Sc has the wrong shape");
  }
  require_finite(h_s, "RQIParams H_S");
  require_finite(h_p, "RQIParams H_P");
  require_finite(v_d, "RQIParams V_D");
  require_finite(h_sc, "RQIParams H_Sc");
  const auto hermitian = [](const ComplexMatrix& m) {
    return op_norm(m - m.adjoint()) <= 1e-10 * (1.0 + op_norm(m));
  };
  if (!hermitian(h_s) || !hermitian(h_p) || !hermitian(h_sc)) {
    throw PreconditionError("RQIParams: H_S, H_P and H_Sc must be Hermitian");
  }
}

double RQIParams::omega() const { return h_p(0, 0).real(); }

RQIParams RQIParams::zero(Index dim_h, Index dim_k) {
  return {ComplexMatrix::Zero(dim_h, dim_h), ComplexMatrix::Zero(dim_k + 1, dim_k + 1),
          ComplexMatrix::Zero(dim_h * dim_k, dim_h),
          ComplexMatrix::Zero(dim_h * dim_k, dim_h * dim_k)};
}

BlockOperator rqi_total(const RQIParams& p, double h) {
  p.validate();
  if (!(h > 0.0)) {
    throw PreconditionError("rqi_total: h must be positive");
  }
  const Index dh = p.dim_h();
  const Index dk = p.dim_k();
  const ComplexMatrix ik = ComplexMatrix::Identity(dk, dk);
  BlockOperator system = BlockOperator::from_blocks(
      p.h_s, ComplexMatrix::Zero(dh, dh * dk), ComplexMatrix::Zero(dh * dk, dh), kron(p.h_s, ik));
  const BlockOperator particle = from_kron(dh, dk, kron(ComplexMatrix::Identity(dh, dh), p.h_p));
  const double rh = std::sqrt(h);
  const BlockOperator interaction = BlockOperator::from_blocks(
      ComplexMatrix::Zero(dh, dh), p.v_d.adjoint() / rh, p.v_d / rh, p.h_sc / h);
  return system + particle + interaction;
}

GeneratorParams rqi_limit_params(const RQIParams& p) {
  p.validate();
  const PhiFunctions phi = phi_funcs(-kI * p.h_sc);
  const Index dh = p.dim_h();
  const ComplexMatrix h = p.h_s + p.omega() * ComplexMatrix::Identity(dh, dh) -
                          kI * p.v_d.adjoint() * phi.e * p.v_d;
  return {-kI * h, -kI * phi.e1 * p.v_d, phi.e0};
}

BlockOperator rqi_q(const RQIParams& p) {
  p.validate();
  const Index dh = p.dim_h();
  return Complex(0.0, -1.0) *
         BlockOperator::from_blocks(p.h_s + p.omega() * ComplexMatrix::Identity(dh, dh),
                                    p.v_d.adjoint(), p.v_d, p.h_sc);
}

GeneratorFamily rqi_family(const RQIParams& p) {
  p.validate();
  GeneratorFamily fam;
  fam.evaluator = [p](double h) {
    const BlockOperator ht = rqi_total(p, h);
    return BlockOperator(ht.dim_h(), ht.dim_k(), mat_exp(Complex(0.0, -h) * ht.matrix()));
  };
  fam.limit = assemble_FZLW(rqi_limit_params(p));
  fam.beta = 0.0;
  certify_kind(fam, GeneratorKind::general);
  return fam;
}

BipartiteFamily bipartite_family(const RQIParams& p1, const RQIParams& p2) {
  p1.validate();
  p2.validate();
  if (p1.dim_k() != p2.dim_k()) {
    throw DimensionError("bipartite_family: constituents must share the noise space");
  }
  const Index d1 = p1.dim_h();
  const Index d2 = p2.dim_h();
  const GeneratorFamily g1 = rqi_family(p1);
  const GeneratorFamily g2 = rqi_family(p2);

  BipartiteFamily out;
  out.first = [g1, d2](double h) { return ampliate_bipartite(g1(h), BipartiteSide::first, d2); };
  out.second = [g2, d1](double h) {
    return ampliate_bipartite(g2(h), BipartiteSide::second, d1);
  };
  out.f1 = ampliate_bipartite(g1.limit, BipartiteSide::first, d2);
  out.f2 = ampliate_bipartite(g2.limit, BipartiteSide::second, d1);
  out.family.evaluator = [first = out.first, second = out.second](double h) {
    return first(h) * second(h);
  };
  out.family.limit = series_product(out.f1, out.f2);
  out.family.beta = 0.0;
  certify_kind(out.family, GeneratorKind::general);
  return out;
}

namespace {

// Ampliations of the separate blocks of an operator on h_i (x) k^.
BlockOperator only_c(const ComplexMatrix& c, Index dh, Index dk) {
  return BlockOperator::from_blocks(ComplexMatrix::Zero(dh, dh), c,
                                    ComplexMatrix::Zero(dh * dk, dh),
                                    ComplexMatrix::Zero(dh * dk, dh * dk));
}

BlockOperator only_b(const ComplexMatrix& b, Index dh, Index dk) {
  return BlockOperator::from_blocks(ComplexMatrix::Zero(dh, dh),
                                    ComplexMatrix::Zero(dh, dh * dk), b,
                                    ComplexMatrix::Zero(dh * dk, dh * dk));
}

BlockOperator only_ad(const ComplexMatrix& a, const ComplexMatrix& d, Index dh, Index dk) {
  return BlockOperator::from_blocks(a, ComplexMatrix::Zero(dh, dh * dk),
                                    ComplexMatrix::Zero(dh * dk, dh), d);
}

}  // namespace

GeneratorParams bipartite_closed_form(const RQIParams& p1, const RQIParams& p2) {
  p1.validate();
  p2.validate();
  const Index d1 = p1.dim_h();
  const Index d2 = p2.dim_h();
  const Index dk = p1.dim_k();
  if (p2.dim_k() != dk) {
    throw DimensionError("bipartite_closed_form: constituents must share the noise space");
  }
  const PhiFunctions phi1 = phi_funcs(-kI * p1.h_sc);
  const PhiFunctions phi2 = phi_funcs(-kI * p2.h_sc);
  const ComplexMatrix hh1 = kI * rqi_limit_params(p1).z;  // H^(1)
  const ComplexMatrix hh2 = kI * rqi_limit_params(p2).z;  // H^(2)
  constexpr auto first = BipartiteSide::first;
  constexpr auto second = BipartiteSide::second;

  // H^(1) (x) I and I (x) H^(2) with e0 on the noise corner for W.
  const BlockOperator side1 = ampliate_bipartite(only_ad(hh1, phi1.e0, d1, dk), first, d2);
  const BlockOperator side2 = ampliate_bipartite(only_ad(hh2, phi2.e0, d2, dk), second, d1);
  const ComplexMatrix left =
      ampliate_bipartite(only_c(p1.v_d.adjoint() * phi1.e1, d1, dk), first, d2).c();
  const ComplexMatrix right = ampliate_bipartite(only_b(phi2.e1 * p2.v_d, d2, dk), second, d1).b();
  const ComplexMatrix l1 = ampliate_bipartite(only_b(phi1.e1 * p1.v_d, d1, dk), first, d2).b();

  const ComplexMatrix h = side1.a() + side2.a() + imag_part(left * right);
  GeneratorParams out;
  out.z = -kI * h;
  out.l = -kI * (l1 + side1.d() * right);
  out.w = side1.d() * side2.d();
  return out;
}

NoScatteringCoordinates bipartite_no_scattering_coordinates(const RQIParams& p1,
                                                            const RQIParams& p2) {
  p1.validate();
  p2.validate();
  const Index d1 = p1.dim_h();
  const Index d2 = p2.dim_h();
  const Index dk = p1.dim_k();
  if (p2.dim_k() != dk) {
    throw DimensionError("bipartite_no_scattering_coordinates: noise spaces differ");
  }
  const ComplexMatrix i1 = ComplexMatrix::Identity(d1, d1);
  const ComplexMatrix i2 = ComplexMatrix::Identity(d2, d2);
  const auto component = [dk](const ComplexMatrix& v, Index dh, Index j) {
    ComplexMatrix out(dh, dh);
    for (Index a = 0; a < dh; ++a) out.row(a) = v.row(a * dk + j);
    return out;
  };
  NoScatteringCoordinates out;
  ComplexMatrix k = -kI * (kron(p1.h_s, i2) + kron(i1, p2.h_s) +
                           (p1.omega() + p2.omega()) * kron(i1, i2));
  for (Index j = 0; j < dk; ++j) {
    const ComplexMatrix vj = component(p1.v_d, d1, j);
    const ComplexMatrix wj = component(p2.v_d, d2, j);
    out.l.push_back(-kI * (kron(vj, i2) + kron(i1, wj)));
    k -= 0.5 * (kron(vj.adjoint() * vj, i2) + kron(i1, wj.adjoint() * wj));
    k -= kron(vj.adjoint(), wj);
  }
  out.k = k;
  return out;
}

GeneratorFamily preservation_family(const ComplexMatrix& c, Index dim_h) {
  require_finite(c, "preservation_family");
  if (dim_h < 1 || c.rows() != c.cols() || c.rows() % dim_h != 0 || c.rows() < dim_h) {
    throw DimensionError("preservation_family: C must act on h (x) k");
  }
  if (op_norm(c) > 1.0 + 1e-10) {
    throw PreconditionError("preservation_family: C is not a contraction");
  }
  const Index dk = c.rows() / dim_h;
  const ComplexMatrix ih = ComplexMatrix::Identity(dim_h, dim_h);
  const ComplexMatrix ik = ComplexMatrix::Identity(c.rows(), c.rows());
  const BlockOperator g = only_ad(ih, c, dim_h, dk);
  GeneratorFamily fam;
  fam.evaluator = [g](double h) {
    if (!(h > 0.0)) throw PreconditionError("generator family: h must be positive");
    return g;
  };
  fam.limit = only_ad(ComplexMatrix::Zero(dim_h, dim_h), c - ik, dim_h, dk);
  fam.beta = 0.0;
  certify_kind(fam, GeneratorKind::quasicontractive);
  return fam;
}

}  // namespace qwc
