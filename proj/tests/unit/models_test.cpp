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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "qwc/models.hpp"

namespace {

using qwc::BlockOperator;
using qwc::Complex;
using qwc::ComplexMatrix;
using qwc::GeneratorFamily;
using qwc::GeneratorParams;
using qwc::Index;
using qwc::RQIParams;
using oracle::norm2;

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

ComplexMatrix scalar_matrix(Complex z) { return ComplexMatrix::Constant(1, 1, z); }

ComplexMatrix identity(Index n) { return ComplexMatrix::Identity(n, n); }

double unitarity_defect(const ComplexMatrix& g) {
  const Index n = g.rows();
  return std::max(norm2(g.adjoint() * g - identity(n)), norm2(g * g.adjoint() - identity(n)));
}

double diff(const BlockOperator& x, const BlockOperator& y) { return norm2((x - y).matrix()); }

std::vector<double> dyadic_hs(int lo, int hi) {
  std::vector<double> hs;
  for (int k = lo; k <= hi; ++k) hs.push_back(std::ldexp(1.0, -k));
  return hs;
}

// Scaled generator errors along h = 2^-4 ... 2^-12 decrease, allowing 5% slack.
void expect_converging(const GeneratorFamily& fam, const char* label) {
  double prev = std::numeric_limits<double>::infinity();
  double first = 0.0, last = 0.0;
  for (const double h : dyadic_hs(4, 12)) {
    const double err = qwc::scaled_generator_error(fam, h);
    if (first == 0.0) first = err;
    last = err;
    EXPECT_LE(err, 1.05 * prev + 1e-13) << label << " h=" << h;
    prev = err;
  }
  EXPECT_LT(last, 0.1 * first + 1e-12) << label;
}

RQIParams random_rqi(oracle::Gen& gen, Index dh, Index dk, bool scattering, bool dipole) {
  RQIParams p = RQIParams::zero(dh, dk);
  p.h_s = gen.hermitian(dh);
  p.h_p = gen.hermitian(dk + 1);
  if (dipole) p.v_d = gen.gaussian(dh * dk, dh);
  if (scattering) p.h_sc = gen.hermitian(dh * dk);
  return p;
}

// (I (x) <e_i|) M (I (x) |e_j>) for the k^ basis, e_0 the vacuum.
ComplexMatrix slice(const BlockOperator& g, Index i, Index j) {
  const Index dh = g.dim_h(), m = 1 + g.dim_k();
  const ComplexMatrix k = qwc::to_kron(g);
  ComplexMatrix out(dh, dh);
  for (Index a = 0; a < dh; ++a)
    for (Index b = 0; b < dh; ++b) out(a, b) = k(a * m + i, b * m + j);
  return out;
}

// ---- V_L realisations -----------------------------------------------------

TEST(VL, Examples) {
  EXPECT_LE(diff(qwc::v_l(ComplexMatrix::Zero(4, 2)), BlockOperator::identity(2, 2)), 1e-15);
  ComplexMatrix expected(2, 2);
  expected << 1, -1, 1, 1;
  expected /= std::sqrt(2.0);
  EXPECT_LE(norm2(qwc::v_l(scalar_matrix(1.0)).matrix() - expected), 1e-15);
}

TEST(VL, UnitaryForRandomL) {
  oracle::Gen gen(701);
  for (int i = 0; i < 20; ++i) {
    const Index dh = gen.integer(1, 3), dk = gen.integer(1, 3);
    EXPECT_LE(unitarity_defect(qwc::v_l(3.0 * gen.gaussian(dh * dk, dh)).matrix()), 1e-10);
  }
}

TEST(VZLW, FactorisedForm) {
  oracle::Gen gen(702);
  const ComplexMatrix z = gen.skew(2), l = gen.gaussian(4, 2), w = gen.unitary(4);
  ComplexMatrix left = identity(6), right = identity(6);
  left.topLeftCorner(2, 2) = oracle::expm(z);
  right.bottomRightCorner(4, 4) = w;
  EXPECT_LE(norm2(qwc::v_zlw(z, l, w).matrix() - left * qwc::v_l(l).matrix() * right), 1e-13);
}

TEST(RealizeIsometric, TrivialParameters) {
  const auto fam = qwc::realize_isometric(GeneratorParams::trivial(2, 1));
  EXPECT_LE(diff(fam(0.3), BlockOperator::identity(2, 1)), 1e-15);
  EXPECT_EQ(norm2(fam.limit.matrix()), 0.0);
}

TEST(RealizeIsometric, FirstOrderInH) {
  oracle::Gen gen(703);
  const GeneratorParams p{ComplexMatrix::Zero(2, 2), gen.gaussian(4, 2), identity(4)};
  const auto fam = qwc::realize_isometric(p);
  EXPECT_LE(diff(fam.limit, BlockOperator(2, 2, oracle::fzlw(p.z, p.l, p.w))), 1e-14);
  for (const double h : dyadic_hs(6, 12)) {
    const double ratio =
        qwc::scaled_generator_error(fam, h / 2) / qwc::scaled_generator_error(fam, h);
    EXPECT_NEAR(ratio, 0.5, 0.05);
  }
}

TEST(RealizeIsometric, UnitaryWGivesUnitaryWalk) {
  oracle::Gen gen(704);
  const GeneratorParams p{gen.skew(2), gen.gaussian(4, 2), gen.unitary(4)};
  const auto fam = qwc::realize_isometric(p);
  EXPECT_EQ(fam.kind, qwc::GeneratorKind::unitary);
  for (const double h : {1.0, 0.1, 0.001}) EXPECT_LE(unitarity_defect(fam(h).matrix()), 1e-10);
  expect_converging(fam, "isometric");
}

TEST(RealizeIsometric, RejectsNonIsometricData) {
  oracle::Gen gen(705);
  const GeneratorParams p{gen.gaussian(2, 2), gen.gaussian(2, 2), identity(2)};
  EXPECT_THROW(qwc::realize_isometric(p), qwc::PreconditionError);
}

TEST(RealizeGeneral, ZeroTReducesToVZLW) {
  oracle::Gen gen(706);
  const GeneratorParams p{gen.skew(2), gen.gaussian(2, 2), gen.contraction(2, 2)};
  const auto fam = qwc::realize_general(BlockOperator(2, 1), p);
  const double h = 0.125;
  EXPECT_LE(diff(fam(h), qwc::v_zlw(h * p.z, std::sqrt(h) * p.l, p.w)), 1e-14);
}

TEST(RealizeGeneral, VacuumBlockOfTShiftsZ) {
  oracle::Gen gen(707);
  const ComplexMatrix zp = gen.gaussian(2, 2), l = gen.gaussian(4, 2), w = gen.contraction(4, 4);
  ComplexMatrix t = ComplexMatrix::Zero(6, 6);
  t.topLeftCorner(2, 2) = zp;
  const auto fam = qwc::realize_general(BlockOperator(2, 2, t),
                                        {ComplexMatrix::Zero(2, 2), l, w});
  EXPECT_LE(norm2(fam.limit.matrix() - oracle::fzlw(zp, l, w)), 1e-14);
  expect_converging(fam, "general");
}

TEST(RealizeGeneral, GrowthBound) {
  oracle::Gen gen(708);
  const BlockOperator t(2, 1, gen.gaussian(4, 4));
  const GeneratorParams p{gen.gaussian(2, 2), gen.gaussian(2, 2), gen.contraction(2, 2)};
  const auto fam = qwc::realize_general(t, p);
  EXPECT_NEAR(fam.beta,
              norm2(qwc::positive_part(t.matrix())) + norm2(qwc::positive_part(p.z)), 1e-12);
  for (const double h : dyadic_hs(4, 10)) {
    const double gn = norm2(fam(h).matrix());
    for (const double tt : {0.5, 1.0, 2.0}) {
      const double steps = std::floor(tt / h + 1e-9);
      EXPECT_LE(steps * std::log(gn), tt * fam.beta + 1e-10);
    }
  }
}

TEST(RealizeUnitaryExp, ConstantWhenZAndLVanish) {
  oracle::Gen gen(709);
  const ComplexMatrix r = gen.hermitian_spectrum(2, 0.2, 6.0);
  const auto fam = qwc::realize_unitary_exp(ComplexMatrix::Zero(1, 1), ComplexMatrix::Zero(2, 1), r);
  ComplexMatrix expected = identity(3);
  expected.bottomRightCorner(2, 2) = oracle::expm(kI * r);
  for (const double h : {0.5, 0.01}) EXPECT_LE(norm2(fam(h).matrix() - expected), 1e-13);
  ComplexMatrix lim = ComplexMatrix::Zero(3, 3);
  lim.bottomRightCorner(2, 2) = expected.bottomRightCorner(2, 2) - identity(2);
  EXPECT_LE(norm2(fam.limit.matrix() - lim), 1e-13);
}

TEST(RealizeUnitaryExp, ScalarExample) {
  const auto fam = qwc::realize_unitary_exp(scalar_matrix(kI), scalar_matrix(1.0),
                                            scalar_matrix(0.0));
  const double h = 0.0625;
  ComplexMatrix qh(2, 2);
  qh << kI * h, -std::sqrt(h), std::sqrt(h), 0.0;
  EXPECT_LE(norm2(fam(h).matrix() - oracle::expm(qh)), 1e-14);
  ComplexMatrix lim(2, 2);
  lim << Complex(-0.5, 1.0), -1.0, 1.0, 0.0;
  EXPECT_LE(norm2(fam.limit.matrix() - lim), 1e-14);
}

TEST(RealizeUnitaryExp, RandomInstanceIsUnitaryAndConverges) {
  oracle::Gen gen(710);
  const auto fam = qwc::realize_unitary_exp(gen.skew(2), gen.gaussian(4, 2),
                                            gen.hermitian_spectrum(4, 0.1, 2 * kPi - 0.1));
  EXPECT_EQ(fam.kind, qwc::GeneratorKind::unitary);
  for (const double h : {1.0, 0.01}) EXPECT_LE(unitarity_defect(fam(h).matrix()), 1e-10);
  expect_converging(fam, "unitary_exp");
}

TEST(RealizeUnitaryExp, RejectsSpectrumOutsidePrincipalRange) {
  EXPECT_THROW(qwc::realize_unitary_exp(scalar_matrix(0.0), scalar_matrix(1.0),
                                        scalar_matrix(-1.0)),
               qwc::PreconditionError);
}

TEST(RealizeFromGenerator, AcceptsFZLWForm) {
  oracle::Gen gen(711);
  const GeneratorParams p{gen.gaussian(2, 2), gen.gaussian(4, 2), gen.contraction(4, 4)};
  const BlockOperator f(2, 2, oracle::fzlw(p.z, p.l, p.w));
  const auto fam = qwc::realize_from_generator(f);
  EXPECT_LE(diff(fam.limit, f), 1e-12);
  expect_converging(fam, "from_generator");
}

TEST(RealizeFromGenerator, RejectsGeneratorsNeedingDilation) {
  oracle::Gen gen(712);
  const GeneratorParams p{gen.gaussian(2, 2), gen.gaussian(2, 2), gen.contraction(2, 2)};
  ComplexMatrix m = oracle::fzlw(p.z, p.l, p.w);
  m.topRightCorner(2, 2) += gen.gaussian(2, 2);
  EXPECT_THROW(qwc::realize_from_generator(BlockOperator(2, 1, m)), qwc::DilationRequiredError);
  ComplexMatrix big = ComplexMatrix::Zero(2, 2);
  big(1, 1) = 1.5;  // W = 2.5 is not a contraction
  EXPECT_THROW(qwc::realize_from_generator(BlockOperator(1, 1, big)), qwc::DilationRequiredError);
}

TEST(CompressNoise, CompressesFamilyAndLimit) {
  oracle::Gen gen(713);
  const GeneratorParams p{gen.skew(1), gen.gaussian(3, 1), gen.unitary(3)};
  const auto big = qwc::realize_isometric(p);
  const ComplexMatrix j = ComplexMatrix::Identity(3, 2);
  const auto small = qwc::compress_noise(big, j);
  EXPECT_EQ(small.dim_k(), 2);
  EXPECT_LE(diff(small.limit, qwc::embed_noise_compress(big.limit, j)), 1e-15);
  EXPECT_LE(diff(small(0.25), qwc::embed_noise_compress(big(0.25), j)), 1e-15);
  expect_converging(small, "compressed");
}

// ---- positive part --------------------------------------------------------

TEST(GrowthLemma, ExponentialBoundedByPositivePart) {
  oracle::Gen gen(714);
  for (int i = 0; i < 200; ++i) {
    const Index n = gen.integer(1, 4);
    ComplexMatrix z = gen.gaussian(n, n);
    z *= 4.0 * gen.uniform() / norm2(z);
    EXPECT_LE(norm2(oracle::expm(z)), std::exp(norm2(qwc::positive_part(z))) + 1e-10);
  }
}

// ---- repeated quantum interactions -----------------------------------------

TEST(RqiTotal, Examples) {
  oracle::Gen gen(715);
  RQIParams p = RQIParams::zero(2, 2);
  p.h_s = gen.hermitian(2);
  ComplexMatrix expected = ComplexMatrix::Zero(6, 6);
  expected.topLeftCorner(2, 2) = p.h_s;
  expected.bottomRightCorner(4, 4) = oracle::kron(p.h_s, identity(2));
  EXPECT_LE(norm2(qwc::rqi_total(p, 0.3).matrix() - expected), 1e-15);
  EXPECT_EQ(norm2(qwc::rqi_total(RQIParams::zero(2, 1), 0.3).matrix()), 0.0);

  RQIParams s = RQIParams::zero(1, 1);
  const Complex v(0.4, -0.3), hp01(0.2, 0.7);
  s.h_s = scalar_matrix(1.0);
  s.h_p << 0.3, hp01, std::conj(hp01), 1.1;
  s.v_d = scalar_matrix(v);
  s.h_sc = scalar_matrix(0.5);
  ComplexMatrix m(2, 2);
  m << 1.3, std::conj(v) + hp01, v + std::conj(hp01), 1.0 + 1.1 + 0.5;
  EXPECT_LE(norm2(qwc::rqi_total(s, 1.0).matrix() - m), 1e-15);
}

TEST(RqiTotal, HermitianAndScaled) {
  oracle::Gen gen(716);
  const RQIParams p = random_rqi(gen, 2, 2, true, true);
  for (const double h : {1.0, 0.01}) {
    const ComplexMatrix ht = qwc::rqi_total(p, h).matrix();
    EXPECT_LE(norm2(ht - ht.adjoint()), 1e-12);
  }
  RQIParams bad = p;
  bad.h_s(0, 1) += 1.0;
  EXPECT_THROW(qwc::rqi_total(bad, 0.5), qwc::PreconditionError);
}

TEST(RqiFamily, LimitIsTransformOfCompiledQ) {
  oracle::Gen gen(717);
  for (int i = 0; i < 10; ++i) {
    const Index dh = gen.integer(1, 2), dk = gen.integer(1, 2);
    const RQIParams p = random_rqi(gen, dh, dk, true, true);
    const auto fam = qwc::rqi_family(p);
    EXPECT_LE(norm2(fam.limit.matrix() - oracle::holevo(qwc::rqi_q(p).matrix(), dh)), 1e-10);
    EXPECT_EQ(fam.kind, qwc::GeneratorKind::unitary);
    for (const double h : {1.0, 0.01, 1e-4}) EXPECT_LE(unitarity_defect(fam(h).matrix()), 1e-10);
  }
}

TEST(RqiFamily, NoScatteringClosedForm) {
  oracle::Gen gen(718);
  const RQIParams p = random_rqi(gen, 2, 2, false, true);
  const ComplexMatrix hw = p.h_s + p.omega() * identity(2);
  ComplexMatrix f = ComplexMatrix::Zero(6, 6);
  f.topLeftCorner(2, 2) = -kI * hw - 0.5 * p.v_d.adjoint() * p.v_d;
  f.topRightCorner(2, 4) = -kI * p.v_d.adjoint();
  f.bottomLeftCorner(4, 2) = -kI * p.v_d;
  EXPECT_LE(norm2(qwc::rqi_family(p).limit.matrix() - f), 1e-12);
}

TEST(RqiFamily, PureScatteringClosedForm) {
  oracle::Gen gen(719);
  const RQIParams p = random_rqi(gen, 2, 1, true, false);
  ComplexMatrix f = ComplexMatrix::Zero(4, 4);
  f.topLeftCorner(2, 2) = -kI * (p.h_s + p.omega() * identity(2));
  f.bottomRightCorner(2, 2) = oracle::expm(-kI * p.h_sc) - identity(2);
  EXPECT_LE(norm2(qwc::rqi_family(p).limit.matrix() - f), 1e-12);
}

TEST(RqiFamily, ZeroParameters) {
  const auto fam = qwc::rqi_family(RQIParams::zero(2, 1));
  EXPECT_LE(diff(fam(0.1), BlockOperator::identity(2, 1)), 1e-15);
  EXPECT_EQ(norm2(fam.limit.matrix()), 0.0);
}

TEST(RqiFamily, ScaledGeneratorConvergesAtHalfOrderWithParticleCoupling) {
  oracle::Gen gen(720);
  const RQIParams p = random_rqi(gen, 1, 1, true, true);
  ASSERT_GT(std::abs(p.h_p(0, 1)), 1e-3);
  const auto fam = qwc::rqi_family(p);
  expect_converging(fam, "rqi");
  const double ratio =
      qwc::scaled_generator_error(fam, std::ldexp(1.0, -13)) /
      qwc::scaled_generator_error(fam, std::ldexp(1.0, -12));
  EXPECT_NEAR(ratio, std::sqrt(0.5), 0.05);
}

// ---- bipartite -------------------------------------------------------------

TEST(Bipartite, ClosedFormMatchesSeriesProductOfAmpliatedLimits) {
  oracle::Gen gen(721);
  for (int i = 0; i < 10; ++i) {
    const Index d1 = gen.integer(1, 2), d2 = gen.integer(1, 2), dk = gen.integer(1, 2);
    const RQIParams p1 = random_rqi(gen, d1, dk, true, true);
    const RQIParams p2 = random_rqi(gen, d2, dk, true, true);
    const auto bf = qwc::bipartite_family(p1, p2);
    const GeneratorParams cf = qwc::bipartite_closed_form(p1, p2);
    EXPECT_LE(norm2(oracle::fzlw(cf.z, cf.l, cf.w) -
                    oracle::series(bf.f1.matrix(), bf.f2.matrix(), d1 * d2, dk)),
              1e-10);
    EXPECT_LE(diff(bf.family.limit, qwc::assemble_FZLW(cf)), 1e-10);
  }
}

TEST(Bipartite, TrivialSecondSystem) {
  oracle::Gen gen(722);
  const RQIParams p1 = random_rqi(gen, 2, 1, true, true);
  const auto bf = qwc::bipartite_family(p1, RQIParams::zero(2, 1));
  EXPECT_LE(diff(bf.family.limit, bf.f1), 1e-14);
  EXPECT_LE(diff(bf.f1, qwc::ampliate_bipartite(qwc::rqi_family(p1).limit,
                                                qwc::BipartiteSide::first, 2)),
            1e-15);
}

TEST(Bipartite, NoScatteringCoordinates) {
  oracle::Gen gen(723);
  const RQIParams p1 = random_rqi(gen, 2, 1, false, true);
  const RQIParams p2 = random_rqi(gen, 2, 1, false, true);
  const auto coords = qwc::bipartite_no_scattering_coordinates(p1, p2);
  const auto limit = qwc::bipartite_family(p1, p2).family.limit;
  const ComplexMatrix l = limit.b();
  ASSERT_EQ(coords.l.size(), 1u);
  EXPECT_LE(norm2(coords.l[0] - l), 1e-10);
  EXPECT_LE(norm2(coords.k - limit.a()), 1e-10);
}

TEST(Bipartite, NoScatteringCoordinatesWithTwoNoiseChannels) {
  oracle::Gen gen(724);
  const RQIParams p1 = random_rqi(gen, 2, 2, false, true);
  const RQIParams p2 = random_rqi(gen, 2, 2, false, true);
  const auto coords = qwc::bipartite_no_scattering_coordinates(p1, p2);
  const auto limit = qwc::bipartite_family(p1, p2).family.limit;
  const ComplexMatrix b = limit.b();
  for (Index j = 0; j < 2; ++j) {
    ComplexMatrix lj(4, 4);
    for (Index a = 0; a < 4; ++a) lj.row(a) = b.row(a * 2 + j);
    EXPECT_LE(norm2(coords.l[j] - lj), 1e-10);
  }
}

TEST(Bipartite, FactorsCommuteSliceWise) {
  oracle::Gen gen(725);
  const RQIParams p1 = random_rqi(gen, 2, 1, true, true);
  const RQIParams p2 = random_rqi(gen, 2, 1, true, true);
  const auto bf = qwc::bipartite_family(p1, p2);
  for (const double h : {0.25, 0.01}) {
    const BlockOperator g1 = bf.first(h), g2 = bf.second(h);
    for (Index i = 0; i < 2; ++i)
      for (Index j = 0; j < 2; ++j)
        for (Index l = 0; l < 2; ++l)
          for (Index m = 0; m < 2; ++m) {
            const ComplexMatrix x = slice(g1, i, j), y = slice(g2, l, m);
            EXPECT_LE(norm2(x * y - y * x), 1e-12);
          }
    EXPECT_LE(diff(bf.family(h), g1 * g2), 1e-15);
  }
}

TEST(Bipartite, FamilyConverges) {
  oracle::Gen gen(726);
  RQIParams p1 = random_rqi(gen, 1, 1, true, true);
  RQIParams p2 = random_rqi(gen, 2, 1, true, true);
  p1.h_p = ComplexMatrix::Zero(2, 2);
  p2.h_p = ComplexMatrix::Zero(2, 2);
  expect_converging(qwc::bipartite_family(p1, p2).family, "bipartite");
}

TEST(Bipartite, RejectsDifferentNoiseSpaces) {
  EXPECT_THROW(qwc::bipartite_family(RQIParams::zero(1, 1), RQIParams::zero(1, 2)),
               qwc::DimensionError);
}

// ---- preservation ----------------------------------------------------------

TEST(Preservation, Examples) {
  const auto id = qwc::preservation_family(identity(2), 1);
  EXPECT_EQ(diff(id(0.5), BlockOperator::identity(1, 2)), 0.0);
  EXPECT_EQ(norm2(id.limit.matrix()), 0.0);

  const auto flip = qwc::preservation_family(scalar_matrix(-1.0), 1);
  ComplexMatrix expected = ComplexMatrix::Zero(2, 2);
  expected(1, 1) = -2.0;
  EXPECT_EQ(norm2(flip.limit.matrix() - expected), 0.0);

  oracle::Gen gen(727);
  const auto fam = qwc::preservation_family(gen.contraction(4, 4), 2);
  for (const double h : {1.0, 0.5, 0.0625}) EXPECT_EQ(qwc::scaled_generator_error(fam, h), 0.0);
  EXPECT_THROW(qwc::preservation_family(2.0 * identity(2), 1), qwc::PreconditionError);
}

TEST(CertifyKind, DowngradesOnFailure) {
  oracle::Gen gen(728);
  auto fam = qwc::preservation_family(gen.contraction(2, 2), 1);
  EXPECT_EQ(fam.kind, qwc::GeneratorKind::quasicontractive);
  fam.kind = qwc::GeneratorKind::unitary;
  qwc::certify_kind(fam, qwc::GeneratorKind::general);
  EXPECT_EQ(fam.kind, qwc::GeneratorKind::general);
  EXPECT_EQ(qwc::to_string(qwc::GeneratorKind::unitary), "unitary");
}

}  // namespace
