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

#include "oracles.hpp"
#include "qwc/walk.hpp"

namespace {

using qwc::BlockOperator;
using qwc::Complex;
using qwc::ComplexMatrix;
using qwc::ComplexVector;
using qwc::Index;
using qwc::StepFunction;
using oracle::norm2;

ComplexVector scalar_vec(Complex z) { return ComplexVector::Constant(1, z); }

BlockOperator random_block(oracle::Gen& gen, Index dh, Index dk, double scale = 1.0) {
  const Index n = dh * (1 + dk);
  return BlockOperator(dh, dk, scale * gen.gaussian(n, n));
}

StepFunction random_step(oracle::Gen& gen, Index dk, std::vector<double> bps) {
  std::vector<ComplexVector> vals;
  for (std::size_t i = 0; i < bps.size(); ++i) vals.push_back(gen.vec(dk));
  return StepFunction(std::move(bps), std::move(vals));
}

// Kronecker product of the vectors (1, v_i) over time slots.
ComplexVector product_vector(const std::vector<ComplexVector>& slots) {
  ComplexVector out = ComplexVector::Ones(1);
  for (const auto& v : slots) {
    ComplexVector hat(1 + v.size());
    hat << 1.0, v;
    out = oracle::kron(ComplexMatrix(out), ComplexMatrix(hat)).col(0);
  }
  return out;
}

TEST(StepFunction, EvaluationAndIntegral) {
  const StepFunction f({0.0, 1.0}, {scalar_vec(1.0), scalar_vec(3.0)});
  EXPECT_EQ(f(0.0)(0), Complex(1.0));
  EXPECT_EQ(f(0.999)(0), Complex(1.0));
  EXPECT_EQ(f(1.0)(0), Complex(3.0));
  EXPECT_EQ(f(50.0)(0), Complex(3.0));
  EXPECT_NEAR(std::abs(f.integral(0.5, 2.0)(0) - Complex(0.5 + 3.0)), 0.0, 1e-15);
  EXPECT_EQ(f.breakpoints_in(0.0, 1.0).size(), 0u);
  EXPECT_EQ(f.breakpoints_in(0.5, 1.5).size(), 1u);
}

TEST(StepFunction, RejectsBadBreakpoints) {
  EXPECT_THROW(StepFunction({0.5}, {scalar_vec(1.0)}), qwc::PreconditionError);
  EXPECT_THROW(StepFunction({0.0, 0.5, 0.5}, {scalar_vec(1.0), scalar_vec(1.0), scalar_vec(1.0)}),
               qwc::PreconditionError);
  EXPECT_THROW(StepFunction({0.0}, {scalar_vec(1.0), scalar_vec(2.0)}), qwc::DimensionError);
}

TEST(StepFunction, ShiftAndMap) {
  oracle::Gen gen(501);
  const StepFunction f = random_step(gen, 2, {0.0, 0.25, 0.75});
  const StepFunction s = f.shifted(0.5);
  for (const double t : {0.0, 0.1, 0.3, 1.0}) EXPECT_EQ(norm2(s(t) - f(t + 0.5)), 0.0);
  const ComplexMatrix j = gen.isometry(3, 2);
  const StepFunction m = f.mapped(j);
  EXPECT_EQ(m.dim_k(), 3);
  EXPECT_LE(norm2(m(0.3) - j * f(0.3)), 1e-15);
}

TEST(StepAverage, Examples) {
  oracle::Gen gen(502);
  const ComplexVector c = gen.vec(2);
  for (long n = 0; n < 5; ++n) {
    EXPECT_LE(norm2(qwc::step_average(StepFunction::constant(c), n, 0.3) - c), 1e-15);
    EXPECT_EQ(norm2(qwc::step_average(StepFunction::zero(2), n, 0.3)), 0.0);
  }
  const StepFunction f({0.0, 1.0}, {scalar_vec(1.0), scalar_vec(3.0)});
  EXPECT_NEAR(std::abs(qwc::step_average(f, 1, 0.8)(0) - 2.5), 0.0, 1e-15);
}

TEST(InnerIntegral, ConjugateLinearInFirstArgument) {
  const StepFunction f = StepFunction::constant(scalar_vec(Complex(0.0, 1.0)));
  const StepFunction g = StepFunction::constant(scalar_vec(1.0));
  EXPECT_NEAR(std::abs(qwc::inner_integral(f, g, 0.0, 2.0) - Complex(0.0, -2.0)), 0.0, 1e-15);
}

TEST(WalkSteps, ToleratesRounding) {
  EXPECT_EQ(qwc::walk_steps(0.3, 0.1), 3);
  EXPECT_EQ(qwc::walk_steps(0.29, 0.1), 2);
  EXPECT_EQ(qwc::walk_steps(1.0, 1.0 / 3.0), 3);
  EXPECT_EQ(qwc::walk_steps(0.0, 0.25), 0);
}

TEST(WalkStepMatrix, Examples) {
  oracle::Gen gen(503);
  const StepFunction f = random_step(gen, 2, {0.0, 0.3}), g = random_step(gen, 2, {0.0, 0.6});
  const double h = 0.125;
  const auto id = BlockOperator::identity(2, 2);
  for (long n = 0; n < 8; ++n) {
    const Complex ip = qwc::step_average(f, n, h).dot(qwc::step_average(g, n, h));
    EXPECT_LE(norm2(qwc::walk_step_matrix(id, f, g, n, h) -
                    (1.0 + h * ip) * ComplexMatrix::Identity(2, 2)),
              1e-14);
  }
  const StepFunction z = StepFunction::zero(2);
  EXPECT_LE(norm2(qwc::walk_step_matrix(qwc::delta_perp(2, 2), z, z, 3, h) -
                  ComplexMatrix::Identity(2, 2)),
            1e-15);
}

TEST(WalkStepMatrix, EqualsCompressionWithRootHVectors) {
  oracle::Gen gen(504);
  const auto g_op = random_block(gen, 2, 2);
  const StepFunction f = random_step(gen, 2, {0.0, 0.3}), g = random_step(gen, 2, {0.0, 0.55});
  const double h = 0.1;
  for (long n = 0; n < 8; ++n) {
    const ComplexVector fa = std::sqrt(h) * qwc::step_average(f, n, h);
    const ComplexVector ga = std::sqrt(h) * qwc::step_average(g, n, h);
    EXPECT_LE(norm2(qwc::walk_step_matrix(g_op, f, g, n, h) -
                    oracle::compress(g_op.matrix(), fa, ga, 2)),
              1e-13);
  }
}

TEST(WalkStepMatrix, NormBound) {
  oracle::Gen gen(505);
  const auto g_op = random_block(gen, 2, 1);
  const double h = 0.05;
  const ComplexVector c0 = gen.vec(1), c1 = gen.vec(1), d0 = gen.vec(1), d1 = gen.vec(1);
  const StepFunction f({0.0, 0.5}, {c0, c1}), g({0.0, 0.5}, {d0, d1});
  const BlockOperator s = qwc::scale_h(g_op - qwc::delta_perp(2, 1), h);
  double bound = 0.0;
  for (const auto& c : {c0, c1})
    for (const auto& d : {d0, d1}) bound = std::max(bound, norm2(qwc::compress(s, c, d)));
  for (long n = 0; n < 20; ++n) {
    EXPECT_LE(norm2(qwc::walk_step_matrix(g_op, f, g, n, h) - ComplexMatrix::Identity(2, 2)),
              h * bound + 1e-12);
  }
}

TEST(WalkMatrixElement, BeforeFirstStepIsTailOnly) {
  oracle::Gen gen(506);
  const auto g_op = random_block(gen, 2, 2);
  const ComplexVector c = gen.vec(2);
  const StepFunction f = StepFunction::constant(c);
  const double t = 0.07;
  const ComplexMatrix out = qwc::walk_matrix_element(g_op, f, f, 0.1, t);
  EXPECT_LE(norm2(out - std::exp(t * c.squaredNorm()) * ComplexMatrix::Identity(2, 2)), 1e-14);
}

TEST(WalkMatrixElement, IdentityGeneratorClosedForm) {
  const ComplexVector c = (ComplexVector(2) << Complex(0.3, 0.1), Complex(-0.2, 0.5)).finished();
  const StepFunction f = StepFunction::constant(c);
  const double h = 0.125, t = 0.9;
  const double c2 = c.squaredNorm();
  const long m = 7;
  const double expected = std::pow(1.0 + h * c2, m) * std::exp((t - h * m) * c2);
  const ComplexMatrix out = qwc::walk_matrix_element(BlockOperator::identity(1, 2), f, f, h, t);
  EXPECT_NEAR(std::abs(out(0, 0) - expected), 0.0, 1e-14);
}

TEST(WalkMatrixElement, ConstantFunctionsGivePowerOfOneStep) {
  oracle::Gen gen(507);
  const auto g_op = random_block(gen, 2, 1, 0.5);
  const ComplexVector c = gen.vec(1), d = gen.vec(1);
  const double h = 0.25;
  const ComplexMatrix step =
      ComplexMatrix::Identity(2, 2) +
      h * qwc::compress(qwc::scale_h(g_op - qwc::delta_perp(2, 1), h), c, d);
  ComplexMatrix power = ComplexMatrix::Identity(2, 2);
  for (int i = 0; i < 6; ++i) power *= step;
  const ComplexMatrix out = qwc::walk_matrix_element(g_op, StepFunction::constant(c),
                                                     StepFunction::constant(d), h, 1.5);
  EXPECT_LE(norm2(out - power), 1e-13);
}

TEST(WalkMatrixElement, ContractionWithZeroFunctions) {
  oracle::Gen gen(508);
  const Index n = 6;
  const ComplexMatrix g = gen.contraction(n, n);
  const StepFunction z = StepFunction::zero(2);
  for (const double h : {0.5, 0.1, 0.01}) {
    EXPECT_LE(norm2(qwc::walk_matrix_element(BlockOperator(2, 2, g), z, z, h, 1.0)), 1.0 + 1e-12);
  }
}

TEST(WalkMatrixElement, DiscreteEvolutionProperty) {
  oracle::Gen gen(509);
  const auto g_op = random_block(gen, 2, 2, 0.7);
  const StepFunction f = random_step(gen, 2, {0.0, 0.3, 0.8});
  const StepFunction g = random_step(gen, 2, {0.0, 0.45});
  const double h = 0.0625;
  const long l = 2, m = 9, n = 17;
  auto product = [&](long from, long to) {
    ComplexMatrix p = ComplexMatrix::Identity(2, 2);
    for (long k = from; k < to; ++k) p *= qwc::walk_step_matrix(g_op, f, g, k, h);
    return p;
  };
  EXPECT_LE(norm2(product(l, m) * product(m, n) - product(l, n)), 1e-13);
  EXPECT_LE(norm2(qwc::walk_matrix_element(g_op, f, g, h, h * n) - product(0, n)), 1e-13);
}

TEST(WalkMatrixElement, BatchedMatchesSingle) {
  oracle::Gen gen(510);
  const auto g_op = random_block(gen, 1, 2, 0.7);
  const StepFunction f = random_step(gen, 2, {0.0, 0.3}), g = random_step(gen, 2, {0.0, 0.7});
  const std::vector<double> times = {0.0, 0.05, 0.3, 0.31, 0.9, 1.0};
  const auto batch = qwc::walk_matrix_elements(g_op, f, g, 0.1, times);
  ASSERT_EQ(batch.size(), times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    EXPECT_LE(norm2(batch[i] - qwc::walk_matrix_element(g_op, f, g, 0.1, times[i])), 1e-13);
  }
}

TEST(WalkMatrixElement, EqualsToyFockMatrixElementOfProductVectors) {
  oracle::Gen gen(511);
  const Index dh = 2, dk = 1;
  const auto g_op = random_block(gen, dh, dk, 0.8);
  const double h = 0.25;
  const int n = 4;
  const StepFunction f = random_step(gen, dk, {0.0, 0.25, 0.75});
  const StepFunction g = random_step(gen, dk, {0.0, 0.5});
  std::vector<ComplexVector> fs, gs;
  for (int k = 0; k < n; ++k) {
    fs.push_back(std::sqrt(h) * qwc::step_average(f, k, h));
    gs.push_back(std::sqrt(h) * qwc::step_average(g, k, h));
  }
  const ComplexVector u = product_vector(fs), v = product_vector(gs);
  const ComplexMatrix id = ComplexMatrix::Identity(dh, dh);
  const ComplexMatrix walk = oracle::toy_walk(g_op.matrix(), dh, dk, n);
  const ComplexMatrix element =
      oracle::kron(id, ComplexMatrix(u.adjoint())) * walk * oracle::kron(id, ComplexMatrix(v));
  EXPECT_LE(norm2(qwc::walk_matrix_element(g_op, f, g, h, h * n) - element), 1e-12);
}

TEST(ToyFockWalk, SmallCases) {
  oracle::Gen gen(512);
  const auto g_op = random_block(gen, 2, 1);
  const auto w0 = qwc::toyfock_walk(g_op, 0);
  EXPECT_EQ(norm2(w0.matrix - ComplexMatrix::Identity(2, 2)), 0.0);
  const auto w1 = qwc::toyfock_walk(g_op, 1);
  EXPECT_LE(norm2(w1.matrix - oracle::block_to_kron(g_op.matrix(), 2, 1)), 1e-15);
}

TEST(ToyFockWalk, MatchesKroneckerOracle) {
  oracle::Gen gen(513);
  for (const auto [dh, dk, n] : {std::tuple{1, 1, 4}, std::tuple{2, 1, 3}, std::tuple{1, 2, 3},
                                 std::tuple{2, 2, 2}}) {
    const auto g_op = random_block(gen, dh, dk);
    const auto w = qwc::toyfock_walk(g_op, n);
    EXPECT_LE(norm2(w.matrix - oracle::toy_walk(g_op.matrix(), dh, dk, n)),
              1e-12 * std::pow(norm2(g_op.matrix()), n));
  }
}

TEST(ToyFockWalk, ElementaryNormEstimate) {
  oracle::Gen gen(514);
  for (int trial = 0; trial < 5; ++trial) {
    const auto g_op = random_block(gen, 2, 1, 0.6);
    const double gn = norm2(g_op.matrix());
    for (int n = 0; n <= 6; ++n) {
      EXPECT_LE(norm2(qwc::toyfock_walk(g_op, n).matrix), std::pow(gn, n) * (1.0 + 1e-12));
    }
  }
}

TEST(ToyFockWalk, UnitaryAndIsometricGeneratorsGiveSameStructure) {
  oracle::Gen gen(515);
  const auto u = BlockOperator(2, 1, gen.unitary(4));
  const ComplexMatrix w = qwc::toyfock_walk(u, 4).matrix;
  const Index d = w.rows();
  EXPECT_LE(norm2(w.adjoint() * w - ComplexMatrix::Identity(d, d)), 1e-10);
  EXPECT_LE(norm2(w * w.adjoint() - ComplexMatrix::Identity(d, d)), 1e-10);
}

TEST(ToyFockWalk, VacuumBlockMatchesWalkElementAtUnitScale) {
  oracle::Gen gen(516);
  const auto g_op = random_block(gen, 2, 2, 0.6);
  const StepFunction z = StepFunction::zero(2);
  for (int n = 0; n <= 4; ++n) {
    EXPECT_LE(norm2(qwc::toyfock_walk(g_op, n).vacuum_block() -
                    qwc::walk_matrix_element(g_op, z, z, 1.0, n)),
              1e-12);
  }
}

TEST(ToyFockWalk, SizeCap) {
  EXPECT_EQ(qwc::toyfock_dimension(2, 2, 3), 54);
  EXPECT_THROW(qwc::toyfock_dimension(2, 2, 9), qwc::SizeCapError);
  EXPECT_THROW(qwc::toyfock_walk(BlockOperator(2, 2), 3, 50), qwc::SizeCapError);
}

TEST(ToyFockFlow, Examples) {
  oracle::Gen gen(517);
  const auto u = BlockOperator(2, 1, gen.unitary(4));
  const auto id_flow = qwc::toyfock_flow(u, ComplexMatrix::Identity(2, 2), 3);
  const Index d = id_flow.matrix.rows();
  EXPECT_LE(norm2(id_flow.matrix - ComplexMatrix::Identity(d, d)), 1e-12);

  const ComplexMatrix x = gen.gaussian(2, 2);
  EXPECT_LE(norm2(qwc::toyfock_flow(u, x, 0).matrix - x), 1e-15);

  const ComplexMatrix v = gen.unitary(2);
  const ComplexMatrix j = qwc::toyfock_flow(u, v, 3).matrix;
  EXPECT_LE(norm2(j.adjoint() * j - ComplexMatrix::Identity(d, d)), 1e-10);
}

TEST(ToyFockFlow, VacuumShortcutMatchesFullFlow) {
  oracle::Gen gen(518);
  const auto g_op = random_block(gen, 2, 1, 0.7);
  const ComplexMatrix x = gen.gaussian(2, 2);
  for (int n = 0; n <= 4; ++n) {
    EXPECT_LE(norm2(qwc::toyfock_flow_vacuum(g_op, x, n) -
                    qwc::toyfock_flow(g_op, x, n).vacuum_block()),
              1e-12);
  }
}

}  // namespace
