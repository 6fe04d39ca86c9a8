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

#include "qwc/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qwc/cocycle.hpp"
#include "qwc/holevo.hpp"
#include "qwc/models.hpp"
#include "qwc/random.hpp"

namespace qwc {
namespace {

BlockOperator random_block(Rng& rng, Index dh, Index dk, double scale = 1.0) {
  const Index n = dh * (1 + dk);
  return BlockOperator(dh, dk, scale * rng.gaussian(n, n));
}

double diff(const BlockOperator& x, const BlockOperator& y) {
  return op_norm((x - y).matrix());
}

}  // namespace

std::vector<SelftestResult> run_selftest(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<SelftestResult> out;

  {
    double r = 0.0;
    for (int i = 0; i < 50; ++i) {
      const Index dh = 1 + i % 3;
      const Index dk = 1 + (i / 3) % 3;
      const BlockOperator a = random_block(rng, dh, dk);
      const BlockOperator b = random_block(rng, dh, dk);
      const BlockOperator c = random_block(rng, dh, dk);
      const BlockOperator zero(dh, dk);
      r = std::max({r, diff(series_product(series_product(a, b), c),
                            series_product(a, series_product(b, c))),
                    diff(series_product(zero, a), a),
                    diff(series_product(a, b).adjoint(),
                         series_product(b.adjoint(), a.adjoint()))});
    }
    out.push_back({"series product monoid laws", r, 1e-12});
  }
  {
    double r = 0.0;
    for (int i = 0; i < 30; ++i) {
      const Index dh = 1 + i % 2;
      const Index dk = 1 + i % 3;
      const GeneratorParams p1{rng.gaussian(dh, dh), rng.gaussian(dh * dk, dh),
                               rng.unitary(dh * dk)};
      const GeneratorParams p2{rng.gaussian(dh, dh), rng.gaussian(dh * dk, dh),
                               rng.gaussian(dh * dk, dh * dk)};
      r = std::max(r, diff(assemble_FZLW(compose_params(p1, p2)),
                           series_product(assemble_FZLW(p1), assemble_FZLW(p2))));
    }
    out.push_back({"parameter composition (isometric W1)", r, 1e-12});
  }
  {
    double r = 0.0;
    for (int i = 0; i < 30; ++i) {
      BlockOperator q = random_block(rng, 2, 2);
      q = Complex(5.0 * rng.uniform(0.0, 1.0) / op_norm(q.matrix()), 0.0) * q;
      r = std::max(r, diff(holevo_transform(q), tau_exp_oracle(q)));
    }
    out.push_back({"holevo transform against block exponential", r, 1e-10});
  }
  {
    double r = 0.0;
    for (int i = 0; i < 50; ++i) {
      const Complex z = std::polar(5.0 * rng.uniform(0.0, 1.0), rng.uniform(0.0, 6.3));
      const auto rel = [](Complex x, Complex y) { return std::abs(x - y) / std::max(1.0, std::abs(y)); };
      r = std::max({r, rel(1.0 + z * scalar::e2(z), scalar::e1(z)),
                    rel(scalar::e1(-z) * scalar::e0(z), scalar::e1(z)),
                    rel(0.5 * scalar::e1(-z) * scalar::e1(z) + scalar::e(z), scalar::e2(z))});
      for (int n = 1; n <= 64; n *= 2) {
        const Complex w = static_cast<double>(n) * (z - 1.0);
        r = std::max(r, rel(w + w * scalar::p_n(n, w) * w, std::pow(z, n) - 1.0));
      }
    }
    for (int k = 0; k < 63; ++k) {
      const double t = 0.1 * k;
      const Complex eb = scalar::e_b(t);
      r = std::max({r, std::abs(std::conj(scalar::e_a(t)) + scalar::e_a(t)),
                    std::abs(scalar::e1(kI * t) * eb - 1.0),
                    std::abs(std::norm(eb) * scalar::e(kI * t) - scalar::e_a(t))});
    }
    out.push_back({"scalar function identities", r, 1e-10});
  }
  {
    double r = 0.0;
    for (int i = 0; i < 20; ++i) {
      const Index dh = 1 + i % 2;
      const Index dk = 1 + i % 2;
      const ComplexMatrix rr = rng.hermitian_with_spectrum(dh * dk, 0.1, 2.0 * std::numbers::pi - 0.1);
      const GeneratorParams p{rng.skewadjoint(dh), rng.gaussian(dh * dk, dh), mat_exp(kI * rr)};
      const QParams q = q_from_unitary_params(p);
      r = std::max(r, diff(holevo_transform(assemble_Q(q)), assemble_FZLW(p)));
    }
    out.push_back({"unitary parameter roundtrip", r, 1e-9});
  }
  {
    double r = 0.0;
    const ComplexMatrix j = rng.isometry(3, 2);
    const StepFunction f({0.0, 0.4}, {rng.gaussian_vector(2), rng.gaussian_vector(2)});
    const StepFunction g({0.0, 0.7}, {rng.gaussian_vector(2), rng.gaussian_vector(2)});
    for (int i = 0; i < 5; ++i) {
      const BlockOperator big = random_block(rng, 2, 3, 0.3);
      r = std::max({r, jgj_cocycle_defect(big, j, f, g, 1.0),
                    jgj_walk_defect(big, j, f, g, 0.125, 1.0)});
    }
    out.push_back({"noise embedding of matrix elements", r, 1e-12});
  }
  {
    double r = 0.0;
    const BlockOperator g = random_block(rng, 2, 1, 0.5);
    const double gn = op_norm(g.matrix());
    for (int n = 0; n <= 5; ++n) {
      r = std::max(r, op_norm(toyfock_walk(g, n).matrix) - std::pow(gn, n) - 1e-12);
    }
    out.push_back({"toy Fock walk norm bound (excess)", std::max(r, 0.0), 0.0});
  }
  return out;
}

}  // namespace qwc
