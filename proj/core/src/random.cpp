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

#include "qwc/random.hpp"

#include <cmath>

namespace qwc {

double Rng::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

double Rng::normal() { return normal_(engine_); }

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im) * std::sqrt(0.5);
}

ComplexMatrix Rng::gaussian(Index rows, Index cols) {
  ComplexMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      m(i, j) = complex_normal();
    }
  }
  return m;
}

ComplexVector Rng::gaussian_vector(Index n) { return gaussian(n, 1).col(0); }

ComplexMatrix Rng::hermitian(Index n) {
  const ComplexMatrix m = gaussian(n, n);
  return 0.5 * (m + m.adjoint());
}

ComplexMatrix Rng::skewadjoint(Index n) {
  const ComplexMatrix m = gaussian(n, n);
  return 0.5 * (m - m.adjoint());
}

ComplexMatrix Rng::unitary(Index n) { return mat_exp(skewadjoint(n)); }

ComplexMatrix Rng::contraction(Index rows, Index cols, double eps) {
  const ComplexMatrix m = gaussian(rows, cols);
  return m / (op_norm(m) + eps);
}

ComplexMatrix Rng::isometry(Index rows, Index cols) {
  if (cols > rows) {
    throw DimensionError("Rng::isometry: more columns than rows");
  }
  return unitary(rows).leftCols(cols);
}

ComplexMatrix Rng::hermitian_with_spectrum(Index n, double lo, double hi) {
  const ComplexMatrix v = unitary(n);
  RealVector lambda(n);
  for (Index i = 0; i < n; ++i) {
    lambda(i) = uniform(lo, hi);
  }
  const ComplexMatrix m = v * lambda.cast<Complex>().asDiagonal() * v.adjoint();
  return 0.5 * (m + m.adjoint());
}

}  // namespace qwc
