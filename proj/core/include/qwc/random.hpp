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

// Seeded generators of random test matrices. Identical seeds produce
// identical streams on a given standard library.

#include <cstdint>
#include <random>

#include "qwc/mat.hpp"

namespace qwc {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi);
  double normal();
  /// Standard complex Gaussian: real and imaginary parts N(0, 1/2).
  Complex complex_normal();

  ComplexMatrix gaussian(Index rows, Index cols);
  ComplexVector gaussian_vector(Index n);
  /// (M + M*)/2.
  ComplexMatrix hermitian(Index n);
  /// (M - M*)/2.
  ComplexMatrix skewadjoint(Index n);
  /// exp of a random skewadjoint matrix.
  ComplexMatrix unitary(Index n);
  /// M / (|M| + eps).
  ComplexMatrix contraction(Index rows, Index cols, double eps = 0.1);
  /// First `cols` columns of a random unitary.
  ComplexMatrix isometry(Index rows, Index cols);
  /// Hermitian with eigenvalues uniform in [lo, hi].
  ComplexMatrix hermitian_with_spectrum(Index n, double lo, double hi);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace qwc
