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

// Dense complex linear algebra used throughout qwc: the matrix exponential,
// Hermitian spectral calculus, the phi-functions e0, e1, e2, e of a square
// matrix, positive parts and spectral norms.
//
// Every operation rejects non-finite input with NonFiniteError.

#include <complex>
#include <functional>
#include <string_view>

#include <Eigen/Dense>

#include "qwc/errors.hpp"

namespace qwc {

using Complex = std::complex<double>;
using Index = Eigen::Index;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

void require_finite(const ComplexMatrix& m, std::string_view where);
void require_square(const ComplexMatrix& m, std::string_view where);

/// Matrix exponential by scaling and squaring around a diagonal [13/13]
/// Pade approximant. The argument is scaled by 2^-s so that its 1-norm is at
/// most kPadeTheta13, then squared back s times.
ComplexMatrix mat_exp(const ComplexMatrix& m);

inline constexpr int kPadeOrder = 13;
inline constexpr double kPadeTheta13 = 5.371920351148152;

struct HermitianEigen {
  RealVector values;      // ascending
  ComplexMatrix vectors;  // columns are orthonormal eigenvectors
};

/// Eigendecomposition of (H + H*)/2. Throws PreconditionError when H is
/// further than 1e-10 * |H| from Hermitian.
HermitianEigen herm_eig(const ComplexMatrix& h);

/// V f(diag lambda) V* for Hermitian H. Throws NonFiniteError if f is not
/// finite at some eigenvalue.
ComplexMatrix func_of_hermitian(const ComplexMatrix& h,
                                const std::function<Complex(double)>& f);

struct PhiFunctions {
  ComplexMatrix e0;  // e^D
  ComplexMatrix e1;  // (e^D - I) / D
  ComplexMatrix e2;  // (e^D - I - D) / D^2
  ComplexMatrix e;   // (sinh D - D) / D^2
};

/// The entire functions e0, e1, e2, e evaluated at a (not necessarily
/// normal) square matrix. e1 and e2 are read off the exponential of the
/// block-triangular augmentations [[D, I], [0, 0]] and
/// [[D, I, 0], [0, 0, I], [0, 0, 0]]; e(D) = (e2(D) - e2(-D)) / 2.
PhiFunctions phi_funcs(const ComplexMatrix& d);

/// Positive part of re Z = (Z + Z*)/2, negative eigenvalues clipped to zero.
ComplexMatrix positive_part(const ComplexMatrix& z);

/// Spectral norm, the square root of the top eigenvalue of M*M (or MM*,
/// whichever is smaller).
double op_norm(const ComplexMatrix& m);

/// (T + T*)/2 and (T - T*)/(2i).
ComplexMatrix real_part(const ComplexMatrix& t);
ComplexMatrix imag_part(const ComplexMatrix& t);

/// Kronecker product a (x) b with the row-major (a-index, b-index) order.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Smallest eigenvalue of the Hermitian part of H.
double min_eigenvalue(const ComplexMatrix& h);

}  // namespace qwc
