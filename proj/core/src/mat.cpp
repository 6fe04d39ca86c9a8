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

#include "qwc/mat.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace qwc {

namespace {

// [13/13] Pade coefficients for exp.
constexpr std::array<double, 14> kPade13 = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
    1187353796428800.0,  129060195264000.0,   10559470521600.0,
    670442572800.0,      33522128640.0,       1323241920.0,
    40840800.0,          960960.0,            16380.0,
    182.0,               1.0};

double one_norm(const ComplexMatrix& m) {
  double best = 0.0;
  for (Index j = 0; j < m.cols(); ++j) {
    best = std::max(best, m.col(j).cwiseAbs().sum());
  }
  return best;
}

// Largest |eigenvalue| of an exactly Hermitian matrix.
double hermitian_spectral_radius(const ComplexMatrix& s) {
  if (s.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(s, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

ComplexMatrix pade13(const ComplexMatrix& a) {
  const Index n = a.rows();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix a2 = a * a;
  const ComplexMatrix a4 = a2 * a2;
  const ComplexMatrix a6 = a4 * a2;
  // Normalised so the constant term is exactly I: the LU solve then returns
  // exp(0) = I without rounding.
  std::array<double, 14> b{};
  for (std::size_t k = 0; k < b.size(); ++k) b[k] = kPade13[k] / kPade13[0];

  ComplexMatrix u_inner = b[13] * a6 + b[11] * a4 + b[9] * a2;
  ComplexMatrix u = a * (a6 * u_inner + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id);
  ComplexMatrix v_inner = b[12] * a6 + b[10] * a4 + b[8] * a2;
  ComplexMatrix v = a6 * v_inner + b[6] * a6 + b[4] * a4 + b[2] * a2 + id;

  return (v - u).partialPivLu().solve(v + u);
}

}  // namespace

void require_finite(const ComplexMatrix& m, std::string_view where) {
  if (!m.allFinite()) {
    throw NonFiniteError(std::string(where) + ": non-finite matrix entry");
  }
}

void require_square(const ComplexMatrix& m, std::string_view where) {
  if (m.rows() != m.cols()) {
    throw DimensionError(std::string(where) + ": expected a square matrix, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

ComplexMatrix mat_exp(const ComplexMatrix& m) {
  require_square(m, "mat_exp");
  require_finite(m, "mat_exp");
  if (m.size() == 0) return m;

  const double norm = one_norm(m);
  int squarings = 0;
  if (norm > kPadeTheta13) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / kPadeTheta13)));
  }
  const ComplexMatrix scaled = m / std::ldexp(1.0, squarings);
  ComplexMatrix result = pade13(scaled);
  for (int i = 0; i < squarings; ++i) {
    result = result * result;
  }
  return result;
}

HermitianEigen herm_eig(const ComplexMatrix& h) {
  require_square(h, "herm_eig");
  require_finite(h, "herm_eig");
  if (h.size() == 0) return {RealVector(0), ComplexMatrix(0, 0)};

  const ComplexMatrix skew = h - h.adjoint();
  // i(H - H*) is Hermitian; its spectral radius is the Hermiticity defect.
  const double defect = hermitian_spectral_radius(kI * skew);
  const double scale = std::sqrt(hermitian_spectral_radius(h.adjoint() * h));
  if (defect > 1e-10 * std::max(scale, 1e-300) && defect > 1e-300) {
    throw PreconditionError("herm_eig: matrix is not Hermitian (defect " +
                            std::to_string(defect) + ")");
  }

  const ComplexMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw NonFiniteError("herm_eig: eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix func_of_hermitian(const ComplexMatrix& h,
                                const std::function<Complex(double)>& f) {
  const HermitianEigen eig = herm_eig(h);
  ComplexVector fvals(eig.values.size());
  for (Index i = 0; i < eig.values.size(); ++i) {
    fvals(i) = f(eig.values(i));
    if (!std::isfinite(fvals(i).real()) || !std::isfinite(fvals(i).imag())) {
      throw NonFiniteError("func_of_hermitian: function undefined at eigenvalue " +
                           std::to_string(eig.values(i)));
    }
  }
  return eig.vectors * fvals.asDiagonal() * eig.vectors.adjoint();
}

PhiFunctions phi_funcs(const ComplexMatrix& d) {
  require_square(d, "phi_funcs");
  require_finite(d, "phi_funcs");
  const Index n = d.rows();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);

  ComplexMatrix aug2 = ComplexMatrix::Zero(2 * n, 2 * n);
  aug2.topLeftCorner(n, n) = d;
  aug2.topRightCorner(n, n) = id;
  const ComplexMatrix exp2 = mat_exp(aug2);

  auto e2_of = [&](const ComplexMatrix& x) {
    ComplexMatrix aug3 = ComplexMatrix::Zero(3 * n, 3 * n);
    aug3.block(0, 0, n, n) = x;
    aug3.block(0, n, n, n) = id;
    aug3.block(n, 2 * n, n, n) = id;
    return ComplexMatrix(mat_exp(aug3).block(0, 2 * n, n, n));
  };

  PhiFunctions out;
  out.e0 = exp2.topLeftCorner(n, n);
  out.e1 = exp2.topRightCorner(n, n);
  out.e2 = e2_of(d);
  out.e = 0.5 * (out.e2 - e2_of(-d));
  return out;
}

ComplexMatrix positive_part(const ComplexMatrix& z) {
  require_square(z, "positive_part");
  return func_of_hermitian(real_part(z),
                           [](double x) { return Complex(std::max(x, 0.0), 0.0); });
}

double op_norm(const ComplexMatrix& m) {
  require_finite(m, "op_norm");
  if (m.size() == 0) return 0.0;
  const ComplexMatrix gram = m.cols() <= m.rows() ? ComplexMatrix(m.adjoint() * m)
                                                  : ComplexMatrix(m * m.adjoint());
  const HermitianEigen eig = herm_eig(gram);
  return std::sqrt(std::max(eig.values(eig.values.size() - 1), 0.0));
}

ComplexMatrix real_part(const ComplexMatrix& t) { return 0.5 * (t + t.adjoint()); }

ComplexMatrix imag_part(const ComplexMatrix& t) {
  return (t - t.adjoint()) / Complex(0.0, 2.0);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

double min_eigenvalue(const ComplexMatrix& h) {
  const HermitianEigen eig = herm_eig(real_part(h));
  return eig.values.size() == 0 ? 0.0 : eig.values(0);
}

}  // namespace qwc
