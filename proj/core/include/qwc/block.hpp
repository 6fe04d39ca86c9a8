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

// Operators on h (x) k^ where k^ = C (+) k, stored in block form on
// h (+) (h (x) k). Index order is fixed globally: the d_h components of h
// first, then h (x) k in lexicographic (h-index, k-index) order.
//
//        [ A  C ]      A : h -> h          C : h(x)k -> h
//   F =  [      ]
//        [ B  D ]      B : h -> h(x)k      D : h(x)k -> h(x)k

#include <vector>

#include "qwc/mat.hpp"

namespace qwc {

class BlockOperator {
 public:
  BlockOperator() = default;
  /// Zero operator.
  BlockOperator(Index dim_h, Index dim_k);
  BlockOperator(Index dim_h, Index dim_k, ComplexMatrix matrix);

  static BlockOperator identity(Index dim_h, Index dim_k);
  static BlockOperator from_blocks(const ComplexMatrix& a, const ComplexMatrix& c,
                                   const ComplexMatrix& b, const ComplexMatrix& d);

  Index dim_h() const { return dim_h_; }
  Index dim_k() const { return dim_k_; }
  Index size() const { return dim_h_ * (1 + dim_k_); }
  const ComplexMatrix& matrix() const { return matrix_; }

  ComplexMatrix a() const { return matrix_.topLeftCorner(dim_h_, dim_h_); }
  ComplexMatrix c() const { return matrix_.topRightCorner(dim_h_, dim_h_ * dim_k_); }
  ComplexMatrix b() const { return matrix_.bottomLeftCorner(dim_h_ * dim_k_, dim_h_); }
  ComplexMatrix d() const {
    return matrix_.bottomRightCorner(dim_h_ * dim_k_, dim_h_ * dim_k_);
  }

  BlockOperator adjoint() const;
  bool same_shape(const BlockOperator& other) const {
    return dim_h_ == other.dim_h_ && dim_k_ == other.dim_k_;
  }

  BlockOperator& operator+=(const BlockOperator& rhs);
  BlockOperator& operator-=(const BlockOperator& rhs);
  BlockOperator& operator*=(Complex s);

  friend BlockOperator operator+(BlockOperator lhs, const BlockOperator& rhs) {
    return lhs += rhs;
  }
  friend BlockOperator operator-(BlockOperator lhs, const BlockOperator& rhs) {
    return lhs -= rhs;
  }
  friend BlockOperator operator*(Complex s, BlockOperator op) { return op *= s; }
  friend BlockOperator operator*(const BlockOperator& lhs, const BlockOperator& rhs);

 private:
  Index dim_h_ = 0;
  Index dim_k_ = 0;
  ComplexMatrix matrix_;
};

/// c^ = (1, c) in k^.
struct NoiseVectorHat {
  ComplexVector c;

  Index dim_k() const { return c.size(); }
  ComplexVector hat() const;
};

/// Delta = 0 (+) I_{h(x)k} and Delta-perp = I_h (+) 0.
BlockOperator delta(Index dim_h, Index dim_k);
BlockOperator delta_perp(Index dim_h, Index dim_k);

/// I_h (x) |d> : h -> h (x) k, as a (d_h d_k) x d_h matrix.
ComplexMatrix ket_ampliation(Index dim_h, const ComplexVector& d);

/// (I (x) <c^|) F (I (x) |d^>) = A + C(I(x)d) + (I(x)c)*B + (I(x)c)* D (I(x)d).
ComplexMatrix compress(const BlockOperator& f, const ComplexVector& c,
                       const ComplexVector& d);

/// Conjugation by I (x) diag(h^-1/2, I_k): (A, B, C, D) -> (A/h, B/sqrt h,
/// C/sqrt h, D).
BlockOperator scale_h(const BlockOperator& f, double h);
/// Inverse of scale_h: (A, B, C, D) -> (hA, sqrt h B, sqrt h C, D).
BlockOperator unscale_h(const BlockOperator& f, double h);

/// Convert between the block order and the Kronecker order of h (x) k^
/// (row-major (h-index, k^-index), with k^-index 0 the vacuum direction).
BlockOperator from_kron(Index dim_h, Index dim_k, const ComplexMatrix& kron_matrix);
ComplexMatrix to_kron(const BlockOperator& f);

/// Permutation matrix P with (P x)[new index] = x[old index] taking a tensor
/// of the given factor dimensions to the factor order `order`, i.e. new
/// factor j is old factor order[j]. Built once per (dims, order) and cached.
const Eigen::PermutationMatrix<Eigen::Dynamic, Eigen::Dynamic, Index>&
tensor_permutation(const std::vector<Index>& dims, const std::vector<int>& order);

/// Permutation from Kronecker order to block order for h (x) k^.
const Eigen::PermutationMatrix<Eigen::Dynamic, Eigen::Dynamic, Index>&
kron_to_block_permutation(Index dim_h, Index dim_k);

enum class BipartiteSide { first = 1, second = 2 };

/// Ampliation of an operator on h_i (x) k^ to (h_1 (x) h_2) (x) k^. The
/// `second` side gives I_{h1} (x) F; the `first` side gives I_{h2} (x)~ F, the
/// ampliation composed with the tensor flip that puts h_1 first.
BlockOperator ampliate_bipartite(const BlockOperator& f_small, BipartiteSide side,
                                 Index dim_other);

/// J_noise* F J_noise with J_noise = I_h (x) (1 (+) J) for an isometry
/// J : k -> K given as a d_K x d_k matrix.
BlockOperator embed_noise_compress(const BlockOperator& f, const ComplexMatrix& j);

/// J_noise itself, as a matrix from h(x)k^ to h(x)K^ in block order.
ComplexMatrix noise_embedding(Index dim_h, const ComplexMatrix& j);

}  // namespace qwc
