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

#include "qwc/block.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

namespace qwc {

namespace {

using Permutation = Eigen::PermutationMatrix<Eigen::Dynamic, Eigen::Dynamic, Index>;

void require_dims(Index dim_h, Index dim_k, std::string_view where) {
  if (dim_h < 1 || dim_k < 1) {
    throw DimensionError(std::string(where) + ": dimensions must be at least 1");
  }
}

void require_same_shape(const BlockOperator& x, const BlockOperator& y,
                        std::string_view where) {
  if (!x.same_shape(y)) {
    throw DimensionError(std::string(where) + ": block operators on different spaces");
  }
}

struct PermutationCache {
  std::mutex mutex;
  std::map<std::pair<std::vector<Index>, std::vector<int>>, std::unique_ptr<Permutation>>
      entries;
};

PermutationCache& permutation_cache() {
  static PermutationCache cache;
  return cache;
}

Permutation build_tensor_permutation(const std::vector<Index>& dims,
                                     const std::vector<int>& order) {
  const std::size_t m = dims.size();
  Index total = 1;
  for (Index d : dims) total *= d;

  std::vector<Index> new_dims(m);
  for (std::size_t j = 0; j < m; ++j) new_dims[j] = dims[static_cast<std::size_t>(order[j])];

  Permutation perm(total);
  std::vector<Index> digits(m);
  for (Index flat = 0; flat < total; ++flat) {
    Index rest = flat;
    for (std::size_t f = m; f-- > 0;) {
      digits[f] = rest % dims[f];
      rest /= dims[f];
    }
    Index target = 0;
    for (std::size_t j = 0; j < m; ++j) {
      target = target * new_dims[j] + digits[static_cast<std::size_t>(order[j])];
    }
    perm.indices()(flat) = target;
  }
  return perm;
}

}  // namespace

BlockOperator::BlockOperator(Index dim_h, Index dim_k)
    : dim_h_(dim_h),
      dim_k_(dim_k),
      matrix_(ComplexMatrix::Zero(dim_h * (1 + dim_k), dim_h * (1 + dim_k))) {
  require_dims(dim_h, dim_k, "BlockOperator");
}

BlockOperator::BlockOperator(Index dim_h, Index dim_k, ComplexMatrix matrix)
    : dim_h_(dim_h), dim_k_(dim_k), matrix_(std::move(matrix)) {
  require_dims(dim_h, dim_k, "BlockOperator");
  const Index n = dim_h * (1 + dim_k);
  if (matrix_.rows() != n || matrix_.cols() != n) {
    throw DimensionError("BlockOperator: matrix is " + std::to_string(matrix_.rows()) +
                         "x" + std::to_string(matrix_.cols()) + ", expected " +
                         std::to_string(n) + "x" + std::to_string(n));
  }
}

BlockOperator BlockOperator::identity(Index dim_h, Index dim_k) {
  const Index n = dim_h * (1 + dim_k);
  return BlockOperator(dim_h, dim_k, ComplexMatrix::Identity(n, n));
}

BlockOperator BlockOperator::from_blocks(const ComplexMatrix& a, const ComplexMatrix& c,
                                         const ComplexMatrix& b, const ComplexMatrix& d) {
  const Index dh = a.rows();
  if (a.cols() != dh || dh == 0 || b.cols() != dh || c.rows() != dh ||
      b.rows() % dh != 0 || c.cols() != b.rows() || d.rows() != b.rows() ||
      d.cols() != b.rows()) {
    throw DimensionError("BlockOperator::from_blocks: inconsistent block shapes");
  }
  const Index dk = b.rows() / dh;
  ComplexMatrix m(dh * (1 + dk), dh * (1 + dk));
  m << a, c, b, d;
  return BlockOperator(dh, dk, std::move(m));
}

BlockOperator BlockOperator::adjoint() const {
  return BlockOperator(dim_h_, dim_k_, matrix_.adjoint());
}

BlockOperator& BlockOperator::operator+=(const BlockOperator& rhs) {
  require_same_shape(*this, rhs, "BlockOperator +");
  matrix_ += rhs.matrix_;
  return *this;
}

BlockOperator& BlockOperator::operator-=(const BlockOperator& rhs) {
  require_same_shape(*this, rhs, "BlockOperator -");
  matrix_ -= rhs.matrix_;
  return *this;
}

BlockOperator& BlockOperator::operator*=(Complex s) {
  matrix_ *= s;
  return *this;
}

BlockOperator operator*(const BlockOperator& lhs, const BlockOperator& rhs) {
  require_same_shape(lhs, rhs, "BlockOperator *");
  return BlockOperator(lhs.dim_h(), lhs.dim_k(), lhs.matrix() * rhs.matrix());
}

ComplexVector NoiseVectorHat::hat() const {
  ComplexVector out(c.size() + 1);
  out(0) = 1.0;
  out.tail(c.size()) = c;
  return out;
}

BlockOperator delta(Index dim_h, Index dim_k) {
  BlockOperator id = BlockOperator::identity(dim_h, dim_k);
  ComplexMatrix m = id.matrix();
  m.topLeftCorner(dim_h, dim_h).setZero();
  return BlockOperator(dim_h, dim_k, std::move(m));
}

BlockOperator delta_perp(Index dim_h, Index dim_k) {
  BlockOperator zero(dim_h, dim_k);
  ComplexMatrix m = zero.matrix();
  m.topLeftCorner(dim_h, dim_h).setIdentity();
  return BlockOperator(dim_h, dim_k, std::move(m));
}

ComplexMatrix ket_ampliation(Index dim_h, const ComplexVector& d) {
  const Index dk = d.size();
  ComplexMatrix out = ComplexMatrix::Zero(dim_h * dk, dim_h);
  for (Index i = 0; i < dim_h; ++i) {
    out.block(i * dk, i, dk, 1) = d;
  }
  return out;
}

ComplexMatrix compress(const BlockOperator& f, const ComplexVector& c,
                       const ComplexVector& d) {
  if (c.size() != f.dim_k() || d.size() != f.dim_k()) {
    throw DimensionError("compress: noise vector length does not match dim_k");
  }
  const Index dh = f.dim_h();
  const Index dk = f.dim_k();
  const ComplexMatrix kc = ket_ampliation(dh, c);
  const ComplexMatrix kd = ket_ampliation(dh, d);
  const auto& m = f.matrix();
  const auto a = m.topLeftCorner(dh, dh);
  const auto cb = m.topRightCorner(dh, dh * dk);
  const auto bb = m.bottomLeftCorner(dh * dk, dh);
  const auto db = m.bottomRightCorner(dh * dk, dh * dk);
  return a + cb * kd + kc.adjoint() * bb + kc.adjoint() * (db * kd);
}

BlockOperator scale_h(const BlockOperator& f, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw PreconditionError("scale_h: h must be positive and finite");
  }
  const Index dh = f.dim_h();
  ComplexMatrix m = f.matrix();
  const double rs = 1.0 / std::sqrt(h);
  m.topLeftCorner(dh, dh) /= h;
  m.topRightCorner(dh, m.cols() - dh) *= rs;
  m.bottomLeftCorner(m.rows() - dh, dh) *= rs;
  return BlockOperator(f.dim_h(), f.dim_k(), std::move(m));
}

BlockOperator unscale_h(const BlockOperator& f, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw PreconditionError("unscale_h: h must be positive and finite");
  }
  const Index dh = f.dim_h();
  ComplexMatrix m = f.matrix();
  const double rs = std::sqrt(h);
  m.topLeftCorner(dh, dh) *= h;
  m.topRightCorner(dh, m.cols() - dh) *= rs;
  m.bottomLeftCorner(m.rows() - dh, dh) *= rs;
  return BlockOperator(f.dim_h(), f.dim_k(), std::move(m));
}

const Permutation& tensor_permutation(const std::vector<Index>& dims,
                                      const std::vector<int>& order) {
  if (dims.size() != order.size()) {
    throw DimensionError("tensor_permutation: dims and order differ in length");
  }
  std::vector<bool> seen(dims.size(), false);
  for (int o : order) {
    if (o < 0 || static_cast<std::size_t>(o) >= dims.size() || seen[static_cast<std::size_t>(o)]) {
      throw DimensionError("tensor_permutation: order is not a permutation");
    }
    seen[static_cast<std::size_t>(o)] = true;
  }
  auto& cache = permutation_cache();
  std::lock_guard<std::mutex> lock(cache.mutex);
  auto key = std::make_pair(dims, order);
  auto it = cache.entries.find(key);
  if (it == cache.entries.end()) {
    auto perm = std::make_unique<Permutation>(build_tensor_permutation(dims, order));
    it = cache.entries.emplace(std::move(key), std::move(perm)).first;
  }
  return *it->second;
}

const Permutation& kron_to_block_permutation(Index dim_h, Index dim_k) {
  require_dims(dim_h, dim_k, "kron_to_block_permutation");
  static PermutationCache cache;
  std::lock_guard<std::mutex> lock(cache.mutex);
  auto key = std::make_pair(std::vector<Index>{dim_h, dim_k}, std::vector<int>{});
  auto it = cache.entries.find(key);
  if (it == cache.entries.end()) {
    const Index n = dim_h * (1 + dim_k);
    auto perm = std::make_unique<Permutation>(n);
    for (Index i = 0; i < dim_h; ++i) {
      for (Index a = 0; a <= dim_k; ++a) {
        const Index kron_index = i * (1 + dim_k) + a;
        perm->indices()(kron_index) = a == 0 ? i : dim_h + i * dim_k + (a - 1);
      }
    }
    it = cache.entries.emplace(std::move(key), std::move(perm)).first;
  }
  return *it->second;
}

BlockOperator from_kron(Index dim_h, Index dim_k, const ComplexMatrix& kron_matrix) {
  const auto& p = kron_to_block_permutation(dim_h, dim_k);
  if (kron_matrix.rows() != p.size() || kron_matrix.cols() != p.size()) {
    throw DimensionError("from_kron: matrix size does not match dimensions");
  }
  return BlockOperator(dim_h, dim_k, p * kron_matrix * p.transpose());
}

ComplexMatrix to_kron(const BlockOperator& f) {
  const auto& p = kron_to_block_permutation(f.dim_h(), f.dim_k());
  return p.transpose() * f.matrix() * p;
}

BlockOperator ampliate_bipartite(const BlockOperator& f_small, BipartiteSide side,
                                 Index dim_other) {
  if (dim_other < 1) {
    throw DimensionError("ampliate_bipartite: dim_other must be at least 1");
  }
  const Index di = f_small.dim_h();
  const Index dk = f_small.dim_k();
  const ComplexMatrix small_kron = to_kron(f_small);
  const ComplexMatrix amp = kron(ComplexMatrix::Identity(dim_other, dim_other), small_kron);
  const Index dh = di * dim_other;
  if (side == BipartiteSide::second) {
    // (h1, h2, k^) is already the Kronecker order of h (x) k^.
    return from_kron(dh, dk, amp);
  }
  // (h2, h1, k^) -> (h1, h2, k^)
  const auto& flip = tensor_permutation({dim_other, di, 1 + dk}, {1, 0, 2});
  return from_kron(dh, dk, flip * amp * flip.transpose());
}

ComplexMatrix noise_embedding(Index dim_h, const ComplexMatrix& j) {
  const Index dk = j.cols();
  const Index dbig = j.rows();
  ComplexMatrix out = ComplexMatrix::Zero(dim_h * (1 + dbig), dim_h * (1 + dk));
  out.topLeftCorner(dim_h, dim_h).setIdentity();
  out.bottomRightCorner(dim_h * dbig, dim_h * dk) =
      kron(ComplexMatrix::Identity(dim_h, dim_h), j);
  return out;
}

BlockOperator embed_noise_compress(const BlockOperator& f, const ComplexMatrix& j) {
  if (j.rows() != f.dim_k() || j.cols() < 1) {
    throw DimensionError("embed_noise_compress: J must be d_K x d_k with d_K = dim_k(F)");
  }
  require_finite(j, "embed_noise_compress");
  const ComplexMatrix gram = j.adjoint() * j;
  const double defect = op_norm(gram - ComplexMatrix::Identity(j.cols(), j.cols()));
  if (defect > 1e-10) {
    throw PreconditionError("embed_noise_compress: J is not an isometry");
  }
  const ComplexMatrix jn = noise_embedding(f.dim_h(), j);
  return BlockOperator(f.dim_h(), j.cols(), jn.adjoint() * f.matrix() * jn);
}

}  // namespace qwc
