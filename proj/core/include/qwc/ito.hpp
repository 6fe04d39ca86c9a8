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

// The series product and the F_{Z,L,W} parameterisation of cocycle
// generators, with algebraic structure checks (isometric, coisometric,
// unitary, quasicontractive growth bound).

#include <limits>
#include <string>

#include "qwc/block.hpp"

namespace qwc {

/// Z : h -> h, L : h -> h(x)k, W : h(x)k -> h(x)k.
struct GeneratorParams {
  ComplexMatrix z;
  ComplexMatrix l;
  ComplexMatrix w;

  Index dim_h() const { return z.rows(); }
  Index dim_k() const { return z.rows() == 0 ? 0 : l.rows() / z.rows(); }
  void validate() const;

  /// (0, 0, I).
  static GeneratorParams trivial(Index dim_h, Index dim_k);
};

/// F1 <| F2 = F1 + F2 + F1 Delta F2.
BlockOperator series_product(const BlockOperator& f1, const BlockOperator& f2);

/// [[Z - L*L/2, -L*W], [L, W - I]].
BlockOperator assemble_FZLW(const GeneratorParams& p);

/// Parameters (Z, L, W) with W = W1 W2, L = L1 + W1 L2 and
/// Z = Z1 + Z2 - L2*(I - W1*W1)L2/2 - i im(L1* W1 L2).
/// F_{Z,L,W} equals F_{p1} <| F_{p2} when W1 is isometric (or L2 = 0);
/// otherwise the top-right blocks differ by L2*(I - W1*W1)W2.
GeneratorParams compose_params(const GeneratorParams& p1, const GeneratorParams& p2);

/// F*, the generator of the dual cocycle.
BlockOperator dual_generator(const BlockOperator& f);

enum class StructureClass { unitary, isometric, coisometric, quasicontractive, none };

std::string to_string(StructureClass c);

struct StructureReport {
  double iso_defect = 0.0;    // |F* <| F|
  double coiso_defect = 0.0;  // |F <| F*|
  double beta0 = std::numeric_limits<double>::infinity();
  StructureClass classification = StructureClass::none;
};

/// Bisection tolerance on beta.
inline constexpr double kBetaBisectionTol = 1e-10;

/// Defects, the least beta with F* <| F <= 2 beta Delta-perp (to the PSD
/// tolerance tol * (1 + |F|^2)), and the resulting classification. beta0 is
/// +inf when no beta in [-(|F|^2 + |F|), |F|^2 + |F|] passes.
StructureReport structure_report(const BlockOperator& f, double tol);

/// Whether 2 beta Delta-perp - F* <| F >= -psd_tol I.
bool quasicontractive_bound_holds(const BlockOperator& f, double beta, double psd_tol);

}  // namespace qwc
