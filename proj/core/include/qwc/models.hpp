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

// Concrete families h -> G(h) of walk generators together with their
// limiting cocycle generators: unitary block realisations built from V_L,
// exponentials of scaled skewadjoint Q_h, repeated quantum interactions,
// bipartite products, and preservation-type walks.

#include <functional>
#include <string>

#include "qwc/holevo.hpp"

namespace qwc {

enum class GeneratorKind { unitary, isometric, coisometric, quasicontractive, general };

std::string to_string(GeneratorKind k);

struct GeneratorFamily {
  std::function<BlockOperator(double h)> evaluator;
  BlockOperator limit;
  GeneratorKind kind = GeneratorKind::general;
  /// Growth exponent with |G(h)|^{floor(t/h)} <= e^{beta t}, when known.
  double beta = 0.0;

  BlockOperator operator()(double h) const { return evaluator(h); }
  Index dim_h() const { return limit.dim_h(); }
  Index dim_k() const { return limit.dim_k(); }
};

/// |s_h(G(h) - I) - F|.
double scaled_generator_error(const GeneratorFamily& family, double h);

/// Sets family.kind from isometry/coisometry residuals of G(h) at
/// h in {1, 2^-3, 2^-6}; any failed sample downgrades to `fallback`.
void certify_kind(GeneratorFamily& family, GeneratorKind fallback, double tol = 1e-10);

/// [[(I+L*L)^{-1/2}, -L*(I+LL*)^{-1/2}], [L(I+L*L)^{-1/2}, (I+LL*)^{-1/2}]].
BlockOperator v_l(const ComplexMatrix& l);

/// (e^Z (+) I) V_L (I (+) W).
BlockOperator v_zlw(const ComplexMatrix& z, const ComplexMatrix& l, const ComplexMatrix& w);

/// G(h) = V_{hZ, sqrt(h) L, W} for Z skewadjoint and W isometric; limit F_{Z,L,W}.
GeneratorFamily realize_isometric(const GeneratorParams& p);

/// G(h) = e^{hT} V_{hZ, sqrt(h) L, W} for contractive W; limit F_{T00 + Z, L, W}
/// where T00 is the vacuum block of T, and beta = |T+| + |Z+|.
GeneratorFamily realize_general(const BlockOperator& t, const GeneratorParams& p);

/// G(h) = exp(Q_{h(Z + L* e_a(R) L), sqrt(h) e_b(R) L, iR}) for R Hermitian with
/// spectrum in [0, 2 pi); limit F_{Z, L, e^{iR}}.
GeneratorFamily realize_unitary_exp(const ComplexMatrix& z, const ComplexMatrix& l,
                                    const ComplexMatrix& r);

/// A family converging to F, when F = F_{Z,L,W} with |W| <= 1. Other
/// quasicontractive generators need an external dilation and are rejected
/// with DilationRequiredError.
GeneratorFamily realize_from_generator(const BlockOperator& f, double tol = 1e-10);

/// G(h) = J* G_big(h) J and F = J* F_big J for an isometry J : k -> K.
GeneratorFamily compress_noise(const GeneratorFamily& big, const ComplexMatrix& j);

struct RQIParams {
  ComplexMatrix h_s;   // system Hamiltonian on h
  ComplexMatrix h_p;   // particle Hamiltonian on k^
  ComplexMatrix v_d;   // dipole term h -> h (x) k
  ComplexMatrix h_sc;  // scattering term on h (x) k

  Index dim_h() const { return h_s.rows(); }
  Index dim_k() const { return h_p.rows() - 1; }
  void validate() const;
  /// <0^, H_P 0^>.
  double omega() const;
  static RQIParams zero(Index dim_h, Index dim_k);
};

/// H_S (x) I + I (x) H_P + (1/h)[[0, sqrt(h) V*], [sqrt(h) V, H_Sc]].
BlockOperator rqi_total(const RQIParams& p, double h);

/// Limit parameters (-iH, L, W) with H = H_S + omega I - i V* e(-iH_Sc) V,
/// L = -i e1(-iH_Sc) V, W = e0(-iH_Sc).
GeneratorParams rqi_limit_params(const RQIParams& p);

/// -i [[H_S + omega I, V*], [V, H_Sc]].
BlockOperator rqi_q(const RQIParams& p);

/// G(h) = exp(-i h H_T(h)); limit F_{-iH, L, W}.
GeneratorFamily rqi_family(const RQIParams& p);

struct BipartiteFamily {
  GeneratorFamily family;           // G_1(h) G_2(h), limit F_1 <| F_2
  std::function<BlockOperator(double)> first;   // I_2 (x)~ G^(1)(h)
  std::function<BlockOperator(double)> second;  // I_1 (x) G^(2)(h)
  BlockOperator f1;                 // ampliated limits
  BlockOperator f2;
};

/// Two repeated-interaction systems on h_1 and h_2 sharing the noise.
BipartiteFamily bipartite_family(const RQIParams& p1, const RQIParams& p2);

/// Closed-form (H, L, W) of F_1 <| F_2, returned as (-iH, L, W).
GeneratorParams bipartite_closed_form(const RQIParams& p1, const RQIParams& p2);

/// Without scattering on either side: the vacuum block K and the noise
/// components L_j of F_1 <| F_2 from the coordinate components
/// V_j = (I (x) <e_j|) V^(1), W_j = (I (x) <e_j|) V^(2).
struct NoScatteringCoordinates {
  ComplexMatrix k;
  std::vector<ComplexMatrix> l;
};
NoScatteringCoordinates bipartite_no_scattering_coordinates(const RQIParams& p1,
                                                            const RQIParams& p2);

/// Constant family G = I (+) C with limit [[0, 0], [0, C - I]].
GeneratorFamily preservation_family(const ComplexMatrix& c, Index dim_h);

}  // namespace qwc
