/*
 * Copyright 2026 The bernkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <vector>

#include "bernkit/polynomial.hpp"
#include "bernkit/rational.hpp"

namespace bernkit {

/// Faulhaber polynomial F_m(l) = a_2 l^2 + ... + a_{m+1} l^{m+1}, the unique
/// polynomial with no constant or linear term satisfying
/// B_{2m+2}(x+1) = (2m+2) F_m((x^2+x)/2) + B_{2m+2}.
struct FaulhaberPoly {
  unsigned m = 0;
  std::vector<BigRational> alphas;  // alphas[i] = a_{i+2}, i = 0..m-1

  /// F_m as a polynomial in l.
  DensePoly as_poly() const {
    std::vector<BigRational> c(m + 2);
    for (unsigned i = 0; i < alphas.size(); ++i) c[i + 2] = alphas[i];
    return DensePoly(std::move(c));
  }
};

/// Extracts F_m from B_{2m+2}(x+1) - B_{2m+2} by peeling coefficients from
/// the top: the basis polynomial ((x^2+x)/2)^k has degree 2k and leading
/// coefficient 2^{-k}, so matching the x^{2k} coefficient of the residual
/// determines a_k, which is subtracted before descending to k-1. The final
/// residual must vanish identically (this also proves the absence of
/// constant and linear terms); otherwise "relation (2) inversion failed"
/// is thrown. Requires m >= 1.
FaulhaberPoly faulhaber_from_bernoulli(unsigned m);

/// Checks a_2 = 2(2m+1) B_{2m} exactly.
bool verify_alpha2(unsigned m);

}  // namespace bernkit
