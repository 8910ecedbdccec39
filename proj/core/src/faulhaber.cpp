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

#include "bernkit/faulhaber.hpp"

#include <stdexcept>

#include "bernkit/bernoulli.hpp"

namespace bernkit {

FaulhaberPoly faulhaber_from_bernoulli(unsigned m) {
  if (m < 1) throw std::domain_error("faulhaber_from_bernoulli: requires m >= 1");
  const unsigned n = 2 * m + 2;
  const DensePoly shifted = bernoulli_polynomial(n).compose(DensePoly{1, 1});
  DensePoly residual = shifted - DensePoly{bernoulli_oracle(n)};

  const DensePoly lambda{0, BigRational(1, 2), BigRational(1, 2)};  // (x^2 + x)/2
  std::vector<DensePoly> basis(m + 2);
  basis[0] = DensePoly::one();
  for (unsigned k = 1; k <= m + 1; ++k) basis[k] = basis[k - 1] * lambda;

  const BigRational scale(static_cast<long>(n));
  FaulhaberPoly f;
  f.m = m;
  f.alphas.assign(m, BigRational());
  for (unsigned k = m + 1; k >= 2; --k) {
    const BigRational alpha = residual.coeff(2 * k) / (scale * basis[k].coeff(2 * k));
    f.alphas[k - 2] = alpha;
    residual -= basis[k] * (alpha * scale);
  }
  if (!residual.is_zero())
    throw std::runtime_error("faulhaber_from_bernoulli: relation (2) inversion failed");
  return f;
}

bool verify_alpha2(unsigned m) {
  const FaulhaberPoly f = faulhaber_from_bernoulli(m);
  return f.alphas.at(0) == BigRational(static_cast<long>(2 * (2 * m + 1))) * bernoulli_oracle(2 * m);
}

}  // namespace bernkit
