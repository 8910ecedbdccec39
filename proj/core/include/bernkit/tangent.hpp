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

#include <cstddef>
#include <vector>

#include "bernkit/polynomial.hpp"
#include "bernkit/rational.hpp"

namespace bernkit {

/// The polynomials T_n defined by T_0(x) = x and T_n = (1 - x^2) T_{n-1}'.
/// T_n expresses the n-th derivative of tanh in terms of y = tanh x, so
/// T_{k+1}(tanh x) = (sech^2 x)^{(k)}. Integer coefficients, degree n + 1,
/// leading coefficient (-1)^n n!, parity T_n(-x) = (-1)^{n-1} T_n(x) for
/// n >= 1, and T_n(1) = 0 for n >= 1.
class TangentSeq {
 public:
  const DensePoly& at(std::size_t n) {
    ensure(n);
    return polys_[n];
  }
  void ensure(std::size_t n);
  std::size_t size() const { return polys_.size(); }

 private:
  std::vector<DensePoly> polys_;
};

/// T_n via a process-wide cached sequence (thread-safe).
DensePoly tangent_poly(unsigned n);

/// Tangent number |T_{2m-1}(0)| for m >= 1.
BigInt tangent_number(unsigned m);

/// Per-coefficient outcome of the cleared-denominator generating-function
/// identity (sum_{n<=order} T_n(x) z^n/n!) * (cosh z + x sinh z) =
/// sinh z + x cosh z, checked exactly in z up to z^order with polynomial
/// coefficients in x.
struct SeriesIdentityReport {
  bool pass = false;
  std::vector<bool> coeff_ok;  // index = power of z
};
SeriesIdentityReport verify_tangent_generating_function(unsigned order);

/// Exact B_m = 2^{-(m+1)} * integral of T_{m-1} over [-1, 1], valid for
/// m > 1 (odd m gives 0 by parity). Throws "out of lemma range" for m <= 1.
BigRational bernoulli_via_tangent(unsigned m);

/// Checks integral of T_n over [-1, 1] == (2n+2)/(2^{n+1} - 1) * T_n(0)
/// exactly; both sides vanish for even n.
bool verify_tangent_integral_identity(unsigned n);

/// Coefficients k_i of y^{2i} in T_{2n-1} together with the reconstruction
/// 2^{-2n} * sum_i k_i/(2i+1), which equals B_{2n}.
struct OddFractionDecomposition {
  std::vector<BigInt> numerators;  // k_0 .. k_n
  BigRational value;
};
OddFractionDecomposition odd_fraction_decomposition(unsigned n);

/// Checks the integration-by-parts reduction in the y variable:
/// (-1)^{m-1} * integral of T_m(y)^2/(1-y^2) over [-1, 1] equals the
/// integral of T_{2m-1}(y). The left integrand is polynomial because
/// (1-y^2) divides T_m for m >= 1; a failed division throws, since it
/// would mean the recurrence is broken.
bool verify_parts_reduction(unsigned m);

}  // namespace bernkit
