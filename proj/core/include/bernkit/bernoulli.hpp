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
#include "bernkit/series.hpp"

namespace bernkit {

/// Append-only table of Bernoulli numbers B_0, B_1, ... computed by the
/// classical recurrence sum_{j=0}^{n} C(n+1, j) B_j = 0 with B_0 = 1.
/// The recurrence route is the reference oracle: it depends on nothing
/// else in this library. Extension is single-writer; reads of already
/// computed entries may run concurrently with each other.
class BernoulliTable {
 public:
  /// Extends the table through index n if needed and returns B_n.
  const BigRational& at(std::size_t n) {
    ensure(n);
    return values_[n];
  }
  void ensure(std::size_t n);
  std::size_t size() const { return values_.size(); }

 private:
  std::vector<BigRational> values_;
};

/// B_n via a process-wide cached table (thread-safe).
BigRational bernoulli_oracle(unsigned n);

/// Bernoulli polynomial B_n(x) = sum_k C(n,k) B_k x^{n-k}.
/// Monic of degree n; B_n(0) = B_n.
DensePoly bernoulli_polynomial(unsigned n);

/// Coefficient a_{2n-1} = 2^{2n} B_{2n} / (2n)! of z^{2n-1} in the
/// expansion of coth z - 1/z. Requires n >= 1.
BigRational coth_coefficient(unsigned n);

/// z / (e^z - 1) as an exact truncated series; coefficient of z^k is B_k/k!.
TruncatedSeries<BigRational> bernoulli_egf(std::size_t order);

/// coth z - 1/z as an exact truncated series (odd powers only), built from
/// (z/2) coth(z/2) = z/2 + z/(e^z - 1) via series division. Second route
/// for the coth coefficients, independent of the closed form above.
TruncatedSeries<BigRational> coth_minus_pole(std::size_t order);

}  // namespace bernkit
