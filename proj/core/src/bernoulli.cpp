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

#include "bernkit/bernoulli.hpp"

#include <mutex>
#include <stdexcept>

namespace bernkit {

void BernoulliTable::ensure(std::size_t n) {
  if (values_.empty()) values_.push_back(BigRational(1));
  for (std::size_t k = values_.size(); k <= n; ++k) {
    // B_k = -1/(k+1) * sum_{j<k} C(k+1, j) B_j
    BigRational acc;
    for (std::size_t j = 0; j < k; ++j) acc += BigRational(binomial(k + 1, j)) * values_[j];
    values_.push_back(-acc / BigRational(static_cast<long>(k + 1)));
  }
}

BigRational bernoulli_oracle(unsigned n) {
  static BernoulliTable table;
  static std::mutex mu;
  std::scoped_lock lock(mu);
  return table.at(n);
}

DensePoly bernoulli_polynomial(unsigned n) {
  std::vector<BigRational> coeffs(n + 1);
  for (unsigned k = 0; k <= n; ++k)
    coeffs[n - k] = BigRational(binomial(n, k)) * bernoulli_oracle(k);
  return DensePoly(std::move(coeffs));
}

BigRational coth_coefficient(unsigned n) {
  if (n < 1) throw std::domain_error("coth_coefficient: requires n >= 1");
  return BigRational(pow2(2 * n)) * bernoulli_oracle(2 * n) / BigRational(factorial(2 * n));
}

TruncatedSeries<BigRational> bernoulli_egf(std::size_t order) {
  // Build numerator z and denominator e^z - 1 one order higher so the
  // quotient, after cancelling the shared factor z, still reaches `order`.
  TruncatedSeries<BigRational> num(order + 1), den(order + 1);
  num.set(1, 1);
  for (std::size_t k = 1; k <= order + 1; ++k) den.set(k, BigRational(1, factorial(k)));
  return series_divide(num, den);
}

TruncatedSeries<BigRational> coth_minus_pole(std::size_t order) {
  // w coth w = w + 2w/(e^{2w} - 1); strip the constant 1 and divide by w.
  const std::size_t n = order + 2;
  TruncatedSeries<BigRational> num(n), den(n);
  num.set(1, 2);
  for (std::size_t k = 1; k <= n; ++k) den.set(k, BigRational(pow2(k), factorial(k)));
  TruncatedSeries<BigRational> s = series_divide(num, den);  // order n-1
  s.set(1, s[1] + BigRational(1));                           // s = w coth w
  TruncatedSeries<BigRational> out(order);
  for (std::size_t k = 0; k <= order; ++k) out.set(k, s[k + 1]);
  return out;
}

}  // namespace bernkit
