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
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bernkit/polynomial.hpp"

namespace bernkit {

/// Formal power series truncated at a fixed order N: sum of c_k z^k for
/// k = 0..N, with exact coefficients in a ring C (rationals, or polynomials
/// for series whose coefficients carry a second indeterminate).
/// Arithmetic is exact and closed at the truncation order.
template <typename C>
class TruncatedSeries {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  explicit TruncatedSeries(std::size_t order) : c_(order + 1) {}
  TruncatedSeries(std::size_t order, std::vector<C> cs) : c_(std::move(cs)) {
    c_.resize(order + 1);
  }

  std::size_t order() const { return c_.size() - 1; }
  const C& operator[](std::size_t k) const { return c_.at(k); }
  void set(std::size_t k, const C& v) { c_.at(k) = v; }

  /// Index of the first nonzero coefficient; npos if identically zero.
  std::size_t valuation() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
      if (!(c_[k] == C{})) return k;
    return npos;
  }

  TruncatedSeries operator-() const {
    TruncatedSeries r(order());
    for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] = -c_[k];
    return r;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.order(), b.order()));
    for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = a.c_[k] + b.c_[k];
    return r;
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.order(), b.order()));
    for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = a.c_[k] - b.c_[k];
    return r;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i < r.c_.size(); ++i)
      for (std::size_t j = 0; i + j < r.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    return r;
  }

  bool operator==(const TruncatedSeries&) const = default;

 private:
  std::vector<C> c_;
};

/// Exact quotient of truncated series. A common leading power of z is
/// cancelled first, so quotients like z / (e^z - 1) are well defined; the
/// result order drops by the cancelled power. Dividing by a series whose
/// constant term is still zero after cancellation (or by the zero series)
/// throws "non-unit divisor". Requires exact division on C.
template <typename C>
TruncatedSeries<C> series_divide(const TruncatedSeries<C>& num, const TruncatedSeries<C>& den) {
  const std::size_t vden = den.valuation();
  if (vden == TruncatedSeries<C>::npos)
    throw std::domain_error("series_divide: non-unit divisor");
  if (vden > 0) {
    const std::size_t vnum = num.valuation();
    if (vnum != TruncatedSeries<C>::npos && vnum < vden)
      throw std::domain_error("series_divide: non-unit divisor");
    if (vden > std::min(num.order(), den.order()))
      throw std::domain_error("series_divide: non-unit divisor");
  }
  const std::size_t n = std::min(num.order(), den.order()) - vden;
  TruncatedSeries<C> q(n);
  for (std::size_t k = 0; k <= n; ++k) {
    C acc = num[k + vden];
    for (std::size_t j = 1; j <= k; ++j) acc -= den[j + vden] * q[k - j];
    q.set(k, acc / den[vden]);
  }
  return q;
}

}  // namespace bernkit
