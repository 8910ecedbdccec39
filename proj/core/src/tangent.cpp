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

#include "bernkit/tangent.hpp"

#include <mutex>
#include <stdexcept>

#include "bernkit/bernoulli.hpp"
#include "bernkit/series.hpp"

namespace bernkit {

namespace {
const DensePoly& one_minus_square() {
  static const DensePoly p{1, 0, -1};
  return p;
}
}  // namespace

void TangentSeq::ensure(std::size_t n) {
  if (polys_.empty()) polys_.push_back(DensePoly{0, 1});
  for (std::size_t k = polys_.size(); k <= n; ++k)
    polys_.push_back(one_minus_square() * polys_[k - 1].derivative());
}

DensePoly tangent_poly(unsigned n) {
  static TangentSeq seq;
  static std::mutex mu;
  std::scoped_lock lock(mu);
  return seq.at(n);
}

BigInt tangent_number(unsigned m) {
  if (m < 1) throw std::domain_error("tangent_number: requires m >= 1");
  const BigRational c = tangent_poly(2 * m - 1).coeff(0);
  return c.sign() < 0 ? BigInt(-c.num()) : c.num();
}

SeriesIdentityReport verify_tangent_generating_function(unsigned order) {
  using PolySeries = TruncatedSeries<DensePoly>;
  PolySeries lhs(order), cosh_side(order), sinh_side(order);
  for (unsigned k = 0; k <= order; ++k) {
    const BigRational inv_fact(1, factorial(k));
    lhs.set(k, tangent_poly(k) * inv_fact);
    // cosh z + x sinh z and sinh z + x cosh z alternate 1 and x.
    cosh_side.set(k, k % 2 == 0 ? DensePoly{inv_fact} : DensePoly{0, inv_fact});
    sinh_side.set(k, k % 2 == 0 ? DensePoly{0, inv_fact} : DensePoly{inv_fact});
  }
  const PolySeries product = lhs * cosh_side;
  SeriesIdentityReport report;
  report.coeff_ok.resize(order + 1);
  report.pass = true;
  for (unsigned k = 0; k <= order; ++k) {
    report.coeff_ok[k] = (product[k] == sinh_side[k]);
    report.pass = report.pass && report.coeff_ok[k];
  }
  return report;
}

BigRational bernoulli_via_tangent(unsigned m) {
  if (m <= 1) throw std::domain_error("bernoulli_via_tangent: out of lemma range");
  return tangent_poly(m - 1).definite_integral(-1, 1) / BigRational(pow2(m + 1));
}

bool verify_tangent_integral_identity(unsigned n) {
  if (n < 1) throw std::domain_error("verify_tangent_integral_identity: requires n >= 1");
  const DensePoly t = tangent_poly(n);
  const BigRational lhs = t.definite_integral(-1, 1);
  const BigRational rhs = BigRational(2 * n + 2, pow2(n + 1) - 1) * t.coeff(0);
  return lhs == rhs;
}

OddFractionDecomposition odd_fraction_decomposition(unsigned n) {
  if (n < 1) throw std::domain_error("odd_fraction_decomposition: requires n >= 1");
  const DensePoly t = tangent_poly(2 * n - 1);  // even polynomial of degree 2n
  OddFractionDecomposition out;
  BigRational sum;
  for (unsigned i = 0; i <= n; ++i) {
    const BigRational& c = t.coeff(2 * i);
    out.numerators.push_back(c.num());
    sum += c / BigRational(static_cast<long>(2 * i + 1));
  }
  out.value = sum / BigRational(pow2(2 * n));
  return out;
}

bool verify_parts_reduction(unsigned m) {
  if (m < 1) throw std::domain_error("verify_parts_reduction: requires m >= 1");
  const auto [q, r] = tangent_poly(m).divrem(one_minus_square());
  if (!r.is_zero())
    throw std::runtime_error("verify_parts_reduction: (1-y^2) does not divide T_m; recurrence bug");
  // T_m^2/(1-y^2) = q^2 (1-y^2), a polynomial.
  const BigRational lhs = (q * q * one_minus_square()).definite_integral(-1, 1);
  const BigRational rhs = tangent_poly(2 * m - 1).definite_integral(-1, 1);
  return (m % 2 == 1 ? lhs : -lhs) == rhs;
}

}  // namespace bernkit
