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

#include <doctest.h>

#include "bernkit/bernoulli.hpp"

using bernkit::BernoulliTable;
using bernkit::bernoulli_oracle;
using bernkit::bernoulli_polynomial;
using bernkit::BigRational;
using bernkit::DensePoly;

TEST_SUITE("bernoulli") {

TEST_CASE("classical values") {
  CHECK(bernoulli_oracle(0) == BigRational(1));
  CHECK(bernoulli_oracle(1) == BigRational(-1, 2));
  CHECK(bernoulli_oracle(2) == BigRational(1, 6));
  CHECK(bernoulli_oracle(4) == BigRational(-1, 30));
  CHECK(bernoulli_oracle(6) == BigRational(1, 42));
  CHECK(bernoulli_oracle(8) == BigRational(-1, 30));
  CHECK(bernoulli_oracle(10) == BigRational(5, 66));
  CHECK(bernoulli_oracle(12) == BigRational(-691, 2730));
  CHECK(bernoulli_oracle(7).is_zero());
}

TEST_CASE("odd entries vanish past the first") {
  for (unsigned n = 3; n <= 41; n += 2) CHECK(bernoulli_oracle(n).is_zero());
}

TEST_CASE("even entries alternate in sign") {
  for (unsigned m = 1; m <= 15; ++m) {
    const BigRational b = bernoulli_oracle(2 * m);
    CHECK((m % 2 == 1 ? b : -b).sign() == 1);
  }
}

TEST_CASE("table extends incrementally") {
  BernoulliTable t;
  CHECK(t.at(4) == BigRational(-1, 30));
  CHECK(t.size() == 5);
  CHECK(t.at(2) == BigRational(1, 6));  // no re-extension needed
  CHECK(t.at(12) == BigRational(-691, 2730));
}

TEST_CASE("generating function route matches the recurrence") {
  const auto egf = bernkit::bernoulli_egf(20);
  for (unsigned k = 0; k <= 20; ++k)
    CHECK(egf[k] == bernoulli_oracle(k) / BigRational(bernkit::factorial(k)));
}

TEST_CASE("polynomials: low-degree closed forms") {
  CHECK(bernoulli_polynomial(0) == DensePoly{1});
  CHECK(bernoulli_polynomial(1) == DensePoly{BigRational(-1, 2), BigRational(1)});
  CHECK(bernoulli_polynomial(2) ==
        DensePoly{BigRational(1, 6), BigRational(-1), BigRational(1)});
}

TEST_CASE("polynomials: monic with constant term B_n") {
  for (unsigned n = 0; n <= 20; ++n) {
    const DensePoly p = bernoulli_polynomial(n);
    CHECK(p.deg() == static_cast<int>(n));
    CHECK(p.leading() == BigRational(1));
    CHECK(p.coeff(0) == bernoulli_oracle(n));
  }
}

TEST_CASE("reflection symmetry") {
  const DensePoly mirror{1, -1};  // 1 - x
  for (unsigned n = 0; n <= 30; ++n) {
    const DensePoly p = bernoulli_polynomial(n);
    const DensePoly lhs = p.compose(mirror);
    CHECK(lhs == (n % 2 == 0 ? p : -p));
  }
}

TEST_CASE("second derivative steps down by two") {
  for (unsigned m = 0; m <= 12; ++m) {
    const unsigned n = 2 * m + 2;
    const DensePoly lhs = bernoulli_polynomial(n).derivative().derivative();
    const DensePoly rhs =
        bernoulli_polynomial(2 * m) * BigRational(static_cast<long>(n * (n - 1)));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("coth coefficients: closed form") {
  CHECK(bernkit::coth_coefficient(1) == BigRational(1, 3));
  CHECK(bernkit::coth_coefficient(2) == BigRational(-1, 45));
  CHECK(bernkit::coth_coefficient(3) == BigRational(2, 945));
  CHECK_THROWS_AS(bernkit::coth_coefficient(0), std::domain_error);
}

TEST_CASE("coth coefficients: series route agrees") {
  const auto s = bernkit::coth_minus_pole(25);
  for (unsigned n = 1; n <= 12; ++n)
    CHECK(s[2 * n - 1] == bernkit::coth_coefficient(n));
  // even coefficients vanish
  for (std::size_t k = 0; k <= 24; k += 2) CHECK(s[k].is_zero());
}

}  // TEST_SUITE
