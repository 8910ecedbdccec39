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
#include "bernkit/faulhaber.hpp"

using bernkit::BigRational;
using bernkit::DensePoly;
using bernkit::faulhaber_from_bernoulli;

TEST_SUITE("faulhaber") {

TEST_CASE("first polynomials") {
  const auto f1 = faulhaber_from_bernoulli(1);
  REQUIRE(f1.alphas.size() == 1);
  CHECK(f1.alphas[0] == BigRational(1));
  CHECK(f1.as_poly() == DensePoly{0, 0, 1});  // l^2

  const auto f2 = faulhaber_from_bernoulli(2);
  REQUIRE(f2.alphas.size() == 2);
  CHECK(f2.alphas[0] == BigRational(-1, 3));
  CHECK(f2.alphas[1] == BigRational(4, 3));  // (4 l^3 - l^2)/3

  const auto f3 = faulhaber_from_bernoulli(3);
  CHECK(f3.alphas[0] == BigRational(1, 3));  // 2*7*B_6

  CHECK_THROWS_AS(faulhaber_from_bernoulli(0), std::domain_error);
}

TEST_CASE("inversion round-trips exactly") {
  const DensePoly lambda{0, BigRational(1, 2), BigRational(1, 2)};
  for (unsigned m = 1; m <= 12; ++m) {
    const auto f = faulhaber_from_bernoulli(m);
    const unsigned n = 2 * m + 2;
    const DensePoly reconstructed =
        f.as_poly().compose(lambda) * BigRational(static_cast<long>(n)) +
        DensePoly{bernkit::bernoulli_oracle(n)};
    CHECK(reconstructed == bernkit::bernoulli_polynomial(n).compose(DensePoly{1, 1}));
  }
}

TEST_CASE("quadratic coefficient identity") {
  for (unsigned m = 1; m <= 12; ++m) CHECK(bernkit::verify_alpha2(m));
  // spot value at m = 6 against B_12
  const auto f6 = faulhaber_from_bernoulli(6);
  CHECK(f6.alphas[0] == BigRational(26) * BigRational(-691, 2730));
}

TEST_CASE("degree structure") {
  for (unsigned m = 1; m <= 12; ++m) {
    const auto f = faulhaber_from_bernoulli(m);
    CHECK(f.alphas.size() == m);                 // l^2 .. l^{m+1}
    CHECK_FALSE(f.alphas.back().is_zero());      // top coefficient present
    CHECK(f.as_poly().deg() == static_cast<int>(m) + 1);
    CHECK(f.as_poly().coeff(0).is_zero());
    CHECK(f.as_poly().coeff(1).is_zero());
  }
}

}  // TEST_SUITE
