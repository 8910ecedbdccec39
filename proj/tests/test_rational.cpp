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

#include <cmath>
#include <cstdint>
#include <random>
#include <string>

#include "bernkit/rational.hpp"

using bernkit::BigInt;
using bernkit::BigRational;

namespace {

// Independent oracle: exact fraction arithmetic on 64-bit components via
// 128-bit cross multiplication. Never touches the library's number types.
struct Frac128 {
  __int128 n;
  __int128 d;  // > 0, gcd(|n|, d) = 1
};

unsigned __int128 gcd_u(unsigned __int128 a, unsigned __int128 b) {
  while (b != 0) {
    const unsigned __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Frac128 canon(__int128 n, __int128 d) {
  REQUIRE(d != 0);
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) return {0, 1};
  const unsigned __int128 an = n < 0 ? static_cast<unsigned __int128>(-n)
                                     : static_cast<unsigned __int128>(n);
  const auto g = static_cast<__int128>(gcd_u(an, static_cast<unsigned __int128>(d)));
  return {n / g, d / g};
}

std::string i128_str(__int128 v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  unsigned __int128 u =
      neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  std::string s;
  while (u != 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  return neg ? "-" + s : s;
}

std::string frac_str(const Frac128& f) { return i128_str(f.n) + "/" + i128_str(f.d); }

}  // namespace

TEST_SUITE("rational") {

TEST_CASE("canonical form at construction") {
  CHECK(BigRational(6, -4).to_string() == "-3/2");
  CHECK(BigRational(0, 7).to_string() == "0/1");
  CHECK(BigRational(-10, -5).to_string() == "2/1");
  CHECK(BigRational().to_string() == "0/1");
  CHECK(BigRational(5).to_string() == "5/1");
  CHECK_THROWS_AS(BigRational(1, 0), std::domain_error);
}

TEST_CASE("parsing") {
  CHECK(BigRational::from_string("-3/7") == BigRational(-3, 7));
  CHECK(BigRational::from_string("0/1").is_zero());
  CHECK(BigRational::from_string("42") == BigRational(42));
  CHECK(BigRational::from_string("6/-4") == BigRational(-3, 2));
  CHECK_THROWS_AS(BigRational::from_string("x/y"), std::invalid_argument);
  CHECK_THROWS_AS(BigRational::from_string("1/0"), std::domain_error);
}

TEST_CASE("arithmetic agrees with the 128-bit cross-multiplication oracle") {
  std::mt19937_64 rng(20260810);
  std::uniform_int_distribution<std::int64_t> dist(INT64_MIN + 1, INT64_MAX);
  for (int iter = 0; iter < 1000; ++iter) {
    const std::int64_t a = dist(rng);
    std::int64_t b = dist(rng);
    const std::int64_t c = dist(rng);
    std::int64_t d = dist(rng);
    if (b == 0) b = 1;
    if (d == 0) d = 1;
    const BigRational x(a, b), y(c, d);
    const Frac128 fx = canon(a, b), fy = canon(c, d);

    CHECK((x + y).to_string() == frac_str(canon(fx.n * fy.d + fy.n * fx.d, fx.d * fy.d)));
    CHECK((x - y).to_string() == frac_str(canon(fx.n * fy.d - fy.n * fx.d, fx.d * fy.d)));
    CHECK((x * y).to_string() == frac_str(canon(fx.n * fy.n, fx.d * fy.d)));
    if (fy.n != 0) CHECK((x / y).to_string() == frac_str(canon(fx.n * fy.d, fx.d * fy.n)));
  }
}

TEST_CASE("serialization round trip") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> dist(-1000000, 1000000);
  for (int iter = 0; iter < 200; ++iter) {
    std::int64_t d = dist(rng);
    if (d == 0) d = 3;
    const BigRational r(dist(rng), d);
    CHECK(BigRational::from_string(r.to_string()) == r);
  }
}

TEST_CASE("comparisons and sign") {
  CHECK(BigRational(1, 3) < BigRational(1, 2));
  CHECK(BigRational(-1, 3) > BigRational(-1, 2));
  CHECK(BigRational(2, 4) == BigRational(1, 2));
  CHECK(BigRational(-5, 3).sign() == -1);
  CHECK(BigRational().sign() == 0);
  CHECK(BigRational(-5, 3).abs() == BigRational(5, 3));
}

TEST_CASE("decimal rendering and float conversion") {
  CHECK(BigRational(1, 4).to_decimal_string(3) == "0.250");
  CHECK(BigRational(-1, 3).to_decimal_string(6) == "-0.333333");
  CHECK(BigRational(2, 3).to_decimal_string(3) == "0.667");
  CHECK(BigRational(1, 6).to_double() == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  const long double v = BigRational(-691, 2730).to_long_double();
  CHECK(std::abs(v - (-691.0L / 2730.0L)) < 1e-18L);
}

TEST_CASE("integer helpers") {
  CHECK(bernkit::pow2(10) == 1024);
  CHECK(bernkit::factorial(6) == 720);
  CHECK(bernkit::binomial(10, 4) == 210);
}

}  // TEST_SUITE
