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

#include <gmpxx.h>

#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bernkit {

using BigInt = mpz_class;

/// Exact arbitrary-precision rational scalar.
///
/// Values are canonical at every observation point: the denominator is
/// positive, gcd(|numerator|, denominator) = 1, and zero is stored as 0/1.
/// Canonicalization happens at construction; arithmetic preserves it.
/// Immutable-in-spirit value type, safe for concurrent reads.
class BigRational {
 public:
  BigRational() : q_(0) {}
  BigRational(long n) : q_(n) {}                            // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& n) : q_(n) {}                   // NOLINT(google-explicit-constructor)
  BigRational(long num, long den) : BigRational(BigInt(num), BigInt(den)) {}
  BigRational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("BigRational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  /// Parses "p/q" or a bare integer "p". Signs are canonicalized onto the
  /// numerator. Throws std::invalid_argument on malformed input and
  /// std::domain_error on a zero denominator.
  static BigRational from_string(std::string_view s) {
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return BigRational(BigInt(std::string(s)));
    return BigRational(BigInt(std::string(s.substr(0, slash))),
                       BigInt(std::string(s.substr(slash + 1))));
  }

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }
  bool is_zero() const { return q_ == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  BigRational operator-() const { return BigRational(raw_tag{}, mpq_class(-q_)); }
  BigRational abs() const { return sign() < 0 ? -*this : *this; }

  BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
  BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
  BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
  BigRational& operator/=(const BigRational& o) {
    if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const BigRational& a, const BigRational& b) { return a.q_ != b.q_; }
  friend bool operator<(const BigRational& a, const BigRational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const BigRational& a, const BigRational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const BigRational& a, const BigRational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const BigRational& a, const BigRational& b) { return a.q_ >= b.q_; }

  /// Canonical serialization: always "p/q", sign on p ("0/1", "5/1", "-3/7").
  std::string to_string() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  /// Fixed-point decimal with `frac_digits` digits after the point,
  /// correctly rounded (ties away from zero).
  std::string to_decimal_string(unsigned frac_digits = 20) const {
    BigInt n = q_.get_num();
    const BigInt d = q_.get_den();
    const bool neg = n < 0;
    if (neg) n = -n;
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_digits);
    // round(n * scale / d)
    BigInt scaled = n * scale;
    BigInt quot, rem;
    mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(), d.get_mpz_t());
    if (rem * 2 >= d) quot += 1;
    BigInt ip = quot / scale;
    BigInt fp = quot % scale;
    std::string frac = fp.get_str();
    frac.insert(0, frac_digits - frac.size(), '0');
    return (neg && (ip != 0 || fp != 0) ? "-" : "") + ip.get_str() + "." + frac;
  }

  double to_double() const { return q_.get_d(); }
  long double to_long_double() const {
    return std::strtold(to_decimal_string(40).c_str(), nullptr);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& r) {
    return os << r.to_string();
  }

 private:
  struct raw_tag {};
  BigRational(raw_tag, mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;  // kept canonical
};

inline BigInt pow2(unsigned long k) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
  return r;
}

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace bernkit
