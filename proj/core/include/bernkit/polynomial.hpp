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
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bernkit/rational.hpp"

namespace bernkit {

/// Dense univariate polynomial over a commutative ring C.
///
/// coeffs[i] is the coefficient of x^i. The zero polynomial stores no
/// coefficients; otherwise the highest stored coefficient is nonzero.
/// C must be default-constructible to its zero and support +, -, *, ==.
/// Field-only members (divrem, definite_integral) instantiate lazily and
/// require exact division on C.
template <typename C>
class PolynomialT {
 public:
  PolynomialT() = default;
  PolynomialT(std::initializer_list<C> cs) : c_(cs) { normalize(); }
  explicit PolynomialT(std::vector<C> cs) : c_(std::move(cs)) { normalize(); }
  explicit PolynomialT(const C& constant) : c_{constant} { normalize(); }

  static PolynomialT monomial(const C& coeff, std::size_t degree) {
    std::vector<C> v(degree + 1);
    v[degree] = coeff;
    return PolynomialT(std::move(v));
  }
  static PolynomialT one() { return PolynomialT(C(1)); }

  /// Degree; -1 for the zero polynomial.
  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  const std::vector<C>& coeffs() const { return c_; }

  const C& coeff(std::size_t i) const {
    static const C kZero{};
    return i < c_.size() ? c_[i] : kZero;
  }
  const C& leading() const {
    if (c_.empty()) throw std::domain_error("PolynomialT: zero polynomial has no leading coefficient");
    return c_.back();
  }

  PolynomialT operator-() const {
    std::vector<C> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
    return PolynomialT(std::move(v));
  }

  friend PolynomialT operator+(const PolynomialT& a, const PolynomialT& b) {
    std::vector<C> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return PolynomialT(std::move(v));
  }
  friend PolynomialT operator-(const PolynomialT& a, const PolynomialT& b) {
    std::vector<C> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
    return PolynomialT(std::move(v));
  }
  friend PolynomialT operator*(const PolynomialT& a, const PolynomialT& b) {
    if (a.is_zero() || b.is_zero()) return PolynomialT();
    std::vector<C> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return PolynomialT(std::move(v));
  }
  friend PolynomialT operator*(const PolynomialT& p, const C& s) {
    std::vector<C> v(p.c_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = p.c_[i] * s;
    return PolynomialT(std::move(v));
  }
  friend PolynomialT operator*(const C& s, const PolynomialT& p) { return p * s; }

  PolynomialT& operator+=(const PolynomialT& o) { return *this = *this + o; }
  PolynomialT& operator-=(const PolynomialT& o) { return *this = *this - o; }
  PolynomialT& operator*=(const PolynomialT& o) { return *this = *this * o; }

  bool operator==(const PolynomialT&) const = default;

  PolynomialT derivative() const {
    if (c_.size() <= 1) return PolynomialT();
    std::vector<C> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * C(static_cast<long>(i));
    return PolynomialT(std::move(v));
  }

  C evaluate(const C& x) const {
    C acc{};
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  PolynomialT compose(const PolynomialT& inner) const {
    PolynomialT acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * inner + PolynomialT(c_[i]);
    return acc;
  }

  PolynomialT pow(unsigned k) const {
    PolynomialT acc = one();
    for (unsigned i = 0; i < k; ++i) acc = acc * *this;
    return acc;
  }

  /// Exact definite integral over [a, b]. Requires division by integers on C.
  C definite_integral(const C& a, const C& b) const {
    C acc{};
    C pa = a, pb = b;  // running powers a^{i+1}, b^{i+1}
    for (std::size_t i = 0; i < c_.size(); ++i) {
      acc += c_[i] * (pb - pa) / C(static_cast<long>(i + 1));
      pa = pa * a;
      pb = pb * b;
    }
    return acc;
  }

  /// Euclidean division: returns (quotient, remainder) with
  /// deg(remainder) < deg(divisor). Requires field coefficients.
  std::pair<PolynomialT, PolynomialT> divrem(const PolynomialT& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("PolynomialT: division by zero polynomial");
    PolynomialT q, r = *this;
    while (!r.is_zero() && r.deg() >= divisor.deg()) {
      const std::size_t shift = static_cast<std::size_t>(r.deg() - divisor.deg());
      const C factor = r.leading() / divisor.leading();
      const PolynomialT t = monomial(factor, shift);
      q += t;
      r -= t * divisor;
    }
    return {q, r};
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == C{}) c_.pop_back();
  }
  std::vector<C> c_;
};

using DensePoly = PolynomialT<BigRational>;

/// Coefficient array in the canonical "p/q" form, ascending degree.
inline std::vector<std::string> coefficient_strings(const DensePoly& p) {
  std::vector<std::string> out;
  out.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out.push_back(p.coeff(i).to_string());
  return out;
}

/// Human-readable rendering, e.g. "-2 + 8*y^2 - 6*y^4".
inline std::string format_polynomial(const DensePoly& p, std::string_view var = "x") {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const BigRational& c = p.coeff(i);
    if (c.is_zero()) continue;
    const BigRational a = c.abs();
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    const std::string mag = a.is_integer() ? a.num().get_str() : a.to_string();
    if (i == 0) {
      out += mag;
    } else {
      if (!(a == BigRational(1))) out += mag + "*";
      out += std::string(var);
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const DensePoly& p) {
  return os << format_polynomial(p);
}

}  // namespace bernkit
