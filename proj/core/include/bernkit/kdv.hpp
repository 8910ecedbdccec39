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

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bernkit/polynomial.hpp"
#include "bernkit/rational.hpp"

namespace bernkit {

/// Differential polynomial in u and its x-derivatives u_1, u_2, ...
///
/// A monomial is an exponent vector e with e[k] = exponent of u_k (the k-th
/// derivative; u_0 = u), trailing zeros trimmed. Terms map monomials to
/// nonzero rational coefficients, ordered lexicographically, which makes
/// iteration and serialization stable.
///
/// The weight grading assigns u weight 2 and each x-derivative weight 1,
/// so a monomial has weight sum e[k] * (k + 2).
class DiffPoly {
 public:
  using Mono = std::vector<unsigned>;
  using TermMap = std::map<Mono, BigRational>;

  DiffPoly() = default;

  static DiffPoly constant(const BigRational& c) { return monomial({}, c); }
  /// The variable u_k.
  static DiffPoly u(unsigned k) {
    Mono m(k + 1, 0);
    m[k] = 1;
    return monomial(std::move(m), 1);
  }
  static DiffPoly monomial(Mono m, const BigRational& c) {
    DiffPoly p;
    p.add_term(std::move(m), c);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  BigRational coefficient(const Mono& m) const {
    Mono key = m;
    trim(key);
    const auto it = terms_.find(key);
    return it == terms_.end() ? BigRational() : it->second;
  }

  DiffPoly operator-() const;
  friend DiffPoly operator+(const DiffPoly& a, const DiffPoly& b);
  friend DiffPoly operator-(const DiffPoly& a, const DiffPoly& b);
  friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
  friend DiffPoly operator*(const DiffPoly& p, const BigRational& s);
  DiffPoly& operator+=(const DiffPoly& o) { return *this = *this + o; }
  DiffPoly& operator-=(const DiffPoly& o) { return *this = *this - o; }
  bool operator==(const DiffPoly&) const = default;

  /// Formal partial derivative with respect to u_k.
  DiffPoly partial(unsigned k) const;

  /// Highest derivative order appearing; -1 for constants and zero.
  int max_order() const;

  static unsigned mono_weight(const Mono& m);
  /// Weight if every monomial has the same one; nullopt for zero or mixed.
  std::optional<unsigned> homogeneous_weight() const;

  /// Stable serialization: (exponent vector, "p/q") pairs in ascending
  /// lexicographic monomial order.
  std::vector<std::pair<Mono, std::string>> serialized() const;

  std::string to_string() const;

 private:
  static void trim(Mono& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
  }
  void add_term(Mono m, const BigRational& c);
  TermMap terms_;
};

/// Total x-derivative: u_k -> u_{k+1} through the Leibniz rule.
DiffPoly total_x_derivative(const DiffPoly& p);

/// Variational derivative sum_k (-D_x)^k (dp/du_k). Vanishes exactly on
/// total x-derivatives.
DiffPoly euler_operator(const DiffPoly& p);

/// Time derivative along u_t = 6 u u_x - u_xxx: substitutes
/// D_t u_k = D_x^k(6 u u_1 - u_3).
DiffPoly kdv_time_derivative(const DiffPoly& p);

/// True iff the time derivative of p along the flow is a total
/// x-derivative, i.e. euler_operator(kdv_time_derivative(p)) == 0.
bool is_conserved(const DiffPoly& p);

/// Canonical representative of p modulo total x-derivatives. Repeatedly
/// integrates by parts: a monomial whose highest derivative u_k (k >= 1)
/// appears linearly is rewritten through
///   B u_{k-1}^e u_k = B D_x(u_{k-1}^{e+1})/(e+1)
///                   = D_x(...) - D_x(B) u_{k-1}^{e+1}/(e+1),
/// choosing the highest k first and, among ties, the lexicographically
/// greatest monomial. Terminal monomials have their top derivative with
/// exponent >= 2 or are pure powers of u. The rewrite per monomial is a
/// function, so normal forms are order-independent.
DiffPoly canonicalize_mod_dx(const DiffPoly& p);

/// Conserved density P_m of the KdV flow, canonicalized and scaled so the
/// coefficient of u_m^2 is exactly 1; all other monomials involve only
/// derivatives of order < m. Homogeneous of weight 2m + 4.
struct ConservedDensity {
  unsigned m = 0;
  DiffPoly density;
};

/// Densities P_0 .. P_mmax from the Gardner generating expansion: the
/// series w = u - eps*D_x(w) - eps^2*w^2 (so that u = w + eps*w_x + eps^2*w^2
/// maps solutions of the Gardner equation to KdV solutions in the
/// u_t - 6uu_x + u_xxx = 0 convention) has all coefficients conserved;
/// P_m is the canonicalized, normalized coefficient of eps^{2m+2}.
/// Throws "degenerate density" if normalization is impossible.
std::vector<ConservedDensity> build_densities(unsigned mmax);

/// Exact value of the conserved integral at the one-soliton profile scaled
/// by l: substitutes u_k = -2 l T_{k+1}(y), y = tanh x, converts the
/// measure via dx = dy/(1-y^2), and integrates exactly over [-1, 1]. Every
/// monomial's y-polynomial is divisible by (1-y^2) since each T_{k+1}
/// carries that factor; failure throws "substitution inconsistency".
/// Returns a polynomial in l.
DensePoly evaluate_at_soliton(const ConservedDensity& d);

/// Exact identity between the soliton evaluation of P_{m-1} and the scaled
/// Faulhaber polynomial (-1)^{m-1} 2^{2m+2}/(2m+1) F_m, as polynomials in l.
bool verify_soliton_faulhaber(unsigned m);

/// Exact value of the integral over the real line of the squared (m-1)-th
/// derivative of sech^2, computed as the y-integral of T_m(y)^2/(1-y^2).
BigRational exact_main_integral(unsigned m);

/// B_{2m} through the integral above: (-1)^{m-1} 2^{-(2m+1)} times it.
BigRational bernoulli_via_kdv(unsigned m);

}  // namespace bernkit
