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

#include "bernkit/quadrature.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "bernkit/tangent.hpp"

namespace bernkit {

GaussLegendreRule::GaussLegendreRule(unsigned n) {
  if (n == 0) throw std::invalid_argument("GaussLegendreRule: n must be positive");
  nodes.resize(n);
  weights.resize(n);
  const long double eps = std::numeric_limits<long double>::epsilon();
  const unsigned half = (n + 1) / 2;
  for (unsigned i = 0; i < half; ++i) {
    long double z = std::cos(std::numbers::pi_v<long double> * (i + 0.75L) / (n + 0.5L));
    long double pp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      long double p1 = 1, p2 = 0;
      for (unsigned j = 0; j < n; ++j) {
        const long double p3 = p2;
        p2 = p1;
        p1 = ((2 * j + 1) * z * p2 - j * p3) / (j + 1);
      }
      pp = n * (z * p1 - p2) / (z * z - 1);
      const long double z1 = z;
      z = z1 - p1 / pp;
      if (std::fabs(z - z1) <= 4 * eps) break;
    }
    nodes[i] = -z;
    nodes[n - 1 - i] = z;
    weights[i] = 2 / ((1 - z * z) * pp * pp);
    weights[n - 1 - i] = weights[i];
  }
}

namespace {

template <typename F>
const std::vector<F>& rounded_tangent_coeffs(unsigned m) {
  static std::map<unsigned, std::vector<F>> cache;
  static std::mutex mu;
  std::scoped_lock lock(mu);
  auto it = cache.find(m);
  if (it == cache.end()) {
    const DensePoly t = tangent_poly(m);
    std::vector<F> c(t.size());
    for (std::size_t i = 0; i < t.size(); ++i)
      c[i] = static_cast<F>(t.coeff(i).to_long_double());
    it = cache.emplace(m, std::move(c)).first;
  }
  return it->second;
}

template <typename F>
F integrand(unsigned m, F x) {
  const auto& c = rounded_tangent_coeffs<F>(m);
  const F y = std::tanh(x);
  F acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * y + c[i];
  return acc * acc;
}

// Sum of |coefficients| of T_m; enters the roundoff bound below.
long double coeff_abs_sum(unsigned m) {
  const auto& c = rounded_tangent_coeffs<long double>(m);
  long double s = 0;
  for (const long double v : c) s += std::fabs(v);
  return s;
}

template <typename F>
F composite_integral(unsigned m, F a, F b, unsigned panels, unsigned nodes) {
  const GaussLegendreRule rule(nodes);
  const F width = (b - a) / static_cast<F>(panels);
  F total = 0;
  for (unsigned p = 0; p < panels; ++p) {
    const F lo = a + static_cast<F>(p) * width;
    const F mid = lo + width / 2;
    const F half = width / 2;
    F panel = 0;
    for (unsigned i = 0; i < nodes; ++i) {
      const F xi = mid + half * static_cast<F>(rule.nodes[i]);
      panel += static_cast<F>(rule.weights[i]) * integrand<F>(m, xi);
    }
    total += panel * half;
  }
  return total;
}

void check_precision_bits(unsigned bits) {
  if (bits != 53 && bits != 64)
    throw std::invalid_argument("quadrature: precision_bits must be 53 or 64");
}

}  // namespace

double integrand_at(unsigned m, double x) {
  if (m < 1) throw std::domain_error("integrand_at: requires m >= 1");
  return integrand<double>(m, x);
}

long double tail_bound(unsigned m, long double X) {
  if (m < 1) throw std::domain_error("tail_bound: requires m >= 1");
  if (X < 1) throw std::domain_error("tail_bound: requires X >= 1");
  // K_m(X) = sum_{j>=1} j^m e^{-2(j-1)X}; past j = m+1 the term ratio is
  // at most (1 + 1/j)^m e^{-2X} <= e^{1-2X} < 1, so close the sum with a
  // geometric majorant.
  const unsigned cutoff = m + 2;
  long double k_sum = 0, term = 0;
  for (unsigned j = 1; j <= cutoff; ++j) {
    term = std::pow(static_cast<long double>(j), static_cast<long double>(m)) *
           std::exp(-2 * X * static_cast<long double>(j - 1));
    k_sum += term;
  }
  const long double ratio = std::exp(1 - 2 * X);
  k_sum += term * ratio / (1 - ratio);
  const long double pow4 = std::pow(4.0L, static_cast<long double>(m - 1));
  return 8 * pow4 * k_sum * k_sum * std::exp(-4 * X);
}

long double soliton_square_integral(unsigned m, long double a, long double b,
                                    unsigned panels, unsigned nodes_per_panel,
                                    unsigned precision_bits) {
  if (m < 1) throw std::domain_error("soliton_square_integral: requires m >= 1");
  if (panels == 0 || nodes_per_panel == 0)
    throw std::invalid_argument("soliton_square_integral: panels and nodes must be positive");
  check_precision_bits(precision_bits);
  if (precision_bits == 53)
    return composite_integral<double>(m, static_cast<double>(a), static_cast<double>(b),
                                      panels, nodes_per_panel);
  return composite_integral<long double>(m, a, b, panels, nodes_per_panel);
}

QuadratureResult bernoulli_numeric(unsigned m, const QuadratureSpec& spec) {
  if (m < 1) throw std::domain_error("bernoulli_numeric: requires m >= 1");
  check_precision_bits(spec.precision_bits);
  if (spec.panels == 0 || spec.nodes_per_panel == 0 || spec.truncation < 1)
    throw std::invalid_argument("bernoulli_numeric: invalid quadrature spec");

  const auto X = static_cast<long double>(spec.truncation);
  const long double tail = tail_bound(m, X);
  const long double full =
      soliton_square_integral(m, -X, X, spec.panels, spec.nodes_per_panel, spec.precision_bits);
  const unsigned half_panels = spec.panels > 1 ? spec.panels / 2 : 1;
  const long double half =
      soliton_square_integral(m, -X, X, half_panels, spec.nodes_per_panel, spec.precision_bits);

  const long double scale = std::ldexp(1.0L, -static_cast<int>(2 * m + 1));
  const long double eps = spec.precision_bits == 53
                              ? std::numeric_limits<double>::epsilon()
                              : std::numeric_limits<long double>::epsilon();
  // Roundoff floor. Pointwise, Horner loses at most O(ncoef) ulps of
  // A(x) = sum |c_i| |tanh x|^i, so the integrated noise is bounded via
  // Cauchy-Schwarz by eps * ncoef * S * sqrt(2X * integral) with
  // S = sum |c_i| (A <= S and |T| <= A). The T_m coefficients grow like
  // 2^m m!, which is where mantissa bits go for large m.
  const long double s_sum = coeff_abs_sum(m);
  const auto ncoef = static_cast<long double>(2 * m + 2);
  const long double roundoff =
      8 * ncoef * eps * s_sum * std::sqrt(2 * X * full) * scale;

  QuadratureResult r;
  r.value = (m % 2 == 1 ? full : -full) * scale;
  r.tail_bound = tail;
  r.abs_error_estimate = std::fabs(full - half) * scale + tail * scale + roundoff;
  r.total_nodes = spec.panels * spec.nodes_per_panel;
  if (r.abs_error_estimate > static_cast<long double>(spec.tolerance) * std::fabs(r.value))
    throw std::runtime_error("bernoulli_numeric: precision exhausted");
  return r;
}

}  // namespace bernkit
