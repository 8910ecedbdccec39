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

#include <vector>

#include "bernkit/rational.hpp"

namespace bernkit {

/// Gauss-Legendre nodes and weights on [-1, 1], computed by Newton
/// iteration on the Legendre recurrence in long double precision.
struct GaussLegendreRule {
  explicit GaussLegendreRule(unsigned n);
  std::vector<long double> nodes;    // ascending
  std::vector<long double> weights;
};

/// Parameters for integrating the squared sech^2-derivative over the real
/// line: truncate to [-X, X], split into uniform panels, apply a fixed
/// Gauss-Legendre rule per panel, and account for the discarded tails with
/// a rigorous bound. precision_bits selects the working float type:
/// 53 (double) or 64 (x87 long double).
struct QuadratureSpec {
  double truncation = 30.0;
  unsigned panels = 64;
  unsigned nodes_per_panel = 24;
  unsigned precision_bits = 64;
  double tolerance = 1e-10;  // relative accuracy target
};

struct QuadratureResult {
  long double value = 0;               // numeric B_{2m}
  long double abs_error_estimate = 0;  // quadrature estimate + scaled tail + roundoff
  long double tail_bound = 0;          // unscaled bound on the discarded integral
  unsigned total_nodes = 0;
};

/// Integrand of the real-line representation: ((sech^2 x)^{(m-1)})^2,
/// evaluated as T_m(tanh x)^2 with the exact tangent-polynomial
/// coefficients rounded to the working type once and reused.
double integrand_at(unsigned m, double x);

/// Rigorous upper bound on the integral of the integrand over |x| > X,
/// valid for X >= 1. From sech^2 x = 4 sum_j (-1)^{j-1} j e^{-2jx} (x > 0),
/// the (m-1)-th derivative is bounded by 4 * 2^{m-1} K_m(X) e^{-2x} with
/// K_m(X) = sum_j j^m e^{-2(j-1)X} (a rapidly converging sum, majorized
/// geometrically past j = m + 1), giving
///   tail <= 8 * 4^{m-1} * K_m(X)^2 * e^{-4X}.
long double tail_bound(unsigned m, long double X);

/// Composite Gauss-Legendre integral of the integrand over [a, b].
/// Accumulation order is fixed: panels ascending in x, nodes ascending
/// within each panel, so results are bitwise reproducible.
long double soliton_square_integral(unsigned m, long double a, long double b,
                                    unsigned panels, unsigned nodes_per_panel,
                                    unsigned precision_bits = 64);

/// Numeric B_{2m} by direct quadrature: (-1)^{m-1} 2^{-(2m+1)} times the
/// truncated integral. The error estimate combines the half-panel-count
/// difference, the scaled tail bound, and a roundoff floor; if it exceeds
/// tolerance * |value|, throws "precision exhausted".
QuadratureResult bernoulli_numeric(unsigned m, const QuadratureSpec& spec = {});

}  // namespace bernkit
