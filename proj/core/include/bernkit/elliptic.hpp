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

#include <complex>
#include <string>
#include <vector>

#include "bernkit/polynomial.hpp"
#include "bernkit/rational.hpp"

namespace bernkit {

/// Exact Weierstrass invariants.
struct InvariantPair {
  BigRational g2, g3;
};

/// Laurent coefficients of the Weierstrass p-function at the origin are
/// weighted polynomials in the invariants: elements of Q[g2][g3], stored
/// with g2 as the inner variable and g3 as the outer one.
using InvariantPoly = PolynomialT<PolynomialT<BigRational>>;

/// Symbolic Laurent coefficients c_1..c_K of p(z) = z^{-2} + sum c_k z^{2k}.
/// c_1 = g2/20 and c_2 = g3/28 seed the quadratic recurrence
///   c_k = 3/((k-2)(2k+3)) * sum_{i=1}^{k-2} c_i c_{k-1-i}   (k >= 3)
/// obtained from p'' = 6p^2 - g2/2. Backed by a process-wide cache.
std::vector<InvariantPoly> wp_laurent_symbolic(unsigned K);

/// Laurent data evaluated at fixed exact invariants. The normalized values
/// bh[k-1] = BH_{2k+2} = (2k+2)(2k)! * c_k are the Bernoulli-Hurwitz
/// numbers of the lattice.
struct BHTable {
  unsigned K = 0;
  std::vector<BigRational> laurent;  // c_1 .. c_K
  std::vector<BigRational> bh;       // BH_4 .. BH_{2K+2}
};
BHTable wp_laurent(const InvariantPair& g, unsigned K);

/// BH_{2k+2} as a polynomial in the invariants.
InvariantPoly bh_symbolic(unsigned k);

/// Expands (p')^2 - 4p^3 + g2 p + g3 symbolically with the truncated
/// Laurent series and checks that every computable coefficient (through
/// z^{2K-4}, which covers z^{2K-6}) vanishes identically.
bool verify_wp_ode(unsigned K);

/// Rendering like "2/5*g2" or "1/1200*g2^2".
std::string format_invariant_poly(const InvariantPoly& p);
long double invariant_poly_eval(const InvariantPoly& p, long double g2, long double g3);

/// Rectangular period lattice spanned by 2*omega1 (real) and 2*omega2 with
/// omega2 = i * omega2_im. On the horizontal line z = t + omega2 the
/// p-function is real and pole-free; that line is the cycle used by the
/// numeric route.
struct RectLattice {
  double omega1 = 1.0;
  double omega2_im = 1.0;
};

struct LatticeInvariants {
  long double g2 = 0, g3 = 0;
};

/// Numeric invariants from the Eisenstein q-expansions
///   g2 = (4/3) (pi/(2 omega1))^4 (1 + 240 sum n^3 q^n/(1-q^n)),
///   g3 = (8/27) (pi/(2 omega1))^6 (1 - 504 sum n^5 q^n/(1-q^n)),
/// with q = exp(-2 pi omega2_im/omega1). Throws if the lattice is
/// degenerate or too thin for the series to converge at working precision.
LatticeInvariants lattice_invariants(const RectLattice& l);

/// p^{(deriv)}(t + omega2) for real t, computed from the lattice Fourier
/// series collapsed along the cycle:
///   p^{(d)}(t + omega2) = [d=0] C0
///     - 4 (pi/(2 omega1))^{d+2} sum_{j>=1} j (2j)^d cos(2js + d pi/2)
///                                            / sinh(2j h),
/// with s = pi t/(2 omega1), h = pi omega2_im/(2 omega1) and C0 the
/// constant fixing the Laurent expansion at the origin. Converges
/// geometrically; every term is real, which reflects the rectangular
/// symmetry of the lattice.
long double wp_eval(const RectLattice& l, long double t, unsigned deriv = 0);

/// p(z) by summing rows of the lattice as csc^2 series. Valid for any z
/// off the lattice; slower than wp_eval but independent of the collapsed
/// form, so it serves as a cross-check and for reality tests.
std::complex<long double> wp_raw(const RectLattice& l, std::complex<long double> z);

/// Cycle integral (-1)^{m-1} 2^{-(2m+1)} * integral over z = t + omega2,
/// t in [0, 2 omega1), of (p^{(m-1)})^2 dz, by the uniform trapezoid rule
/// with `nodes` points (spectrally accurate here: the integrand is smooth
/// and periodic). Requires m > 1; accumulation is in ascending node order
/// and deterministic for a fixed node count.
long double bell_numeric(const RectLattice& l, unsigned m, unsigned nodes);

}  // namespace bernkit
