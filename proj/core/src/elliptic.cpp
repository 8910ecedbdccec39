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

#include "bernkit/elliptic.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace bernkit {

namespace {

using Poly1 = PolynomialT<BigRational>;

InvariantPoly ip_const(const BigRational& r) { return InvariantPoly{Poly1{r}}; }
InvariantPoly ip_g2() { return InvariantPoly{Poly1{0, 1}}; }
InvariantPoly ip_g3() { return InvariantPoly{Poly1{}, Poly1{BigRational(1)}}; }

// Truncated even Laurent expansion: sum of a[i] z^{2(lo+i)}, exact in the
// invariants, with coefficients trustworthy through index hi only.
struct EvenLaurent {
  int lo = 0;
  int hi = -1;
  std::vector<InvariantPoly> a;

  const InvariantPoly& at(int power_half) const {
    static const InvariantPoly kZero{};
    const int idx = power_half - lo;
    if (idx < 0 || idx >= static_cast<int>(a.size())) return kZero;
    return a[static_cast<std::size_t>(idx)];
  }
};

EvenLaurent laurent_mul(const EvenLaurent& x, const EvenLaurent& y) {
  EvenLaurent r;
  r.lo = x.lo + y.lo;
  r.hi = std::min(x.hi + y.lo, y.hi + x.lo);
  if (r.hi < r.lo) return r;
  r.a.assign(static_cast<std::size_t>(r.hi - r.lo + 1), InvariantPoly{});
  for (int i = x.lo; i <= x.hi; ++i)
    for (int j = y.lo; j <= y.hi; ++j) {
      const int k = i + j;
      if (k > r.hi) continue;
      r.a[static_cast<std::size_t>(k - r.lo)] += x.at(i) * y.at(j);
    }
  return r;
}

EvenLaurent wp_series(unsigned K) {
  const auto& c = wp_laurent_symbolic(K);
  EvenLaurent p;
  p.lo = -1;
  p.hi = static_cast<int>(K);
  p.a.assign(K + 2, InvariantPoly{});
  p.a[0] = ip_const(1);  // z^{-2}
  for (unsigned k = 1; k <= K; ++k) p.a[k + 1] = c[k - 1];
  return p;
}

}  // namespace

std::vector<InvariantPoly> wp_laurent_symbolic(unsigned K) {
  static std::vector<InvariantPoly> cache;
  static std::mutex mu;
  std::scoped_lock lock(mu);
  if (cache.size() < K) {
    if (cache.empty()) {
      cache.push_back(ip_g2() * ip_const(BigRational(1, 20)));
      cache.push_back(ip_g3() * ip_const(BigRational(1, 28)));
    }
    for (unsigned k = static_cast<unsigned>(cache.size()) + 1; k <= K; ++k) {
      InvariantPoly acc;
      for (unsigned i = 1; i + 1 <= k - 1; ++i) acc += cache[i - 1] * cache[k - 2 - i];
      cache.push_back(acc * ip_const(BigRational(3, static_cast<long>((k - 2) * (2 * k + 3)))));
    }
  }
  return {cache.begin(), cache.begin() + K};
}

BHTable wp_laurent(const InvariantPair& g, unsigned K) {
  const auto& sym = wp_laurent_symbolic(K);
  BHTable t;
  t.K = K;
  for (unsigned k = 1; k <= K; ++k) {
    // evaluate in g2 first, then Horner in g3
    BigRational val;
    const InvariantPoly& p = sym[k - 1];
    for (std::size_t j = p.size(); j-- > 0;) val = val * g.g3 + p.coeff(j).evaluate(g.g2);
    t.laurent.push_back(val);
    t.bh.push_back(val * BigRational(BigInt(2 * k + 2) * factorial(2 * k)));
  }
  return t;
}

InvariantPoly bh_symbolic(unsigned k) {
  if (k < 1) throw std::domain_error("bh_symbolic: requires k >= 1");
  const auto& sym = wp_laurent_symbolic(k);
  return sym[k - 1] * ip_const(BigRational(BigInt(2 * k + 2) * factorial(2 * k)));
}

bool verify_wp_ode(unsigned K) {
  if (K < 3) throw std::domain_error("verify_wp_ode: requires K >= 3");
  const EvenLaurent p = wp_series(K);

  // (p')^2: p' = sum 2i a_i z^{2i-1}, so the z^{2k-2} coefficient is
  // sum_{i+j=k} (2i)(2j) a_i a_j, trustworthy for k <= K-1.
  EvenLaurent dsq;
  dsq.lo = -3;
  dsq.hi = static_cast<int>(K) - 2;
  dsq.a.assign(static_cast<std::size_t>(dsq.hi - dsq.lo + 1), InvariantPoly{});
  for (int i = p.lo; i <= p.hi; ++i)
    for (int j = p.lo; j <= p.hi; ++j) {
      const int k = i + j - 1;  // index of z^{2k}
      if (k < dsq.lo || k > dsq.hi) continue;
      dsq.a[static_cast<std::size_t>(k - dsq.lo)] +=
          p.at(i) * p.at(j) * ip_const(BigRational(4L * i * j));
    }

  const EvenLaurent cube = laurent_mul(laurent_mul(p, p), p);

  // residual = (p')^2 - 4 p^3 + g2 p + g3
  const int lo = -3;
  const int hi = std::min(dsq.hi, cube.hi);
  for (int k = lo; k <= hi; ++k) {
    InvariantPoly r = dsq.at(k) - cube.at(k) * ip_const(4) + p.at(k) * ip_g2();
    if (k == 0) r += ip_g3();
    if (!r.is_zero()) return false;
  }
  return true;
}

std::string format_invariant_poly(const InvariantPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < p.size(); ++j) {
    const Poly1& q = p.coeff(j);
    for (std::size_t i = 0; i < q.size(); ++i) {
      const BigRational& c = q.coeff(i);
      if (c.is_zero()) continue;
      const BigRational a = c.abs();
      if (first) {
        if (c.sign() < 0) os << "-";
        first = false;
      } else {
        os << (c.sign() < 0 ? " - " : " + ");
      }
      bool need_star = false;
      if (!(a == BigRational(1)) || (i == 0 && j == 0)) {
        os << a.to_string();
        need_star = true;
      }
      if (i > 0) {
        os << (need_star ? "*" : "") << "g2";
        if (i > 1) os << "^" << i;
        need_star = true;
      }
      if (j > 0) {
        os << (need_star ? "*" : "") << "g3";
        if (j > 1) os << "^" << j;
      }
    }
  }
  return os.str();
}

long double invariant_poly_eval(const InvariantPoly& p, long double g2, long double g3) {
  long double acc = 0;
  for (std::size_t j = p.size(); j-- > 0;) {
    long double inner = 0;
    const Poly1& q = p.coeff(j);
    for (std::size_t i = q.size(); i-- > 0;) inner = inner * g2 + q.coeff(i).to_long_double();
    acc = acc * g3 + inner;
  }
  return acc;
}

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;

void validate(const RectLattice& l) {
  if (!(l.omega1 > 0) || !(l.omega2_im > 0) || !std::isfinite(l.omega1) ||
      !std::isfinite(l.omega2_im))
    throw std::invalid_argument("RectLattice: half-periods must be positive and finite");
}

// Constant aligning the row expansion with the Laurent normalization
// p(z) - z^{-2} -> 0 at the origin.
long double cycle_constant(const RectLattice& l) {
  const long double a = kPi / (2 * l.omega1);
  long double sum = 0;
  for (unsigned n = 1; n <= 10000; ++n) {
    const long double s = std::sinh(kPi * n * l.omega2_im / l.omega1);
    const long double term = 1 / (s * s);
    sum += term;
    if (term < 1e-26L * (1 + std::fabs(sum)) && n >= 4) break;
  }
  return -a * a * (1.0L / 3.0L - 2 * sum);
}

}  // namespace

LatticeInvariants lattice_invariants(const RectLattice& l) {
  validate(l);
  const long double q = std::exp(-2 * kPi * l.omega2_im / l.omega1);
  if (q > 0.99L) throw std::runtime_error("lattice_invariants: lattice too thin");
  long double e4 = 0, e6 = 0;
  for (unsigned n = 1; n <= 4000; ++n) {
    const long double qn = std::pow(q, static_cast<long double>(n));
    const long double lam = qn / (1 - qn);
    const long double n3 = static_cast<long double>(n) * n * n;
    const long double t4 = n3 * lam;
    const long double t6 = n3 * static_cast<long double>(n) * n * lam;
    e4 += t4;
    e6 += t6;
    if (t4 < 1e-26L * (1 + e4) && t6 < 1e-26L * (1 + e6) && n >= 4) break;
  }
  const long double a = kPi / (2 * l.omega1);
  LatticeInvariants g;
  g.g2 = (4.0L / 3.0L) * a * a * a * a * (1 + 240 * e4);
  g.g3 = (8.0L / 27.0L) * a * a * a * a * a * a * (1 - 504 * e6);
  const long double disc = g.g2 * g.g2 * g.g2 - 27 * g.g3 * g.g3;
  const long double scale = std::max(std::fabs(g.g2 * g.g2 * g.g2), 27 * g.g3 * g.g3);
  if (!(std::fabs(disc) > 1e-20L * scale))
    throw std::runtime_error("lattice_invariants: degenerate lattice");
  return g;
}

long double wp_eval(const RectLattice& l, long double t, unsigned deriv) {
  validate(l);
  const long double s = kPi * t / (2 * l.omega1);
  const long double h = kPi * l.omega2_im / (2 * l.omega1);
  const long double base = kPi / (2 * l.omega1);
  const long double factor = -4 * std::pow(base, static_cast<long double>(deriv) + 2);

  long double acc = 0;
  for (unsigned j = 1; j <= 100000; ++j) {
    const long double jj = static_cast<long double>(j);
    const long double amp = jj * std::pow(2 * jj, static_cast<long double>(deriv)) /
                            std::sinh(2 * jj * h);
    long double phase = 0;
    switch (deriv % 4) {
      case 0: phase = std::cos(2 * jj * s); break;
      case 1: phase = -std::sin(2 * jj * s); break;
      case 2: phase = -std::cos(2 * jj * s); break;
      case 3: phase = std::sin(2 * jj * s); break;
    }
    acc += amp * phase;
    if (amp < 1e-26L * (1 + std::fabs(acc)) && j >= 8) break;
    if (j == 100000)
      throw std::runtime_error("wp_eval: series did not converge (lattice too thin)");
  }
  long double out = factor * acc;
  if (deriv == 0) out += cycle_constant(l);
  return out;
}

std::complex<long double> wp_raw(const RectLattice& l, std::complex<long double> z) {
  validate(l);
  using C = std::complex<long double>;
  const long double a = kPi / (2 * l.omega1);
  const auto row = [&](long n) {
    const C arg = a * (z - C(0, 2 * static_cast<long double>(n) * l.omega2_im));
    const C s = std::sin(arg);
    return C(a * a, 0) / (s * s);
  };
  C sum = row(0);
  for (long n = 1; n <= 400; ++n) {
    const C incr = row(n) + row(-n);
    sum += incr;
    if (std::abs(incr) < 1e-26L * (1 + std::abs(sum)) && n >= 3) break;
  }
  return sum + cycle_constant(l);
}

long double bell_numeric(const RectLattice& l, unsigned m, unsigned nodes) {
  validate(l);
  if (m <= 1) throw std::domain_error("bell_numeric: requires m > 1");
  if (nodes == 0) throw std::invalid_argument("bell_numeric: nodes must be positive");
  const long double period = 2 * l.omega1;
  const long double step = period / static_cast<long double>(nodes);
  long double acc = 0;
  for (unsigned i = 0; i < nodes; ++i) {
    const long double v = wp_eval(l, static_cast<long double>(i) * step, m - 1);
    acc += v * v;
  }
  const long double integral = acc * step;
  const long double scale = std::ldexp(1.0L, -static_cast<int>(2 * m + 1));
  return (m % 2 == 1 ? integral : -integral) * scale;
}

}  // namespace bernkit
