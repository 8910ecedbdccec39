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

#include "bernkit/kdv.hpp"

#include <sstream>
#include <stdexcept>

#include "bernkit/faulhaber.hpp"
#include "bernkit/tangent.hpp"

namespace bernkit {

void DiffPoly::add_term(Mono m, const BigRational& c) {
  if (c.is_zero()) return;
  trim(m);
  const auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DiffPoly DiffPoly::operator-() const {
  DiffPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

DiffPoly operator+(const DiffPoly& a, const DiffPoly& b) {
  DiffPoly r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

DiffPoly operator-(const DiffPoly& a, const DiffPoly& b) {
  DiffPoly r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
  return r;
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
  DiffPoly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      DiffPoly::Mono m(std::max(ma.size(), mb.size()), 0);
      for (std::size_t k = 0; k < m.size(); ++k)
        m[k] = (k < ma.size() ? ma[k] : 0) + (k < mb.size() ? mb[k] : 0);
      r.add_term(std::move(m), ca * cb);
    }
  }
  return r;
}

DiffPoly operator*(const DiffPoly& p, const BigRational& s) {
  DiffPoly r;
  if (s.is_zero()) return r;
  for (const auto& [m, c] : p.terms_) r.terms_.emplace(m, c * s);
  return r;
}

DiffPoly DiffPoly::partial(unsigned k) const {
  DiffPoly r;
  for (const auto& [m, c] : terms_) {
    if (k >= m.size() || m[k] == 0) continue;
    Mono d = m;
    d[k] -= 1;
    r.add_term(std::move(d), c * BigRational(static_cast<long>(m[k])));
  }
  return r;
}

int DiffPoly::max_order() const {
  int best = -1;
  for (const auto& [m, c] : terms_)
    if (!m.empty()) best = std::max(best, static_cast<int>(m.size()) - 1);
  return best;
}

unsigned DiffPoly::mono_weight(const Mono& m) {
  unsigned w = 0;
  for (std::size_t k = 0; k < m.size(); ++k) w += m[k] * (static_cast<unsigned>(k) + 2);
  return w;
}

std::optional<unsigned> DiffPoly::homogeneous_weight() const {
  std::optional<unsigned> w;
  for (const auto& [m, c] : terms_) {
    const unsigned mw = mono_weight(m);
    if (!w) {
      w = mw;
    } else if (*w != mw) {
      return std::nullopt;
    }
  }
  return w;
}

std::vector<std::pair<DiffPoly::Mono, std::string>> DiffPoly::serialized() const {
  std::vector<std::pair<Mono, std::string>> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.emplace_back(m, c.to_string());
  return out;
}

std::string DiffPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const BigRational a = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    bool need_star = false;
    if (!(a == BigRational(1)) || m.empty()) {
      os << (a.is_integer() ? a.num().get_str() : a.to_string());
      need_star = true;
    }
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k] == 0) continue;
      if (need_star) os << "*";
      os << (k == 0 ? "u" : "u" + std::to_string(k));
      if (m[k] > 1) os << "^" << m[k];
      need_star = true;
    }
  }
  return os.str();
}

DiffPoly total_x_derivative(const DiffPoly& p) {
  DiffPoly r;
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k] == 0) continue;
      DiffPoly::Mono d = m;
      d[k] -= 1;
      if (d.size() < k + 2) d.resize(k + 2, 0);
      d[k + 1] += 1;
      r += DiffPoly::monomial(std::move(d), c * BigRational(static_cast<long>(m[k])));
    }
  }
  return r;
}

DiffPoly euler_operator(const DiffPoly& p) {
  DiffPoly r;
  const int top = p.max_order();
  for (int k = 0; k <= top; ++k) {
    DiffPoly term = p.partial(static_cast<unsigned>(k));
    for (int i = 0; i < k; ++i) term = total_x_derivative(term);
    r += (k % 2 == 0) ? term : -term;
  }
  return r;
}

DiffPoly kdv_time_derivative(const DiffPoly& p) {
  // u_t = 6 u u_1 - u_3
  const DiffPoly rhs = DiffPoly::u(0) * DiffPoly::u(1) * BigRational(6) - DiffPoly::u(3);
  DiffPoly r;
  DiffPoly rhs_k = rhs;  // D_x^k(rhs)
  const int top = p.max_order();
  for (int k = 0; k <= top; ++k) {
    if (k > 0) rhs_k = total_x_derivative(rhs_k);
    r += p.partial(static_cast<unsigned>(k)) * rhs_k;
  }
  return r;
}

bool is_conserved(const DiffPoly& p) {
  return euler_operator(kdv_time_derivative(p)).is_zero();
}

namespace {

// Top derivative order of a monomial; -1 when it is constant.
int mono_top(const DiffPoly::Mono& m) { return static_cast<int>(m.size()) - 1; }

bool reducible(const DiffPoly::Mono& m) {
  const int k = mono_top(m);
  return k >= 1 && m[static_cast<std::size_t>(k)] == 1;
}

}  // namespace

DiffPoly canonicalize_mod_dx(const DiffPoly& p) {
  DiffPoly work = p;
  for (;;) {
    // Highest reducible top order first; ties broken by descending
    // lexicographic monomial order.
    const DiffPoly::Mono* pick = nullptr;
    int pick_top = 0;
    for (auto it = work.terms().rbegin(); it != work.terms().rend(); ++it) {
      if (!reducible(it->first)) continue;
      const int k = mono_top(it->first);
      if (pick == nullptr || k > pick_top) {
        pick = &it->first;
        pick_top = k;
      }
    }
    if (pick == nullptr) return work;

    const DiffPoly::Mono mono = *pick;
    const BigRational coeff = work.coefficient(mono);
    const auto k = static_cast<std::size_t>(pick_top);
    const unsigned e = k >= 1 && k - 1 < mono.size() ? mono[k - 1] : 0;

    DiffPoly::Mono rest = mono;  // monomial without the u_{k-1} and u_k factors
    rest[k] = 0;
    if (k >= 1) rest[k - 1] = 0;
    DiffPoly::Mono replacement(k, 0);  // u_{k-1}^{e+1}
    replacement[k - 1] = e + 1;

    work -= DiffPoly::monomial(mono, coeff);
    const DiffPoly tail = total_x_derivative(DiffPoly::monomial(std::move(rest), 1));
    work -= tail * DiffPoly::monomial(std::move(replacement),
                                      coeff / BigRational(static_cast<long>(e + 1)));
  }
}

std::vector<ConservedDensity> build_densities(unsigned mmax) {
  // w_0 = u, w_n = -D_x(w_{n-1}) - sum_{i+j=n-2} w_i w_j.
  const unsigned top = 2 * mmax + 2;
  std::vector<DiffPoly> w(top + 1);
  w[0] = DiffPoly::u(0);
  for (unsigned n = 1; n <= top; ++n) {
    DiffPoly acc = -total_x_derivative(w[n - 1]);
    if (n >= 2)
      for (unsigned i = 0; i + 2 <= n; ++i) acc -= w[i] * w[n - 2 - i];
    w[n] = std::move(acc);
  }

  std::vector<ConservedDensity> out;
  out.reserve(mmax + 1);
  for (unsigned m = 0; m <= mmax; ++m) {
    DiffPoly d = canonicalize_mod_dx(w[2 * m + 2]);
    DiffPoly::Mono peak(m + 1, 0);
    peak[m] = 2;
    const BigRational lead = d.coefficient(peak);
    if (lead.is_zero()) throw std::runtime_error("build_densities: degenerate density");
    d = d * (BigRational(1) / lead);
    const auto weight = d.homogeneous_weight();
    if (!weight || *weight != 2 * m + 4)
      throw std::logic_error("build_densities: density is not weight homogeneous");
    out.push_back(ConservedDensity{m, std::move(d)});
  }
  return out;
}

DensePoly evaluate_at_soliton(const ConservedDensity& d) {
  static const DensePoly one_minus_sq{1, 0, -1};
  std::map<unsigned, DensePoly> by_degree;  // l-degree -> y-polynomial
  for (const auto& [mono, c] : d.density.terms()) {
    unsigned degree = 0;
    DensePoly prod = DensePoly::one();
    for (std::size_t k = 0; k < mono.size(); ++k) {
      if (mono[k] == 0) continue;
      degree += mono[k];
      prod = prod * tangent_poly(static_cast<unsigned>(k) + 1).pow(mono[k]);
    }
    BigRational factor = c;  // c * (-2)^degree
    for (unsigned i = 0; i < degree; ++i) factor *= BigRational(-2);
    by_degree[degree] += prod * factor;
  }

  std::vector<BigRational> coeffs;
  for (const auto& [degree, q] : by_degree) {
    const auto [quot, rem] = q.divrem(one_minus_sq);
    if (!rem.is_zero())
      throw std::runtime_error("evaluate_at_soliton: substitution inconsistency");
    if (coeffs.size() <= degree) coeffs.resize(degree + 1);
    coeffs[degree] = quot.definite_integral(-1, 1);
  }
  return DensePoly(std::move(coeffs));
}

bool verify_soliton_faulhaber(unsigned m) {
  if (m < 1) throw std::domain_error("verify_soliton_faulhaber: requires m >= 1");
  const auto densities = build_densities(m - 1);
  const DensePoly lhs = evaluate_at_soliton(densities[m - 1]);
  const BigRational scale =
      BigRational(pow2(2 * m + 2), BigInt(2 * m + 1)) * (m % 2 == 1 ? 1 : -1);
  const DensePoly rhs = faulhaber_from_bernoulli(m).as_poly() * scale;
  return lhs == rhs;
}

BigRational exact_main_integral(unsigned m) {
  if (m < 1) throw std::domain_error("exact_main_integral: requires m >= 1");
  static const DensePoly one_minus_sq{1, 0, -1};
  const auto [q, r] = tangent_poly(m).divrem(one_minus_sq);
  if (!r.is_zero())
    throw std::logic_error("exact_main_integral: (1-y^2) does not divide T_m");
  return (q * q * one_minus_sq).definite_integral(-1, 1);
}

BigRational bernoulli_via_kdv(unsigned m) {
  const BigRational scale(m % 2 == 1 ? BigInt(1) : BigInt(-1), pow2(2 * m + 1));
  return scale * exact_main_integral(m);
}

}  // namespace bernkit
