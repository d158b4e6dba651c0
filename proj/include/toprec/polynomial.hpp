/*
   Copyright 2026 The toprec authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TOPREC_POLYNOMIAL_HPP
#define TOPREC_POLYNOMIAL_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "toprec/rational.hpp"

namespace toprec {

/// Dense univariate polynomial over a field K. Coefficient index = degree;
/// the leading coefficient is nonzero unless the polynomial is zero.
/// K must provide field arithmetic, equality, is_zero(), and construction
/// from long.
template <class K>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(K c) { c_.push_back(std::move(c)); trim(); }
  explicit Polynomial(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(K c, long e) {
    if (e < 0) throw std::invalid_argument("Polynomial: negative exponent");
    std::vector<K> v(static_cast<std::size_t>(e) + 1);
    v.back() = std::move(c);
    return Polynomial(std::move(v));
  }
  static Polynomial variable() { return monomial(K(1), 1); }

  long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  const K& leading() const {
    if (is_zero()) throw std::logic_error("Polynomial: leading of zero");
    return c_.back();
  }
  K coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(c_.size())) return K(0);
    return c_[static_cast<std::size_t>(i)];
  }
  const std::vector<K>& coefficients() const { return c_; }

  /// Number of trailing zero coefficients (valuation at the origin); degree+1
  /// convention does not apply; zero polynomial reports -1.
  long valuation() const {
    if (is_zero()) return -1;
    long v = 0;
    while (c_[static_cast<std::size_t>(v)].is_zero()) ++v;
    return v;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<K> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i < a.c_.size() && i < b.c_.size()) r[i] = a.c_[i] + b.c_[i];
      else if (i < a.c_.size()) r[i] = a.c_[i];
      else r[i] = b.c_[i];
    }
    return Polynomial(std::move(r));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  Polynomial operator-() const {
    std::vector<K> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    Polynomial p;
    p.c_ = std::move(r);
    return p;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<K> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j].is_zero()) continue;
        r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
      }
    }
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const Polynomial& a, const K& s) {
    if (s.is_zero()) return Polynomial();
    std::vector<K> r(a.c_.size());
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i] * s;
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const K& s, const Polynomial& a) { return a * s; }

  Polynomial shifted(long e) const {  // multiply by x^e
    if (is_zero()) return Polynomial();
    std::vector<K> r(c_.size() + static_cast<std::size_t>(e));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i + static_cast<std::size_t>(e)] = c_[i];
    return Polynomial(std::move(r));
  }

  /// Coefficient reversal: x^deg * p(1/x).
  Polynomial reversed() const {
    std::vector<K> r(c_.rbegin(), c_.rend());
    return Polynomial(std::move(r));
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<K> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * K(static_cast<long>(i));
    return Polynomial(std::move(r));
  }

  /// Euclidean division: *this = q*d + r with deg r < deg d.
  std::pair<Polynomial, Polynomial> divrem(const Polynomial& d) const {
    if (d.is_zero()) throw std::domain_error("Polynomial: division by zero");
    Polynomial q, r = *this;
    if (r.degree() < d.degree()) return {q, r};
    std::vector<K> qc(static_cast<std::size_t>(r.degree() - d.degree()) + 1);
    K dinv = K(1) / d.leading();
    while (!r.is_zero() && r.degree() >= d.degree()) {
      long k = r.degree() - d.degree();
      K f = r.leading() * dinv;
      qc[static_cast<std::size_t>(k)] = f;
      // r -= f * x^k * d
      std::vector<K> rc = r.c_;
      for (std::size_t i = 0; i < d.c_.size(); ++i) {
        std::size_t ix = i + static_cast<std::size_t>(k);
        rc[ix] = rc[ix] - f * d.c_[i];
      }
      r = Polynomial(std::move(rc));
    }
    q = Polynomial(std::move(qc));
    return {q, r};
  }
  friend Polynomial operator/(const Polynomial& a, const Polynomial& b) { return a.divrem(b).first; }
  friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return a.divrem(b).second; }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return *this * (K(1) / leading());
  }

  Polynomial pow(long e) const {
    if (e < 0) throw std::invalid_argument("Polynomial: negative power");
    Polynomial r{K(1)};
    Polynomial b = *this;
    while (e > 0) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  K eval(const K& x) const {
    K acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Horner evaluation into an arbitrary commutative ring A; `embed` maps
  /// coefficients into A.
  template <class A, class Embed>
  A eval_in(const A& x, const Embed& embed) const {
    A acc = embed(K(0));
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + embed(*it);
    return acc;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<K> c_;
};

namespace detail {

// --- integer polynomial helpers for the fast rational gcd path ---

using ZPoly = std::vector<mpz_class>;  // dense, little-endian

inline void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline mpz_class zcontent(const ZPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

inline ZPoly zprimitive(ZPoly p) {
  ztrim(p);
  if (p.empty()) return p;
  mpz_class c = zcontent(p);
  if (c > 1)
    for (auto& x : p) x /= c;
  if (p.back() < 0)
    for (auto& x : p) x = -x;
  return p;
}

inline mpz_class zeval(const ZPoly& p, const mpz_class& xi) {
  mpz_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * xi + *it;
  return acc;
}

inline mpz_class zmaxabs(const ZPoly& p) {
  mpz_class m = 0;
  for (const auto& c : p) {
    mpz_class a = abs(c);
    if (a > m) m = a;
  }
  return m;
}

// Exact division test over Q; g assumed nonzero.
inline bool zdivides(const ZPoly& g, const ZPoly& a) {
  if (a.empty()) return true;
  if (g.empty() || g.size() > a.size()) return false;
  std::vector<Rational> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = Rational(a[i], 1);
  Rational glead(g.back(), 1);
  long dg = static_cast<long>(g.size()) - 1;
  for (long k = static_cast<long>(a.size()) - 1; k >= dg; --k) {
    if (r[static_cast<std::size_t>(k)].is_zero()) continue;
    Rational f = r[static_cast<std::size_t>(k)] / glead;
    for (long i = 0; i <= dg; ++i)
      r[static_cast<std::size_t>(k - dg + i)] -= f * Rational(g[static_cast<std::size_t>(i)], 1);
  }
  for (long i = 0; i < dg; ++i)
    if (!r[static_cast<std::size_t>(i)].is_zero()) return false;
  return true;
}

inline ZPoly zreconstruct(mpz_class v, const mpz_class& xi) {
  ZPoly g;
  mpz_class half = xi / 2;
  while (v != 0) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), xi.get_mpz_t());  // r in [0, xi)
    if (r > half) r -= xi;
    g.push_back(r);
    v = (v - r) / xi;
  }
  return g;
}

// Pseudo-remainder based gcd; always correct, used as fallback.
inline ZPoly zgcd_prs(ZPoly a, ZPoly b) {
  a = zprimitive(std::move(a));
  b = zprimitive(std::move(b));
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    long db = static_cast<long>(b.size()) - 1;
    mpz_class lb = b.back();
    ZPoly r = a;
    while (!r.empty() && static_cast<long>(r.size()) - 1 >= db) {
      long dr = static_cast<long>(r.size()) - 1;
      mpz_class lead = r.back();
      for (auto& c : r) c *= lb;
      for (long i = 0; i <= db; ++i)
        r[static_cast<std::size_t>(dr - db + i)] -= lead * b[static_cast<std::size_t>(i)];
      ztrim(r);
    }
    r = zprimitive(std::move(r));
    a = std::move(b);
    b = std::move(r);
  }
  return zprimitive(std::move(a));
}

// Evaluation-homomorphism gcd with verification; falls back to the PRS route.
inline ZPoly zgcd(ZPoly a, ZPoly b) {
  a = zprimitive(std::move(a));
  b = zprimitive(std::move(b));
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.size() == 1 || b.size() == 1) return ZPoly{mpz_class(1)};
  mpz_class xi = 2 * std::min(zmaxabs(a), zmaxabs(b)) + 29;
  for (int attempt = 0; attempt < 5; ++attempt) {
    mpz_class va = zeval(a, xi), vb = zeval(b, xi);
    if (va != 0 && vb != 0) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), va.get_mpz_t(), vb.get_mpz_t());
      if (g == 1) return ZPoly{mpz_class(1)};  // certificate: any common factor divides both values
      ZPoly cand = zprimitive(zreconstruct(g, xi));
      if (!cand.empty() && zdivides(cand, a) && zdivides(cand, b)) return cand;
    }
    xi = xi * xi + 1;
  }
  return zgcd_prs(std::move(a), std::move(b));
}

inline void to_integer_poly(const Polynomial<Rational>& p, ZPoly& out) {
  out.clear();
  mpz_class l = 1;
  for (const auto& c : p.coefficients()) {
    mpz_class d = c.denominator();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    l = l / g * d;
  }
  for (const auto& c : p.coefficients()) out.push_back(c.numerator() * (l / c.denominator()));
  ztrim(out);
}

}  // namespace detail

/// Monic gcd. For rational coefficients this routes through integer
/// polynomials with an evaluation-homomorphism fast path; for other fields it
/// is the monic Euclidean algorithm.
template <class K>
Polynomial<K> gcd(const Polynomial<K>& a0, const Polynomial<K>& b0) {
  if (a0.is_zero()) return b0.monic();
  if (b0.is_zero()) return a0.monic();
  if (a0.is_constant() || b0.is_constant()) return Polynomial<K>(K(1));
  if constexpr (std::is_same_v<K, Rational>) {
    detail::ZPoly za, zb;
    detail::to_integer_poly(a0, za);
    detail::to_integer_poly(b0, zb);
    detail::ZPoly zg = detail::zgcd(std::move(za), std::move(zb));
    std::vector<Rational> rc(zg.size());
    for (std::size_t i = 0; i < zg.size(); ++i) rc[i] = Rational(zg[i], 1);
    return Polynomial<Rational>(std::move(rc)).monic();
  } else {
    Polynomial<K> a = a0.monic(), b = b0.monic();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
      Polynomial<K> r = (a % b);
      a = std::move(b);
      b = r.is_zero() ? r : r.monic();
    }
    return a;
  }
}

/// Exact polynomial square root, if the polynomial is a perfect square.
template <class K, class SqrtK>
std::optional<Polynomial<K>> poly_sqrt_exact(const Polynomial<K>& p, const SqrtK& sqrt_k) {
  if (p.is_zero()) return Polynomial<K>();
  long d = p.degree();
  if (d % 2 != 0) return std::nullopt;
  auto lead = sqrt_k(p.leading());
  if (!lead) return std::nullopt;
  long h = d / 2;
  std::vector<K> r(static_cast<std::size_t>(h) + 1);
  r[static_cast<std::size_t>(h)] = *lead;
  K two_lead = *lead + *lead;
  for (long i = h - 1; i >= 0; --i) {
    // match coefficient of x^(i+h)
    K s(0);
    for (long j = i + 1; j <= h; ++j) {
      long k = i + h - j;
      if (k <= h && k > i && k >= 0) s = s + r[static_cast<std::size_t>(j)] * r[static_cast<std::size_t>(k)];
    }
    r[static_cast<std::size_t>(i)] = (p.coeff(i + h) - s) / two_lead;
  }
  Polynomial<K> cand(std::move(r));
  if (cand * cand == p) return cand;
  return std::nullopt;
}

}  // namespace toprec

#endif  // TOPREC_POLYNOMIAL_HPP
