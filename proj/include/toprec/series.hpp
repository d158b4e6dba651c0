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

#ifndef TOPREC_SERIES_HPP
#define TOPREC_SERIES_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "toprec/tower.hpp"

namespace toprec {

/// Thrown when a computation needs series coefficients beyond the known
/// truncation; callers retry with longer expansions.
struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Truncated Laurent series in one formal variable with coefficients in a
/// field-like ring C. Coefficients are stored densely for exponents
/// [lo, trunc); `trunc` is the first unknown exponent. A series built from
/// finitely many terms is "exact" (trunc at the sentinel) and behaves like a
/// Laurent polynomial.
template <class C>
class LaurentSeries {
 public:
  static constexpr long kExact = 1L << 60;

  LaurentSeries() : lo_(0), trunc_(kExact) {}

  static LaurentSeries zero_truncated(long trunc) {
    LaurentSeries s;
    s.lo_ = trunc;
    s.trunc_ = trunc;
    return s;
  }
  static LaurentSeries monomial(C c, long e) {
    LaurentSeries s;
    if (!c.is_zero()) {
      s.lo_ = e;
      s.c_.push_back(std::move(c));
    }
    return s;
  }
  static LaurentSeries constant(C c) { return monomial(std::move(c), 0); }

  long lo() const { return lo_; }          // lowest stored exponent (valuation of known part)
  long trunc() const { return trunc_; }    // first unknown exponent
  bool is_exact() const { return trunc_ >= kExact / 2; }
  bool known_zero() const { return c_.empty(); }

  C coeff(long e) const {
    if (e >= trunc_) throw TruncationError("series coefficient beyond truncation");
    if (e < lo_ || e >= lo_ + static_cast<long>(c_.size())) return C(0);
    return c_[static_cast<std::size_t>(e - lo_)];
  }

  /// Valuation of the known part; for a known-zero series returns trunc.
  long valuation() const { return c_.empty() ? trunc_ : lo_; }

  LaurentSeries truncated(long new_trunc) const {
    LaurentSeries r = *this;
    if (new_trunc < r.trunc_) {
      r.trunc_ = new_trunc;
      long keep = new_trunc - r.lo_;
      if (keep <= 0) {
        r.c_.clear();
        r.lo_ = new_trunc;
      } else if (keep < static_cast<long>(r.c_.size())) {
        r.c_.resize(static_cast<std::size_t>(keep));
      }
      r.normalize();
    }
    return r;
  }

  LaurentSeries shifted(long k) const {
    LaurentSeries r = *this;
    r.lo_ += k;
    if (!r.is_exact()) r.trunc_ += k;
    return r;
  }

  LaurentSeries operator-() const {
    LaurentSeries r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    bool exact = a.is_exact() && b.is_exact();
    long t = exact ? kExact : std::min(a.trunc_, b.trunc_);
    LaurentSeries r;
    if (a.c_.empty() && b.c_.empty()) {
      r.trunc_ = t;
      r.lo_ = exact ? 0 : t;
      return r;
    }
    long lo = std::min(a.c_.empty() ? b.lo_ : a.lo_, b.c_.empty() ? a.lo_ : b.lo_);
    long hi = std::max(a.top(), b.top());
    if (!exact) hi = std::min(hi, t);
    if (hi < lo) hi = lo;
    r.lo_ = lo;
    r.trunc_ = t;
    r.c_.assign(static_cast<std::size_t>(hi - lo), C(0));
    for (long e = lo; e < hi; ++e)
      r.c_[static_cast<std::size_t>(e - lo)] = a.at(e) + b.at(e);
    r.normalize();
    return r;
  }
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    LaurentSeries r;
    if (a.c_.empty() || b.c_.empty()) {
      // known-zero times anything: zero, truncated where the product becomes unknown
      if (a.is_exact() && a.c_.empty()) return a;  // exact zero
      if (b.is_exact() && b.c_.empty()) return b;
      long t = std::min(a.c_.empty() ? a.trunc_ + b.valuation() : kExact,
                        b.c_.empty() ? b.trunc_ + a.valuation() : kExact);
      return zero_truncated(std::min(t, kExact));
    }
    bool exact = a.is_exact() && b.is_exact();
    long lo = a.lo_ + b.lo_;
    long t = exact ? kExact : std::min(a.trunc_ + b.lo_, b.trunc_ + a.lo_);
    long hi = exact ? a.top() + b.top() - 1 : t;  // exclusive
    if (!exact) hi = std::min(hi, t);
    r.lo_ = lo;
    r.trunc_ = t;
    r.c_.assign(static_cast<std::size_t>(std::max(0L, hi - lo)), C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      long ea = a.lo_ + static_cast<long>(i);
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j].is_zero()) continue;
        long e = ea + b.lo_ + static_cast<long>(j);
        if (e >= hi) break;
        r.c_[static_cast<std::size_t>(e - lo)] = r.c_[static_cast<std::size_t>(e - lo)] + a.c_[i] * b.c_[j];
      }
    }
    r.normalize();
    return r;
  }

  friend LaurentSeries operator*(const C& s, const LaurentSeries& a) {
    LaurentSeries r = a;
    if (s.is_zero()) {
      r.c_.clear();
      if (!r.is_exact()) r.lo_ = r.trunc_;
      else { r.lo_ = 0; r.trunc_ = kExact; }
      return r;
    }
    for (auto& c : r.c_) c = c * s;
    r.normalize();
    return r;
  }
  friend LaurentSeries operator*(const LaurentSeries& a, const C& s) { return s * a; }

  /// Multiplicative inverse with coefficients computed for exponents up to
  /// `upto` (inclusive). Requires a known nonzero leading coefficient.
  LaurentSeries inverse_to(long upto) const {
    if (c_.empty()) {
      if (is_exact()) throw std::domain_error("series: inverse of zero");
      throw TruncationError("series: inverse of a series with no known coefficients");
    }
    long v = lo_;
    long n = upto + v;  // number of unit-part coefficients needed, exponent range [0, n]
    if (n < 0) return zero_truncated(upto + 1);
    // unit part u = c_[0]^{-1} * (series shifted to valuation 0)
    C lead_inv = C(1) / c_[0];
    if (!is_exact() && trunc_ - lo_ <= n)
      throw TruncationError("series: not enough terms to invert (lo=" + std::to_string(lo_) +
                            " trunc=" + std::to_string(trunc_) + " need n=" + std::to_string(n) +
                            ")");
    std::vector<C> u(static_cast<std::size_t>(n) + 1, C(0));
    for (long i = 0; i <= n && i < static_cast<long>(c_.size()); ++i)
      u[static_cast<std::size_t>(i)] = c_[static_cast<std::size_t>(i)] * lead_inv;
    std::vector<C> inv(static_cast<std::size_t>(n) + 1, C(0));
    inv[0] = C(1);
    for (long k = 1; k <= n; ++k) {
      C s(0);
      for (long j = 1; j <= k; ++j)
        if (!u[static_cast<std::size_t>(j)].is_zero())
          s = s + u[static_cast<std::size_t>(j)] * inv[static_cast<std::size_t>(k - j)];
      inv[static_cast<std::size_t>(k)] = -s;
    }
    LaurentSeries r;
    r.lo_ = -v;
    r.trunc_ = upto + 1;
    r.c_.resize(static_cast<std::size_t>(n) + 1);
    for (long k = 0; k <= n; ++k) r.c_[static_cast<std::size_t>(k)] = inv[static_cast<std::size_t>(k)] * lead_inv;
    r.normalize();
    return r;
  }

  /// Quotient with coefficients known through `upto` when the operands allow
  /// it; with truncated operands the result carries the best achievable
  /// truncation instead of failing, so callers can retry at a higher budget.
  static LaurentSeries divide_to(const LaurentSeries& a, const LaurentSeries& b, long upto) {
    if (a.known_zero() && a.is_exact()) return a;
    if (b.known_zero()) {
      if (b.is_exact()) throw std::domain_error("series: division by zero");
      throw TruncationError("series: divisor has no known coefficients");
    }
    long want = upto - a.valuation();
    if (!b.is_exact()) want = std::min(want, b.trunc() - 2 * b.valuation() - 1);
    if (want + b.valuation() < 0) {
      // not even the leading quotient coefficient is computable
      return zero_truncated(a.valuation() + want + 1);
    }
    LaurentSeries binv = b.inverse_to(want);
    return (a * binv).truncated(upto + 1);
  }

  LaurentSeries derivative() const {
    LaurentSeries r;
    r.lo_ = lo_ - 1;
    r.trunc_ = is_exact() ? kExact : trunc_ - 1;
    r.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      long e = lo_ + static_cast<long>(i);
      r.c_[i] = c_[i] * C(e);
    }
    r.normalize();
    return r;
  }

  /// Termwise primitive with zero integration constant; the coefficient at
  /// exponent -1 must be zero.
  LaurentSeries antiderivative() const {
    LaurentSeries r;
    r.lo_ = lo_ + 1;
    r.trunc_ = is_exact() ? kExact : trunc_ + 1;
    r.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      long e = lo_ + static_cast<long>(i);
      if (e == -1) {
        if (!c_[i].is_zero())
          throw std::domain_error("series: antiderivative of a term with exponent -1");
        r.c_[i] = C(0);
        continue;
      }
      r.c_[i] = c_[i] / C(e + 1);
    }
    r.normalize();
    return r;
  }

  /// Square root with the leading coefficient root chosen by `sqrt_c`;
  /// requires even valuation. Coefficients computed up to `upto` (inclusive).
  template <class SqrtC>
  LaurentSeries sqrt_to(long upto, const SqrtC& sqrt_c) const {
    if (c_.empty()) {
      if (is_exact()) return *this;  // sqrt(0) = 0
      throw TruncationError("series: sqrt of a series with no known coefficients");
    }
    if (lo_ % 2 != 0)
      throw std::domain_error("series: sqrt of odd valuation");
    auto lead = sqrt_c(c_[0]);
    if (!lead)
      throw std::domain_error(
          "series: leading coefficient is not an exact square; choose parameters that make it one");
    long half = lo_ / 2;
    long n = upto - half;  // unit-part terms needed, [0, n]
    if (n < 0) n = 0;
    if (!is_exact() && trunc_ - lo_ < n + 1)
      throw TruncationError("series: not enough terms for sqrt");
    C lead_inv = C(1) / c_[0];
    std::vector<C> h(static_cast<std::size_t>(n) + 1, C(0));  // unit part of *this
    for (long i = 0; i <= n && i < static_cast<long>(c_.size()); ++i)
      h[static_cast<std::size_t>(i)] = c_[static_cast<std::size_t>(i)] * lead_inv;
    std::vector<C> rr(static_cast<std::size_t>(n) + 1, C(0));
    rr[0] = C(1);
    C two(2);
    for (long k = 1; k <= n; ++k) {
      C s(0);
      for (long j = 1; j < k; ++j)
        s = s + rr[static_cast<std::size_t>(j)] * rr[static_cast<std::size_t>(k - j)];
      rr[static_cast<std::size_t>(k)] = (h[static_cast<std::size_t>(k)] - s) / two;
    }
    LaurentSeries out;
    out.lo_ = half;
    out.trunc_ = upto + 1;
    out.c_.resize(static_cast<std::size_t>(n) + 1);
    for (long k = 0; k <= n; ++k) out.c_[static_cast<std::size_t>(k)] = (*lead) * rr[static_cast<std::size_t>(k)];
    out.normalize();
    return out;
  }

  template <class F>
  auto map(const F& f) const -> LaurentSeries<std::decay_t<decltype(f(std::declval<C>()))>> {
    using D = std::decay_t<decltype(f(std::declval<C>()))>;
    LaurentSeries<D> r;
    std::vector<D> cs(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) cs[i] = f(c_[i]);
    r.assign_raw(lo_, std::move(cs), trunc_);
    return r;
  }

  /// Like map but the callback also sees the exponent.
  template <class F>
  LaurentSeries map_with_exponent(const F& f) const {
    LaurentSeries r;
    std::vector<C> cs(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) cs[i] = f(lo_ + static_cast<long>(i), c_[i]);
    r.assign_raw(lo_, std::move(cs), trunc_);
    return r;
  }

  const std::vector<C>& stored() const { return c_; }

  void assign_raw(long lo, std::vector<C> cs, long trunc) {
    lo_ = lo;
    c_ = std::move(cs);
    trunc_ = trunc;
    normalize();
  }

  /// True if every known coefficient is zero and coefficients are known at
  /// least through `upto` (inclusive).
  bool is_zero_through(long upto) const { return c_.empty() && trunc_ > upto; }

 private:
  long top() const { return c_.empty() ? lo_ : lo_ + static_cast<long>(c_.size()); }  // exclusive
  C at(long e) const {  // stored value or zero; caller checks truncation
    if (e < lo_ || e >= top()) return C(0);
    return c_[static_cast<std::size_t>(e - lo_)];
  }
  void normalize() {
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead > 0) {
      c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
      lo_ += static_cast<long>(lead);
    }
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    if (c_.empty() && is_exact()) lo_ = 0;
    if (c_.empty() && !is_exact()) lo_ = trunc_;
  }

  long lo_;
  std::vector<C> c_;
  long trunc_;
};

template <class C>
using HbarSeries = LaurentSeries<C>;

/// Sign flip of the formal parameter: coefficients of odd exponents negate.
template <class C>
LaurentSeries<C> dagger(const LaurentSeries<C>& s) {
  return s.map_with_exponent([](long e, const C& c) { return (e % 2 != 0) ? -c : c; });
}

// ---------------------------------------------------------------------------
// expansion of tower elements

struct ExpansionPoint {
  bool at_infinity = false;
  Elem point;  // ignored when at_infinity
  static ExpansionPoint at(Elem p) { return ExpansionPoint{false, std::move(p)}; }
  static ExpansionPoint infinity() { return ExpansionPoint{true, Elem(0)}; }
};

/// Laurent expansion of `f` (whose top variable is at `var_level`) around a
/// point, with coefficients known through exponent `upto` inclusive. At a
/// finite point the local variable is w = z - p; at infinity it is w = 1/z.
inline LaurentSeries<Elem> expand_elem(const Elem& f, int var_level, const ExpansionPoint& pt,
                                       long upto) {
  using S = LaurentSeries<Elem>;
  if (f.level() < var_level) return S::constant(f);
  if (f.level() > var_level)
    throw std::logic_error("expand_elem: element has variables above the expansion variable");
  S x = pt.at_infinity
            ? S::monomial(Elem(1), -1)
            : S::monomial(pt.point, 0) + S::monomial(Elem(1), 1);
  auto emb = [](const Elem& c) { return S::constant(c); };
  S num = f.node().rf.num().eval_in(x, emb);
  S den = f.node().rf.den().eval_in(x, emb);
  return S::divide_to(num, den, upto);
}

/// Residue of f dz at a finite point (coefficient of (z-p)^{-1}) or at
/// infinity (minus the coefficient of z^{-1}, i.e. the du/u^2 convention).
inline Elem residue_elem(const Elem& f, int var_level, const ExpansionPoint& pt) {
  if (f.level() < var_level) return Elem(0);
  if (pt.at_infinity) {
    // f(1/u) d(1/u) = -f(1/u)/u^2 du; residue = -[u^1] f(1/u)
    LaurentSeries<Elem> s = expand_elem(f, var_level, pt, 1);
    return -s.coeff(1);
  }
  LaurentSeries<Elem> s = expand_elem(f, var_level, pt, 0);
  return s.coeff(-1);
}

}  // namespace toprec

#endif  // TOPREC_SERIES_HPP
