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

#ifndef TOPREC_RATIONAL_FUNCTION_HPP
#define TOPREC_RATIONAL_FUNCTION_HPP

#include <stdexcept>
#include <utility>

#include "toprec/polynomial.hpp"

namespace toprec {

/// Fraction of polynomials over a field K, kept in canonical form:
/// gcd(num, den) = 1 and den monic. Equality is representation equality,
/// which canonical form makes well defined.
template <class K>
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Polynomial<K>(K(1))) {}
  explicit RationalFunction(K c) : num_(Polynomial<K>(std::move(c))), den_(Polynomial<K>(K(1))) {}
  explicit RationalFunction(Polynomial<K> p) : num_(std::move(p)), den_(Polynomial<K>(K(1))) {}
  RationalFunction(Polynomial<K> n, Polynomial<K> d) : num_(std::move(n)), den_(std::move(d)) {
    normalize();
  }

  static RationalFunction variable() { return RationalFunction(Polynomial<K>::variable()); }

  /// Trusted factory: caller guarantees the pair is already canonical
  /// (coprime, monic denominator). Used where canonical form is preserved
  /// structurally, e.g. variable relabeling.
  static RationalFunction raw(Polynomial<K> n, Polynomial<K> d) {
    RationalFunction r;
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    return r;
  }

  const Polynomial<K>& num() const { return num_; }
  const Polynomial<K>& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  RationalFunction operator-() const {
    RationalFunction r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return RationalFunction();
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("RationalFunction: division by zero");
    if (a.is_zero()) return RationalFunction();
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }

  RationalFunction inverse() const {
    if (is_zero()) throw std::domain_error("RationalFunction: inverse of zero");
    return RationalFunction(den_, num_);
  }

  RationalFunction derivative() const {
    // (n/d)' with the gcd cleanup left to the constructor
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  RationalFunction pow(long e) const {
    if (e == 0) return RationalFunction(K(1));
    if (e < 0) return inverse().pow(-e);
    RationalFunction r(K(1));
    RationalFunction b = *this;
    while (e > 0) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  K eval(const K& x) const {
    K d = den_.eval(x);
    if (d.is_zero()) throw std::domain_error("RationalFunction: evaluation at a pole");
    return num_.eval(x) / d;
  }

  template <class A, class Embed>
  A eval_in(const A& x, const Embed& embed) const {
    A n = num_.eval_in(x, embed);
    A d = den_.eval_in(x, embed);
    return n / d;
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

 private:
  void normalize() {
    if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    if (num_.is_zero()) {
      den_ = Polynomial<K>(K(1));
      return;
    }
    if (den_.degree() == 0) {
      num_ = num_ * (K(1) / den_.leading());
      den_ = Polynomial<K>(K(1));
      return;
    }
    if (num_.degree() == 0) {
      K lead = den_.leading();
      num_ = num_ * (K(1) / lead);
      den_ = den_ * (K(1) / lead);
      return;
    }
    Polynomial<K> g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
    K lead = den_.leading();
    if (!lead.is_one()) {
      K inv = K(1) / lead;
      num_ = num_ * inv;
      den_ = den_ * inv;
    }
  }

  Polynomial<K> num_, den_;
};

}  // namespace toprec

#endif  // TOPREC_RATIONAL_FUNCTION_HPP
