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

#ifndef TOPREC_PARAM_FIELD_HPP
#define TOPREC_PARAM_FIELD_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "toprec/series.hpp"
#include "toprec/tower.hpp"

namespace toprec {

/// Exact square root of a tower element, when one exists in the same field.
inline std::optional<Elem> elem_sqrt(const Elem& e) {
  if (e.is_rational()) {
    auto r = e.rational().sqrt_exact();
    if (!r) return std::nullopt;
    return Elem(*r);
  }
  auto cb = [](const Elem& c) { return elem_sqrt(c); };
  auto n = poly_sqrt_exact(e.node().rf.num(), cb);
  if (!n) return std::nullopt;
  auto d = poly_sqrt_exact(e.node().rf.den(), cb);
  if (!d) return std::nullopt;
  return Elem::make(e.node().level, RationalFunction<Elem>(*n, *d));
}

/// Scalar coefficient field of a curve: rational numbers extended by at most
/// one free parameter (level-1 variable). Carries the monodromy constant, the
/// Painlevé leading coefficient q0 when meaningful, and the action of d/dt on
/// the parameter.
struct ParamField {
  std::string symbol;                    // empty for a purely numeric field
  Elem theta = Elem(1);                  // level <= 1
  std::optional<Rational> theta_value;   // numeric value when known
  std::optional<Elem> q0;                // level <= 1
  Elem dt_of_param = Elem(0);            // image of the parameter under d/dt
  std::string report_substitution;       // how the parameter reads in (q0, theta)

  bool numeric() const { return symbol.empty(); }

  static ParamField numeric_field(const Rational& theta, std::optional<Rational> q0_value) {
    require_theta(theta);
    ParamField f;
    f.theta = Elem(theta);
    f.theta_value = theta;
    if (q0_value) {
      f.q0 = Elem(*q0_value);
      require_no_turning_point(f.theta, *f.q0);
    }
    return f;
  }

  /// Field Q(q0) with dq0/dt = -q0^2/(4 q0^3 + theta).
  static ParamField symbolic_q0(const Rational& theta) {
    require_theta(theta);
    ParamField f;
    f.symbol = "q0";
    f.theta = Elem(theta);
    f.theta_value = theta;
    f.q0 = Elem::var(1);
    f.dt_of_param = dt_q0(f.theta, *f.q0);
    f.report_substitution = "q0";
    return f;
  }

  /// Field Q(s) with q0 = -theta/s^2, so the square root s of -theta/q0 is a
  /// field element; d/dt acts through the chain rule.
  static ParamField symbolic_s(const Rational& theta) {
    require_theta(theta);
    ParamField f;
    f.symbol = "s";
    f.theta = Elem(theta);
    f.theta_value = theta;
    Elem s = Elem::var(1);
    f.q0 = -f.theta / (s * s);
    Elem dq0_ds = dvar(*f.q0, 1);
    f.dt_of_param = dt_q0(f.theta, *f.q0) / dq0_ds;
    f.report_substitution = "s^2=-theta/q0";
    return f;
  }

  /// Field Q(w) with theta = w^2; no isomonodromic time attached.
  static ParamField symbolic_w(const Rational& theta) {
    require_theta(theta);
    ParamField f;
    f.symbol = "w";
    Elem w = Elem::var(1);
    f.theta = w * w;
    f.theta_value = theta;
    f.report_substitution = "w^2=theta";
    return f;
  }

  /// Field Q(theta) with the monodromy constant itself as the parameter.
  static ParamField symbolic_theta() {
    ParamField f;
    f.symbol = "theta";
    f.theta = Elem::var(1);
    f.report_substitution = "theta";
    return f;
  }

  /// The isomonodromic time t = -2 q0^2 + theta/q0.
  Elem t() const {
    if (!q0) throw std::logic_error("ParamField: no q0 in this field");
    return Elem(-2) * (*q0) * (*q0) + theta / (*q0);
  }

  /// d/dt as a derivation on the field.
  Elem dt(const Elem& e) const {
    if (dt_of_param.is_zero() && !numeric())
      throw std::logic_error("ParamField: this field carries no time derivation");
    if (numeric())
      throw std::logic_error("ParamField: time derivation needs a symbolic parameter");
    return tower_derive(e, [this](int l) { return l == 1 ? dt_of_param : Elem(0); });
  }

  /// Substitutes a numeric value for the parameter (variables above level 1
  /// are untouched).
  Elem specialize(const Elem& e, const Rational& value) const {
    if (numeric()) return e;
    return substitute(e, [&](int l) { return l == 1 ? Elem(value) : Elem::var(l); }, 1);
  }

  static Elem dt_q0(const Elem& theta, const Elem& q0) {
    return -(q0 * q0) / (Elem(4) * q0.pow(3) + theta);
  }

  static void require_theta(const Rational& theta) {
    if (theta.is_zero()) throw std::invalid_argument("the monodromy constant theta must be nonzero");
  }
  static void require_no_turning_point(const Elem& theta, const Elem& q0) {
    if ((Elem(4) * q0.pow(3) + theta).is_zero())
      throw std::invalid_argument("turning point: 4 q0^3 + theta must be nonzero");
  }
};

/// Rewrites an even rational function of the level-1 parameter as a rational
/// function of `image` substituted for the parameter squared. Throws if the
/// input is not even.
inline Elem reexpress_even(const Elem& f, const Elem& image) {
  if (f.is_rational()) return f;
  if (f.level() != 1) throw std::logic_error("reexpress_even: expected a level-1 element");
  const auto& rf = f.node().rf;
  auto mirror = [](const Polynomial<Elem>& p) {
    std::vector<Elem> cs(p.coefficients());
    for (std::size_t i = 1; i < cs.size(); i += 2) cs[i] = -cs[i];
    return Polynomial<Elem>(std::move(cs));
  };
  Polynomial<Elem> dm = mirror(rf.den());
  Polynomial<Elem> num = rf.num() * dm;
  Polynomial<Elem> den = rf.den() * dm;
  auto even_part = [&](const Polynomial<Elem>& p, const char* what) {
    std::vector<Elem> ev;
    for (long i = 0; i <= p.degree(); ++i) {
      if (i % 2 == 1) {
        if (!p.coeff(i).is_zero())
          throw std::domain_error(std::string("reexpress_even: ") + what + " is not even");
      } else {
        ev.push_back(p.coeff(i));
      }
    }
    return Polynomial<Elem>(std::move(ev));
  };
  Polynomial<Elem> ne = even_part(num, "numerator");
  Polynomial<Elem> de = even_part(den, "denominator");
  Elem n = ne.eval_in(image, [](const Elem& c) { return c; });
  Elem d = de.eval_in(image, [](const Elem& c) { return c; });
  return n / d;
}

}  // namespace toprec

#endif  // TOPREC_PARAM_FIELD_HPP
