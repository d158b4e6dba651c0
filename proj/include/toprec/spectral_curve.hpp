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

#ifndef TOPREC_SPECTRAL_CURVE_HPP
#define TOPREC_SPECTRAL_CURVE_HPP

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "toprec/linsolve.hpp"
#include "toprec/param_field.hpp"

namespace toprec {

struct CurveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Global sheet involution z -> (a z + b) / (c z + d).
struct Mobius {
  Elem a, b, c, d;

  Elem apply(const Elem& z) const { return (a * z + b) / (c * z + d); }

  /// d(iota)/dz evaluated symbolically.
  Elem derivative(const Elem& z) const {
    Elem den = c * z + d;
    return (a * d - b * c) / (den * den);
  }

  /// Fixed points in the base field; infinity is reported separately.
  struct Fixed {
    std::vector<Elem> finite;
    bool at_infinity = false;
  };
  Fixed fixed_points() const {
    Fixed out;
    if (c.is_zero()) {
      out.at_infinity = true;
      Elem lin = d - a;
      if (!lin.is_zero()) out.finite.push_back(b / lin);
      return out;
    }
    // c z^2 + (d - a) z - b = 0
    Elem A = c, B = d - a, C = -b;
    Elem disc = B * B - Elem(4) * A * C;
    if (disc.is_zero()) {
      out.finite.push_back(-B / (Elem(2) * A));
      return out;
    }
    auto root = elem_sqrt(disc);
    if (!root) throw CurveError("involution fixed points are not field-rational");
    out.finite.push_back((-B + *root) / (Elem(2) * A));
    out.finite.push_back((-B - *root) / (Elem(2) * A));
    return out;
  }
};

/// Genus-zero spectral curve with a global rational parametrization and a
/// global sheet involution. The uniformizing variable lives at tower level 2,
/// the scalar parameter (if any) at level 1.
struct SpectralCurve {
  std::string name;
  ParamField field;
  Elem x, y;                               // functions of the level-2 variable
  Mobius iota;
  std::vector<Elem> branch_points;         // zeros of dx/dz, field-rational
  std::vector<ExpansionPoint> punctures;   // poles of x
  Elem e_num_x, e_den_x;                   // defining E(x) with a level-2 "x" variable
  std::optional<Elem> even_zero_x;         // double zero of E, when present

  Elem dx() const { return dvar(x, 2); }

  Elem x_of(const Elem& z) const { return substitute_var(x, 2, z); }
  Elem y_of(const Elem& z) const { return substitute_var(y, 2, z); }

  Elem e_of_x(const Elem& xv) const {
    Elem n = substitute_var(e_num_x, 2, xv);
    Elem d = substitute_var(e_den_x, 2, xv);
    return n / d;
  }

  /// Structural invariants; returns human-readable failure strings.
  std::vector<std::string> validate() const;
};

namespace detail {

inline Elem zvar() { return Elem::var(2); }

inline void check_divides_exactly(const SpectralCurve& c, std::vector<std::string>& bad) {
  // branch points are exactly the zeros of the numerator of dx/dz
  Elem dxn = c.dx();
  if (dxn.is_zero()) {
    bad.push_back("dx/dz vanishes identically");
    return;
  }
  Polynomial<Elem> num =
      dxn.level() < 2 ? Polynomial<Elem>(dxn) : dxn.node().rf.num();
  for (const auto& r : c.branch_points) {
    bool divided = false;
    Polynomial<Elem> lin(std::vector<Elem>{-r, Elem(1)});
    while (!num.is_zero()) {
      auto [q, rem] = num.divrem(lin);
      if (!rem.is_zero()) break;
      num = q;
      divided = true;
    }
    if (!divided) bad.push_back("branch point is not a zero of dx/dz");
  }
  if (num.degree() > 0)
    bad.push_back("dx/dz has zeros besides the declared branch points");
}

}  // namespace detail

inline std::vector<std::string> SpectralCurve::validate() const {
  std::vector<std::string> bad;
  Elem z = detail::zvar();

  if (field.theta.is_zero()) bad.push_back("theta must be nonzero");

  Elem iz = iota.apply(z);
  if (iota.apply(iz) != z) bad.push_back("iota is not an involution: iota(iota(z)) != z");
  if (x_of(iz) != x) bad.push_back("x is not involution-invariant: x(iota(z)) != x(z)");
  if (y_of(iz) != -y) bad.push_back("y is not involution-odd: y(iota(z)) != -y(z)");

  for (const auto& r : branch_points)
    if (iota.apply(r) != r) bad.push_back("involution does not fix a branch point");

  detail::check_divides_exactly(*this, bad);

  if (y * y != e_of_x(x)) bad.push_back("y(z)^2 != E(x(z))");

  if (field.q0) {
    Elem tp = Elem(4) * field.q0->pow(3) + field.theta;
    if (tp.is_zero()) bad.push_back("turning point: 4 q0^3 + theta = 0");
  }

  // punctures are exactly the poles of x
  {
    Polynomial<Elem> den = x.level() < 2 ? Polynomial<Elem>(Elem(1)) : x.node().rf.den();
    Polynomial<Elem> num = x.level() < 2 ? Polynomial<Elem>(x) : x.node().rf.num();
    bool infinity_listed = false;
    for (const auto& p : punctures) {
      if (p.at_infinity) {
        infinity_listed = true;
        continue;
      }
      bool divided = false;
      Polynomial<Elem> lin(std::vector<Elem>{-p.point, Elem(1)});
      while (!den.is_zero()) {
        auto [q, rem] = den.divrem(lin);
        if (!rem.is_zero()) break;
        den = q;
        divided = true;
      }
      if (!divided) bad.push_back("declared puncture is not a pole of x");
    }
    if (den.degree() > 0) bad.push_back("x has poles besides the declared punctures");
    bool pole_at_infinity = num.degree() > den.degree();
    if (pole_at_infinity != infinity_listed)
      bad.push_back("puncture list disagrees with the pole of x at infinity");
  }

  return bad;
}

// ---------------------------------------------------------------------------
// built-in curves

/// Painlevé 2, Jimbo-Miwa form. Symbolic mode uses the parameter s with
/// q0 = -theta/s^2; numeric mode requires -theta/q0 to be a perfect rational
/// square.
inline SpectralCurve build_jm(const Rational& theta, std::optional<Rational> q0_value = {}) {
  SpectralCurve c;
  c.name = "jm";
  Elem z = detail::zvar();
  Elem s, q0;
  if (q0_value) {
    Rational ratio_den = *q0_value;
    if (ratio_den.is_zero()) throw std::invalid_argument("jm: q0 must be nonzero");
    Rational ratio = -theta / *q0_value;
    auto sv = ratio.sqrt_exact();
    if (!sv)
      throw std::invalid_argument(
          "jm numeric mode requires -theta/q0 to be a perfect rational square; got " +
          ratio.to_string());
    c.field = ParamField::numeric_field(theta, q0_value);
    s = Elem(*sv);
    q0 = Elem(*q0_value);
  } else {
    c.field = ParamField::symbolic_s(theta);
    s = Elem::var(1);
    q0 = *c.field.q0;
  }
  Elem half_s = s / Elem(2);
  c.x = -q0 + half_s * (z + Elem(1) / z);
  c.y = half_s * (z - Elem(1) / z) * (c.x - q0);
  c.iota = Mobius{Elem(0), Elem(1), Elem(1), Elem(0)};  // z -> 1/z
  c.branch_points = {Elem(1), Elem(-1)};
  c.punctures = {ExpansionPoint::at(Elem(0)), ExpansionPoint::infinity()};
  Elem xv = detail::zvar();  // reused as the "x" variable of E
  Elem theta_e = c.field.theta;
  c.e_num_x = (xv - q0).pow(2) * ((xv + q0).pow(2) + theta_e / q0);
  c.e_den_x = Elem(1);
  c.even_zero_x = q0;
  return c;
}

/// Painlevé 2, Harnad-Tracy-Widom form; everything is rational in q0.
inline SpectralCurve build_htw(const Rational& theta, std::optional<Rational> q0_value = {}) {
  SpectralCurve c;
  c.name = "htw";
  Elem z = detail::zvar();
  Elem q0;
  if (q0_value) {
    if (q0_value->is_zero()) throw std::invalid_argument("htw: q0 must be nonzero");
    c.field = ParamField::numeric_field(theta, q0_value);
    q0 = Elem(*q0_value);
  } else {
    c.field = ParamField::symbolic_q0(theta);
    q0 = Elem::var(1);
  }
  Elem theta_e = c.field.theta;
  c.x = Elem(2) * q0 * q0 * (z * z - Elem(1));
  c.y = z * (theta_e - Elem(4) * q0.pow(3) * (z * z - Elem(1))) /
        (Elem(4) * q0 * q0 * (z * z - Elem(1)));
  c.iota = Mobius{Elem(-1), Elem(0), Elem(0), Elem(1)};  // z -> -z
  c.branch_points = {Elem(0)};
  c.punctures = {ExpansionPoint::infinity()};
  Elem xv = detail::zvar();
  c.e_num_x = (xv - theta_e / (Elem(2) * q0)).pow(2) * (xv + Elem(2) * q0 * q0);
  c.e_den_x = Elem(2) * xv * xv;
  c.even_zero_x = theta_e / (Elem(2) * q0);
  return c;
}

/// Hermite-Weber curve Y^2 = X^2/4 - theta, rational in w = sqrt(theta).
inline SpectralCurve build_weber(const Rational& theta, bool symbolic = true) {
  SpectralCurve c;
  c.name = "weber";
  Elem z = detail::zvar();
  Elem w;
  if (symbolic) {
    c.field = ParamField::symbolic_w(theta);
    w = Elem::var(1);
  } else {
    auto wv = theta.sqrt_exact();
    if (!wv)
      throw std::invalid_argument(
          "weber numeric mode requires theta to be a perfect rational square; got " +
          theta.to_string());
    c.field = ParamField::numeric_field(theta, std::nullopt);
    w = Elem(*wv);
  }
  c.x = w * (z + Elem(1) / z);
  c.y = (w / Elem(2)) * (z - Elem(1) / z);
  c.iota = Mobius{Elem(0), Elem(1), Elem(1), Elem(0)};
  c.branch_points = {Elem(1), Elem(-1)};
  c.punctures = {ExpansionPoint::at(Elem(0)), ExpansionPoint::infinity()};
  Elem xv = detail::zvar();
  c.e_num_x = xv * xv / Elem(4) - c.field.theta;
  c.e_den_x = Elem(1);
  return c;
}

/// Bessel curve Y^2 = (X + theta^2)/(4 X^2); rational in theta itself.
inline SpectralCurve build_bessel(std::optional<Rational> theta_value) {
  SpectralCurve c;
  c.name = "bessel";
  Elem z = detail::zvar();
  Elem th;
  if (theta_value) {
    ParamField::require_theta(*theta_value);
    c.field = ParamField::numeric_field(*theta_value, std::nullopt);
    th = Elem(*theta_value);
  } else {
    c.field = ParamField::symbolic_theta();
    th = Elem::var(1);
  }
  c.x = th * th * (z * z - Elem(1));
  c.y = z / (Elem(2) * th * (z * z - Elem(1)));
  c.iota = Mobius{Elem(-1), Elem(0), Elem(0), Elem(1)};
  c.branch_points = {Elem(0)};
  c.punctures = {ExpansionPoint::infinity()};
  Elem xv = detail::zvar();
  c.e_num_x = xv + th * th;
  c.e_den_x = Elem(4) * xv * xv;
  return c;
}

inline SpectralCurve build_curve(const std::string& id, const Rational& theta,
                                 std::optional<Rational> q0_value, bool symbolic) {
  if (id == "jm") return build_jm(theta, symbolic ? std::nullopt : q0_value);
  if (id == "htw") return build_htw(theta, symbolic ? std::nullopt : q0_value);
  if (id == "weber") return build_weber(theta, symbolic || !theta.sqrt_exact().has_value());
  if (id == "bessel") return build_bessel(symbolic ? std::nullopt : std::optional<Rational>(theta));
  throw std::invalid_argument("unknown curve id '" + id + "' (expected jm, htw, weber, bessel)");
}

// ---------------------------------------------------------------------------
// reconstruction of E(x) from the parametrization

/// Writes an involution-invariant function f(z) as P(x(z))/Q(x(z)) with
/// deg P, deg Q <= dmax, by exact linear algebra. Returns (P, Q) as elements
/// in a level-2 "x" variable.
inline std::optional<std::pair<Elem, Elem>> express_in_x(const SpectralCurve& c, const Elem& f,
                                                         long dmax) {
  // clear denominators: fn * sum b_j xn^j xd^(D-j) = fd * sum a_i xn^i xd^(D-i)
  Polynomial<Elem> xn = c.x.level() < 2 ? Polynomial<Elem>(c.x) : c.x.node().rf.num();
  Polynomial<Elem> xd = c.x.level() < 2 ? Polynomial<Elem>(Elem(1)) : c.x.node().rf.den();
  Polynomial<Elem> fn = f.level() < 2 ? Polynomial<Elem>(f) : f.node().rf.num();
  Polynomial<Elem> fd = f.level() < 2 ? Polynomial<Elem>(Elem(1)) : f.node().rf.den();

  long D = dmax;
  std::vector<Polynomial<Elem>> xpow(static_cast<std::size_t>(D) + 1);
  std::vector<Polynomial<Elem>> dpow(static_cast<std::size_t>(D) + 1);
  xpow[0] = Polynomial<Elem>(Elem(1));
  dpow[0] = Polynomial<Elem>(Elem(1));
  for (long i = 1; i <= D; ++i) {
    xpow[static_cast<std::size_t>(i)] = xpow[static_cast<std::size_t>(i - 1)] * xn;
    dpow[static_cast<std::size_t>(i)] = dpow[static_cast<std::size_t>(i - 1)] * xd;
  }
  // columns: a_0..a_D then b_0..b_D
  std::vector<Polynomial<Elem>> cols;
  for (long i = 0; i <= D; ++i)
    cols.push_back(-(fd * xpow[static_cast<std::size_t>(i)] * dpow[static_cast<std::size_t>(D - i)]));
  for (long j = 0; j <= D; ++j)
    cols.push_back(fn * xpow[static_cast<std::size_t>(j)] * dpow[static_cast<std::size_t>(D - j)]);
  long maxdeg = -1;
  for (const auto& p : cols) maxdeg = std::max(maxdeg, p.degree());
  std::vector<std::vector<Elem>> rows(static_cast<std::size_t>(maxdeg + 1),
                                      std::vector<Elem>(cols.size(), Elem(0)));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (long e = 0; e <= cols[j].degree(); ++e)
      rows[static_cast<std::size_t>(e)][j] = cols[j].coeff(e);
  auto sol = gaussian_nullspace(std::move(rows), cols.size());
  if (!sol) return std::nullopt;
  Elem xv = detail::zvar();
  Elem P(0), Q(0), xp(1);
  for (long i = 0; i <= D; ++i) {
    P = P + (*sol)[static_cast<std::size_t>(i)] * xp;
    Q = Q + (*sol)[static_cast<std::size_t>(D + 1 + i)] * xp;
    xp = xp * xv;
  }
  if (Q.is_zero()) return std::nullopt;
  return std::make_pair(P, Q);
}

// ---------------------------------------------------------------------------
// curve-definition documents

namespace detail {

inline Elem coeff_from_json(const nlohmann::json& j) {
  // "p/q" string, array of strings (polynomial in the parameter), or
  // {num: [...], den: [...]} for a rational function of the parameter
  Elem s1 = Elem::var(1);
  if (j.is_string()) return Elem(Rational::parse(j.get<std::string>()));
  if (j.is_array()) {
    Elem acc(0), p(1);
    for (const auto& e : j) {
      acc = acc + Elem(Rational::parse(e.get<std::string>())) * p;
      p = p * s1;
    }
    return acc;
  }
  if (j.is_object()) {
    Elem n = coeff_from_json(j.at("num"));
    Elem d = j.contains("den") ? coeff_from_json(j.at("den")) : Elem(1);
    return n / d;
  }
  throw CurveError("curve file: bad coefficient entry");
}

inline Elem ratfunc_from_json(const nlohmann::json& j) {
  Elem z = zvar();
  auto poly = [&](const nlohmann::json& arr) {
    Elem acc(0), p(1);
    for (const auto& e : arr) {
      acc = acc + coeff_from_json(e) * p;
      p = p * z;
    }
    return acc;
  };
  Elem n = poly(j.at("num"));
  Elem d = j.contains("den") ? poly(j.at("den")) : Elem(1);
  if (d.is_zero()) throw CurveError("curve file: zero denominator polynomial");
  return n / d;
}

inline std::optional<Elem> linear_root(Polynomial<Elem>& p, const Elem& candidate) {
  Polynomial<Elem> lin(std::vector<Elem>{-candidate, Elem(1)});
  auto [q, r] = p.divrem(lin);
  if (!r.is_zero()) return std::nullopt;
  p = q;
  return candidate;
}

}  // namespace detail

/// Loads a curve document, derives branch points and punctures, reconstructs
/// E(x), and validates every structural identity. Throws CurveError with the
/// list of violated identities.
inline SpectralCurve load_curve(const nlohmann::json& j) {
  SpectralCurve c;
  c.name = j.value("name", std::string("custom"));
  Rational theta = Rational::parse(j.at("theta").get<std::string>());
  std::string param = j.value("parameter", std::string(""));
  if (param.empty()) {
    c.field = ParamField::numeric_field(theta, std::nullopt);
  } else {
    // a named free parameter; the document is responsible for its meaning
    c.field.symbol = param;
    c.field.theta = Elem(theta);
    c.field.theta_value = theta;
    c.field.report_substitution = j.value("report_substitution", param);
  }
  c.x = detail::ratfunc_from_json(j.at("x"));
  c.y = detail::ratfunc_from_json(j.at("y"));
  const auto& inv = j.at("involution");
  c.iota = Mobius{detail::coeff_from_json(inv.at("a")), detail::coeff_from_json(inv.at("b")),
                  detail::coeff_from_json(inv.at("c")), detail::coeff_from_json(inv.at("d"))};

  // branch points: involution-fixed zeros of dx/dz
  Elem dxn = c.dx();
  if (dxn.is_zero()) throw CurveError("curve file: dx/dz vanishes identically");
  Polynomial<Elem> num = dxn.level() < 2 ? Polynomial<Elem>(dxn) : dxn.node().rf.num();
  auto fixed = c.iota.fixed_points();
  for (const auto& r : fixed.finite) {
    bool took = false;
    for (;;) {
      auto got = detail::linear_root(num, r);
      if (!got) break;
      took = true;
    }
    if (took) c.branch_points.push_back(r);
  }
  if (num.degree() > 0)
    throw CurveError("curve file: dx/dz has zeros away from the involution-fixed points");

  // punctures: poles of x, peeled from candidate locations
  {
    Polynomial<Elem> den = c.x.level() < 2 ? Polynomial<Elem>(Elem(1)) : c.x.node().rf.den();
    Polynomial<Elem> xnum = c.x.level() < 2 ? Polynomial<Elem>(c.x) : c.x.node().rf.num();
    std::vector<Elem> candidates = {Elem(0), Elem(1), Elem(-1)};
    for (const auto& r : fixed.finite) candidates.push_back(r);
    if (j.contains("punctures"))
      for (const auto& e : j.at("punctures"))
        if (e.is_string() && e.get<std::string>() != "inf")
          candidates.push_back(Elem(Rational::parse(e.get<std::string>())));
    long xnum_deg = xnum.degree(), xden_deg = den.degree();
    for (const auto& cand : candidates) {
      bool took = false;
      while (den.degree() > 0) {
        auto got = detail::linear_root(den, cand);
        if (!got) break;
        took = true;
      }
      if (took) c.punctures.push_back(ExpansionPoint::at(cand));
    }
    if (den.degree() > 0)
      throw CurveError(
          "curve file: could not locate all poles of x; list them in a 'punctures' field");
    if (xnum_deg > xden_deg) c.punctures.push_back(ExpansionPoint::infinity());
  }

  auto e = express_in_x(c, c.y * c.y, 8);
  if (!e) throw CurveError("curve file: y^2 is not a rational function of x of degree <= 8");
  c.e_num_x = e->first;
  c.e_den_x = e->second;

  auto bad = c.validate();
  if (!bad.empty()) {
    std::string msg = "curve file failed validation:";
    for (const auto& b : bad) msg += "\n  - " + b;
    throw CurveError(msg);
  }
  return c;
}

inline SpectralCurve load_curve_text(const std::string& text) {
  return load_curve(nlohmann::json::parse(text));
}

}  // namespace toprec

#endif  // TOPREC_SPECTRAL_CURVE_HPP
