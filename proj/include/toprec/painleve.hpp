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

#ifndef TOPREC_PAINLEVE_HPP
#define TOPREC_PAINLEVE_HPP

#include <stdexcept>
#include <vector>

#include "toprec/param_field.hpp"
#include "toprec/reference_tables.hpp"

namespace toprec {

enum class LaxFlavor { JimboMiwa, HarnadTracyWidom };

inline const char* flavor_name(LaxFlavor f) {
  return f == LaxFlavor::JimboMiwa ? "jm" : "htw";
}

/// Formal power-series solution of the compatibility system
///   h qdot = p + q^2 + t/2,   h pdot = -2 q p - theta,
/// expanded around the algebraic leading term: 2 q0^3 + t q0 - theta = 0,
/// p0 = -theta/(2 q0). All coefficients are exact functions of q0 through the
/// field's parameter; t is never an independent variable.
struct PainleveExpansion {
  ParamField field;
  HbarSeries<Elem> q, p;
  int order = 0;  // coefficients known through this power

  Elem dt(const Elem& e) const { return field.dt(e); }

  HbarSeries<Elem> dt_series(const HbarSeries<Elem>& s) const {
    return s.map([this](const Elem& c) { return field.dt(c); });
  }
};

/// Expands q and p through order K. The order-k coefficients solve the 2x2
/// linear system with determinant (4 q0^3 + theta)/q0, nonzero away from
/// turning points.
inline PainleveExpansion expand_qp(const ParamField& field, int K) {
  if (!field.q0) throw std::invalid_argument("expand_qp: field carries no q0");
  if (field.numeric())
    throw std::invalid_argument("expand_qp: needs a symbolic parameter to differentiate in t");
  PainleveExpansion out;
  out.field = field;
  out.order = K;
  Elem q0 = *field.q0;
  Elem theta = field.theta;
  Elem p0 = -theta / (Elem(2) * q0);
  std::vector<Elem> q(static_cast<std::size_t>(K) + 1), p(static_cast<std::size_t>(K) + 1);
  q[0] = q0;
  p[0] = p0;
  Elem det = Elem(4) * q0 * q0 - Elem(2) * p0;  // (4 q0^3 + theta)/q0
  if (det.is_zero()) throw std::invalid_argument("expand_qp: turning point");
  for (int k = 1; k <= K; ++k) {
    Elem a = field.dt(q[static_cast<std::size_t>(k - 1)]);
    Elem b = -field.dt(p[static_cast<std::size_t>(k - 1)]);
    for (int i = 1; i < k; ++i) {
      a = a - q[static_cast<std::size_t>(i)] * q[static_cast<std::size_t>(k - i)];
      b = b - Elem(2) * q[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(k - i)];
    }
    // 2 q0 qk + pk = a ;  2 p0 qk + 2 q0 pk = b
    Elem qk = (Elem(2) * q0 * a - b) / det;
    Elem pk = a - Elem(2) * q0 * qk;
    q[static_cast<std::size_t>(k)] = qk;
    p[static_cast<std::size_t>(k)] = pk;
  }
  out.q.assign_raw(0, std::move(q), K + 1);
  out.p.assign_raw(0, std::move(p), K + 1);
  return out;
}

/// Hamiltonian function sigma = p^2/2 + (q^2 + t/2) p + theta q as a series;
/// only even powers survive.
inline HbarSeries<Elem> sigma_series(const PainleveExpansion& ex) {
  using S = HbarSeries<Elem>;
  Elem t = ex.field.t();
  Elem theta = ex.field.theta;
  S half = S::constant(Elem(Rational(1, 2)));
  S sigma = half * (ex.p * ex.p) + (ex.q * ex.q + S::constant(t / Elem(2))) * ex.p +
            S::constant(theta) * ex.q;
  return sigma;
}

/// The reported Hamiltonian: sigma itself for the Jimbo-Miwa pair, sigma +
/// t^2/8 for the Harnad-Tracy-Widom pair.
inline HbarSeries<Elem> hamiltonian_series(const PainleveExpansion& ex, LaxFlavor flavor) {
  HbarSeries<Elem> h = sigma_series(ex);
  if (flavor == LaxFlavor::HarnadTracyWidom) {
    Elem t = ex.field.t();
    h = h + HbarSeries<Elem>::constant(t * t / Elem(8));
  }
  return h;
}

/// Residual of (h sigma'')^2 + 4 sigma'^3 + 2t sigma'^2 - 2 sigma sigma'
/// - theta^2/4, which must vanish identically order by order.
inline HbarSeries<Elem> sigma_form_residual(const PainleveExpansion& ex,
                                            const HbarSeries<Elem>& sigma) {
  using S = HbarSeries<Elem>;
  Elem t = ex.field.t();
  Elem theta = ex.field.theta;
  S sdot = ex.dt_series(sigma);
  S hsddot = ex.dt_series(sdot).shifted(1);
  S r = hsddot * hsddot + S::constant(Elem(4)) * sdot * sdot * sdot +
        S::constant(Elem(2) * t) * sdot * sdot - S::constant(Elem(2)) * sigma * sdot -
        S::constant(theta * theta / Elem(4));
  return r;
}

/// Residual of the scalar equation h^2 qddot = 2 q^3 + t q - theta + h/2.
inline HbarSeries<Elem> painleve_residual(const PainleveExpansion& ex) {
  using S = HbarSeries<Elem>;
  Elem t = ex.field.t();
  Elem theta = ex.field.theta;
  S lhs = ex.dt_series(ex.dt_series(ex.q)).shifted(2);
  S rhs = S::constant(Elem(2)) * ex.q * ex.q * ex.q + S::constant(t) * ex.q -
          S::constant(theta) + S::monomial(Elem(Rational(1, 2)), 1);
  return lhs - rhs;
}

/// Series of q with the sign of the formal parameter flipped, computed as
/// -q - theta/p; equality with dagger(q) is the parity identity for q.
inline HbarSeries<Elem> q_dagger_via_p(const PainleveExpansion& ex, long order) {
  HbarSeries<Elem> pinv = ex.p.inverse_to(order);
  return -ex.q - HbarSeries<Elem>::constant(ex.field.theta) * pinv;
}

struct ParityIssue {
  long order;
  std::string what;
};

/// Checks that p has even coefficients only and that -q - theta/p equals q
/// with the parameter sign flipped, through the given order.
inline std::vector<ParityIssue> dagger_parity_issues(const PainleveExpansion& ex, long order) {
  std::vector<ParityIssue> issues;
  for (long k = 1; k <= order; k += 2)
    if (!ex.p.coeff(k).is_zero()) issues.push_back({k, "p has a nonzero odd coefficient"});
  HbarSeries<Elem> lhs = q_dagger_via_p(ex, order);
  HbarSeries<Elem> rhs = dagger(ex.q);
  for (long k = 0; k <= order; ++k)
    if (lhs.coeff(k) != rhs.coeff(k))
      issues.push_back({k, "-q - theta/p disagrees with the sign-flipped q"});
  return issues;
}

}  // namespace toprec

#endif  // TOPREC_PAINLEVE_HPP
