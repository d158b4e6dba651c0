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

#ifndef TOPREC_REFERENCE_TABLES_HPP
#define TOPREC_REFERENCE_TABLES_HPP

#include <stdexcept>

#include "toprec/bernoulli.hpp"
#include "toprec/tower.hpp"

namespace toprec::tables {

// Classical closed forms for the Painlevé 2 sigma-expansion and the free
// energies of the attached spectral curves, written as functions of the
// leading Painlevé coefficient q0 and the monodromy constant theta. These are
// the reference values the verification suites compare against.

/// sigma_{2k} for k = 0..3.
inline Elem sigma_closed(int k, const Elem& th, const Elem& q) {
  Elem q3 = q.pow(3);
  Elem d = Elem(4) * q3 + th;
  switch (k) {
    case 0:
      return th * (Elem(8) * q3 - th) / (Elem(8) * q * q);
    case 1:
      return -th * q / (Elem(8) * d.pow(2));
    case 2:
      return -Elem(3) * th * q.pow(4) *
             (Elem(560) * q.pow(6) - Elem(184) * th * q3 + Elem(3) * th * th) /
             (Elem(32) * d.pow(7));
    case 3:
      return -th * q.pow(7) *
             (Elem(3203200) * q.pow(12) - Elem(3668064) * th * q.pow(9) +
              Elem(838632) * th.pow(2) * q.pow(6) - Elem(39482) * th.pow(3) * q3 +
              Elem(189) * th.pow(4)) /
             (Elem(32) * d.pow(12));
    default:
      throw std::invalid_argument("sigma_closed: k must be 0..3");
  }
}

/// Free energies of the Jimbo-Miwa curve, g = 2, 3.
inline Elem fg_jm(int g, const Elem& th, const Elem& q) {
  Elem q3 = q.pow(3);
  Elem d = Elem(4) * q3 + th;
  if (g == 2) {
    return (Elem(2048) * q.pow(12) + Elem(2560) * th * q.pow(9) + Elem(1280) * th.pow(2) * q.pow(6) +
            Elem(1020) * th.pow(3) * q3 - Elem(45) * th.pow(4)) *
           q3 / (Elem(480) * th.pow(2) * d.pow(5));
  }
  if (g == 3) {
    return -q.pow(6) *
           (Elem(4194304) * q.pow(24) + Elem(10485760) * th * q.pow(21) +
            Elem(11796480) * th.pow(2) * q.pow(18) + Elem(7864320) * th.pow(3) * q.pow(15) +
            Elem(3440640) * th.pow(4) * q.pow(12) - Elem(5694528) * th.pow(5) * q.pow(9) +
            Elem(5232752) * th.pow(6) * q.pow(6) - Elem(510412) * th.pow(7) * q3 +
            Elem(3969) * th.pow(8)) /
           (Elem(4032) * th.pow(4) * d.pow(10));
  }
  throw std::invalid_argument("fg_jm: g must be 2 or 3");
}

/// Free energies of the Harnad-Tracy-Widom curve, g = 2, 3; these also serve
/// as the closed forms of the tau coefficients tau_4, tau_6 up to constants.
inline Elem fg_htw(int g, const Elem& th, const Elem& q) {
  Elem q3 = q.pow(3);
  Elem d = Elem(4) * q3 + th;
  if (g == 2) {
    return th * (Elem(700) * q.pow(6) - Elem(85) * th * q3 - Elem(2) * th.pow(2)) /
           (Elem(480) * d.pow(5));
  }
  if (g == 3) {
    return th *
           (Elem(6726720) * q.pow(15) - Elem(5017712) * th * q.pow(12) +
            Elem(541132) * th.pow(2) * q.pow(9) - Elem(1089) * th.pow(3) * q.pow(6) +
            Elem(160) * th.pow(4) * q3 + Elem(4) * th.pow(5)) /
           (Elem(4032) * d.pow(10));
  }
  throw std::invalid_argument("fg_htw: g must be 2 or 3");
}

/// B_{2g} / (2g (2g-2) theta^{2g-2}); the Bessel free energy, and minus the
/// Hermite-Weber one.
inline Elem fg_bernoulli(int g, const Elem& th) {
  if (g < 2) throw std::invalid_argument("fg_bernoulli: g must be >= 2");
  Rational b = bernoulli(2L * g);
  Rational denom = Rational(2L * g) * Rational(2L * g - 2);
  return Elem(b / denom) / th.pow(2L * g - 2);
}

}  // namespace toprec::tables

#endif  // TOPREC_REFERENCE_TABLES_HPP
