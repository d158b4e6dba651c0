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

#ifndef TOPREC_BERNOULLI_HPP
#define TOPREC_BERNOULLI_HPP

#include <stdexcept>
#include <vector>

#include "toprec/rational.hpp"

namespace toprec {

/// Bernoulli number B_m for even m >= 2, via the recurrence
/// sum_{j=0}^{m} C(m+1, j) B_j = 0 with B_0 = 1, B_1 = -1/2.
inline Rational bernoulli(long m) {
  if (m < 2 || m % 2 != 0) throw std::invalid_argument("bernoulli: m must be even and >= 2");
  static thread_local std::vector<Rational> cache{Rational(1), Rational(-1, 2)};
  for (long k = static_cast<long>(cache.size()); k <= m; ++k) {
    if (k % 2 == 1) {
      cache.push_back(Rational(0));
      continue;
    }
    Rational s(0);
    for (long j = 0; j < k; ++j)
      if (!cache[static_cast<std::size_t>(j)].is_zero())
        s += binomial(static_cast<unsigned long>(k + 1), static_cast<unsigned long>(j)) *
             cache[static_cast<std::size_t>(j)];
    cache.push_back(-s / binomial(static_cast<unsigned long>(k + 1), static_cast<unsigned long>(k)));
  }
  return cache[static_cast<std::size_t>(m)];
}

}  // namespace toprec

#endif  // TOPREC_BERNOULLI_HPP
