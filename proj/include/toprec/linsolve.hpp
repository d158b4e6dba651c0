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

#ifndef TOPREC_LINSOLVE_HPP
#define TOPREC_LINSOLVE_HPP

#include <optional>
#include <vector>

#include "toprec/tower.hpp"

namespace toprec {

/// Solves A x = b exactly by Gaussian elimination over the tower field.
/// Returns nullopt when A is singular.
inline std::optional<std::vector<Elem>> gaussian_solve(std::vector<std::vector<Elem>> a,
                                                       std::vector<Elem> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    Elem inv = a[col][col].inverse();
    for (std::size_t j = col; j < n; ++j) a[col][j] = a[col][j] * inv;
    b[col] = b[col] * inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Elem f = a[r][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] = a[r][j] - f * a[col][j];
      b[r] = b[r] - f * b[col];
    }
  }
  return b;
}

/// One nontrivial nullspace vector of a (rows x cols) matrix, or nullopt when
/// the kernel is trivial. Free variables beyond the first are set to zero.
inline std::optional<std::vector<Elem>> gaussian_nullspace(std::vector<std::vector<Elem>> a,
                                                           std::size_t cols) {
  std::size_t rows = a.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    Elem inv = a[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
    for (std::size_t rr = 0; rr < rows; ++rr) {
      if (rr == r || a[rr][c].is_zero()) continue;
      Elem f = a[rr][c];
      for (std::size_t j = c; j < cols; ++j) a[rr][j] = a[rr][j] - f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  // find the first free column
  std::size_t free_col = cols;
  {
    std::size_t k = 0;
    for (std::size_t c = 0; c < cols; ++c) {
      if (k < pivot_col.size() && pivot_col[k] == c) { ++k; continue; }
      free_col = c;
      break;
    }
  }
  if (free_col == cols) return std::nullopt;
  std::vector<Elem> x(cols, Elem(0));
  x[free_col] = Elem(1);
  for (std::size_t k = 0; k < pivot_col.size(); ++k)
    x[pivot_col[k]] = -a[k][free_col];
  return x;
}

}  // namespace toprec

#endif  // TOPREC_LINSOLVE_HPP
