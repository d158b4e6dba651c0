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

#ifndef TOPREC_MATRIX2_HPP
#define TOPREC_MATRIX2_HPP

#include <utility>

namespace toprec {

/// 2x2 matrix over a commutative ring T.
template <class T>
struct Matrix2 {
  T a{0}, b{0}, c{0}, d{0};  // rows: (a b; c d)

  Matrix2() = default;
  Matrix2(long diag) : a(diag), b(0), c(0), d(diag) {}  // NOLINT: scalar embeds diagonally
  Matrix2(T a_, T b_, T c_, T d_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

  static Matrix2 identity() { return Matrix2(T(1), T(0), T(0), T(1)); }

  bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero(); }

  T trace() const { return a + d; }
  T det() const { return a * d - b * c; }
  Matrix2 transpose() const { return Matrix2(a, c, b, d); }

  Matrix2 operator-() const { return Matrix2(-a, -b, -c, -d); }
  friend Matrix2 operator+(const Matrix2& x, const Matrix2& y) {
    return Matrix2(x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d);
  }
  friend Matrix2 operator-(const Matrix2& x, const Matrix2& y) {
    return Matrix2(x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d);
  }
  friend Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
    return Matrix2(x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                   x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d);
  }
  friend Matrix2 operator*(const T& s, const Matrix2& x) {
    return Matrix2(s * x.a, s * x.b, s * x.c, s * x.d);
  }
  friend Matrix2 operator*(const Matrix2& x, const T& s) { return s * x; }

  friend Matrix2 commutator(const Matrix2& x, const Matrix2& y) { return x * y - y * x; }

  template <class F>
  auto map(const F& f) const -> Matrix2<std::decay_t<decltype(f(std::declval<T>()))>> {
    using U = std::decay_t<decltype(f(std::declval<T>()))>;
    return Matrix2<U>(f(a), f(b), f(c), f(d));
  }

  friend bool operator==(const Matrix2& x, const Matrix2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  friend bool operator!=(const Matrix2& x, const Matrix2& y) { return !(x == y); }
};

}  // namespace toprec

#endif  // TOPREC_MATRIX2_HPP
