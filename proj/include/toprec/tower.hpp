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

#ifndef TOPREC_TOWER_HPP
#define TOPREC_TOWER_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "toprec/rational.hpp"
#include "toprec/rational_function.hpp"

namespace toprec {

class Elem;
struct ElemNode;

/// Element of a tower of rational-function fields
///   level 0: exact rationals,
///   level k: rational functions in the level-k variable over level k-1.
/// A rational constant is level-free and usable at any level; a node is kept
/// only when it genuinely depends on its variable. Values are immutable and
/// cheap to copy.
class Elem {
 public:
  Elem() : v_(Rational(0)) {}
  Elem(long n) : v_(Rational(n)) {}  // NOLINT: implicit for literals
  Elem(Rational r) : v_(std::move(r)) {}  // NOLINT

  static Elem var(int level);
  static Elem make(int level, RationalFunction<Elem> rf);

  int level() const;
  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  const Rational& rational() const { return std::get<Rational>(v_); }
  const ElemNode& node() const { return *std::get<std::shared_ptr<const ElemNode>>(v_); }

  bool is_zero() const { return is_rational() && rational().is_zero(); }
  bool is_one() const { return is_rational() && rational().is_one(); }

  Elem operator-() const;
  Elem inverse() const;
  friend Elem operator+(const Elem& a, const Elem& b);
  friend Elem operator-(const Elem& a, const Elem& b);
  friend Elem operator*(const Elem& a, const Elem& b);
  friend Elem operator/(const Elem& a, const Elem& b);
  Elem& operator+=(const Elem& o) { *this = *this + o; return *this; }
  Elem& operator-=(const Elem& o) { *this = *this - o; return *this; }
  Elem& operator*=(const Elem& o) { *this = *this * o; return *this; }
  Elem& operator/=(const Elem& o) { *this = *this / o; return *this; }

  friend bool operator==(const Elem& a, const Elem& b);
  friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }

  Elem pow(long e) const;

 private:
  std::variant<Rational, std::shared_ptr<const ElemNode>> v_;
};

struct ElemNode {
  int level;
  RationalFunction<Elem> rf;
};

inline int Elem::level() const {
  return is_rational() ? 0 : node().level;
}

inline Elem Elem::make(int level, RationalFunction<Elem> rf) {
  if (rf.num().degree() <= 0 && rf.den().degree() <= 0) {
    if (rf.is_zero()) return Elem(0);
    return rf.num().coeff(0);  // canonical den is the constant one
  }
  Elem e;
  e.v_ = std::make_shared<const ElemNode>(ElemNode{level, std::move(rf)});
  return e;
}

inline Elem Elem::var(int level) {
  if (level < 1) throw std::invalid_argument("Elem: variable level must be >= 1");
  return make(level, RationalFunction<Elem>::variable());
}

inline Elem Elem::operator-() const {
  if (is_rational()) return Elem(-rational());
  return make(node().level, -node().rf);
}

inline Elem Elem::inverse() const {
  if (is_rational()) return Elem(rational().inverse());
  return make(node().level, node().rf.inverse());
}

#define TOPREC_ELEM_BINOP(OP)                                                          \
  inline Elem operator OP(const Elem& a, const Elem& b) {                              \
    if (a.is_rational() && b.is_rational())                                            \
      return Elem(a.rational() OP b.rational());                                       \
    int la = a.level(), lb = b.level();                                                \
    int L = la > lb ? la : lb;                                                         \
    std::optional<RationalFunction<Elem>> lifted;                                      \
    const RationalFunction<Elem>* pa;                                                  \
    const RationalFunction<Elem>* pb;                                                  \
    if (la == L) pa = &a.node().rf; else { lifted.emplace(a); pa = &*lifted; }         \
    if (lb == L) pb = &b.node().rf; else { lifted.emplace(b); pb = &*lifted; }         \
    return Elem::make(L, (*pa) OP (*pb));                                              \
  }

TOPREC_ELEM_BINOP(+)
TOPREC_ELEM_BINOP(-)
TOPREC_ELEM_BINOP(*)
TOPREC_ELEM_BINOP(/)
#undef TOPREC_ELEM_BINOP

inline bool operator==(const Elem& a, const Elem& b) {
  if (a.is_rational() != b.is_rational()) return false;  // nodes never collapse to constants
  if (a.is_rational()) return a.rational() == b.rational();
  if (a.node().level != b.node().level) return false;
  return a.node().rf == b.node().rf;
}

inline Elem Elem::pow(long e) const {
  if (e == 0) return Elem(1);
  if (e < 0) return inverse().pow(-e);
  Elem r(1), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

/// Derivation determined by its action on the tower variables; rational
/// constants map to zero and the Leibniz/quotient rules propagate upward.
inline Elem tower_derive(const Elem& e, const std::function<Elem(int)>& d_of_var) {
  if (e.is_rational()) return Elem(0);
  const ElemNode& n = e.node();
  Elem dv = d_of_var(n.level);
  auto dpoly = [&](const Polynomial<Elem>& p) {
    // coefficient-wise derivative plus dv * formal derivative
    std::vector<Elem> dcs(p.coefficients().size());
    bool any = false;
    for (std::size_t i = 0; i < dcs.size(); ++i) {
      dcs[i] = tower_derive(p.coefficients()[i], d_of_var);
      any = any || !dcs[i].is_zero();
    }
    Elem out(0);
    if (any) out = Elem::make(n.level, RationalFunction<Elem>(Polynomial<Elem>(std::move(dcs))));
    if (!dv.is_zero()) {
      Polynomial<Elem> fd = p.derivative();
      if (!fd.is_zero())
        out = out + dv * Elem::make(n.level, RationalFunction<Elem>(std::move(fd)));
    }
    return out;
  };
  Elem num = Elem::make(n.level, RationalFunction<Elem>(n.rf.num()));
  Elem den = Elem::make(n.level, RationalFunction<Elem>(n.rf.den()));
  Elem dnum = dpoly(n.rf.num());
  Elem dden = dpoly(n.rf.den());
  if (n.rf.den().degree() == 0) return dnum;  // denominator is the constant one
  return (dnum * den - num * dden) / (den * den);
}

/// Partial derivative with respect to the level-`lv` variable.
inline Elem dvar(const Elem& e, int lv) {
  return tower_derive(e, [lv](int l) { return l == lv ? Elem(1) : Elem(0); });
}

/// Evaluates the tower structure into an arbitrary commutative ring A.
/// Levels >= min_level are substituted through `gen`; everything below is
/// embedded as a constant through `embed`.
template <class A, class Gen, class Embed>
A eval_tower(const Elem& e, int min_level, const Gen& gen, const Embed& embed) {
  if (e.level() < min_level) return embed(e);
  const ElemNode& n = e.node();
  A x = gen(n.level);
  auto evalp = [&](const Polynomial<Elem>& p) {
    A acc = embed(Elem(0));
    const auto& cs = p.coefficients();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it)
      acc = acc * x + eval_tower<A>(*it, min_level, gen, embed);
    return acc;
  };
  A num = evalp(n.rf.num());
  A den = evalp(n.rf.den());
  return num / den;
}

/// Substitutes values for selected variables, leaving the rest in place.
inline Elem substitute(const Elem& e, const std::function<Elem(int)>& value_of_level, int min_level) {
  return eval_tower<Elem>(
      e, min_level, [&](int l) { return value_of_level(l); }, [](const Elem& c) { return c; });
}

inline Elem substitute_var(const Elem& e, int lv, const Elem& value) {
  return substitute(e, [&](int l) { return l == lv ? value : Elem::var(l); }, lv);
}

/// Monotone relabeling of variable levels (structure is rebuilt, no
/// arithmetic). `map` must be strictly increasing on the levels in use.
inline Elem relevel(const Elem& e, const std::function<int(int)>& map) {
  if (e.is_rational()) return e;
  const ElemNode& n = e.node();
  auto relp = [&](const Polynomial<Elem>& p) {
    std::vector<Elem> cs(p.coefficients().size());
    for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = relevel(p.coefficients()[i], map);
    return Polynomial<Elem>(std::move(cs));
  };
  // canonical form is preserved under a monotone relabel
  return Elem::make(map(n.level),
                    RationalFunction<Elem>::raw(relp(n.rf.num()), relp(n.rf.den())));
}

// ---------------------------------------------------------------------------
// rendering

/// Canonical text form. `names[l]` is the symbol for the level-l variable.
std::string to_string(const Elem& e, const std::vector<std::string>& names);

namespace detail {

inline std::string poly_to_string(const Polynomial<Elem>& p, const std::string& var,
                                  const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  for (long i = p.degree(); i >= 0; --i) {
    Elem c = p.coeff(i);
    if (c.is_zero()) continue;
    std::string cs;
    bool one = false, minus_one = false;
    if (c.is_rational()) {
      cs = c.rational().to_string();
      one = c.rational().is_one();
      minus_one = (-c.rational()).is_one();
    } else {
      cs = "(" + to_string(c, names) + ")";
    }
    std::string term;
    if (i == 0) {
      term = cs;
    } else {
      std::string base = (i == 1) ? var : var + "^" + std::to_string(i);
      if (one) term = base;
      else if (minus_one) term = "-" + base;
      else term = cs + "*" + base;
    }
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out;
}

}  // namespace detail

inline std::string to_string(const Elem& e, const std::vector<std::string>& names) {
  if (e.is_rational()) return e.rational().to_string();
  const ElemNode& n = e.node();
  std::string var = (n.level < static_cast<int>(names.size()) && !names[n.level].empty())
                        ? names[n.level]
                        : "v" + std::to_string(n.level);
  std::string num = detail::poly_to_string(n.rf.num(), var, names);
  if (n.rf.den().degree() == 0) return num;
  std::string den = detail::poly_to_string(n.rf.den(), var, names);
  return "(" + num + ")/(" + den + ")";
}

}  // namespace toprec

#endif  // TOPREC_TOWER_HPP
