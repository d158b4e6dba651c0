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

#ifndef TOPREC_TOPOLOGICAL_RECURSION_HPP
#define TOPREC_TOPOLOGICAL_RECURSION_HPP

#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "toprec/spectral_curve.hpp"

namespace toprec {

/// Correlation differential of type (g, n): the scalar body of
/// omega_n^(g)(z_1, ..., z_n) with the dz factors implicit. Slot i lives at
/// tower level n + 2 - i, so z_1 is the outermost variable.
struct Multidiff {
  int g = 0, n = 0;
  Elem body;
};

inline int slot_level(int n, int i) { return n + 2 - i; }

/// Residue recursion on a genus-zero curve with a global involution.
/// Produces the correlation differentials omega_n^(g) and the free energies
/// F^(g) for g >= 2, all as exact rational data over the curve's scalar
/// field. Results are memoized per instance.
class TopologicalRecursion {
 public:
  explicit TopologicalRecursion(SpectralCurve curve, int workload_cap = 6)
      : curve_(std::move(curve)), cap_(workload_cap) {}

  const SpectralCurve& curve() const { return curve_; }
  int workload_cap() const { return cap_; }
  void set_workload_cap(int cap) { cap_ = cap; }

  /// Body of omega_n^(g); see Multidiff for the slot convention.
  const Elem& omega(int g, int n) {
    if (g < 0 || n < 1) throw std::invalid_argument("omega: need g >= 0, n >= 1");
    auto it = memo_.find({g, n});
    if (it != memo_.end()) return it->second;
    Elem body = compute_omega(g, n);
    return memo_.emplace(std::make_pair(g, n), std::move(body)).first->second;
  }

  Multidiff omega_multidiff(int g, int n) { return Multidiff{g, n, omega(g, n)}; }

  /// F^(g) for g >= 2 from the branch-point residues of the local primitive
  /// of y dx against omega_1^(g).
  Elem free_energy(int g) {
    if (g < 2)
      throw std::invalid_argument("free_energy: defined here for g >= 2 only");
    auto it = fmemo_.find(g);
    if (it != fmemo_.end()) return it->second;
    const Elem& w1 = omega(g, 1);
    Elem ydx = curve_.y * dvar(curve_.x, 2);
    Elem total(0);
    for (const auto& r : curve_.branch_points) {
      auto pt = ExpansionPoint::at(r);
      LaurentSeries<Elem> ws = expand_elem(w1, 2, pt, 2);
      long pole = -ws.valuation();
      long upto = pole + 4;
      ws = expand_elem(w1, 2, pt, upto);
      if (!ws.coeff(-1).is_zero())
        throw std::logic_error("free_energy: omega_1 has a nonzero branch-point residue");
      LaurentSeries<Elem> ys = expand_elem(ydx, 2, pt, upto);
      if (ys.valuation() < 0)
        throw std::logic_error("free_energy: y dx has a pole at a branch point");
      LaurentSeries<Elem> phi = ys.antiderivative();
      total = total + (phi * ws).coeff(-1);
    }
    Elem f = total / Elem(2 - 2L * g);
    fmemo_.emplace(g, f);
    return f;
  }

  /// Recursion kernel body k(z0, z) with z at level 3 and z0 at level 2; the
  /// full kernel is k dz0 / dz.
  const Elem& kernel_body() {
    if (kernel_.is_zero()) build_kernel();
    return kernel_;
  }

 private:
  using S = LaurentSeries<Elem>;

  enum class Pattern : int { First = 0, FirstIota = 1, FirstAndIota = 2 };

  // --- working series with a division budget, the evaluation target ring ---
  struct WS {
    LaurentSeries<Elem> s;
    long budget;
    friend WS operator+(const WS& a, const WS& b) { return {a.s + b.s, std::min(a.budget, b.budget)}; }
    friend WS operator-(const WS& a, const WS& b) { return {a.s - b.s, std::min(a.budget, b.budget)}; }
    friend WS operator*(const WS& a, const WS& b) { return {a.s * b.s, std::min(a.budget, b.budget)}; }
    friend WS operator/(const WS& a, const WS& b) {
      long p = std::min(a.budget, b.budget);
      return {LaurentSeries<Elem>::divide_to(a.s, b.s, p), p};
    }
  };

  void build_kernel() {
    Elem z0 = Elem::var(2);
    Elem z3 = Elem::var(3);
    auto lift = [](const Elem& e) {
      return relevel(e, [](int l) { return l == 2 ? 3 : l; });
    };
    Elem x3 = lift(curve_.x);
    Elem y3 = lift(curve_.y);
    Elem yi3 = lift(curve_.y_of(curve_.iota.apply(Elem::var(2))));
    Elem dx3 = lift(dvar(curve_.x, 2));
    Elem iota3 = lift(curve_.iota.apply(Elem::var(2)));
    Elem num = Elem(1) / (z0 - iota3) - Elem(1) / (z0 - z3);
    kernel_ = num / ((y3 - yi3) * dx3);
  }

  // expansion of iota(r + w) as a series in w
  S iota_at(int bi, long upto) {
    const Elem& r = curve_.branch_points[static_cast<std::size_t>(bi)];
    S z = S::monomial(r, 0) + S::monomial(Elem(1), 1);
    S num = curve_.iota.a.is_zero() ? S::monomial(curve_.iota.b, 0)
                                    : S::constant(curve_.iota.a) * z + S::constant(curve_.iota.b);
    S den = S::constant(curve_.iota.c) * z + S::constant(curve_.iota.d);
    return S::divide_to(num, den, upto);
  }

  S iota_prime_at(int bi, long upto) {
    const Elem& r = curve_.branch_points[static_cast<std::size_t>(bi)];
    Elem ip = curve_.iota.derivative(Elem::var(2));
    return expand_elem(ip, 2, ExpansionPoint::at(r), upto);
  }

  // kernel expanded at z = r + w; coefficients carry z0 at level 2
  S kernel_at(int bi, long upto) {
    auto key = std::make_tuple(-1, -1, bi, 0);
    auto it = exp_cache_.find(key);
    if (it != exp_cache_.end() && it->second.trunc() > upto) return it->second;
    const Elem& k = kernel_body();
    const Elem& r = curve_.branch_points[static_cast<std::size_t>(bi)];
    S ks = expand_elem(k, 3, ExpansionPoint::at(r), upto);
    exp_cache_[key] = ks;
    return ks;
  }

  // expansion of a stored omega with its first slot (and optionally the
  // second) substituted by the local coordinate at a branch point; remaining
  // slots stay at their canonical levels
  S omega_expansion(int g, int n, int bi, Pattern pat, long upto) {
    auto key = std::make_tuple(g, n, bi, static_cast<int>(pat));
    auto it = exp_cache_.find(key);
    if (it != exp_cache_.end() && it->second.trunc() > upto) return it->second;
    const Elem& body = omega(g, n);
    const Elem& r = curve_.branch_points[static_cast<std::size_t>(bi)];
    S zser = S::monomial(r, 0) + S::monomial(Elem(1), 1);
    S iser = iota_at(bi, upto + 4);
    long budget = upto;
    auto gen = [&](int level) -> WS {
      int slot = n + 2 - level;
      if (slot == 1) return {pat == Pattern::FirstIota ? iser : zser, budget};
      if (slot == 2 && pat == Pattern::FirstAndIota) return {iser, budget};
      return {S::constant(Elem::var(level)), budget};
    };
    auto emb = [&](const Elem& c) -> WS { return {S::constant(c), budget}; };
    WS val = eval_tower<WS>(body, 2, gen, emb);
    exp_cache_[key] = val.s;
    return val.s;
  }

  Elem compute_omega(int g, int n) {
    // base cases
    if (g == 0 && n == 1) return curve_.y * dvar(curve_.x, 2);
    if (g == 0 && n == 2) {
      Elem z1 = Elem::var(slot_level(2, 1));
      Elem z2 = Elem::var(slot_level(2, 2));
      return Elem(1) / ((z1 - z2) * (z1 - z2));
    }
    if (2 * g - 2 + n > cap_)
      throw std::runtime_error(
          "workload cap exceeded: 2g-2+n = " + std::to_string(2 * g - 2 + n) +
          " > " + std::to_string(cap_) + " (raise the cap to proceed)");

    const int m = n;  // arity of the result
    const int top = slot_level(m, 1);
    Elem total(0);
    for (int bi = 0; bi < static_cast<int>(curve_.branch_points.size()); ++bi) {
      long budget = 6L * g + 2L * n + 8;
      for (int attempt = 0;; ++attempt) {
        try {
          total = total + branch_residue(g, m, bi, budget, top);
          break;
        } catch (const TruncationError& e) {
          std::fprintf(stderr, "[toprec debug] (%d,%d) bi=%d attempt=%d budget=%ld: %s\n", g, m,
                       bi, attempt, budget, e.what());
          if (attempt >= 8) throw;
          budget *= 2;
        }
      }
    }
    return total;
  }

  Elem branch_residue(int g, int m, int bi, long budget, int top) {
    S bracket = S::zero_truncated(budget + 1);

    // joint term omega_{m+1}^{(g-1)}(z, iota(z), z_1, .., z_{m-1})
    if (g >= 1) {
      S e2 = omega_expansion(g - 1, m + 1, bi, Pattern::FirstAndIota, budget);
      // canonical rest levels 2..m-? -> target slots: stored slot j (>=3) at
      // level (m+1)+2-j maps to result variable z_{j-2} at level m+2-(j-1)
      S rel = relevel_series(e2, [m](int l) {
        if (l == 1) return 1;
        // stored level l corresponds to slot j = (m+3) - l; target level m+3-j = l ... identity
        return l;
      });
      bracket = bracket + rel;
    }

    // split terms
    int nrest = m - 1;
    for (int g1 = 0; g1 <= g; ++g1) {
      int g2 = g - g1;
      for (unsigned mask = 0; mask < (1u << nrest); ++mask) {
        unsigned jmask = (~mask) & ((1u << nrest) - 1);
        int ni = __builtin_popcount(mask), nj = nrest - ni;
        if (g1 == 0 && ni == 0) continue;
        if (g2 == 0 && nj == 0) continue;
        S a = omega_expansion(g1, 1 + ni, bi, Pattern::First, budget);
        S b = omega_expansion(g2, 1 + nj, bi, Pattern::FirstIota, budget);
        S arel = relevel_series(a, subset_map(1 + ni, mask, m));
        S brel = relevel_series(b, subset_map(1 + nj, jmask, m));
        bracket = bracket + arel * brel;
      }
    }

    bracket = bracket * iota_prime_at(bi, budget);

    S ker = kernel_at(bi, budget);
    S krel = relevel_series(ker, [top](int l) { return l == 2 ? top : l; });
    return (krel * bracket).coeff(-1);
  }

  // level map sending the canonical rest-slots of a stored (1+k)-point
  // expansion to the result slots selected by `mask` (bit i set = formula
  // variable z_{i+1} participates)
  static std::function<int(int)> subset_map(int n_child, unsigned mask, int m) {
    // child slot j (2..n_child) holds the (j-1)-th selected variable
    std::vector<int> selected;
    for (int i = 0; i < 32; ++i)
      if (mask & (1u << i)) selected.push_back(i + 1);  // formula index
    std::map<int, int> lm;
    lm[1] = 1;
    for (int j = 2; j <= n_child; ++j) {
      int child_level = n_child + 2 - j;
      int formula_var = selected[static_cast<std::size_t>(j - 2)];
      int result_level = m + 2 - (formula_var + 1);
      lm[child_level] = result_level;
    }
    return [lm](int l) {
      auto it = lm.find(l);
      return it == lm.end() ? l : it->second;
    };
  }

  static S relevel_series(const S& s, const std::function<int(int)>& map) {
    return s.map([&](const Elem& c) { return relevel(c, map); });
  }

  SpectralCurve curve_;
  int cap_;
  Elem kernel_;
  std::map<std::pair<int, int>, Elem> memo_;
  std::map<int, Elem> fmemo_;
  std::map<std::tuple<int, int, int, int>, S> exp_cache_;
};

// ---------------------------------------------------------------------------
// limits of scalar-field elements in the level-1 parameter

struct LimitResult {
  bool finite = true;
  Elem value;      // meaningful when finite
  long valuation;  // order of vanishing (positive) or blow-up (negative)
};

inline LimitResult limit_at_zero(const Elem& f) {
  if (f.is_rational()) return {true, f, 0};
  const auto& rf = f.node().rf;
  long v = rf.num().valuation() - rf.den().valuation();
  if (v > 0) return {true, Elem(0), v};
  Elem ratio = rf.num().coeff(rf.num().valuation()) / rf.den().coeff(rf.den().valuation());
  if (v == 0) return {true, ratio, 0};
  return {false, ratio, v};
}

inline LimitResult limit_at_infinity(const Elem& f) {
  if (f.is_rational()) return {true, f, 0};
  const auto& rf = f.node().rf;
  long d = rf.num().degree() - rf.den().degree();
  if (d < 0) return {true, Elem(0), -d};
  Elem ratio = rf.num().leading() / rf.den().leading();
  if (d == 0) return {true, ratio, 0};
  return {false, ratio, -d};
}

/// Rewrites a free energy (or any even scalar) in the reporting variable q0,
/// according to the curve's parameter substitution.
inline Elem report_in_q0(const SpectralCurve& c, const Elem& f) {
  const std::string& sub = c.field.report_substitution;
  if (sub == "s^2=-theta/q0") {
    if (!c.field.theta_value) throw std::logic_error("report_in_q0: theta value unknown");
    Elem q0 = Elem::var(1);
    return reexpress_even(f, Elem(-*c.field.theta_value) / q0);
  }
  if (sub == "w^2=theta") {
    if (!c.field.theta_value) throw std::logic_error("report_in_q0: theta value unknown");
    return reexpress_even(f, Elem(*c.field.theta_value));
  }
  return f;  // q0 or theta parametrized curves report as-is
}

}  // namespace toprec

#endif  // TOPREC_TOPOLOGICAL_RECURSION_HPP
