#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "toprec/bernoulli.hpp"
#include "toprec/polynomial.hpp"
#include "toprec/rational.hpp"
#include "toprec/rational_function.hpp"
#include "toprec/series.hpp"
#include "toprec/tower.hpp"

using namespace toprec;

namespace {

using RF = RationalFunction<Rational>;
using Poly = Polynomial<Rational>;

Poly poly(std::initializer_list<long> cs) {
  std::vector<Rational> v;
  for (long c : cs) v.emplace_back(c);
  return Poly(std::move(v));
}

// deterministic small random rationals
struct Rng {
  std::mt19937 gen{20260810};
  Rational rat() {
    std::uniform_int_distribution<long> num(-12, 12), den(1, 9);
    return Rational(num(gen), den(gen));
  }
  Poly polynomial(int maxdeg) {
    std::uniform_int_distribution<int> d(0, maxdeg);
    int deg = d(gen);
    std::vector<Rational> cs;
    for (int i = 0; i <= deg; ++i) cs.push_back(rat());
    return Poly(std::move(cs));
  }
  RF ratfunc(int maxdeg) {
    Poly den;
    do { den = polynomial(maxdeg); } while (den.is_zero());
    return RF(polynomial(maxdeg), den);
  }
};

}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-3/6") == Rational(-1, 2));
  CHECK(Rational::parse("+7") == Rational(7));
  CHECK(Rational(4, -6) == Rational(-2, 3));
  CHECK(Rational(0, 5).to_string() == "0");
  CHECK(Rational(-10, 4).to_string() == "-5/2");
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("1 /2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK(Rational(5, 3).pow(-2) == Rational(9, 25));
  CHECK(*Rational(9, 4).sqrt_exact() == Rational(3, 2));
  CHECK(!Rational(2).sqrt_exact().has_value());
}

TEST_CASE("rational function arithmetic and normalization") {
  RF z = RF::variable();
  RF one{Rational(1)};

  // additive inverse: z/(z-1) + (-z/(z-1)) = 0
  RF a = z / (z - one);
  CHECK((a + (-a)).is_zero());

  // gcd reduction: (z^2-1)/(z-1) = z+1
  RF b = RF(poly({-1, 0, 1}), poly({-1, 1}));
  CHECK(b == z + one);

  // multiplicative inverse: (1/z) * z = 1
  CHECK((z.inverse() * z) == one);

  CHECK_THROWS_AS(one / RF(), std::domain_error);

  // monic denominator
  RF c = RF(poly({1}), poly({2, 4}));
  CHECK(c.den().leading() == Rational(1));
  CHECK(c.num().coeff(0) == Rational(1, 4));
}

TEST_CASE("field axioms on random rational functions") {
  Rng rng;
  for (int iter = 0; iter < 1000; ++iter) {
    RF a = rng.ratfunc(3), b = rng.ratfunc(3), c = rng.ratfunc(3);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    if (!a.is_zero()) CHECK(a * a.inverse() == RF(Rational(1)));
  }
}

TEST_CASE("polynomial gcd fast path agrees with structure") {
  Rng rng;
  for (int iter = 0; iter < 200; ++iter) {
    Poly g0 = rng.polynomial(3);
    Poly a = rng.polynomial(4), b = rng.polynomial(4);
    if (g0.is_zero() || a.is_zero() || b.is_zero()) continue;
    Poly ag = a * g0, bg = b * g0;
    Poly g = gcd(ag, bg);
    CHECK((ag % g).is_zero());
    CHECK((bg % g).is_zero());
    // g0 divides gcd
    CHECK((g % g0.monic()).is_zero() == ((g.degree() >= g0.degree())));
    CHECK(g.degree() >= g0.degree());
  }
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(4) == Rational(-1, 30));
  CHECK(bernoulli(6) == Rational(1, 42));
  CHECK(bernoulli(12) == Rational(-691, 2730));
  CHECK_THROWS_AS(bernoulli(3), std::invalid_argument);
  CHECK_THROWS_AS(bernoulli(0), std::invalid_argument);
}

TEST_CASE("bernoulli matches the generating function t/(e^t-1) - 1 + t/2") {
  // e^t - 1 expanded to order 24, then the quotient series
  const long N = 24;
  using S = LaurentSeries<Elem>;
  std::vector<Elem> expm1(N + 1);
  Rational fact(1);
  expm1[0] = Elem(0);
  for (long k = 1; k <= N; ++k) {
    fact = fact * Rational(k);
    expm1[static_cast<std::size_t>(k)] = Elem(Rational(1) / fact);
  }
  S denom;
  denom.assign_raw(0, std::move(expm1), N + 1);
  S t = S::monomial(Elem(1), 1);
  S f = S::divide_to(t, denom, N - 2) - S::constant(Elem(1)) + S::monomial(Elem(Rational(1, 2)), 1);
  Rational f2(1);
  for (long m = 2; m <= 20; m += 2) {
    // coefficient of t^m equals B_m / m!
    Rational mfact(1);
    for (long i = 2; i <= m; ++i) mfact = mfact * Rational(i);
    CHECK(f.coeff(m).rational() == bernoulli(m) / mfact);
  }
  // odd coefficients vanish
  for (long m = 3; m <= 19; m += 2) CHECK(f.coeff(m).is_zero());
}

TEST_CASE("tower elements behave like nested rational functions") {
  Elem s = Elem::var(1);
  Elem z = Elem::var(2);

  Elem x = z + s;                       // level 2
  Elem y = (z * z - Elem(1)) / (z - Elem(1));  // simplifies to z+1
  CHECK(y == z + Elem(1));

  Elem w = (x * x - s * s) / (x - s);   // simplifies to x+s = z+2s
  CHECK(w == z + Elem(2) * s);

  // mixed-level arithmetic
  Elem q = s / z;
  CHECK(q * z == s);

  // substitution
  Elem sub = substitute_var(y, 2, s);   // (s+1)
  CHECK(sub == s + Elem(1));

  // derivative
  CHECK(dvar(z * z * s, 2) == Elem(2) * z * s);
  CHECK(dvar(z * z * s, 1) == z * z);

  // relevel
  Elem r = relevel(z * s, [](int l) { return l + 3; });
  CHECK(r == Elem::var(5) * Elem::var(4));
}

TEST_CASE("tower derivation satisfies the Leibniz rule on samples") {
  Elem q0 = Elem::var(1);
  Rational theta(3);
  // d/dt with dq0/dt = -q0^2/(4 q0^3 + theta)
  Elem img = -(q0 * q0) / (Elem(4) * q0.pow(3) + Elem(theta));
  auto dt = [&](const Elem& e) {
    return tower_derive(e, [&](int l) { return l == 1 ? img : Elem(0); });
  };
  Elem t = Elem(-2) * q0 * q0 + Elem(theta) / q0;
  CHECK(dt(t) == Elem(1));
  CHECK(dt(q0) == img);
  CHECK(dt(q0 * q0) == Elem(2) * q0 * img);
  Elem f = (q0 + Elem(1)) / (q0 - Elem(1));
  Elem g = q0.pow(3) - Elem(2);
  CHECK(dt(f * g) == dt(f) * g + f * dt(g));
  CHECK(dt(f + g) == dt(f) + dt(g));
}

TEST_CASE("laurent expansion examples") {
  Elem z = Elem::var(1);

  SECTION("1/(z-1) at 1") {
    Elem f = Elem(1) / (z - Elem(1));
    auto s = expand_elem(f, 1, ExpansionPoint::at(Elem(1)), 3);
    CHECK(s.valuation() == -1);
    CHECK(s.coeff(-1) == Elem(1));
    CHECK(s.coeff(0).is_zero());
  }

  SECTION("z + 1/z at 0") {
    Elem f = z + Elem(1) / z;
    auto s = expand_elem(f, 1, ExpansionPoint::at(Elem(0)), 4);
    CHECK(s.coeff(-1) == Elem(1));
    CHECK(s.coeff(1) == Elem(1));
    CHECK(s.coeff(0).is_zero());
    CHECK(s.coeff(2).is_zero());
  }

  SECTION("1/(z^2 (z-2)) at 0, long-division values") {
    Elem f = Elem(1) / (z * z * (z - Elem(2)));
    auto s = expand_elem(f, 1, ExpansionPoint::at(Elem(0)), 0);
    CHECK(s.coeff(-2) == Elem(Rational(-1, 2)));
    CHECK(s.coeff(-1) == Elem(Rational(-1, 4)));
    CHECK(s.coeff(0) == Elem(Rational(-1, 8)));
  }

  SECTION("re-summation recovers the function modulo truncation") {
    Rng rng;
    for (int iter = 0; iter < 40; ++iter) {
      // poles of order <= 8 at z = 1
      Poly np = rng.polynomial(5);
      if (np.is_zero()) continue;
      std::uniform_int_distribution<int> ord(0, 8);
      int k = ord(rng.gen);
      // f = np(z) / (z-1)^k
      std::vector<Elem> nc;
      for (const auto& c : np.coefficients()) nc.emplace_back(c);
      Elem num(0);
      Elem zp(1);
      for (auto& c : nc) {
        num = num + c * zp;
        zp = zp * z;
      }
      Elem f = num / (z - Elem(1)).pow(k);
      long upto = 6;
      auto s = expand_elem(f, 1, ExpansionPoint::at(Elem(1)), upto);
      // re-sum the truncated series and compare valuation of the difference
      Elem acc(0);
      for (long e = s.valuation(); e <= upto; ++e) acc = acc + s.coeff(e) * (z - Elem(1)).pow(e);
      Elem diff = f - acc;
      if (!diff.is_zero()) {
        auto ds = expand_elem(diff, 1, ExpansionPoint::at(Elem(1)), upto + 2);
        CHECK(ds.valuation() > upto);
      }
    }
  }
}

TEST_CASE("residues") {
  Elem z = Elem::var(1);

  CHECK(residue_elem(Elem(1) / z, 1, ExpansionPoint::at(Elem(0))) == Elem(1));

  Elem a = Elem(Rational(5, 7));
  Elem f = Elem(1) / ((z - a) * (z - a));
  CHECK(residue_elem(f, 1, ExpansionPoint::at(a)).is_zero());

  // residue theorem: sum over all poles incl. infinity vanishes
  Rng rng;
  for (int iter = 0; iter < 100; ++iter) {
    // f = sum of c/(z-a)^e + polynomial
    std::uniform_int_distribution<int> nterm(1, 4), expo(1, 3), apick(-3, 3);
    Elem f2(0);
    std::vector<Rational> poles;
    int nt = nterm(rng.gen);
    for (int i = 0; i < nt; ++i) {
      Rational av(apick(rng.gen));
      Rational c = rng.rat();
      if (c.is_zero()) c = Rational(1);
      int e = expo(rng.gen);
      f2 = f2 + Elem(c) / (z - Elem(av)).pow(e);
      poles.push_back(av);
    }
    Poly p = rng.polynomial(3);
    Elem zp(1);
    for (const auto& c : p.coefficients()) {
      f2 = f2 + Elem(c) * zp;
      zp = zp * z;
    }
    // dedupe pole list
    std::sort(poles.begin(), poles.end(), [](const Rational& x, const Rational& y) {
      return x.numerator() * y.denominator() < y.numerator() * x.denominator();
    });
    poles.erase(std::unique(poles.begin(), poles.end()), poles.end());
    Elem total = residue_elem(f2, 1, ExpansionPoint::infinity());
    for (const auto& a2 : poles) total = total + residue_elem(f2, 1, ExpansionPoint::at(Elem(a2)));
    CHECK(total.is_zero());
  }
}

TEST_CASE("series square root") {
  Elem z = Elem::var(1);
  auto sqrt_elem_cb = [](const Elem& c) -> std::optional<Elem> {
    if (!c.is_rational()) return std::nullopt;
    auto r = c.rational().sqrt_exact();
    if (!r) return std::nullopt;
    return Elem(*r);
  };

  SECTION("sqrt(z^2) at 0 is z") {
    auto s = expand_elem(z * z, 1, ExpansionPoint::at(Elem(0)), 4);
    auto r = s.sqrt_to(3, sqrt_elem_cb);
    CHECK(r.coeff(1) == Elem(1));
    CHECK(r.coeff(2).is_zero());
  }

  SECTION("sqrt(1 - z^-2) at infinity matches the binomial series") {
    Elem f = Elem(1) - Elem(1) / (z * z);
    auto s = expand_elem(f, 1, ExpansionPoint::infinity(), 8);  // variable u = 1/z
    auto r = s.sqrt_to(6, sqrt_elem_cb);
    CHECK(r.coeff(0) == Elem(1));
    CHECK(r.coeff(2) == Elem(Rational(-1, 2)));
    CHECK(r.coeff(4) == Elem(Rational(-1, 8)));
    CHECK(r.coeff(6) == Elem(Rational(-1, 16)));
    // square back
    auto sq = (r * r).truncated(7);
    CHECK(sq.coeff(0) == Elem(1));
    CHECK(sq.coeff(2) == Elem(-1));
    CHECK(sq.coeff(4).is_zero());
  }

  SECTION("sqrt of 4 is 2") {
    auto s = LaurentSeries<Elem>::constant(Elem(4));
    auto r = s.sqrt_to(2, sqrt_elem_cb);
    CHECK(r.coeff(0) == Elem(2));
  }

  SECTION("non-square leading coefficient is an error") {
    auto s = LaurentSeries<Elem>::constant(Elem(2));
    CHECK_THROWS_AS(s.sqrt_to(2, sqrt_elem_cb), std::domain_error);
  }
}
