#include <catch2/catch_amalgamated.hpp>

#include "toprec/painleve.hpp"

using namespace toprec;

namespace {
Elem q0v() { return Elem::var(1); }
}  // namespace

TEST_CASE("leading coefficients of the formal solution") {
  auto f = ParamField::symbolic_q0(Rational(3));
  auto ex = expand_qp(f, 4);
  Elem q0 = q0v();
  Elem theta = Elem(3);

  // t q0 = theta - 2 q0^3 identically
  CHECK(f.t() * q0 == theta - Elem(2) * q0.pow(3));
  CHECK(ex.p.coeff(0) == -theta / (Elem(2) * q0));
  // the half-integer forcing term makes q1 nonzero
  CHECK(ex.q.coeff(1) == -q0 / (Elem(2) * (Elem(4) * q0.pow(3) + theta)));
  // odd p coefficients vanish by construction of the system
  CHECK(ex.p.coeff(1).is_zero());
  CHECK(ex.p.coeff(3).is_zero());
}

TEST_CASE("the expansion solves the scalar equation to the computed order") {
  auto f = ParamField::symbolic_q0(Rational(2));
  auto ex = expand_qp(f, 6);
  auto r = painleve_residual(ex);
  // residual must vanish in every order where all contributions are known
  for (long k = 0; k <= 6; ++k) CHECK(r.coeff(k).is_zero());
}

TEST_CASE("expansion works in the s-parametrized field as well") {
  auto f = ParamField::symbolic_s(Rational(1));
  auto ex = expand_qp(f, 3);
  auto r = painleve_residual(ex);
  for (long k = 0; k <= 3; ++k) CHECK(r.coeff(k).is_zero());
  // q0 = -theta/s^2 enters as the leading term
  CHECK(ex.q.coeff(0) == *f.q0);
}

TEST_CASE("sigma coefficients match the classical closed forms") {
  auto f = ParamField::symbolic_q0(Rational(5));
  auto ex = expand_qp(f, 8);
  auto sigma = sigma_series(ex);
  Elem q0 = q0v();
  Elem th = Elem(5);
  CHECK(sigma.coeff(0) == tables::sigma_closed(0, th, q0));
  CHECK(sigma.coeff(2) == tables::sigma_closed(1, th, q0));
  CHECK(sigma.coeff(4) == tables::sigma_closed(2, th, q0));
  CHECK(sigma.coeff(6) == tables::sigma_closed(3, th, q0));
  for (long k = 1; k <= 7; k += 2) CHECK(sigma.coeff(k).is_zero());
}

TEST_CASE("sigma satisfies its second-order equation order by order") {
  auto f = ParamField::symbolic_q0(Rational(1));
  const int K = 10;
  auto ex = expand_qp(f, K);
  auto sigma = sigma_series(ex);
  auto r = sigma_form_residual(ex, sigma);
  for (long k = 0; k <= K; ++k) CHECK(r.coeff(k).is_zero());

  SECTION("perturbing sigma_2 by 1 breaks the residual at order 2") {
    auto bad = sigma + HbarSeries<Elem>::monomial(Elem(1), 2);
    auto rb = sigma_form_residual(ex, bad);
    CHECK(rb.coeff(0).is_zero());
    CHECK(!rb.coeff(2).is_zero());
  }
}

TEST_CASE("sigma dot relations") {
  auto f = ParamField::symbolic_q0(Rational(7));
  auto ex = expand_qp(f, 6);
  auto sigma = sigma_series(ex);
  // sigma' = p/2
  auto sdot = ex.dt_series(sigma);
  auto half_p = HbarSeries<Elem>::constant(Elem(Rational(1, 2))) * ex.p;
  for (long k = 0; k <= 6; ++k) CHECK(sdot.coeff(k) == half_p.coeff(k));
  // h sigma'' = -q p - theta/2
  auto hsddot = ex.dt_series(sdot).shifted(1);
  auto rhs = -(ex.q * ex.p) - HbarSeries<Elem>::constant(Elem(7) / Elem(2));
  for (long k = 0; k <= 6; ++k) CHECK(hsddot.coeff(k) == rhs.coeff(k));
}

TEST_CASE("tau coefficient derivatives match minus sigma") {
  auto f = ParamField::symbolic_q0(Rational(3));
  auto ex = expand_qp(f, 8);
  auto sigma = sigma_series(ex);
  Elem th = Elem(3);
  Elem q0 = q0v();
  // d/dt of the closed-form tau_4, tau_6 equals -sigma_4, -sigma_6
  CHECK(f.dt(tables::fg_htw(2, th, q0)) == -sigma.coeff(4));
  CHECK(f.dt(tables::fg_htw(3, th, q0)) == -sigma.coeff(6));
  // and the computed sigma agrees with the table entries used above
  CHECK(sigma.coeff(4) == tables::sigma_closed(2, th, q0));
  CHECK(sigma.coeff(6) == tables::sigma_closed(3, th, q0));
}

TEST_CASE("hamiltonian flavors differ by t^2/8") {
  auto f = ParamField::symbolic_q0(Rational(2));
  auto ex = expand_qp(f, 2);
  auto hjm = hamiltonian_series(ex, LaxFlavor::JimboMiwa);
  auto hhtw = hamiltonian_series(ex, LaxFlavor::HarnadTracyWidom);
  Elem t = f.t();
  CHECK(hhtw.coeff(0) - hjm.coeff(0) == t * t / Elem(8));
  CHECK(hhtw.coeff(2) == hjm.coeff(2));
}

TEST_CASE("parameter-sign parity of the solution") {
  auto f = ParamField::symbolic_q0(Rational(4));
  auto ex = expand_qp(f, 6);
  auto issues = dagger_parity_issues(ex, 6);
  CHECK(issues.empty());

  SECTION("order-0 identity -q0 - theta/p0 = q0") {
    Elem q0 = q0v();
    CHECK(-q0 - Elem(4) / ex.p.coeff(0) == q0);
  }
}

TEST_CASE("sigma coefficients vanish at q0 = 0 for k >= 2") {
  auto f = ParamField::symbolic_q0(Rational(1));
  auto ex = expand_qp(f, 10);
  auto sigma = sigma_series(ex);
  for (long k = 4; k <= 10; k += 2) {
    Elem c = sigma.coeff(k);
    REQUIRE(!c.is_zero());
    // positive valuation at q0 = 0
    const auto& rf = c.node().rf;
    CHECK(rf.num().valuation() > rf.den().valuation());
    // denominator is a power of (4 q0^3 + theta) (possibly times q0^m)
    Elem q0 = q0v();
    Polynomial<Elem> den = rf.den();
    Polynomial<Elem> lin(std::vector<Elem>{Elem(Rational(1, 4)), Elem(0), Elem(0), Elem(1)});
    while (den.degree() > 0) {
      auto [q, r] = den.divrem(lin);
      if (!r.is_zero()) break;
      den = q;
    }
    CHECK(den.degree() == 0);
  }
}
