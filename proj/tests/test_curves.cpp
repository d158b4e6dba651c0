#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <random>
#include <sstream>

#include "toprec/spectral_curve.hpp"

using namespace toprec;

namespace {

bool same_curve(const SpectralCurve& a, const SpectralCurve& b) {
  if (a.x != b.x || a.y != b.y) return false;
  Elem z = Elem::var(2);
  if (a.iota.apply(z) != b.iota.apply(z)) return false;
  if (a.branch_points.size() != b.branch_points.size()) return false;
  return true;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("built-in curves validate, symbolic and numeric") {
  CHECK(build_jm(Rational(1)).validate().empty());
  CHECK(build_htw(Rational(1)).validate().empty());
  CHECK(build_weber(Rational(2)).validate().empty());
  CHECK(build_bessel(std::nullopt).validate().empty());

  // random admissible numeric parameter pairs
  std::mt19937 gen(7);
  std::uniform_int_distribution<long> pick(1, 6);
  int jm_count = 0;
  for (int i = 0; i < 40 && jm_count < 10; ++i) {
    // arrange -theta/q0 to be a perfect square: q0 = -theta/k^2
    Rational theta(pick(gen), pick(gen));
    Rational k(pick(gen));
    Rational q0 = -theta / (k * k);
    if ((Rational(4) * q0.pow(3) + theta).is_zero()) continue;
    auto c = build_jm(theta, q0);
    CHECK(c.validate().empty());
    ++jm_count;
  }
  CHECK(jm_count == 10);
  for (int i = 0; i < 10; ++i) {
    Rational theta(pick(gen), pick(gen));
    Rational q0(pick(gen), pick(gen));
    if ((Rational(4) * q0.pow(3) + theta).is_zero()) continue;
    CHECK(build_htw(theta, q0).validate().empty());
    CHECK(build_bessel(theta).validate().empty());
  }
  CHECK(build_weber(Rational(9, 4), false).validate().empty());
}

TEST_CASE("branch point counts and involution fixing") {
  CHECK(build_jm(Rational(1)).branch_points.size() == 2);
  CHECK(build_htw(Rational(1)).branch_points.size() == 1);
  CHECK(build_weber(Rational(3)).branch_points.size() == 2);
  CHECK(build_bessel(Rational(2)).branch_points.size() == 1);
}

TEST_CASE("jm curve data") {
  SECTION("numeric point: theta=1, q0=-1/4 gives s=2 and t=-33/8") {
    auto c = build_jm(Rational(1), Rational(-1, 4));
    CHECK(c.field.t() == Elem(Rational(-33, 8)));
    CHECK(c.branch_points[0] == Elem(1));
    CHECK(c.branch_points[1] == Elem(-1));
    // s enters through x: coefficient of z is s/2 = 1
    CHECK(c.x_of(Elem(2)) == Elem(Rational(1, 4)) + Elem(Rational(5, 2)));
  }

  SECTION("defining identity y^2 = (x-q0)^2 ((x+q0)^2 + theta/q0)") {
    auto c = build_jm(Rational(3));
    Elem q0 = *c.field.q0;
    Elem lhs = c.y * c.y;
    Elem rhs = (c.x - q0).pow(2) * ((c.x + q0).pow(2) + c.field.theta / q0);
    CHECK(lhs == rhs);
  }

  SECTION("Zhukovsky symmetry x(1/z) = x(z)") {
    auto c = build_jm(Rational(2));
    Elem z = Elem::var(2);
    CHECK(c.x_of(Elem(1) / z) == c.x);
  }

  SECTION("numeric mode with a non-square ratio is rejected") {
    CHECK_THROWS_AS(build_jm(Rational(1), Rational(1, 3)), std::invalid_argument);
    CHECK_THROWS_AS(build_jm(Rational(0), Rational(-1, 4)), std::invalid_argument);
  }
}

TEST_CASE("htw curve data") {
  auto c = build_htw(Rational(5));
  Elem q0 = *c.field.q0;
  Elem z = Elem::var(2);

  SECTION("defining identity y^2 = (x - theta/2q0)^2 (x + 2q0^2) / (2x^2)") {
    Elem lhs = c.y * c.y;
    Elem rhs = (c.x - c.field.theta / (Elem(2) * q0)).pow(2) * (c.x + Elem(2) * q0 * q0) /
               (Elem(2) * c.x * c.x);
    CHECK(lhs == rhs);
  }

  SECTION("involution is an involution") {
    CHECK(c.iota.apply(c.iota.apply(z)) == z);
  }

  SECTION("dx/dz = 4 q0^2 z vanishes only at z = 0") {
    CHECK(c.dx() == Elem(4) * q0 * q0 * z);
  }
}

TEST_CASE("weber and bessel curve data") {
  SECTION("weber: Y^2 = X^2/4 - theta") {
    auto c = build_weber(Rational(7));
    CHECK(c.y * c.y == c.x * c.x / Elem(4) - c.field.theta);
    Elem z = Elem::var(2);
    CHECK(c.y_of(c.iota.apply(z)) == -c.y);
  }
  SECTION("bessel: Y^2 = (X + theta^2)/(4 X^2)") {
    auto c = build_bessel(std::nullopt);
    Elem th = c.field.theta;
    CHECK(c.y * c.y == (c.x + th * th) / (Elem(4) * c.x * c.x));
    Elem z = Elem::var(2);
    CHECK(c.y_of(c.iota.apply(z)) == -c.y);
  }
}

TEST_CASE("E(x) reconstruction matches the stored defining function") {
  for (const auto* id : {"jm", "htw", "weber", "bessel"}) {
    auto c = build_curve(id, Rational(2), std::nullopt, true);
    auto e = express_in_x(c, c.y * c.y, 6);
    REQUIRE(e.has_value());
    // P/Q == e_num/e_den as rational functions of the x variable
    CHECK(e->first * c.e_den_x == e->second * c.e_num_x);
  }
}

TEST_CASE("curve files load and validate") {
  SECTION("bessel document equals the built-in at theta=1") {
    auto c = load_curve_text(read_file(std::string(TOPREC_DATA_DIR) + "/curves/bessel_theta1.json"));
    auto b = build_bessel(Rational(1));
    CHECK(same_curve(c, b));
    CHECK(c.branch_points.size() == 1);
    CHECK(c.punctures.size() == 1);
    CHECK(c.punctures[0].at_infinity);
  }

  SECTION("a non-involutive map is rejected") {
    // z -> 2z is not an involution
    std::string doc = R"({
      "name": "broken", "theta": "1",
      "x": {"num": ["-1", "0", "1"]},
      "y": {"num": ["0", "1/2"], "den": ["-1", "0", "1"]},
      "involution": {"a": "2", "b": "0", "c": "0", "d": "1"}
    })";
    CHECK_THROWS_AS(load_curve_text(doc), CurveError);
  }

  SECTION("an involution that does not flip y is rejected") {
    // iota = -z but y even in z: y(iota) != -y
    std::string doc = R"({
      "name": "broken2", "theta": "1",
      "x": {"num": ["-1", "0", "1"]},
      "y": {"num": ["0", "0", "1/2"], "den": ["-1", "0", "1"]},
      "involution": {"a": "-1", "b": "0", "c": "0", "d": "1"}
    })";
    CHECK_THROWS_AS(load_curve_text(doc), CurveError);
  }
}

TEST_CASE("even reexpression maps s-rational data to q0") {
  // f(s) = s^2 + 1/s^2, with s^2 = -theta/q0, theta = 2
  Elem s = Elem::var(1);
  Elem f = s * s + Elem(1) / (s * s);
  Elem q0 = Elem::var(1);  // target variable
  Elem image = Elem(-2) / q0;
  Elem got = reexpress_even(f, image);
  CHECK(got == Elem(-2) / q0 - q0 / Elem(2));
  // odd functions are rejected
  CHECK_THROWS_AS(reexpress_even(s, image), std::domain_error);
}
