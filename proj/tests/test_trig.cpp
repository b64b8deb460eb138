#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "reptile/algebra/number_theory.hpp"
#include "reptile/trig/trig.hpp"

using namespace reptile;

TEST_CASE("rational angles") {
  RationalAngle a(2, 4);
  CHECK(a.p() == 1);
  CHECK(a.q() == 2);
  CHECK(RationalAngle(5, 3).canonical() == RationalAngle(1, 3));
  CHECK(RationalAngle(-1, 3).canonical() == RationalAngle(1, 3));
  CHECK(RationalAngle(1, 3) + RationalAngle(1, 6) == RationalAngle(1, 2));
  CHECK(RationalAngle(2, 5).to_string() == "2pi/5");
  CHECK(RationalAngle(1, 3) < RationalAngle(1, 2));
}

TEST_CASE("cyclotomic and cosine minimal polynomials") {
  CHECK(cyclotomic(1) == IntPolynomial{-1, 1});
  CHECK(cyclotomic(6) == IntPolynomial{1, -1, 1});
  CHECK(cyclotomic(12) == IntPolynomial{1, 0, -1, 0, 1});
  CHECK(cosine_minpoly(5) == IntPolynomial{-1, 2, 4});
  CHECK(cosine_minpoly(8) == IntPolynomial{-1, 0, 2});
}

TEST_CASE("cosine_of") {
  CHECK(cosine_of(RationalAngle(1, 3)) == AlgebraicReal(make_rational(1, 2)));
  AlgebraicReal c72 = cosine_of(RationalAngle(2, 5));
  CHECK(c72.minpoly() == IntPolynomial{-1, 2, 4});
  CHECK(c72.approx() == doctest::Approx(0.309017).epsilon(1e-6));
  AlgebraicReal c15 = cosine_of(RationalAngle(1, 12));
  CHECK(c15.degree() == 4);
  CHECK(c15.approx() == doctest::Approx(0.9659258).epsilon(1e-6));
  CHECK(cosine_of(RationalAngle(1, 1)) == AlgebraicReal(-1));
  CHECK(cosine_of(RationalAngle(0, 1)) == AlgebraicReal(1));
}

TEST_CASE("cosine_degree") {
  CHECK(cosine_degree(RationalAngle(1, 4)) == 2);
  CHECK(cosine_degree(RationalAngle(1, 3)) == 1);
  CHECK(cosine_degree(RationalAngle(7, 15)) == 4);  // 84 degrees
}

TEST_CASE("catalogs") {
  const auto& c1 = catalog(1);
  REQUIRE(c1.entries.size() == 5);
  CHECK(c1.entries.front().cosine == AlgebraicReal(-1));
  CHECK(c1.entries[2].cosine == AlgebraicReal(0));
  const auto& c2 = catalog(2);
  REQUIRE(c2.entries.size() == 8);
  const double listed2[] = {0.309, 0.707, 0.809, 0.866};
  for (double v : listed2) {
    int hits = 0;
    for (const auto& e : c2.entries) {
      double a = e.cosine.approx();
      if (std::abs(std::abs(a) - v) < 0.001) ++hits;
    }
    CHECK(hits == 2);
  }
  const auto& c4 = catalog(4);
  REQUIRE(c4.entries.size() == 20);
  const double listed4[] = {0.105, 0.259, 0.383, 0.588, 0.669, 0.914, 0.924, 0.951, 0.966, 0.978};
  for (double v : listed4) {
    int hits = 0;
    for (const auto& e : c4.entries)
      if (std::abs(std::abs(e.cosine.approx()) - v) < 0.001) ++hits;
    CHECK(hits == 2);
  }
  for (std::size_t i = 1; i < c4.entries.size(); ++i) CHECK(c4.entries[i - 1].cosine < c4.entries[i].cosine);
}

TEST_CASE("match_rational_angle") {
  CHECK(match_rational_angle(AlgebraicReal(make_rational(1, 2))) == RationalAngle(1, 3));
  AlgebraicReal phi_minus_one = AlgebraicReal::real_roots(IntPolynomial{-1, 1, 1}).back();
  CHECK_FALSE(match_rational_angle(phi_minus_one).has_value());
  // root near -0.348 of 4s^4 - 8s^3 - 18s^2 - 8s - 1
  auto roots = AlgebraicReal::real_roots(IntPolynomial{-1, -8, -18, -8, 4}, Interval(make_rational(-2, 5), make_rational(-3, 10)));
  REQUIRE(roots.size() == 1);
  CHECK_FALSE(match_rational_angle(roots[0]).has_value());
  CHECK_THROWS_AS(match_rational_angle(AlgebraicReal(2)), DomainError);
}

TEST_CASE("round trip and symmetry for n <= 60") {
  for (std::int64_t n = 1; n <= 60; ++n) {
    for (std::int64_t m = 0; 2 * m <= n; ++m) {
      if (std::gcd(m, n) != 1) continue;
      RationalAngle a = RationalAngle::turn(m, n);
      AlgebraicReal c = cosine_of(a);
      int expected = n <= 2 ? 1 : static_cast<int>(euler_totient(static_cast<std::uint64_t>(n)) / 2);
      CHECK(c.degree() == expected);
      CHECK(cosine_degree(a) == expected);
      if (expected <= 8) {
        auto back = match_rational_angle(c);
        REQUIRE(back.has_value());
        CHECK(*back == a);
      }
      CHECK(cosine_of(RationalAngle(1, 1) - a) == -c);
    }
  }
}
