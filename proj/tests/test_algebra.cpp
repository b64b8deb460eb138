#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reptile/algebra/algebraic_real.hpp"
#include "reptile/algebra/certified.hpp"
#include "reptile/algebra/eliminate.hpp"
#include "reptile/algebra/factor.hpp"
#include "reptile/algebra/golden.hpp"
#include "reptile/algebra/number_theory.hpp"
#include "reptile/algebra/sturm.hpp"
#include "reptile/algebra/surd.hpp"

using namespace reptile;

namespace {
Rational q(long p, long r = 1) { return make_rational(p, r); }
const AlgebraicReal kSqrt2 = AlgebraicReal::sqrt(q(2));
const AlgebraicReal kPhi = (AlgebraicReal(1) + AlgebraicReal::sqrt(q(5))) / AlgebraicReal(2);
}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/6") == q(1, 2));
  CHECK(parse_rational("-0.125") == q(-1, 8));
  CHECK(to_string(q(-4, 6)) == "-2/3");
  CHECK_THROWS_AS(make_rational(1, 0), DomainError);
  CHECK(simplest_between(q(3, 10), q(4, 10)) == q(1, 3));
  CHECK(parse_tolerance("1e-3") == q(1, 1000));
}

TEST_CASE("sturm isolation") {
  auto roots = sturm_isolate(IntPolynomial{-2, 0, 1});
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].hi <= 0);
  CHECK(roots[1].lo < q(14143, 10000));
  CHECK(roots[1].hi > q(14142, 10000));

  auto inside = sturm_isolate(IntPolynomial{1, 0, -3, 0, 1}, Interval(q(-1), q(1)));
  REQUIRE(inside.size() == 2);
  CHECK(to_double(inside[0].midpoint()) == doctest::Approx(-0.618).epsilon(0.1));

  auto cube = sturm_isolate(IntPolynomial{-1, 0, 0, 7});
  REQUIRE(cube.size() == 1);
  CHECK(cube[0].lo < q(5227579, 10000000));
  CHECK(cube[0].hi > q(5227580, 10000000));

  CHECK_THROWS_WITH_AS(sturm_isolate(IntPolynomial()), "undefined root set", DomainError);
}

TEST_CASE("irreducibility") {
  CHECK(is_irreducible(IntPolynomial{-1, 0, 0, 2}));
  CHECK_FALSE(is_irreducible(IntPolynomial{-1, 0, 0, 8}));
  // x^4 - 3x^2 + 1 = (x^2 - x - 1)(x^2 + x - 1)
  CHECK_FALSE(is_irreducible(IntPolynomial{1, 0, -3, 0, 1}));
  CHECK(is_irreducible(IntPolynomial{1, 0, -10, 0, 1}));
  CHECK_THROWS_WITH_AS(is_irreducible(IntPolynomial{1, 0, 0, 0, 0, 1}), "unsupported degree 5", UnsupportedDegree);
}

TEST_CASE("factorization up to degree 8") {
  // (x^2 - 2)(x^3 - 3)(x^3 + x + 1)
  IntPolynomial p = IntPolynomial{-2, 0, 1} * IntPolynomial{-3, 0, 0, 1} * IntPolynomial{1, 1, 0, 1};
  auto f = factor_squarefree(p);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == IntPolynomial{-2, 0, 1});
  CHECK(factor_squarefree(IntPolynomial{-108, 0, 0, 0, 0, 0, 1}).size() == 1);
}

TEST_CASE("refine") {
  Interval iv = kSqrt2.refine(q(1, 1000));
  CHECK(iv.width() < q(1, 1000));
  CHECK(iv.contains(q(141421, 100000)));
  AlgebraicReal r = AlgebraicReal::real_roots(IntPolynomial{-1, 0, 0, 7}).front();
  Interval narrow = r.refine(q(1, 1000000));
  CHECK(narrow.lo < q(522758, 1000000));
  CHECK(narrow.hi > q(522757, 1000000));
  CHECK(AlgebraicReal(q(1, 2)).refine(q(1, 10)).is_point());
  CHECK_THROWS_AS(kSqrt2.refine(q(0)), DomainError);
}

TEST_CASE("arith") {
  CHECK(kSqrt2 * kSqrt2 == AlgebraicReal(2));
  CHECK((kSqrt2 * kSqrt2).is_rational());
  AlgebraicReal conj = kPhi - AlgebraicReal(1);
  CHECK(conj.minpoly() == IntPolynomial{-1, 1, 1});
  CHECK(AlgebraicReal(q(1, 2)) + AlgebraicReal(q(1, 3)) == AlgebraicReal(q(5, 6)));
  AlgebraicReal s = kSqrt2 + AlgebraicReal::sqrt(q(3));
  CHECK(s.minpoly() == IntPolynomial{1, 0, -10, 0, 1});
  CHECK(s.approx() == doctest::Approx(3.1462643699));
  CHECK((kPhi / kSqrt2).approx() == doctest::Approx(1.1441228056));
  CHECK(AlgebraicReal(1) / kPhi == kPhi - AlgebraicReal(1));
  CHECK_THROWS_AS(kSqrt2 / AlgebraicReal(0), DomainError);
  AlgebraicReal cbrt2 = AlgebraicReal::real_roots(IntPolynomial{-2, 0, 0, 1}).front();
  CHECK((cbrt2 * AlgebraicReal::sqrt(q(3))).minpoly() == IntPolynomial{-108, 0, 0, 0, 0, 0, 1});
  AlgebraicReal quartic = AlgebraicReal::real_roots(IntPolynomial{1, 0, -10, 0, 1}).back();
  CHECK_THROWS_AS(quartic * cbrt2, UnsupportedDegree);
  // interval consistency of the exact result
  Interval enclosure = kSqrt2.interval() + kPhi.interval();
  Interval exact = (kSqrt2 + kPhi).refine(q(1, 100));
  CHECK(enclosure.lo <= exact.hi);
  CHECK(exact.lo <= enclosure.hi);
}

TEST_CASE("compare") {
  CHECK(kSqrt2 < AlgebraicReal(q(3, 2)));
  AlgebraicReal cos36 = (AlgebraicReal(1) + AlgebraicReal::sqrt(q(5))) / AlgebraicReal(4);
  CHECK(kPhi - AlgebraicReal(1) < cos36);
  CHECK(compare(kSqrt2, kSqrt2) == std::strong_ordering::equal);
  CHECK(kSqrt2.refined(q(1, 1000)) == kSqrt2);
  CHECK(certified_gap(kSqrt2, AlgebraicReal(q(3, 2))) > 0);
  CHECK(sqrt(AlgebraicReal(q(1, 2))) == kSqrt2 / AlgebraicReal(2));
  CHECK(sqrt(kPhi).approx() == doctest::Approx(1.2720196495));
}

TEST_CASE("euler totient") {
  CHECK(euler_totient(1) == 1);
  CHECK(euler_totient(12) == 4);
  CHECK(euler_totient(5) == 4);
  CHECK_THROWS_AS(euler_totient(0), DomainError);
  CHECK(is_perfect_cube(27));
  CHECK_FALSE(is_perfect_cube(9));
}

TEST_CASE("eliminate") {
  GeneratedPolynomial linear{kSqrt2, {RatPoly{0, -1}, RatPoly{1}}};  // s - t
  CHECK(eliminate(linear) == IntPolynomial{-2, 0, 1});
  GeneratedPolynomial rational{AlgebraicReal(q(1, 2)), {RatPoly{2}, RatPoly{0}, RatPoly{4}}};
  CHECK(eliminate(rational) == IntPolynomial{1, 0, 2});
  std::vector<GeneratedCoefficient> mixed = {{RatPoly{0, 1}, kSqrt2}, {RatPoly{1}, kPhi}};
  CHECK_THROWS_WITH_AS(eliminate(mixed), "inconsistent coefficient field", DomainError);
  // s - t has the single genuine root sqrt 2; the conjugate -sqrt 2 is spurious.
  auto roots = genuine_roots(linear, Interval(q(-2), q(2)));
  REQUIRE(roots.size() == 1);
  CHECK(roots[0] == kSqrt2);
}

TEST_CASE("surd sums") {
  SurdSum a = SurdSum::sqrt(q(2)) + SurdSum::sqrt(q(8));  // 3 sqrt 2
  CHECK(a.terms().size() == 1);
  CHECK(a * a == SurdSum(q(18)));
  SurdSum b = SurdSum::sqrt(q(3)) - SurdSum::sqrt(q(2));
  CHECK(b.sign() == 1);
  CHECK((b * (SurdSum::sqrt(q(3)) + SurdSum::sqrt(q(2)))) == SurdSum(1));
  CHECK(SurdSum::sqrt(q(1, 2)) == SurdSum::sqrt(q(2)) * SurdSum(q(1, 2)));
  auto phi = SurdSum::from_algebraic(kPhi);
  REQUIRE(phi);
  CHECK(*phi * *phi == *phi + SurdSum(1));
  CHECK(phi->to_algebraic().value() == kPhi);
}

TEST_CASE("golden field") {
  GoldenNumber phi = GoldenNumber::phi();
  CHECK(phi * phi == phi + GoldenNumber(q(1)));
  CHECK(phi.inverse() == phi - GoldenNumber(q(1)));
  CHECK((phi * phi).inverse() == GoldenNumber(q(2)) - phi);
  CHECK(GoldenNumber(q(-3, 2), q(1)).sign() == 1);  // phi - 3/2 > 0
  CHECK(GoldenNumber(q(-2), q(1)).sign() == -1);
  using P = GoldenPoly;
  P s = P::var(P::s), t = P::var(P::t);
  CHECK((s + t) * (s - t) == s * s - t * t);
  CHECK(((s + t) * (s + t)).substitute(P::t, P(1L)) == s * s + P(2L) * s + P(1L));
}

TEST_CASE("certified arccos") {
  auto regular = compare_arccos_sum({AlgebraicReal(q(1, 3)), AlgebraicReal(q(1, 3)), AlgebraicReal(q(1, 3))}, q(1));
  CHECK(regular.sign == 1);
  // pi/2 + pi/2 equals pi exactly: no finite enclosure decides it
  CHECK_THROWS_AS(compare_arccos_sum({AlgebraicReal(0), AlgebraicReal(0)}, q(1)), Inconclusive);
  Interval a = arccos_over_pi(AlgebraicReal(q(1, 2)), q(1, 1000000));
  CHECK(a.contains(q(1, 3)));
}
