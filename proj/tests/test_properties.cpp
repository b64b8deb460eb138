// Property suites on generated inputs. Every case draws a seed from the harness generator, which is
// itself seeded with a fixed value in main, so runs are reproducible.
#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include "reptile/algebra/algebraic_real.hpp"
#include "reptile/algebra/sturm.hpp"
#include "reptile/simplex/simplex.hpp"
#include "reptile/trig/trig.hpp"

using namespace reptile;
using Catch::Generators::random;
using Catch::Generators::range;
using Catch::Generators::take;

namespace {

constexpr std::uint32_t kHarnessSeed = 20261016;
int g_cases = 0;

Rational q(long p, long r = 1) { return make_rational(p, r); }

IntPolynomial times(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> c(static_cast<std::size_t>(a.degree() + b.degree() + 1), Integer(0));
  for (std::size_t i = 0; i < a.coefficients().size(); ++i)
    for (std::size_t j = 0; j < b.coefficients().size(); ++j) c[i + j] += a.coefficients()[i] * b.coefficients()[j];
  return IntPolynomial(c);
}

/// Distinct real roots on a 1/8 grid in [-4, 4], odd multiplicities, padded with x^2 + c factors.
struct Planted {
  IntPolynomial p;
  int distinct_roots;
};

Planted planted(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(0, 6), grid(-32, 32), shift(1, 5), coin(0, 3);
  IntPolynomial p{1};
  int degree = 0, roots = 0;
  std::vector<int> used;
  const int wanted = count(rng);
  while (roots < wanted && degree < 6) {
    const int k = grid(rng);
    if (std::find(used.begin(), used.end(), k) != used.end()) continue;
    used.push_back(k);
    const int mult = (degree <= 3 && coin(rng) == 0) ? 3 : 1;
    for (int i = 0; i < mult; ++i) p = times(p, IntPolynomial{-k, 8});
    degree += mult;
    ++roots;
  }
  while (degree + 2 <= 6 && coin(rng) == 0) {
    p = times(p, IntPolynomial{shift(rng), 0, 1});
    degree += 2;
  }
  if (degree == 0) p = IntPolynomial{shift(rng), 0, 1};
  return {p, roots};
}

/// Sign changes on a dense grid that never meets the 1/8 lattice: x_j = -5 + (2j + 1)/128.
int sampled_sign_changes(const IntPolynomial& p) {
  int changes = 0, last = 0;
  for (int j = 0; j < 640; ++j) {
    const Rational x = q(-5) + q(2 * j + 1, 128);
    const int s = sgn(p.evaluate(x));
    if (s != 0 && last != 0 && s != last) ++changes;
    if (s != 0) last = s;
  }
  return changes;
}

AlgebraicReal random_algebraic(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 4), num(-9, 9), den(1, 9), rad(2, 30), ang(1, 14);
  switch (kind(rng)) {
    case 0:
      return AlgebraicReal(q(num(rng), den(rng)));
    case 1:
      return AlgebraicReal::sqrt(q(rad(rng), den(rng)));
    case 2:
      return AlgebraicReal(q(num(rng), den(rng))) - AlgebraicReal::sqrt(q(rad(rng)));
    case 3: {
      const int n = ang(rng) + 1;
      return cosine_of(RationalAngle(std::uniform_int_distribution<int>(0, n)(rng), n));
    }
    default: {
      const auto roots = AlgebraicReal::real_roots(IntPolynomial{num(rng), num(rng) == 0 ? 1 : num(rng), 0, 1});
      return roots.front();
    }
  }
}

using Vec = std::vector<Rational>;

/// Rigid motions with rational matrices: signed permutations and the (3/5, 4/5) rotation.
std::vector<Vec> move(const std::vector<Vec>& pts, std::mt19937_64& rng) {
  std::array<int, 3> perm{0, 1, 2};
  std::shuffle(perm.begin(), perm.end(), rng);
  std::uniform_int_distribution<int> coin(0, 1), shift(-7, 7);
  std::array<int, 3> sign{};
  for (auto& s : sign) s = coin(rng) ? 1 : -1;
  const bool rotate = coin(rng);
  const Vec t{q(shift(rng), 3), q(shift(rng), 5), q(shift(rng))};
  std::vector<Vec> out;
  for (const auto& p : pts) {
    Vec v(3);
    for (int i = 0; i < 3; ++i) v[i] = sign[i] * p[perm[i]];
    if (rotate) v = {q(3, 5) * v[0] - q(4, 5) * v[1], q(4, 5) * v[0] + q(3, 5) * v[1], v[2]};
    for (int i = 0; i < 3; ++i) v[i] += t[i];
    out.push_back(v);
  }
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

Simplex random_tetrahedron(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-5, 5);
  for (;;) {
    std::vector<Vec> v(4, Vec(3));
    for (auto& p : v)
      for (auto& x : p) x = Rational(c(rng));
    try {
      return Simplex::exact(v);
    } catch (const std::exception&) {
      // degenerate draw, try again
    }
  }
}

std::uint64_t totient_by_gcd(std::uint64_t n) {
  std::uint64_t k = 0;
  for (std::uint64_t j = 1; j <= n; ++j) k += std::gcd(j, n) == 1;
  return k;
}

}  // namespace

TEST_CASE("Sturm isolation matches a dense sampling oracle", "[property][sturm]") {
  const auto seed = GENERATE(take(450, random(0u, 0xffffffffu)));
  std::mt19937_64 rng(seed);
  const Planted c = planted(rng);
  ++g_cases;
  INFO("polynomial " << c.p.to_string());
  const auto roots = sturm_isolate(c.p);
  CHECK(static_cast<int>(roots.size()) == c.distinct_roots);
  CHECK(sampled_sign_changes(c.p) == c.distinct_roots);
  CHECK(count_roots_open(c.p, q(-5), q(5)) == c.distinct_roots);
  // Ordered; neighbours may share an endpoint, which is then not a root.
  for (std::size_t i = 1; i < roots.size(); ++i) {
    CHECK(roots[i - 1].hi <= roots[i].lo);
    if (roots[i - 1].hi == roots[i].lo) CHECK(c.p.evaluate(roots[i].lo) != 0);
  }
}

TEST_CASE("compare is a total order consistent with approximations", "[property][compare]") {
  const auto seed = GENERATE(take(320, random(0u, 0xffffffffu)));
  std::mt19937_64 rng(seed);
  const AlgebraicReal x = random_algebraic(rng), y = random_algebraic(rng), z = random_algebraic(rng);
  ++g_cases;
  INFO(x.to_string() << " | " << y.to_string() << " | " << z.to_string());
  CHECK(compare(x, x) == std::strong_ordering::equal);
  CHECK((compare(x, y) < 0) == (compare(y, x) > 0));
  CHECK((compare(x, y) == 0) == (compare(y, x) == 0));
  if (x <= y && y <= z) CHECK(x <= z);
  if (x >= y && y >= z) CHECK(x >= z);
  if (std::abs(x.approx() - y.approx()) > 1e-9) CHECK((x < y) == (x.approx() < y.approx()));
  if (x.degree() * y.degree() <= 8) CHECK(x + y == y + x);
}

TEST_CASE("congruence is an equivalence relation", "[property][congruence]") {
  const auto seed = GENERATE(take(230, random(0u, 0xffffffffu)));
  std::mt19937_64 rng(seed);
  const Simplex a = random_tetrahedron(rng);
  const Simplex b = Simplex::exact(move(a.vertices(), rng));
  const Simplex c = Simplex::exact(move(b.vertices(), rng));
  const Simplex d = a.scaled(q(2));
  ++g_cases;
  CHECK(congruent(a, a));
  CHECK(congruent(a, b));
  CHECK(congruent(b, a));
  CHECK(congruent(b, c));
  CHECK(congruent(a, c));
  CHECK_FALSE(congruent(a, d));
  CHECK(congruent(a, d) == congruent(d, a));
}

TEST_CASE("cosine degree is phi(n)/2", "[property][trig]") {
  const auto n = GENERATE(range(3, 61));
  ++g_cases;
  const RationalAngle angle(2, n);
  const std::uint64_t expected = totient_by_gcd(static_cast<std::uint64_t>(n)) / 2;
  CHECK(static_cast<std::uint64_t>(cosine_degree(angle)) == expected);
  CHECK(static_cast<std::uint64_t>(cosine_minpoly(n).degree()) == expected);
  if (expected <= 8) CHECK(static_cast<std::uint64_t>(cosine_of(angle).degree()) == expected);
}

TEST_CASE("case count", "[property][zz]") {
  // Runs last in declaration order.
  CHECK(g_cases >= 1000);
}

int main(int argc, char* argv[]) {
  Catch::Session session;
  session.configData().rngSeed = kHarnessSeed;
  if (const int rc = session.applyCommandLine(argc, argv); rc != 0) return rc;
  return session.run();
}
