#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "reptile/fiedler/fiedler.hpp"

using namespace reptile;

namespace {

Rational q(long p, long r = 1) { return make_rational(p, r); }
const AlgebraicReal kPhiMinusOne = AlgebraicReal::from_minpoly(IntPolynomial(std::vector<Integer>{-1, 1, 1}), {q(1, 2), q(1)});

CosMatrix sym(const std::vector<std::vector<AlgebraicReal>>& rows) {
  CosMatrix m;
  m.dim = static_cast<int>(rows.size()) - 1;
  m.entries = rows;
  return m;
}

CosMatrix regular_matrix() { return CosMatrix::from_upper(3, std::vector<AlgebraicReal>(6, AlgebraicReal(q(1, 3)))); }

CosMatrix tripod(const AlgebraicReal& s, const AlgebraicReal& t) {
  const AlgebraicReal m1(-1);
  return sym({{m1, t, t, t}, {t, m1, s, s}, {t, s, m1, s}, {t, s, s, m1}});
}

CosMatrix path(const AlgebraicReal& s, const AlgebraicReal& t) {
  const AlgebraicReal m1(-1);
  return sym({{m1, t, s, s}, {t, m1, t, s}, {s, t, m1, t}, {s, s, t, m1}});
}

CosMatrix multiples(const AlgebraicReal& t, const AlgebraicReal& u) {
  const AlgebraicReal m1(-1), nt = -t;
  return sym({{m1, nt, t, t}, {nt, m1, u, t}, {t, u, m1, nt}, {t, t, nt, m1}});
}

CosMatrix complement(const AlgebraicReal& t) {
  const AlgebraicReal m1(-1), nt = -t;
  return sym({{m1, t, nt, nt}, {t, m1, t, nt}, {nt, t, m1, t}, {nt, nt, t, m1}});
}

bool same_up_to_sign(const RatVector& c, const RatVector& expected) {
  RatVector neg;
  for (const auto& x : expected) neg.push_back(-x);
  return c == expected || c == neg;
}

}  // namespace

TEST_CASE("regular tetrahedron is realizable with constant kernel") {
  const auto v = realizability_check(regular_matrix());
  REQUIRE(v.valid);
  CHECK(v.field == "surd");
  REQUIRE(v.kernel.size() == 4);
  for (const auto& z : v.kernel) CHECK(z == v.kernel[0]);
  for (double z : v.kernel_approx) CHECK(z == doctest::Approx(0.25));
  CHECK(verify_kernel(regular_matrix(), v));
  CHECK_FALSE(nonneg_rowspace_certificate(regular_matrix()).has_value());
}

TEST_CASE("tripod with nonzero determinant is rejected") {
  const auto v = realizability_check(tripod(AlgebraicReal(0), AlgebraicReal(q(1, 2))));
  CHECK_FALSE(v.valid);
  CHECK(v.failure == RealizabilityFailure::nonsingular);
  // On the singular curve s = (1 - 3t^2)/2 the verdict depends on the kernel.
  const auto on_curve = realizability_check(tripod(AlgebraicReal(q(1, 8)), AlgebraicReal(q(1, 2))));
  CHECK(on_curve.failure != RealizabilityFailure::nonsingular);
}

TEST_CASE("path matrix at t = 0 and s = phi - 1") {
  const CosMatrix a = path(kPhiMinusOne, AlgebraicReal(0));
  const auto v = realizability_check(a);
  REQUIRE(v.valid);
  CHECK(verify_kernel(a, v));
  const Simplex s = reconstruct_simplex(a);
  CHECK(cosine_residual(a, s) < 1e-10);
  // The other root 1 - phi gives a singular matrix as well; it is not negative semidefinite.
  CHECK_FALSE(realizability_check(path(-kPhiMinusOne, AlgebraicReal(0))).valid);
}

TEST_CASE("row-space certificates") {
  const CosMatrix mult = multiples(AlgebraicReal(q(3, 4)), AlgebraicReal(q(1, 5)));
  auto c = nonneg_rowspace_certificate(mult);
  REQUIRE(c.has_value());
  CHECK(same_up_to_sign(*c, {q(1), q(0), q(0), q(1)}));
  CHECK(verify_rowspace_certificate(mult, *c));
  CHECK_FALSE(realizability_check(mult).valid);

  const CosMatrix comp = complement(AlgebraicReal(q(1, 3)));
  c = nonneg_rowspace_certificate(comp);
  REQUIRE(c.has_value());
  CHECK(same_up_to_sign(*c, {q(0), q(1), q(1), q(0)}));
  CHECK_FALSE(realizability_check(comp).valid);

  CHECK_FALSE(verify_rowspace_certificate(regular_matrix(), {q(1), q(1), q(1), q(1)}));
}

TEST_CASE("characteristic polynomial") {
  const CosMatrix minus_identity = CosMatrix::from_upper(3, std::vector<AlgebraicReal>(6, AlgebraicReal(0)));
  const auto c = char_poly(minus_identity);
  const std::vector<long> binomial{1, 4, 6, 4, 1};
  for (std::size_t k = 0; k < c.size(); ++k) CHECK(c[k] == SurdSum(binomial[k]));

  using V = GoldenPoly;
  const V s = V::var(V::s), t = V::var(V::t), m1(-1);
  const GoldenMatrix tri{{m1, t, t, t}, {t, m1, s, s}, {t, s, m1, s}, {t, s, s, m1}};
  CHECK(symbolic_det(tri) == pow(V(1) + s, 2) * (V(1) - V(2) * s - V(3) * t * t));
  const GoldenPoly tri_char = symbolic_char_poly(tri);
  CHECK(tri_char.substitute(V::lambda, V(0)) == symbolic_det(tri));

  const GoldenMatrix pth{{m1, t, s, s}, {t, m1, t, s}, {s, t, m1, t}, {s, s, t, m1}};
  const GoldenNumber phi = GoldenNumber::phi(), inv_phi = phi - GoldenNumber(q(1));
  const V lambda1 = V(-phi) * s + V(inv_phi) * t - V(1);
  CHECK(symbolic_char_poly(pth).substitute(V::lambda, lambda1).is_zero());
}

TEST_CASE("reconstruction round trips") {
  const Simplex reg = reconstruct_simplex(regular_matrix());
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) CHECK(reg.approx_squared_length(i, j) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(cosine_residual(regular_matrix(), reg) < 1e-10);

  const Simplex orth = Simplex::exact({{q(0), q(0), q(0)}, {q(1), q(0), q(0)}, {q(1), q(1), q(0)}, {q(1), q(1), q(1)}});
  const DihedralData data = dihedral_data(orth);
  const Simplex back = reconstruct_simplex(data.matrix);
  CHECK(cosine_residual(data.matrix, back) < 1e-10);
  CHECK(similar(orth, back).has_value());

  CHECK_THROWS_AS(reconstruct_simplex(tripod(AlgebraicReal(0), AlgebraicReal(q(1, 2)))), std::invalid_argument);
}

TEST_CASE("random rational tetrahedra are sound") {
  std::uint64_t state = 12345;
  auto next = [&]() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<long>((state >> 33) % 11) - 5;
  };
  int tested = 0;
  while (tested < 15) {
    std::vector<RatVector> pts;
    for (int i = 0; i < 4; ++i) pts.push_back({q(next()), q(next()), q(next())});
    std::optional<Simplex> s;
    try {
      s = Simplex::exact(pts);
    } catch (const DomainError&) {
      continue;
    }
    const DihedralData d = dihedral_data(*s);
    const auto v = realizability_check(d.matrix);
    REQUIRE(v.valid);
    CHECK(verify_kernel(d.matrix, v));
    CHECK_FALSE(nonneg_rowspace_certificate(d.matrix).has_value());
    const Simplex back = reconstruct_simplex(d.matrix);
    CHECK(cosine_residual(d.matrix, back) < 1e-10);
    CHECK(similar(*s, back).has_value());
    ++tested;
  }
}
