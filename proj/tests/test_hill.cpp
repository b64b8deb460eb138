#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "reptile/hill/hill.hpp"

using namespace reptile;

namespace {

Rational q(long p, long r = 1) { return make_rational(p, r); }

std::vector<AlgebraicReal> sorted_cosines(const Simplex& s) {
  std::vector<AlgebraicReal> out;
  for (const auto& [pair, c] : dihedral_data(s).cosines) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("Hill simplex construction") {
  const Simplex orth = hill_simplex(HillSpec::orthonormal(3));
  REQUIRE(orth.is_exact());
  CHECK(orth.vertices()[3] == RatVector{q(1), q(1), q(1)});
  CHECK(coordinate_volume(orth) == q(1, 6));

  const HillSpec half = HillSpec::from_cosine(3, AlgebraicReal(q(1, 2)));
  CHECK(half.exact);
  CHECK_FALSE(half.metric.has_value());
  const HillSpec third = HillSpec::from_cosine(3, AlgebraicReal(q(-1, 3)));
  CHECK_FALSE(third.metric.has_value());
  const HillSpec metric = HillSpec::from_cosine(3, AlgebraicReal(q(1, 3)));
  CHECK(metric.metric.has_value());
  hill_simplex(half);
  hill_simplex(metric);

  CHECK_THROWS_AS(HillSpec::from_cosine(3, AlgebraicReal(q(-1, 2))), std::invalid_argument);
  CHECK_THROWS_AS(HillSpec::from_cosine(3, AlgebraicReal(1)), std::invalid_argument);
  CHECK_THROWS_AS(HillSpec::from_cosine(4, AlgebraicReal(q(-2, 5))), std::invalid_argument);
  CHECK_THROWS_AS(HillSpec::from_basis({{q(1), q(0)}, {q(0), q(2)}}), std::invalid_argument);

  const HillSpec golden = HillSpec::from_cosine(3, AlgebraicReal::from_minpoly(IntPolynomial(std::vector<Integer>{-1, -2, 4}), {q(4, 5), q(9, 10)}));
  CHECK_FALSE(golden.exact);
  CHECK(hill_simplex(golden).mode() == CoordinateMode::certified_float);
}

TEST_CASE("Kuhn cell counts") {
  for (int d = 2; d <= 4; ++d) {
    int power = 1;
    for (int m = 2; m <= 4; ++m) {
      power = 1;
      for (int i = 0; i < d; ++i) power *= m;
      CHECK(hill_cells(d, m).size() == static_cast<std::size_t>(power));
    }
  }
  CHECK_THROWS_AS(hill_cells(3, 1), std::invalid_argument);
}

TEST_CASE("orthonormal 8-reptile") {
  const Subdivision sub = subdivide(HillSpec::orthonormal(3), 2);
  REQUIRE(sub.pieces.size() == 8);
  for (const auto& p : sub.pieces) CHECK(coordinate_volume(p) == q(1, 48));
  const ReptileReport r = verify_reptile(sub);
  CHECK(r.exact);
  CHECK(r.all_ok());
  CHECK(r.measured_ratio == "1/2");
  CHECK(r.proper + r.mirrored == 8);
  const auto parent_angles = sorted_cosines(sub.parent);
  for (const auto& p : sub.pieces) CHECK(sorted_cosines(p) == parent_angles);
}

TEST_CASE("orthonormal subdivisions in dimensions 2 to 4") {
  for (int d = 2; d <= 4; ++d)
    for (int m = 2; m <= 3; ++m) {
      CAPTURE(d);
      CAPTURE(m);
      const Subdivision sub = subdivide(HillSpec::orthonormal(d), m);
      const ReptileReport r = verify_reptile(sub);
      CHECK(r.all_ok());
      CHECK(r.disjointness.detail.find("pairs") != std::string::npos);
    }
  const Subdivision s27 = subdivide(HillSpec::orthonormal(3), 3);
  for (const auto& p : s27.pieces) CHECK(coordinate_volume(p) == q(1, 162));
}

TEST_CASE("other Hill bases") {
  for (const auto& c : {q(1, 2), q(-1, 3), q(1, 3), q(-2, 5)}) {
    CAPTURE(c);
    for (int m = 2; m <= 3; ++m) CHECK(verify_reptile(subdivide(HillSpec::from_cosine(3, AlgebraicReal(c)), m)).all_ok());
  }
  // Random rational bases with the metric that gives them a common angle.
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> small(-3, 3), num(-4, 8);
  int done = 0;
  while (done < 5) {
    RatMatrix b(3, RatVector(3));
    for (auto& row : b)
      for (auto& x : row) x = small(rng);
    auto inv = inverse(b);
    if (!inv) continue;
    const Rational c = q(num(rng), 10);
    RatMatrix g(3, RatVector(3, c));
    for (int i = 0; i < 3; ++i) g[i][i] = 1;
    const RatMatrix metric = *inv * g * transpose(*inv);
    const HillSpec spec = HillSpec::from_basis(b, metric);
    CHECK(spec.pair_cos == AlgebraicReal(c));
    for (int m = 2; m <= 3; ++m) CHECK(verify_reptile(subdivide(spec, m)).all_ok());
    ++done;
  }
}

TEST_CASE("float mode Hill basis") {
  const AlgebraicReal golden_half = AlgebraicReal::from_minpoly(IntPolynomial(std::vector<Integer>{-1, -2, 4}), {q(4, 5), q(9, 10)});
  const ReptileReport r = verify_reptile(subdivide(HillSpec::from_cosine(3, golden_half), 2));
  CHECK_FALSE(r.exact);
  CHECK(r.all_ok());
}

TEST_CASE("corrupted subdivisions are rejected with witnesses") {
  Subdivision sub = subdivide(HillSpec::orthonormal(3), 2);
  auto verts = sub.pieces[3].vertices();
  verts[0][0] += q(1, 8);
  sub.pieces[3] = Simplex::exact(verts);
  ReptileReport r = verify_reptile(sub);
  CHECK_FALSE(r.all_ok());
  CHECK((!r.disjointness.ok || !r.union_cover.ok));
  CHECK_FALSE(r.similarity.ok);

  // A duplicated piece keeps similarity and congruence but overlaps.
  Subdivision dup = subdivide(HillSpec::orthonormal(3), 2);
  dup.pieces[5] = dup.pieces[4];
  r = verify_reptile(dup);
  CHECK(r.similarity.ok);
  CHECK(r.congruence.ok);
  CHECK_FALSE(r.disjointness.ok);
  CHECK(r.disjointness.witness == std::vector<int>{4, 5});
  CHECK(r.overlap_point.size() == 3);
  CHECK_FALSE(r.union_cover.ok);

  // A translated piece sticks out of the parent.
  Subdivision moved = subdivide(HillSpec::orthonormal(3), 2);
  auto mv = moved.pieces[0].vertices();
  for (auto& v : mv) v[2] -= q(1, 2);
  moved.pieces[0] = Simplex::exact(mv);
  r = verify_reptile(moved);
  CHECK_FALSE(r.union_cover.ok);
  CHECK(r.union_cover.witness == std::vector<int>{0});
}

TEST_CASE("pair separation methods") {
  const std::vector<RatVector> a{{q(0), q(0)}, {q(1), q(0)}, {q(0), q(1)}};
  const std::vector<RatVector> far{{q(3), q(0)}, {q(4), q(0)}, {q(3), q(1)}};
  const std::vector<RatVector> flipped{{q(1), q(1)}, {q(1), q(0)}, {q(0), q(1)}};
  const std::vector<RatVector> shifted{{q(1, 4), q(1, 4)}, {q(5, 4), q(1, 4)}, {q(1, 4), q(5, 4)}};
  CHECK(interiors_disjoint(a, far).how == Separation::box);
  CHECK(interiors_disjoint(a, flipped).how == Separation::facet);
  CHECK(interiors_disjoint(a, shifted).how == Separation::overlap);
  CHECK(interiors_disjoint(a, a).how == Separation::overlap);
}

TEST_CASE("space tiling growth") {
  const HillSpec spec = HillSpec::orthonormal(3);
  std::size_t seen = 0;
  GrowResult g1 = grow_space_tiling(spec, 2, 1, [&](const Simplex&) { ++seen; });
  CHECK(g1.cells == 8);
  CHECK(seen == 8);
  CHECK(g1.volume_ok);

  GrowResult g2 = grow_space_tiling(spec, 2, 2, nullptr);
  CHECK(g2.cells == 64);
  CHECK(g2.volume_ok);
  CHECK(g2.shared_facets * 2 + g2.boundary_facets == 64 * 4);

  GrowResult g4 = grow_space_tiling(spec, 2, 4, nullptr);
  CHECK(g4.cells == 4096);
  CHECK_FALSE(g4.truncated);
  CHECK(g4.volume_ok);
  CHECK(g4.sampled_pairs == 100);
  CHECK(g4.sampled_disjoint);

  GrowResult capped = grow_space_tiling(spec, 2, 3, nullptr, 100);
  CHECK(capped.truncated);
  CHECK(capped.cells == 100);
}
