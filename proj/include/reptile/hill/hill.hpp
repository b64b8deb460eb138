#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "reptile/hill/disjoint.hpp"
#include "reptile/simplex/simplex.hpp"

namespace reptile {

/// d vectors of equal length with a common pairwise cosine c in (-1/2, 1) and a positive definite Gram matrix.
///
/// Exact specs keep rational basis rows in coordinates, optionally with a rational metric (so the Gram
/// data stays exact even when no rational Cartesian basis exists). Irrational c uses a float basis.
struct HillSpec {
  int dim = 0;
  AlgebraicReal pair_cos;
  bool exact = true;
  RatMatrix basis;                  ///< rows b_i (exact)
  std::optional<RatMatrix> metric;  ///< Gram matrix of the coordinate basis (exact)
  std::vector<std::vector<double>> float_basis;

  static HillSpec orthonormal(int dim);
  /// Throws std::invalid_argument unless the rows have equal lengths, equal pairwise products, a common
  /// cosine in (-1/2, 1) and are linearly independent.
  static HillSpec from_basis(RatMatrix basis, std::optional<RatMatrix> metric = std::nullopt);
  /// Rational Cartesian bases for c = 0 and, when d = 3, for c = 1/2 and c = -1/3; other rational c use
  /// the Gram matrix as metric; irrational c falls back to a float basis.
  static HillSpec from_cosine(int dim, const AlgebraicReal& c);
};

/// conv{0, b_1, b_1 + b_2, ..., b_1 + ... + b_d}.
Simplex hill_simplex(const HillSpec& spec);

/// A Kuhn cell of the m-scaled parent in basis coordinates: vertices (a + e_{pi(1)} + ... + e_{pi(k)}) / m.
struct HillCell {
  std::vector<int> offset;  ///< a, with m > a_1 >= ... >= a_d >= 0
  std::vector<int> order;   ///< pi as a permutation of 0..d-1
};

/// All Kuhn cells inside {m >= x_1 >= ... >= x_d >= 0}: offsets with a_1 >= ... >= a_d, and for
/// a_i = a_{i+1} the permutation must place i before i+1.
std::vector<HillCell> hill_cells(int dim, int m);

struct Subdivision {
  Simplex parent;
  std::vector<Simplex> pieces;
  int m = 0;
  Rational ratio;               ///< expected similarity ratio 1/m
  std::vector<HillCell> cells;  ///< generator data when produced by subdivide
};

Subdivision subdivide(const HillSpec& spec, int m);

struct ReptileCheck {
  bool ok = false;
  std::string detail;
  std::vector<int> witness;  ///< piece indices involved in a failure
};

struct ReptileReport {
  bool exact = true;
  std::size_t pieces = 0;
  ReptileCheck volume;        ///< (1) volumes add up to the parent's
  ReptileCheck similarity;    ///< (2) every piece similar to the parent with ratio 1/m
  ReptileCheck congruence;    ///< (3) pieces mutually congruent
  ReptileCheck disjointness;  ///< (4) pairwise interior-disjoint
  ReptileCheck union_cover;   ///< (5) (1) + (4) + every piece inside the parent
  std::string measured_ratio;
  int proper = 0;    ///< pieces matched to the parent by an orientation-preserving similarity
  int mirrored = 0;  ///< pieces that need a reflection
  int separated_by_box = 0, separated_by_facet = 0, separated_by_clipping = 0;
  std::vector<double> overlap_point;  ///< witness for a disjointness failure

  bool all_ok() const {
    return volume.ok && similarity.ok && congruence.ok && disjointness.ok && union_cover.ok;
  }
};

/// Declared tolerance for float-mode comparisons.
inline constexpr double kHillFloatTolerance = 1e-10;

ReptileReport verify_reptile(const Subdivision& sub);

struct GrowResult {
  int generations = 0;
  int m = 0;
  std::uint64_t cells = 0;
  bool truncated = false;
  std::uint64_t shared_facets = 0;    ///< facets met by exactly two cells with the same vertex set
  std::uint64_t boundary_facets = 0;  ///< facets met by one cell (includes non-conforming contacts)
  bool volume_ok = false;             ///< total volume equals cells x parent volume
  int sampled_pairs = 0;
  bool sampled_disjoint = false;
  std::vector<std::uint64_t> failing_pair;
};

/// Iterated substitution: the Hill simplex scaled by m^generations tiled by copies of itself. Cells are
/// streamed to `visit` and never stored as Simplex objects; at most `budget` cells are produced.
GrowResult grow_space_tiling(const HillSpec& spec, int m, int generations,
                             const std::function<void(const Simplex&)>& visit, std::uint64_t budget = 1u << 20,
                             int sample_pairs = 100, std::uint64_t seed = 0x5eed);

}  // namespace reptile
