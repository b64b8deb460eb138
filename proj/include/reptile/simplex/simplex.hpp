#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "reptile/algebra/linalg.hpp"
#include "reptile/fiedler/cos_matrix.hpp"
#include "reptile/trig/trig.hpp"

namespace reptile {

enum class CoordinateMode { exact, certified_float };

/// A nondegenerate d-simplex (2 <= d <= 4) given by d+1 vertices.
///
/// Exact simplices carry rational coordinates and, optionally, a rational positive definite metric
/// (Gram matrix of the coordinate basis) so that shapes with rational Gram data but irrational
/// Cartesian coordinates stay exact. Float simplices carry doubles plus an error radius that bounds
/// the coordinate error of every vertex component.
class Simplex {
 public:
  static Simplex exact(std::vector<RatVector> vertices, std::optional<RatMatrix> metric = std::nullopt);
  static Simplex certified(std::vector<std::vector<double>> vertices, double radius);

  int dim() const { return dim_; }
  CoordinateMode mode() const { return mode_; }
  bool is_exact() const { return mode_ == CoordinateMode::exact; }
  const std::vector<RatVector>& vertices() const { return exact_; }
  const std::optional<RatMatrix>& metric() const { return metric_; }
  const std::vector<std::vector<double>>& approx_vertices() const { return approx_; }
  double radius() const { return radius_; }

  /// Squared length of edge {i, j} in the metric (exact mode).
  Rational squared_length(int i, int j) const;
  double approx_squared_length(int i, int j) const;
  /// Edge matrix with columns v_k - v_0 (exact mode).
  RatMatrix edge_matrix() const;
  /// Gradients of the barycentric coordinates (rows), i.e. inward facet normals as covectors.
  RatMatrix barycentric_gradients() const;
  /// Gram matrix of the inward normals in the dual metric: G_ij = <w_i, w_j>.
  RatMatrix normal_gram() const;

  /// The same simplex with vertices permuted: new vertex k is old vertex perm[k].
  Simplex permuted(const std::vector<int>& perm) const;
  /// Vertices scaled by r about the origin.
  Simplex scaled(const Rational& r) const;
  /// Float copy (radius grows by the conversion error; exact metric is applied through a Cholesky factor).
  Simplex to_float() const;

 private:
  Simplex() = default;
  int dim_ = 0;
  CoordinateMode mode_ = CoordinateMode::exact;
  std::vector<RatVector> exact_;
  std::optional<RatMatrix> metric_;
  std::vector<std::vector<double>> approx_;
  double radius_ = 0;
};

/// Facets are indexed by their opposite vertex; angles are keyed by facet pairs (i < j).
using FacetPair = std::pair<int, int>;

struct DihedralData {
  int dim = 0;
  bool exact = false;
  CosMatrix matrix;                                         ///< exact mode
  std::map<FacetPair, AlgebraicReal> cosines;               ///< exact mode
  std::map<FacetPair, Rational> squared_lengths;            ///< vertex pairs, exact mode
  std::vector<std::vector<double>> approx_cosines;          ///< both modes
  std::map<FacetPair, double> approx_squared_lengths;       ///< both modes
  double radius = 0;                                        ///< bound on approx_cosines error
};

/// Vertices shared by facets i and j: the ridge carrying their dihedral angle.
std::vector<int> ridge(int dim, int i, int j);

/// Internal dihedral angles as cosines -<u_i, u_j> of unit inward normals.
DihedralData dihedral_data(const Simplex& s);

/// Exact volume in exact mode (degree <= 2 when a metric is present).
AlgebraicReal volume(const Simplex& s);
/// |det(edge matrix)| / d! in coordinates, without the metric factor.
Rational coordinate_volume(const Simplex& s);
double approx_volume(const Simplex& s);

struct Congruence {
  std::vector<int> permutation;  ///< vertex i of the first simplex maps to permutation[i] of the second
  bool reflection = false;       ///< the isometry reverses orientation
};

/// A vertex correspondence matching all squared edge lengths, preferring orientation-preserving ones.
std::optional<Congruence> find_congruence(const Simplex& a, const Simplex& b, bool allow_reflection = true);
bool congruent(const Simplex& a, const Simplex& b, bool allow_reflection = true);

struct Similarity {
  Rational ratio_squared;
  AlgebraicReal ratio;  ///< b is congruent to a scaled by ratio
  Congruence match;
};
std::optional<Similarity> similar(const Simplex& a, const Simplex& b);

struct VertexAngleSum {
  int vertex = 0;
  std::vector<FacetPair> edges;  ///< facet pairs of the three edges at the vertex
  int sign = 0;                  ///< sign of (sum of the three dihedral angles) - pi
  std::string verdict;           ///< "greater", "less" or "inconclusive"
  Interval difference;           ///< enclosure of the sum minus pi
};
/// For d = 3: certified comparison of each vertex's three dihedral angles against pi.
std::vector<VertexAngleSum> vertex_angle_check(const Simplex& s);

/// Squared lengths of the edges whose dihedral cosine is exactly `cosine` (d = 3: the ridge edge;
/// d = 2: the side between the two vertices whose opposite sides meet at the angle).
std::set<Rational> edge_length_classes_by_angle(const Simplex& s, const AlgebraicReal& cosine);

/// An angle of a dihedral multiset: its exact cosine, and the rational multiple of pi when it is one.
struct AngleValue {
  AlgebraicReal cosine;
  std::optional<RationalAngle> rational;
  int multiplicity = 1;

  static AngleValue of(const RationalAngle& a, int multiplicity = 1);
  static AngleValue of_cosine(const AlgebraicReal& c, int multiplicity = 1);
};
using AngleMultiset = std::vector<AngleValue>;

/// Distinct dihedral angles of an exact simplex with multiplicities, increasing by angle.
AngleMultiset angle_multiset(const DihedralData& data);

/// Greedy selection beta_1 < beta_2 < ... of elements that are not nonnegative integer combinations
/// of earlier selections.
std::vector<AngleValue> greedy_indivisible_basis(const AngleMultiset& angles);

/// Nonnegative integers i with sum i_k angle_k = pi, preferring the most nonzero coefficients and
/// then the lexicographically smallest vector; nullopt when no solution exists.
std::optional<std::vector<std::int64_t>> integer_combination_pi(const std::vector<RationalAngle>& angles);

/// Strictly positive rationals q with sum q_k angle_k = pi (all equal); nullopt for the empty set.
std::optional<std::vector<Rational>> positive_rational_combination_pi(const std::vector<RationalAngle>& angles);

}  // namespace reptile
