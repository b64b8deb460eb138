#pragma once

#include <string>
#include <vector>

#include "reptile/algebra/linalg.hpp"

namespace reptile {

/// How a pair of d-simplices was shown to have disjoint interiors, or that it overlaps.
enum class Separation { box, facet, clipping, overlap };

std::string to_string(Separation s);

struct PairDecision {
  Separation how = Separation::overlap;
  /// For an overlap: a point interior to both simplices (exact mode), or its approximation.
  std::vector<double> witness;
  /// For clipping: the largest common inset of both simplices' barycentric coordinates (<= 0 when disjoint).
  double depth = 0;
};

/// Exact interior-disjointness of two d-simplices given by d+1 vertices each (an affine question, so
/// coordinates in any basis work). Tries axis boxes, then the facet planes of both simplices, then
/// maximizes the common inset eps with lambda_k >= eps over the intersection by vertex enumeration.
PairDecision interiors_disjoint(const std::vector<RatVector>& p, const std::vector<RatVector>& q);
/// The same in floating point; values within `tol` of zero count as zero.
PairDecision interiors_disjoint(const std::vector<std::vector<double>>& p, const std::vector<std::vector<double>>& q,
                                double tol);

/// Barycentric coordinates of x with respect to the simplex (exact).
RatVector barycentric(const std::vector<RatVector>& simplex, const RatVector& x);
std::vector<double> barycentric(const std::vector<std::vector<double>>& simplex, const std::vector<double>& x);

}  // namespace reptile
