#pragma once

#include <optional>
#include <vector>

#include "reptile/algebra/rational.hpp"

namespace reptile {

using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;

RatMatrix identity_matrix(std::size_t n);
RatMatrix transpose(const RatMatrix& m);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatVector operator*(const RatMatrix& a, const RatVector& x);
Rational dot(const RatVector& a, const RatVector& b);
/// Bilinear form a^T m b.
Rational form(const RatMatrix& m, const RatVector& a, const RatVector& b);

/// Determinant by Gaussian elimination over Q.
Rational det(RatMatrix m);
/// Inverse, or nullopt for a singular matrix.
std::optional<RatMatrix> inverse(RatMatrix m);
/// Solution of m x = b for nonsingular m.
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b);
/// Rank over Q.
int rank(RatMatrix m);

}  // namespace reptile
