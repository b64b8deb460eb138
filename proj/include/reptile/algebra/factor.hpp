#pragma once

#include <vector>

#include "reptile/algebra/polynomial.hpp"

namespace reptile {

/// Largest degree handled by factor_squarefree and by algebraic-number arithmetic.
inline constexpr int kMaxFactorDegree = 8;

/// All distinct rational roots of p, in increasing order.
std::vector<Rational> rational_roots(const IntPolynomial& p);

/// Irreducibility over Q for 1 <= degree <= 4: rational root test, then for quartics the
/// resolvent-cubic test for a splitting into two rational quadratics.
/// Throws UnsupportedDegree above degree 4 and DomainError below degree 1.
bool is_irreducible(const IntPolynomial& p);

/// A rational quadratic factor of a quartic without rational roots, if one exists.
std::optional<IntPolynomial> quadratic_factor_of_quartic(const IntPolynomial& p);

/// Irreducible factors (primitive, positive leading coefficient) of the squarefree part of p.
/// Degrees up to 4 are split exactly. Degrees 5..8 are split by reconstructing candidate factors
/// from numerically computed complex roots; every factor found is confirmed by exact division.
/// Throws UnsupportedDegree when the squarefree part has degree > kMaxFactorDegree.
std::vector<IntPolynomial> factor_squarefree(const IntPolynomial& p);

}  // namespace reptile
