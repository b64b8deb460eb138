#pragma once

#include <vector>

#include "reptile/algebra/polynomial.hpp"

namespace reptile {

/// F(z, y) = sum_j terms[j](z) * y^j, with rational coefficients.
struct BiPoly {
  std::vector<RatPoly> terms;

  int degree_y() const { return static_cast<int>(terms.size()) - 1; }
  int degree_z() const;
  /// F(z0, y) as a polynomial in y (not trimmed: keeps the formal degree).
  RatPoly at(const Rational& z0) const;
};

Rational determinant(std::vector<std::vector<Rational>> m);

/// Resultant of f and g in their common variable, using the formal degree of f
/// (f's stored length may include a vanishing leading coefficient).
Rational resultant(const RatPoly& f_formal, const RatPoly& g);

/// Res_y(F(z, y), q(y)) as a primitive integer polynomial in z, computed by evaluating z at
/// integer points and interpolating.
IntPolynomial eliminate_variable(const BiPoly& f, const IntPolynomial& q);

/// Coefficients (monomial basis) of the polynomial through (i, values[i]), i = 0..n-1.
RatPoly interpolate_at_naturals(const std::vector<Rational>& values);

}  // namespace reptile
