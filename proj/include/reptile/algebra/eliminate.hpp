#pragma once

#include <vector>

#include "reptile/algebra/algebraic_real.hpp"

namespace reptile {

/// A number written as expression(generator) with a rational polynomial `expression`.
struct GeneratedCoefficient {
  RatPoly expression;
  AlgebraicReal generator;
};

/// Polynomial sum_i c_i s^i whose coefficients c_i = coefficients[i](t) are rational polynomial
/// expressions in one algebraic generator t.
struct GeneratedPolynomial {
  AlgebraicReal generator;
  std::vector<RatPoly> coefficients;
};

/// Integer polynomial in s vanishing at every root of p: Res_t(p(s, t), minpoly(t)).
/// Spurious roots (from the conjugates of t) must be filtered by the caller.
IntPolynomial eliminate(const GeneratedPolynomial& p);

/// Same, for coefficients given with their own generator; all generators must be equal
/// (DomainError "inconsistent coefficient field" otherwise). An empty list is the zero polynomial.
IntPolynomial eliminate(const std::vector<GeneratedCoefficient>& coefficients);

/// Rational polynomial substituted with the generator: f(t).
Interval enclose(const RatPoly& f, const Interval& t);

/// The real roots of p in the open range, with the spurious ones (roots of the eliminant that are
/// not roots of p at the true generator value) removed by interval evaluation.
std::vector<AlgebraicReal> genuine_roots(const GeneratedPolynomial& p, const Interval& range);

}  // namespace reptile
