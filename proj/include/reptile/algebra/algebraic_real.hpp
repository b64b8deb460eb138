#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "reptile/algebra/polynomial.hpp"

namespace reptile {

/// An exact real algebraic number: its minimal polynomial (irreducible, primitive, positive
/// leading coefficient) and a rational isolating interval.
///
/// A rational value r has minimal polynomial den*x - num and the point interval [r, r].
/// An irrational value has an interval (a, b) whose endpoints are not roots of the minimal
/// polynomial and which contains exactly one of its roots. Values are immutable; refinement
/// returns new intervals or new values.
class AlgebraicReal {
 public:
  AlgebraicReal() : AlgebraicReal(Rational(0)) {}
  AlgebraicReal(const Rational& value);  // NOLINT(google-explicit-constructor)
  AlgebraicReal(long value) : AlgebraicReal(Rational(value)) {}  // NOLINT(google-explicit-constructor)

  /// Trusted constructor: `minpoly` must be irreducible and `isolating` must isolate one of its roots.
  /// Only the cheap invariants (sign change / point root) are validated.
  static AlgebraicReal from_minpoly(const IntPolynomial& minpoly, const Interval& isolating);
  /// The unique root of an arbitrary nonzero polynomial `p` inside `isolating` (p may be reducible
  /// or have repeated factors, degree of the squarefree part at most kMaxFactorDegree).
  static AlgebraicReal from_polynomial_root(const IntPolynomial& p, const Interval& isolating);
  /// All real roots of p in the open range, increasing.
  static std::vector<AlgebraicReal> real_roots(const IntPolynomial& p,
                                               const std::optional<Interval>& range = std::nullopt);
  /// Nonnegative square root of a nonnegative rational.
  static AlgebraicReal sqrt(const Rational& value);

  const IntPolynomial& minpoly() const { return minpoly_; }
  const Interval& interval() const { return interval_; }
  int degree() const { return minpoly_.degree(); }
  bool is_rational() const { return minpoly_.degree() == 1; }
  /// The value when rational.
  std::optional<Rational> rational() const;
  int sign() const;
  bool is_zero() const { return is_rational() && interval_.lo == 0; }

  /// Isolating interval narrowed below `width` (point interval for rationals).
  Interval refine(const Rational& width) const;
  AlgebraicReal refined(const Rational& width) const;
  double approx() const;

  /// "1/2" for rationals, otherwise "root of <minpoly> in [a, b]".
  std::string to_string() const;

 private:
  AlgebraicReal(IntPolynomial minpoly, Interval isolating);
  IntPolynomial minpoly_;
  Interval interval_;
};

enum class ArithOp { add, sub, mul, div };

/// Exact field operation. Irrational-by-irrational operations go through a resultant and a
/// factorization; the product of the operand degrees must not exceed kMaxFactorDegree
/// (UnsupportedDegree otherwise). Division by zero throws DomainError.
AlgebraicReal arith(const AlgebraicReal& x, const AlgebraicReal& y, ArithOp op);

AlgebraicReal operator+(const AlgebraicReal& x, const AlgebraicReal& y);
AlgebraicReal operator-(const AlgebraicReal& x, const AlgebraicReal& y);
AlgebraicReal operator*(const AlgebraicReal& x, const AlgebraicReal& y);
AlgebraicReal operator/(const AlgebraicReal& x, const AlgebraicReal& y);
AlgebraicReal operator-(const AlgebraicReal& x);

/// Exact trichotomy.
std::strong_ordering compare(const AlgebraicReal& x, const AlgebraicReal& y);
inline std::strong_ordering operator<=>(const AlgebraicReal& x, const AlgebraicReal& y) { return compare(x, y); }
inline bool operator==(const AlgebraicReal& x, const AlgebraicReal& y) { return compare(x, y) == 0; }

/// Positive rational lower bound on |x - y|; throws DomainError when x == y.
Rational certified_gap(const AlgebraicReal& x, const AlgebraicReal& y);

/// Nonnegative square root of a nonnegative algebraic number (degree of x^2-substitution <= 8).
AlgebraicReal sqrt(const AlgebraicReal& x);

/// f(x) for a rational polynomial f.
AlgebraicReal evaluate(const RatPoly& f, const AlgebraicReal& x);

}  // namespace reptile
