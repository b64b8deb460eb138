#pragma once

// Arbitrary-precision integers and rationals (GMP), plus closed rational
// intervals used as certified enclosures.

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace reptile {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an input lies outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an exact computation would exceed a supported degree bound.
class UnsupportedDegree : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

/// Accepts "p", "p/q" and finite decimals such as "-0.125".
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& value);
/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

double to_double(const Rational& value);
Integer floor(const Rational& value);
Integer ceil(const Rational& value);
Rational abs(const Rational& value);
int sign(const Rational& value);
int sign(const Integer& value);

/// Rational with the smallest denominator in the closed interval [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

/// Closed interval with rational endpoints.
struct Interval {
  Rational lo;
  Rational hi;

  Interval() = default;
  Interval(Rational point);  // NOLINT(google-explicit-constructor)
  Interval(Rational lo_, Rational hi_);

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool is_point() const { return lo == hi; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return lo <= 0 && 0 <= hi; }
  bool strictly_positive() const { return lo > 0; }
  bool strictly_negative() const { return hi < 0; }
  /// Sign of every point in the interval, or 0 when it straddles or touches zero.
  int certain_sign() const;

  friend bool operator==(const Interval&, const Interval&) = default;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
/// Throws DomainError when the divisor interval contains zero.
Interval operator/(const Interval& a, const Interval& b);
Interval hull(const Interval& a, const Interval& b);
bool disjoint(const Interval& a, const Interval& b);

std::string to_string(const Interval& value);

}  // namespace reptile
