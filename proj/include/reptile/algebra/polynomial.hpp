#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "reptile/algebra/rational.hpp"

namespace reptile {

/// Dense univariate polynomial with rational coefficients, lowest degree first.
/// Used as scratch space for division; results are converted back to IntPolynomial.
using RatPoly = std::vector<Rational>;

/// Dense univariate polynomial over the integers, lowest degree first.
/// The zero polynomial has no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  /// Positive integer multiple of a rational polynomial with content 1.
  static IntPolynomial from_rationals(std::span<const Rational> coefficients);
  static IntPolynomial monomial(int degree, const Integer& coefficient = 1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const Integer& coeff(int i) const;
  const Integer& leading() const;
  const std::vector<Integer>& coefficients() const { return coeffs_; }

  /// gcd of the coefficients, always >= 0.
  Integer content() const;
  /// Divides by the (positive) content; signs are preserved.
  IntPolynomial primitive_part() const;
  /// Primitive with positive leading coefficient: the canonical form of a minimal polynomial.
  IntPolynomial normalized() const;

  IntPolynomial derivative() const;
  /// p(-x)
  IntPolynomial reflected() const;
  /// x^deg p(1/x)
  IntPolynomial reversed() const;
  /// Primitive integer polynomial with the roots of p scaled by s, i.e. proportional to p(x / s).
  IntPolynomial scale_roots(const Rational& s) const;
  /// Primitive integer polynomial proportional to p(x - r): roots shifted by r.
  IntPolynomial shift_roots(const Rational& r) const;

  Rational evaluate(const Rational& x) const;
  int sign_at(const Rational& x) const;
  Interval evaluate(const Interval& x) const;

  RatPoly to_rationals() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const Integer& c, const IntPolynomial& a);

  /// Human-readable form in the variable `var`, e.g. "4*x^2 + 2*x - 1".
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

// Rational-coefficient helpers.
void trim(RatPoly& p);
int degree(const RatPoly& p);
RatPoly multiply(const RatPoly& a, const RatPoly& b);
/// Quotient and remainder over Q. Throws on division by the zero polynomial.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

/// Normalized gcd over Q, returned as a primitive integer polynomial with positive leading coefficient.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);
/// Quotient a / b when b divides a over Q, scaled to a primitive integer polynomial; nullopt otherwise.
std::optional<IntPolynomial> exact_quotient(const IntPolynomial& a, const IntPolynomial& b);
bool divides(const IntPolynomial& divisor, const IntPolynomial& p);
/// p / gcd(p, p'), normalized.
IntPolynomial squarefree_part(const IntPolynomial& p);
/// Remainder of a by b over Q, scaled by a positive rational to a primitive integer polynomial.
IntPolynomial positive_remainder(const IntPolynomial& a, const IntPolynomial& b);

}  // namespace reptile
