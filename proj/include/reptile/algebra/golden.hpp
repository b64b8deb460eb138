#pragma once

#include <array>
#include <map>
#include <string>

#include "reptile/algebra/rational.hpp"

namespace reptile {

/// a + b*phi in Q(phi), phi = (1 + sqrt 5) / 2, reduced with phi^2 = phi + 1.
struct GoldenNumber {
  Rational a = 0;
  Rational b = 0;

  GoldenNumber() = default;
  GoldenNumber(Rational a_) : a(std::move(a_)) {}  // NOLINT(google-explicit-constructor)
  GoldenNumber(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {}
  static GoldenNumber phi() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return a == 0 && b == 0; }
  /// Exact sign of a + b*phi.
  int sign() const;
  GoldenNumber inverse() const;
  std::string to_string() const;

  friend bool operator==(const GoldenNumber&, const GoldenNumber&) = default;
};

GoldenNumber operator+(const GoldenNumber& x, const GoldenNumber& y);
GoldenNumber operator-(const GoldenNumber& x, const GoldenNumber& y);
GoldenNumber operator-(const GoldenNumber& x);
GoldenNumber operator*(const GoldenNumber& x, const GoldenNumber& y);
GoldenNumber operator/(const GoldenNumber& x, const GoldenNumber& y);

/// Sparse polynomial in the indeterminates s, t, u, lambda with coefficients in Q(phi).
class GoldenPoly {
 public:
  enum Var { s = 0, t = 1, u = 2, lambda = 3 };
  static constexpr int kVars = 4;
  using Monomial = std::array<int, kVars>;

  GoldenPoly() = default;
  GoldenPoly(const GoldenNumber& c);  // NOLINT(google-explicit-constructor)
  GoldenPoly(const Rational& c) : GoldenPoly(GoldenNumber(c)) {}  // NOLINT(google-explicit-constructor)
  GoldenPoly(long c) : GoldenPoly(GoldenNumber(Rational(c))) {}  // NOLINT(google-explicit-constructor)
  static GoldenPoly var(Var v);

  const std::map<Monomial, GoldenNumber>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree in `v`.
  int degree(Var v) const;
  /// Substitutes the value for v (other variables stay symbolic).
  GoldenPoly substitute(Var v, const GoldenPoly& value) const;
  /// Value at a point (all four variables).
  GoldenNumber evaluate(const std::array<GoldenNumber, kVars>& point) const;
  /// True when no coefficient involves phi.
  bool is_rational() const;
  std::string to_string() const;

  friend GoldenPoly operator+(const GoldenPoly& x, const GoldenPoly& y);
  friend GoldenPoly operator-(const GoldenPoly& x, const GoldenPoly& y);
  friend GoldenPoly operator-(const GoldenPoly& x);
  friend GoldenPoly operator*(const GoldenPoly& x, const GoldenPoly& y);
  friend bool operator==(const GoldenPoly&, const GoldenPoly&) = default;

 private:
  void add(const Monomial& m, const GoldenNumber& c);
  std::map<Monomial, GoldenNumber> terms_;
};

GoldenPoly pow(const GoldenPoly& x, int n);

}  // namespace reptile
