#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "reptile/algebra/algebraic_real.hpp"

namespace reptile {

/// The angle (p/q)*pi with gcd(|p|, q) = 1 and q > 0.
class RationalAngle {
 public:
  RationalAngle() = default;
  RationalAngle(std::int64_t p, std::int64_t q);
  static RationalAngle from_fraction(const Rational& fraction_of_pi);
  /// 2*pi*m/n
  static RationalAngle turn(std::int64_t m, std::int64_t n);

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  Rational fraction() const { return make_rational(p_, q_); }
  /// Representative in [0, pi] with the same cosine.
  RationalAngle canonical() const;
  bool is_canonical() const { return p_ >= 0 && p_ <= q_; }
  /// Reduced denominator n of angle = 2*pi*m/n.
  std::int64_t turn_denominator() const;
  double degrees() const;
  /// "pi/3", "2pi/5", "0", "pi".
  std::string to_string() const;

  friend bool operator==(const RationalAngle&, const RationalAngle&) = default;
  friend std::strong_ordering operator<=>(const RationalAngle& a, const RationalAngle& b);

 private:
  std::int64_t p_ = 0;
  std::int64_t q_ = 1;
};

RationalAngle operator+(const RationalAngle& a, const RationalAngle& b);
RationalAngle operator-(const RationalAngle& a, const RationalAngle& b);
RationalAngle operator*(std::int64_t k, const RationalAngle& a);

/// n-th cyclotomic polynomial.
IntPolynomial cyclotomic(std::int64_t n);

/// Minimal polynomial of cos(2*pi/n), from Phi_n through x + 1/x = 2 cos.
IntPolynomial cosine_minpoly(std::int64_t n);

/// Exact cosine of a rational angle.
AlgebraicReal cosine_of(const RationalAngle& angle);

/// Algebraic degree of the cosine: phi(n)/2 for n >= 3, 1 for n in {1, 2}.
int cosine_degree(const RationalAngle& angle);

struct CatalogEntry {
  RationalAngle angle;  ///< canonical, in [0, pi]
  AlgebraicReal cosine;
};

/// All cosines of rational angles with the given algebraic degree, increasing.
struct CosineCatalog {
  int degree = 0;
  std::vector<CatalogEntry> entries;
};

/// Exhaustive catalog for one degree (1 <= degree <= 8). Results are memoized.
const CosineCatalog& catalog(int degree);

/// The angle in [0, pi] with cosine exactly x, when x is the cosine of a rational angle.
/// Throws DomainError when |x| > 1.
std::optional<RationalAngle> match_rational_angle(const AlgebraicReal& x);

}  // namespace reptile
