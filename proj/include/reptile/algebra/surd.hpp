#pragma once

#include <map>
#include <optional>
#include <string>

#include "reptile/algebra/algebraic_real.hpp"

namespace reptile {

/// Finite sum  sum_k q_k * sqrt(m_k)  with rational q_k and positive integer radicands m_k taken from
/// pairwise distinct square classes (m_j * m_k is never a perfect square for j != k). Square roots of
/// distinct square classes are linearly independent over Q, so the representation is zero exactly
/// when it has no terms. Used for Gram-matrix computations where every entry is a rational multiple
/// of one square root and the products stay in a multiquadratic field.
class SurdSum {
 public:
  SurdSum() = default;
  SurdSum(const Rational& value);  // NOLINT(google-explicit-constructor)
  SurdSum(long value) : SurdSum(Rational(value)) {}  // NOLINT(google-explicit-constructor)

  /// sqrt(value) for value >= 0.
  static SurdSum sqrt(const Rational& value);
  /// Exact conversion of an algebraic number of degree <= 2; nullopt otherwise.
  static std::optional<SurdSum> from_algebraic(const AlgebraicReal& x);

  /// Radicand -> coefficient; radicand 1 carries the rational part.
  const std::map<Integer, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  std::optional<Rational> rational() const;
  /// Exact sign: decided structurally for 0, otherwise by interval evaluation at growing precision.
  int sign() const;
  /// Enclosure with every square root bounded to within 2^-bits relative to its denominator scale.
  Interval enclosure(unsigned bits) const;
  double approx() const;
  /// As an AlgebraicReal when the value has at most one irrational term.
  std::optional<AlgebraicReal> to_algebraic() const;

  std::string to_string() const;

  friend SurdSum operator+(const SurdSum& a, const SurdSum& b);
  friend SurdSum operator-(const SurdSum& a, const SurdSum& b);
  friend SurdSum operator-(const SurdSum& a);
  friend SurdSum operator*(const SurdSum& a, const SurdSum& b);
  SurdSum& operator+=(const SurdSum& o) { return *this = *this + o; }
  SurdSum& operator-=(const SurdSum& o) { return *this = *this - o; }
  SurdSum& operator*=(const SurdSum& o) { return *this = *this * o; }
  friend bool operator==(const SurdSum& a, const SurdSum& b) { return (a - b).is_zero(); }

 private:
  void add_term(Integer radicand, Rational coefficient);
  std::map<Integer, Rational> terms_;
};

}  // namespace reptile
