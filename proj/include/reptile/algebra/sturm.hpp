#pragma once

#include <optional>
#include <vector>

#include "reptile/algebra/polynomial.hpp"

namespace reptile {

/// Sturm chain p0 = p, p1 = p', p_{k+1} = -rem(p_{k-1}, p_k), each term reduced to its
/// primitive part by a positive factor so that sign variations are unchanged.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPolynomial& p);

  /// Number of sign changes at x, zeros skipped.
  int variations(const Rational& x) const;
  /// Number of distinct real roots in the half-open interval (a, b].
  int count(const Rational& a, const Rational& b) const;
  const std::vector<IntPolynomial>& chain() const { return chain_; }

 private:
  std::vector<IntPolynomial> chain_;
};

/// Strict bound B with |r| < B for every complex root r of p.
Rational cauchy_bound(const IntPolynomial& p);

/// Distinct real roots of p in the open interval `range` (all of R when absent), as isolating
/// intervals in increasing order; neighbours meet at most in a shared endpoint that is not a root. Each result either is a point [r, r] at an
/// exact rational root, or has endpoints that are not roots, with exactly one root inside.
/// Throws DomainError for the zero polynomial.
std::vector<Interval> sturm_isolate(const IntPolynomial& p, const std::optional<Interval>& range = std::nullopt);

/// Number of distinct real roots of p in the open interval (a, b).
int count_roots_open(const IntPolynomial& p, const Rational& a, const Rational& b);

/// Shrinks an isolating interval of a root of p by bisection until its width is below `width`.
/// `p` must be squarefree on the interval; returns a point interval on hitting the root exactly.
Interval bisect_root(const IntPolynomial& p, Interval isolating, const Rational& width);

}  // namespace reptile
