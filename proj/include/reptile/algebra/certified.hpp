#pragma once

#include <stdexcept>
#include <vector>

#include "reptile/algebra/algebraic_real.hpp"

namespace reptile {

/// Raised when a certified comparison stays undecided at the finest allowed width.
class Inconclusive : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finest refinement width for transcendental comparisons: 10^-30 unless the environment variable
/// REPTILE_FORGE_PRECISION holds a positive rational or decimal such as "1e-40".
Rational refinement_floor();
/// "1e-12", "3/4", "0.001".
Rational parse_tolerance(std::string_view text);

/// Rational enclosures computed by MPFR with outward rounding at `bits` of precision.
Interval pi_enclosure(long bits);
Interval arccos_enclosure(const Interval& x, long bits);

struct AngleSumDecision {
  int sign = 0;              ///< sign of sum_i arccos(c_i) - multiple * pi
  Rational width;            ///< cosine enclosure width at which the sign was decided
  Interval difference;       ///< enclosure of the signed difference
};

/// Certified sign of sum_i arccos(cosines[i]) - multiple * pi. Widths start at 10^-4 and halve
/// until the enclosure excludes zero; throws Inconclusive below refinement_floor().
AngleSumDecision compare_arccos_sum(const std::vector<AlgebraicReal>& cosines, const Rational& multiple);

/// Enclosure of arccos(x) / pi narrower than `width`.
Interval arccos_over_pi(const AlgebraicReal& x, const Rational& width);

}  // namespace reptile
