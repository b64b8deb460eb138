#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "reptile/algebra/golden.hpp"
#include "reptile/algebra/linalg.hpp"
#include "reptile/algebra/surd.hpp"
#include "reptile/fiedler/cos_matrix.hpp"
#include "reptile/simplex/simplex.hpp"

namespace reptile {

/// Determinant by the Leibniz expansion; exact in any commutative ring (n <= 5 here).
template <class F>
F leibniz_det(const std::vector<std::vector<F>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return F(1L);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  F total(0L);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    F term(1L);
    for (std::size_t i = 0; i < n; ++i) term = term * m[i][perm[i]];
    total = (inversions % 2 == 0) ? total + term : total - term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

enum class RealizabilityFailure { none, nonsingular, rank_deficient, positive_eigenvalue, nonpositive_kernel };

std::string to_string(RealizabilityFailure f);

struct RealizabilityVerdict {
  bool valid = false;
  /// "surd" when every entry has degree <= 2 (exact multiquadratic arithmetic), else "algebraic".
  std::string field;
  /// Coefficients of det(lambda I - A), constant term first, as exact text and approximations.
  std::vector<std::string> char_poly;
  std::vector<double> char_poly_approx;
  /// Kernel generator (adjugate column), strictly positive when valid.
  std::vector<SurdSum> surd_kernel;          ///< surd field
  std::vector<AlgebraicReal> kernel;         ///< algebraic field, or surd kernel entries of degree <= 2
  std::vector<double> kernel_approx;         ///< normalized to sum 1
  RealizabilityFailure failure = RealizabilityFailure::none;
  std::string detail;
};

/// Exact decision: -A positive semidefinite of rank d with a strictly positive kernel generator.
/// Throws std::invalid_argument for a malformed matrix.
RealizabilityVerdict realizability_check(const CosMatrix& a);

/// Re-verifies a valid verdict from scratch: A z = 0 exactly and z > 0.
bool verify_kernel(const CosMatrix& a, const RealizabilityVerdict& v);

/// Coefficients of det(lambda I - A), constant term first, over the surd field.
/// Throws UnsupportedDegree when an entry has degree > 2.
std::vector<SurdSum> char_poly(const CosMatrix& a);

/// A rational c with c^T A >= 0 entrywise and c^T A != 0, proving that A is not the cosine matrix
/// of a simplex; nullopt when none exists.
std::optional<RatVector> nonneg_rowspace_certificate(const CosMatrix& a);
/// c^T A >= 0 and nonzero, checked exactly.
bool verify_rowspace_certificate(const CosMatrix& a, const RatVector& c);

/// Simplex (certified float, longest edge 1) whose dihedral cosine matrix is A.
/// Throws std::invalid_argument carrying the failure when A is not realizable.
Simplex reconstruct_simplex(const CosMatrix& a);
/// Largest |cos_ij(reconstructed) - A_ij|.
double cosine_residual(const CosMatrix& a, const Simplex& s);

// Polynomial mode: matrices whose entries are polynomials in s, t, u over Q(phi).
using GoldenMatrix = std::vector<std::vector<GoldenPoly>>;
GoldenPoly symbolic_det(const GoldenMatrix& m);
/// det(lambda I - M) in the variable lambda.
GoldenPoly symbolic_char_poly(const GoldenMatrix& m);

}  // namespace reptile
