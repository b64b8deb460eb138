#pragma once

#include <vector>

#include "reptile/algebra/algebraic_real.hpp"

namespace reptile {

/// Symmetric (d+1)x(d+1) matrix of dihedral-angle cosines, facet indexed, with diagonal -1.
struct CosMatrix {
  int dim = 0;
  std::vector<std::vector<AlgebraicReal>> entries;

  CosMatrix() = default;
  /// Builds the matrix from its strict upper triangle values, row by row: (0,1), (0,2), ..., (d-1,d).
  static CosMatrix from_upper(int dim, const std::vector<AlgebraicReal>& upper);
  /// Throws std::invalid_argument unless symmetric with diagonal -1 and off-diagonal in (-1, 1).
  void validate() const;
  std::size_t size() const { return entries.size(); }
  const AlgebraicReal& operator()(std::size_t i, std::size_t j) const { return entries[i][j]; }
  std::vector<std::vector<double>> approx() const;
};

}  // namespace reptile
