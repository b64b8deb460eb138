#include "reptile/fiedler/cos_matrix.hpp"

#include <stdexcept>

namespace reptile {

CosMatrix CosMatrix::from_upper(int dim, const std::vector<AlgebraicReal>& upper) {
  const auto n = static_cast<std::size_t>(dim) + 1;
  if (upper.size() != n * (n - 1) / 2) throw std::invalid_argument("wrong number of cosine entries");
  CosMatrix a;
  a.dim = dim;
  a.entries.assign(n, std::vector<AlgebraicReal>(n, AlgebraicReal(-1)));
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) a.entries[i][j] = a.entries[j][i] = upper[k++];
  return a;
}

void CosMatrix::validate() const {
  const auto n = static_cast<std::size_t>(dim) + 1;
  if (dim < 1 || entries.size() != n) throw std::invalid_argument("cosine matrix must be (d+1)x(d+1)");
  for (const auto& row : entries)
    if (row.size() != n) throw std::invalid_argument("cosine matrix must be square");
  const AlgebraicReal minus_one(-1), one(1);
  for (std::size_t i = 0; i < n; ++i) {
    if (entries[i][i] != minus_one) throw std::invalid_argument("cosine matrix diagonal must be -1");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (entries[i][j] != entries[j][i]) throw std::invalid_argument("cosine matrix must be symmetric");
      if (entries[i][j] <= minus_one || entries[i][j] >= one)
        throw std::invalid_argument("off-diagonal cosines must lie in (-1, 1)");
    }
  }
}

std::vector<std::vector<double>> CosMatrix::approx() const {
  std::vector<std::vector<double>> out(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (const auto& e : entries[i]) out[i].push_back(e.approx());
  return out;
}

}  // namespace reptile
