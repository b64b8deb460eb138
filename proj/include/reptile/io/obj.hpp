#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <ostream>
#include <vector>

#include "reptile/hill/hill.hpp"

namespace reptile {

/// Streams tetrahedra to Wavefront OBJ: shared vertices (merged within 1e-12) and four outward faces
/// per tetrahedron, each in its own group piece_<n>. Vertex lines are emitted on first use so cells
/// never need to be held in memory.
class ObjWriter {
 public:
  explicit ObjWriter(std::ostream& out, double merge_tolerance = 1e-12);
  /// Throws DomainError unless the simplex is a tetrahedron.
  void add(const Simplex& s);
  std::uint64_t vertex_count() const { return next_index_ - 1; }
  std::uint64_t face_count() const { return faces_; }

 private:
  std::uint64_t index_of(const std::vector<double>& p);
  std::ostream& out_;
  double tolerance_;
  std::map<std::array<long long, 3>, std::uint64_t> index_;
  std::uint64_t next_index_ = 1;
  std::uint64_t faces_ = 0;
  std::uint64_t pieces_ = 0;
};

void export_obj(const Simplex& s, std::ostream& out);
void export_obj(const Subdivision& sub, std::ostream& out);

}  // namespace reptile
