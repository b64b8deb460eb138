#include "reptile/io/obj.hpp"

#include <array>
#include <cmath>
#include <iomanip>

namespace reptile {

ObjWriter::ObjWriter(std::ostream& out, double merge_tolerance) : out_(out), tolerance_(merge_tolerance) {
  out_ << std::setprecision(17);
}

std::uint64_t ObjWriter::index_of(const std::vector<double>& p) {
  std::array<long long, 3> key{};
  for (std::size_t i = 0; i < 3; ++i) key[i] = std::llround(p[i] / tolerance_);
  auto [it, fresh] = index_.emplace(key, next_index_);
  if (fresh) {
    out_ << "v " << p[0] << ' ' << p[1] << ' ' << p[2] << '\n';
    ++next_index_;
  }
  return it->second;
}

void ObjWriter::add(const Simplex& s) {
  if (s.dim() != 3) throw DomainError("OBJ export needs tetrahedra");
  const Simplex f = s.is_exact() ? s.to_float() : s;
  const auto& v = f.approx_vertices();
  std::array<std::uint64_t, 4> idx{};
  for (std::size_t k = 0; k < 4; ++k) idx[k] = index_of(v[k]);
  out_ << "g piece_" << pieces_++ << '\n';
  for (std::size_t opposite = 0; opposite < 4; ++opposite) {
    std::array<std::size_t, 3> face{};
    for (std::size_t k = 0, n = 0; k < 4; ++k)
      if (k != opposite) face[n++] = k;
    auto sub = [&](std::size_t a, std::size_t b) {
      return std::array<double, 3>{v[a][0] - v[b][0], v[a][1] - v[b][1], v[a][2] - v[b][2]};
    };
    const auto e1 = sub(face[1], face[0]), e2 = sub(face[2], face[0]), in = sub(opposite, face[0]);
    const std::array<double, 3> normal{e1[1] * e2[2] - e1[2] * e2[1], e1[2] * e2[0] - e1[0] * e2[2],
                                       e1[0] * e2[1] - e1[1] * e2[0]};
    // The normal must point away from the opposite vertex.
    if (normal[0] * in[0] + normal[1] * in[1] + normal[2] * in[2] > 0) std::swap(face[1], face[2]);
    out_ << "f " << idx[face[0]] << ' ' << idx[face[1]] << ' ' << idx[face[2]] << '\n';
    ++faces_;
  }
}

void export_obj(const Simplex& s, std::ostream& out) {
  ObjWriter w(out);
  w.add(s);
}

void export_obj(const Subdivision& sub, std::ostream& out) {
  ObjWriter w(out);
  for (const auto& p : sub.pieces) w.add(p);
}

}  // namespace reptile
