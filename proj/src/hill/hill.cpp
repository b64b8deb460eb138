#include "reptile/hill/hill.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

namespace reptile {

namespace {

Rational q(long p, long r = 1) { return make_rational(p, r); }

RatMatrix equal_cos_gram(int dim, const Rational& c) {
  RatMatrix g(static_cast<std::size_t>(dim), RatVector(static_cast<std::size_t>(dim), c));
  for (int i = 0; i < dim; ++i) g[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return g;
}

bool positive_definite(const RatMatrix& g) {
  for (std::size_t k = 1; k <= g.size(); ++k) {
    RatMatrix lead(k, RatVector(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead[i][j] = g[i][j];
    if (det(lead) <= 0) return false;
  }
  return true;
}

void check_dim(int dim) {
  if (dim < 2 || dim > 4) throw std::invalid_argument("Hill simplices are supported for 2 <= d <= 4");
}

void check_cos_range(const AlgebraicReal& c) {
  if (!(c > AlgebraicReal(q(-1, 2))) || !(c < AlgebraicReal(1)))
    throw std::invalid_argument("pair cosine " + c.to_string() + " outside (-1/2, 1): angle must lie in (0, 2pi/3)");
}

}  // namespace

HillSpec HillSpec::orthonormal(int dim) {
  check_dim(dim);
  HillSpec s;
  s.dim = dim;
  s.pair_cos = AlgebraicReal(0);
  s.basis = identity_matrix(static_cast<std::size_t>(dim));
  return s;
}

HillSpec HillSpec::from_basis(RatMatrix basis, std::optional<RatMatrix> metric) {
  const int dim = static_cast<int>(basis.size());
  check_dim(dim);
  for (const auto& row : basis)
    if (static_cast<int>(row.size()) != dim) throw std::invalid_argument("basis must be d vectors in R^d");
  const RatMatrix m = metric ? *metric : identity_matrix(basis.size());
  if (metric && (m.size() != basis.size() || !positive_definite(m)))
    throw std::invalid_argument("metric must be a positive definite d x d matrix");
  const RatMatrix gram = basis * m * transpose(basis);
  const Rational len = gram[0][0];
  const Rational prod = gram.size() > 1 ? gram[0][1] : Rational(0);
  for (std::size_t i = 0; i < gram.size(); ++i)
    for (std::size_t j = 0; j < gram.size(); ++j) {
      if (i == j && gram[i][j] != len) throw std::invalid_argument("basis vectors must have equal lengths");
      if (i != j && gram[i][j] != prod) throw std::invalid_argument("basis vectors must have a common pairwise angle");
    }
  if (len == 0) throw std::invalid_argument("basis vectors must be nonzero");
  const AlgebraicReal c(prod / len);
  check_cos_range(c);
  if (!positive_definite(gram)) throw std::invalid_argument("Gram matrix is not positive definite");
  HillSpec s;
  s.dim = dim;
  s.pair_cos = c;
  s.basis = std::move(basis);
  s.metric = std::move(metric);
  return s;
}

HillSpec HillSpec::from_cosine(int dim, const AlgebraicReal& c) {
  check_dim(dim);
  check_cos_range(c);
  if (!(AlgebraicReal(1) + AlgebraicReal(dim - 1) * c > AlgebraicReal(0)))
    throw std::invalid_argument("Gram matrix is not positive definite for this cosine in dimension " +
                                std::to_string(dim));
  if (auto r = c.rational()) {
    if (*r == 0) return orthonormal(dim);
    if (dim == 3 && *r == q(1, 2))
      return from_basis({{q(1), q(1), q(0)}, {q(1), q(0), q(1)}, {q(0), q(1), q(1)}});
    if (dim == 3 && *r == q(-1, 3))
      return from_basis({{q(1), q(1), q(1)}, {q(1), q(-1), q(-1)}, {q(-1), q(1), q(-1)}});
    return from_basis(identity_matrix(static_cast<std::size_t>(dim)), equal_cos_gram(dim, *r));
  }
  const double cd = c.approx();
  Eigen::MatrixXd g = Eigen::MatrixXd::Constant(dim, dim, cd);
  g.diagonal().setOnes();
  const Eigen::MatrixXd l = g.llt().matrixL();
  HillSpec s;
  s.dim = dim;
  s.pair_cos = c;
  s.exact = false;
  for (int i = 0; i < dim; ++i) {
    std::vector<double> row;
    for (int j = 0; j < dim; ++j) row.push_back(l(i, j));
    s.float_basis.push_back(row);
  }
  return s;
}

namespace {

// Basis coordinates -> Cartesian coordinates.
RatVector to_coordinates(const HillSpec& spec, const RatVector& x) {
  RatVector out(static_cast<std::size_t>(spec.dim), Rational(0));
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0)
      for (std::size_t k = 0; k < out.size(); ++k) out[k] += x[i] * spec.basis[i][k];
  return out;
}

std::vector<double> to_float_coordinates(const HillSpec& spec, const std::vector<double>& x) {
  std::vector<double> out(static_cast<std::size_t>(spec.dim), 0.0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += x[i] * spec.float_basis[i][k];
  return out;
}

double float_radius(const std::vector<std::vector<double>>& v) {
  double extent = 1;
  for (const auto& p : v)
    for (double x : p) extent = std::max(extent, std::abs(x));
  return 4e-16 * extent;
}

// A simplex from its vertices in basis coordinates.
Simplex from_basis_coordinates(const HillSpec& spec, const std::vector<RatVector>& xs) {
  if (spec.exact) {
    std::vector<RatVector> v;
    for (const auto& x : xs) v.push_back(to_coordinates(spec, x));
    return Simplex::exact(v, spec.metric);
  }
  std::vector<std::vector<double>> v;
  for (const auto& x : xs) {
    std::vector<double> xd;
    for (const auto& r : x) xd.push_back(to_double(r));
    v.push_back(to_float_coordinates(spec, xd));
  }
  return Simplex::certified(v, float_radius(v));
}

std::vector<RatVector> prefix_vertices(int dim, const std::vector<int>& offset, const std::vector<int>& order,
                                       const Rational& scale) {
  std::vector<RatVector> out;
  std::vector<long> x(offset.begin(), offset.end());
  for (int k = 0; k <= dim; ++k) {
    if (k > 0) ++x[static_cast<std::size_t>(order[static_cast<std::size_t>(k - 1)])];
    RatVector v;
    for (long xi : x) v.push_back(Rational(xi) * scale);
    out.push_back(v);
  }
  return out;
}

}  // namespace

Simplex hill_simplex(const HillSpec& spec) {
  std::vector<int> zero(static_cast<std::size_t>(spec.dim), 0), order(static_cast<std::size_t>(spec.dim));
  std::iota(order.begin(), order.end(), 0);
  return from_basis_coordinates(spec, prefix_vertices(spec.dim, zero, order, Rational(1)));
}

std::vector<HillCell> hill_cells(int dim, int m) {
  if (m < 2) throw std::invalid_argument("subdivision factor m must be at least 2");
  std::vector<HillCell> out;
  std::vector<int> offset(static_cast<std::size_t>(dim));
  std::function<void(int, int)> rec = [&](int i, int cap) {
    if (i == dim) {
      std::vector<int> order(static_cast<std::size_t>(dim));
      std::iota(order.begin(), order.end(), 0);
      do {
        std::vector<int> pos(static_cast<std::size_t>(dim));
        for (int k = 0; k < dim; ++k) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k;
        bool ok = true;
        for (int k = 0; k + 1 < dim && ok; ++k)
          if (offset[static_cast<std::size_t>(k)] == offset[static_cast<std::size_t>(k + 1)] &&
              pos[static_cast<std::size_t>(k)] > pos[static_cast<std::size_t>(k + 1)])
            ok = false;
        if (ok) out.push_back({offset, order});
      } while (std::next_permutation(order.begin(), order.end()));
      return;
    }
    for (int a = 0; a <= cap; ++a) {
      offset[static_cast<std::size_t>(i)] = a;
      rec(i + 1, a);
    }
  };
  rec(0, m - 1);
  return out;
}

Subdivision subdivide(const HillSpec& spec, int m) {
  Subdivision sub{hill_simplex(spec), {}, m, q(1, m), hill_cells(spec.dim, m)};
  for (const auto& cell : sub.cells)
    sub.pieces.push_back(from_basis_coordinates(spec, prefix_vertices(spec.dim, cell.offset, cell.order, q(1, m))));
  return sub;
}

namespace {

bool same_metric(const Simplex& a, const Simplex& b) { return a.metric() == b.metric(); }

std::string join_pair(std::size_t i, std::size_t j) { return std::to_string(i) + " and " + std::to_string(j); }

}  // namespace

ReptileReport verify_reptile(const Subdivision& sub) {
  ReptileReport r;
  r.pieces = sub.pieces.size();
  bool exact = sub.parent.is_exact();
  for (const auto& p : sub.pieces) exact = exact && p.is_exact() && same_metric(p, sub.parent);
  r.exact = exact;
  const Simplex parent = exact ? sub.parent : (sub.parent.is_exact() ? sub.parent.to_float() : sub.parent);
  std::vector<Simplex> pieces;
  for (const auto& p : sub.pieces) pieces.push_back(exact || !p.is_exact() ? p : p.to_float());
  const double tol = kHillFloatTolerance;
  const std::size_t n = pieces.size();
  const Rational ratio_squared = sub.ratio * sub.ratio;

  // (1) volume
  if (exact) {
    Rational total = 0;
    for (const auto& p : pieces) total += coordinate_volume(p);
    const Rational whole = coordinate_volume(parent);
    r.volume.ok = total == whole;
    const std::string unit = parent.metric() ? " (coordinate volume)" : "";
    r.volume.detail = "sum " + to_string(total) + ", parent " + to_string(whole) + unit;
  } else {
    double total = 0;
    for (const auto& p : pieces) total += approx_volume(p);
    const double whole = approx_volume(parent);
    r.volume.ok = std::abs(total - whole) <= tol * whole;
    r.volume.detail = "sum " + std::to_string(total) + ", parent " + std::to_string(whole);
  }

  // (2) similarity with ratio 1/m
  r.similarity.ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    auto sim = similar(parent, pieces[i]);
    bool ok = sim.has_value();
    if (ok) {
      ok = exact ? sim->ratio_squared == ratio_squared
                 : std::abs(to_double(sim->ratio_squared) - to_double(ratio_squared)) <= tol;
      (sim->match.reflection ? r.mirrored : r.proper) += 1;
      if (i == 0) r.measured_ratio = exact ? sim->ratio.to_string() : std::to_string(std::sqrt(to_double(sim->ratio_squared)));
    }
    if (!ok && r.similarity.ok) {
      r.similarity.ok = false;
      r.similarity.witness = {static_cast<int>(i)};
      r.similarity.detail = "piece " + std::to_string(i) + " is not similar to the parent with ratio " + to_string(sub.ratio);
    }
  }
  if (r.similarity.ok) r.similarity.detail = "all pieces similar with ratio " + r.measured_ratio;

  // (3) mutual congruence
  r.congruence.ok = true;
  for (std::size_t i = 1; i < n && r.congruence.ok; ++i) {
    if (!congruent(pieces[0], pieces[i])) {
      r.congruence.ok = false;
      r.congruence.witness = {0, static_cast<int>(i)};
      r.congruence.detail = "pieces " + join_pair(0, i) + " are not congruent";
    }
  }
  if (r.congruence.ok) r.congruence.detail = "all pieces congruent to piece 0";

  // (4) pairwise interior-disjointness, pairs split across threads
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<PairDecision> decisions(pairs.size());
  double scale = 1;
  for (const auto& v : parent.approx_vertices())
    for (double x : v) scale = std::max(scale, std::abs(x));
  auto work = [&](std::size_t start, std::size_t step) {
    for (std::size_t k = start; k < pairs.size(); k += step) {
      const auto& a = pieces[pairs[k].first];
      const auto& b = pieces[pairs[k].second];
      decisions[k] = exact ? interiors_disjoint(a.vertices(), b.vertices())
                           : interiors_disjoint(a.approx_vertices(), b.approx_vertices(), tol * scale);
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
  if (pairs.size() < 64 || threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    for (auto& t : pool) t.join();
  }
  r.disjointness.ok = true;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    switch (decisions[k].how) {
      case Separation::box: ++r.separated_by_box; break;
      case Separation::facet: ++r.separated_by_facet; break;
      case Separation::clipping: ++r.separated_by_clipping; break;
      case Separation::overlap:
        if (r.disjointness.ok) {
          r.disjointness.ok = false;
          r.disjointness.witness = {static_cast<int>(pairs[k].first), static_cast<int>(pairs[k].second)};
          r.disjointness.detail = "pieces " + join_pair(pairs[k].first, pairs[k].second) + " overlap";
          r.overlap_point = decisions[k].witness;
        }
        break;
    }
  }
  if (r.disjointness.ok)
    r.disjointness.detail = std::to_string(pairs.size()) + " pairs: " + std::to_string(r.separated_by_box) + " by box, " +
                            std::to_string(r.separated_by_facet) + " by facet plane, " +
                            std::to_string(r.separated_by_clipping) + " by clipping";

  // (5) containment, which with (1) and (4) gives the union
  bool contained = true;
  for (std::size_t i = 0; i < n && contained; ++i) {
    for (std::size_t k = 0; k < pieces[i].approx_vertices().size() && contained; ++k) {
      bool inside;
      if (exact) {
        const auto b = barycentric(parent.vertices(), pieces[i].vertices()[k]);
        inside = std::all_of(b.begin(), b.end(), [](const Rational& x) { return x >= 0; });
      } else {
        const auto b = barycentric(parent.approx_vertices(), pieces[i].approx_vertices()[k]);
        inside = std::all_of(b.begin(), b.end(), [&](double x) { return x >= -tol; });
      }
      if (!inside) {
        contained = false;
        r.union_cover.witness = {static_cast<int>(i)};
        r.union_cover.detail = "vertex " + std::to_string(k) + " of piece " + std::to_string(i) + " lies outside the parent";
      }
    }
  }
  r.union_cover.ok = contained && r.volume.ok && r.disjointness.ok;
  if (contained) {
    r.union_cover.detail = r.union_cover.ok ? "pieces lie in the parent and fill its volume without overlap"
                                            : "pieces lie in the parent but volume or disjointness fails";
  }
  return r;
}

GrowResult grow_space_tiling(const HillSpec& spec, int m, int generations,
                             const std::function<void(const Simplex&)>& visit, std::uint64_t budget, int sample_pairs,
                             std::uint64_t seed) {
  if (generations < 1) throw std::invalid_argument("generations must be at least 1");
  const auto base_cells = hill_cells(spec.dim, m);
  const auto d = static_cast<std::size_t>(spec.dim);
  GrowResult out;
  out.generations = generations;
  out.m = m;

  using Cell = std::vector<std::vector<long>>;  // d+1 vertices in integer basis coordinates
  std::map<std::vector<long>, int> facets;
  std::vector<Cell> reservoir;
  const std::size_t keep = static_cast<std::size_t>(std::max(0, 2 * sample_pairs));
  std::mt19937_64 rng(seed);
  Rational total_volume = 0;
  double total_float = 0;

  std::vector<long> powers(static_cast<std::size_t>(generations) + 1, 1);
  for (std::size_t i = 1; i < powers.size(); ++i) powers[i] = powers[i - 1] * m;

  auto emit = [&](const std::vector<long>& offset, const std::vector<int>& perm) {
    Cell cell;
    std::vector<long> x = offset;
    cell.push_back(x);
    for (std::size_t k = 0; k < d; ++k) {
      ++x[static_cast<std::size_t>(perm[k])];
      cell.push_back(x);
    }
    std::vector<RatVector> xs;
    for (const auto& v : cell) {
      RatVector rv;
      for (long c : v) rv.push_back(Rational(c));
      xs.push_back(rv);
    }
    const Simplex s = from_basis_coordinates(spec, xs);
    if (spec.exact) total_volume += coordinate_volume(s);
    else total_float += approx_volume(s);
    for (std::size_t skip = 0; skip <= d; ++skip) {
      Cell facet;
      for (std::size_t k = 0; k <= d; ++k)
        if (k != skip) facet.push_back(cell[k]);
      std::sort(facet.begin(), facet.end());
      std::vector<long> key;
      for (const auto& v : facet) key.insert(key.end(), v.begin(), v.end());
      ++facets[key];
    }
    if (reservoir.size() < keep) {
      reservoir.push_back(cell);
    } else if (keep > 0) {
      std::uniform_int_distribution<std::uint64_t> pick(0, out.cells);
      const auto slot = pick(rng);
      if (slot < keep) reservoir[slot] = cell;
    }
    ++out.cells;
    if (visit) visit(s);
  };

  // Level l cell at scale m^generations: offset o, orientation P (cell vertex k = o + P(e_1 + ... + e_k)).
  std::function<void(int, const std::vector<long>&, const std::vector<int>&)> rec =
      [&](int level, const std::vector<long>& offset, const std::vector<int>& perm) {
        if (out.truncated) return;
        if (level == generations) {
          if (out.cells >= budget) {
            out.truncated = true;
            return;
          }
          emit(offset, perm);
          return;
        }
        const long step = powers[static_cast<std::size_t>(generations - level - 1)];
        for (const auto& c : base_cells) {
          std::vector<long> child = offset;
          for (std::size_t i = 0; i < d; ++i) child[static_cast<std::size_t>(perm[i])] += step * c.offset[i];
          std::vector<int> composed(d);
          for (std::size_t k = 0; k < d; ++k) composed[k] = perm[static_cast<std::size_t>(c.order[k])];
          rec(level + 1, child, composed);
        }
      };
  std::vector<int> identity(d);
  std::iota(identity.begin(), identity.end(), 0);
  rec(0, std::vector<long>(d, 0), identity);

  for (const auto& [key, count] : facets) (count == 2 ? out.shared_facets : out.boundary_facets) += 1;

  const Simplex unit = hill_simplex(spec);
  if (spec.exact) out.volume_ok = total_volume == Rational(static_cast<long>(out.cells)) * coordinate_volume(unit);
  else out.volume_ok = std::abs(total_float - static_cast<double>(out.cells) * approx_volume(unit)) <=
                        kHillFloatTolerance * total_float;

  // Sampled exact disjointness between random pairs of retained cells (basis coordinates suffice).
  out.sampled_disjoint = true;
  if (reservoir.size() >= 2) {
    std::uniform_int_distribution<std::size_t> pick(0, reservoir.size() - 1);
    for (int k = 0; k < sample_pairs; ++k) {
      std::size_t i = pick(rng), j = pick(rng);
      while (j == i) j = pick(rng);
      auto as_rational = [](const Cell& c) {
        std::vector<RatVector> v;
        for (const auto& p : c) {
          RatVector rv;
          for (long x : p) rv.push_back(Rational(x));
          v.push_back(rv);
        }
        return v;
      };
      ++out.sampled_pairs;
      if (interiors_disjoint(as_rational(reservoir[i]), as_rational(reservoir[j])).how == Separation::overlap) {
        out.sampled_disjoint = false;
        out.failing_pair = {i, j};
        break;
      }
    }
  }
  return out;
}

}  // namespace reptile
