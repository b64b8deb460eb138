#include "reptile/simplex/simplex.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "reptile/algebra/certified.hpp"
#include "reptile/algebra/surd.hpp"

namespace reptile {

namespace {

constexpr double kFloatTolerance = 1e-10;

Eigen::MatrixXd to_eigen(const RatMatrix& m) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(m.size()), static_cast<Eigen::Index>(m.empty() ? 0 : m[0].size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = to_double(m[i][j]);
  return out;
}

Eigen::MatrixXd float_edge_matrix(const std::vector<std::vector<double>>& v) {
  const auto d = static_cast<Eigen::Index>(v.size() - 1);
  Eigen::MatrixXd e(d, d);
  for (Eigen::Index k = 1; k <= d; ++k)
    for (Eigen::Index r = 0; r < d; ++r)
      e(r, k - 1) = v[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)] - v[0][static_cast<std::size_t>(r)];
  return e;
}

bool positive_definite(const RatMatrix& m) {
  for (std::size_t k = 1; k <= m.size(); ++k) {
    RatMatrix minor(k, RatVector(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor[i][j] = m[i][j];
    if (det(minor) <= 0) return false;
  }
  return true;
}

int factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

Simplex Simplex::exact(std::vector<RatVector> vertices, std::optional<RatMatrix> metric) {
  Simplex s;
  s.dim_ = static_cast<int>(vertices.size()) - 1;
  if (s.dim_ < 2 || s.dim_ > 4) throw std::invalid_argument("simplex dimension must be 2, 3 or 4");
  for (const auto& v : vertices)
    if (static_cast<int>(v.size()) != s.dim_) throw std::invalid_argument("vertex has wrong dimension");
  if (metric) {
    if (static_cast<int>(metric->size()) != s.dim_) throw std::invalid_argument("metric has wrong size");
    for (std::size_t i = 0; i < metric->size(); ++i) {
      if (static_cast<int>((*metric)[i].size()) != s.dim_) throw std::invalid_argument("metric has wrong size");
      for (std::size_t j = 0; j < i; ++j)
        if ((*metric)[i][j] != (*metric)[j][i]) throw std::invalid_argument("metric must be symmetric");
    }
    if (!positive_definite(*metric)) throw std::invalid_argument("metric must be positive definite");
  }
  s.exact_ = std::move(vertices);
  s.metric_ = std::move(metric);
  if (det(s.edge_matrix()) == 0) throw DomainError("degenerate simplex");
  for (const auto& v : s.exact_) {
    std::vector<double> a;
    for (const auto& c : v) a.push_back(to_double(c));
    s.approx_.push_back(std::move(a));
  }
  return s;
}

Simplex Simplex::certified(std::vector<std::vector<double>> vertices, double radius) {
  Simplex s;
  s.mode_ = CoordinateMode::certified_float;
  s.dim_ = static_cast<int>(vertices.size()) - 1;
  if (s.dim_ < 2 || s.dim_ > 4) throw std::invalid_argument("simplex dimension must be 2, 3 or 4");
  for (const auto& v : vertices)
    if (static_cast<int>(v.size()) != s.dim_) throw std::invalid_argument("vertex has wrong dimension");
  if (!(radius >= 0)) throw std::invalid_argument("error radius must be nonnegative");
  s.approx_ = std::move(vertices);
  s.radius_ = radius;
  Eigen::MatrixXd e = float_edge_matrix(s.approx_);
  double scale = 0;
  for (const auto& v : s.approx_)
    for (double c : v) scale = std::max(scale, std::abs(c));
  // Every entry of the edge matrix is off by at most 2 radius; bound the determinant perturbation.
  const double entry_error = 2 * radius;
  const double margin = factorial(s.dim_) * std::pow(2 * scale + entry_error, s.dim_ - 1) * entry_error * s.dim_;
  if (std::abs(e.determinant()) <= margin + 1e-300) throw DomainError("degenerate simplex");
  return s;
}

Rational Simplex::squared_length(int i, int j) const {
  if (!is_exact()) throw std::logic_error("exact squared length requested from a float simplex");
  RatVector e(static_cast<std::size_t>(dim_));
  for (int k = 0; k < dim_; ++k)
    e[static_cast<std::size_t>(k)] = exact_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] -
                                     exact_[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
  return metric_ ? form(*metric_, e, e) : dot(e, e);
}

double Simplex::approx_squared_length(int i, int j) const {
  if (is_exact()) return to_double(squared_length(i, j));
  double acc = 0;
  for (int k = 0; k < dim_; ++k) {
    double d = approx_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] -
               approx_[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
    acc += d * d;
  }
  return acc;
}

RatMatrix Simplex::edge_matrix() const {
  RatMatrix e(static_cast<std::size_t>(dim_), RatVector(static_cast<std::size_t>(dim_)));
  for (std::size_t k = 1; k <= static_cast<std::size_t>(dim_); ++k)
    for (std::size_t r = 0; r < static_cast<std::size_t>(dim_); ++r) e[r][k - 1] = exact_[k][r] - exact_[0][r];
  return e;
}

RatMatrix Simplex::barycentric_gradients() const {
  RatMatrix inv = *inverse(edge_matrix());
  RatMatrix w;
  RatVector first(static_cast<std::size_t>(dim_), Rational(0));
  for (const auto& row : inv)
    for (std::size_t c = 0; c < row.size(); ++c) first[c] -= row[c];
  w.push_back(first);
  for (const auto& row : inv) w.push_back(row);
  return w;
}

RatMatrix Simplex::normal_gram() const {
  RatMatrix w = barycentric_gradients();
  if (!metric_) return w * transpose(w);
  return w * (*inverse(*metric_)) * transpose(w);
}

Simplex Simplex::permuted(const std::vector<int>& perm) const {
  Simplex s = *this;
  for (std::size_t k = 0; k < perm.size(); ++k) {
    if (is_exact()) s.exact_[k] = exact_[static_cast<std::size_t>(perm[k])];
    s.approx_[k] = approx_[static_cast<std::size_t>(perm[k])];
  }
  return s;
}

Simplex Simplex::scaled(const Rational& r) const {
  if (r == 0) throw DomainError("scaling by zero");
  Simplex s = *this;
  const double rd = to_double(r);
  for (std::size_t k = 0; k < s.approx_.size(); ++k) {
    for (std::size_t c = 0; c < s.approx_[k].size(); ++c) {
      if (is_exact()) s.exact_[k][c] *= r;
      s.approx_[k][c] *= rd;
    }
  }
  s.radius_ = radius_ * std::abs(rd);
  return s;
}

Simplex Simplex::to_float() const {
  if (!is_exact()) return *this;
  std::vector<std::vector<double>> v = approx_;
  double scale = 0;
  if (metric_) {
    // Cartesian coordinates L^T x for the metric M = L L^T.
    Eigen::LLT<Eigen::MatrixXd> llt(to_eigen(*metric_));
    Eigen::MatrixXd lt = llt.matrixL().transpose();
    for (auto& p : v) {
      Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(p.data(), static_cast<Eigen::Index>(p.size()));
      Eigen::VectorXd y = lt * x;
      p.assign(y.data(), y.data() + y.size());
    }
  }
  for (const auto& p : v)
    for (double c : p) scale = std::max(scale, std::abs(c));
  return certified(std::move(v), std::max(1.0, scale) * 1e-14);
}

std::vector<int> ridge(int dim, int i, int j) {
  std::vector<int> out;
  for (int k = 0; k <= dim; ++k)
    if (k != i && k != j) out.push_back(k);
  return out;
}

DihedralData dihedral_data(const Simplex& s) {
  DihedralData data;
  data.dim = s.dim();
  data.exact = s.is_exact();
  const int n = s.dim() + 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) data.approx_squared_lengths[{i, j}] = s.approx_squared_length(i, j);
  data.approx_cosines.assign(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n), -1.0));
  if (s.is_exact()) {
    const RatMatrix g = s.normal_gram();
    std::vector<AlgebraicReal> upper;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const Rational& gii = g[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
        const Rational& gjj = g[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)];
        const Rational& gij = g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        // -g_ij / sqrt(g_ii g_jj) = (-g_ij / (g_ii g_jj)) * sqrt(g_ii g_jj)
        AlgebraicReal c = AlgebraicReal::sqrt(gii * gjj) * AlgebraicReal(Rational(-gij / (gii * gjj)));
        data.cosines.emplace(FacetPair{i, j}, c);
        data.squared_lengths.emplace(FacetPair{i, j}, s.squared_length(i, j));
        data.approx_cosines[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            data.approx_cosines[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = c.approx();
        upper.push_back(c);
      }
    }
    data.matrix = CosMatrix::from_upper(s.dim(), upper);
    data.radius = 1e-15;
    return data;
  }
  const Eigen::MatrixXd e = float_edge_matrix(s.approx_vertices());
  const Eigen::MatrixXd inv = e.inverse();
  Eigen::MatrixXd w(n, s.dim());
  w.row(0) = -inv.colwise().sum();
  w.bottomRows(s.dim()) = inv;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double c = -w.row(i).dot(w.row(j)) / (w.row(i).norm() * w.row(j).norm());
      data.approx_cosines[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          data.approx_cosines[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = c;
    }
  // First-order bound: relative coordinate error amplified by the condition number of the edge matrix.
  double scale = e.norm();
  double condition = scale * inv.norm();
  data.radius = 8.0 * condition * (s.radius() / std::max(scale, 1e-300) + 1e-16);
  return data;
}

AlgebraicReal volume(const Simplex& s) {
  if (!s.is_exact()) throw std::logic_error("exact volume requested from a float simplex");
  AlgebraicReal v(coordinate_volume(s));
  if (!s.metric()) return v;
  return v * AlgebraicReal::sqrt(det(*s.metric()));
}

Rational coordinate_volume(const Simplex& s) {
  return abs(det(s.edge_matrix())) / Rational(factorial(s.dim()));
}

double approx_volume(const Simplex& s) {
  if (s.is_exact()) return volume(s).approx();
  return std::abs(float_edge_matrix(s.approx_vertices()).determinant()) / factorial(s.dim());
}

namespace {

int orientation(const Simplex& s) {
  if (s.is_exact()) return sign(det(s.edge_matrix()));
  return float_edge_matrix(s.approx_vertices()).determinant() > 0 ? 1 : -1;
}

// Vertex correspondence with len_b(p(i), p(j)) = factor * len_a(i, j).
std::optional<Congruence> match_lengths(const Simplex& a, const Simplex& b, const Rational& factor,
                                        bool allow_reflection) {
  if (a.dim() != b.dim()) return std::nullopt;
  const int n = a.dim() + 1;
  const bool exact = a.is_exact() && b.is_exact();
  const double f = to_double(factor);
  double scale = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) scale = std::max(scale, b.approx_squared_length(i, j));
  const double tolerance = kFloatTolerance * std::max(1.0, scale) + 8 * (a.radius() + b.radius()) * std::sqrt(std::max(scale, 1.0));
  auto same = [&](int i, int j, int pi, int pj) {
    if (exact) return b.squared_length(pi, pj) == factor * a.squared_length(i, j);
    return std::abs(b.approx_squared_length(pi, pj) - f * a.approx_squared_length(i, j)) <= tolerance;
  };
  // Cheap rejection on sorted length lists.
  if (exact) {
    std::vector<Rational> la, lb;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        la.push_back(factor * a.squared_length(i, j));
        lb.push_back(b.squared_length(i, j));
      }
    std::sort(la.begin(), la.end());
    std::sort(lb.begin(), lb.end());
    if (la != lb) return std::nullopt;
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  const int base = orientation(a);
  std::optional<Congruence> mirrored;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j) ok = same(i, j, perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    if (!ok) continue;
    // orientation of b listed in the order p(0), ..., p(d)
    const bool reflection = orientation(b.permuted(perm)) != base;
    if (!reflection) return Congruence{perm, false};
    if (!mirrored) mirrored = Congruence{perm, true};
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (allow_reflection) return mirrored;
  return std::nullopt;
}

}  // namespace

std::optional<Congruence> find_congruence(const Simplex& a, const Simplex& b, bool allow_reflection) {
  return match_lengths(a, b, Rational(1), allow_reflection);
}

bool congruent(const Simplex& a, const Simplex& b, bool allow_reflection) {
  return find_congruence(a, b, allow_reflection).has_value();
}

std::optional<Similarity> similar(const Simplex& a, const Simplex& b) {
  if (a.dim() != b.dim()) return std::nullopt;
  const int n = a.dim() + 1;
  Rational ratio_squared;
  if (a.is_exact() && b.is_exact()) {
    Rational la = 0, lb = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        la = std::max(la, a.squared_length(i, j));
        lb = std::max(lb, b.squared_length(i, j));
      }
    ratio_squared = lb / la;
  } else {
    double la = 0, lb = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        la = std::max(la, a.approx_squared_length(i, j));
        lb = std::max(lb, b.approx_squared_length(i, j));
      }
    ratio_squared = Rational(lb / la);
  }
  auto match = match_lengths(a, b, ratio_squared, true);
  if (!match) return std::nullopt;
  return Similarity{ratio_squared, AlgebraicReal::sqrt(ratio_squared), *match};
}

std::vector<VertexAngleSum> vertex_angle_check(const Simplex& s) {
  if (s.dim() != 3) throw DomainError("vertex angle check needs a tetrahedron");
  const DihedralData data = dihedral_data(s);
  std::vector<VertexAngleSum> out;
  for (int v = 0; v < 4; ++v) {
    VertexAngleSum entry;
    entry.vertex = v;
    std::vector<AlgebraicReal> cosines;
    std::vector<Interval> enclosures;
    for (int w = 0; w < 4; ++w) {
      if (w == v) continue;
      std::vector<int> f = ridge(3, v, w);
      FacetPair pair{f[0], f[1]};
      entry.edges.push_back(pair);
      if (data.exact) cosines.push_back(data.cosines.at(pair));
      double c = data.approx_cosines[static_cast<std::size_t>(pair.first)][static_cast<std::size_t>(pair.second)];
      enclosures.emplace_back(Rational(std::max(-1.0, c - data.radius)), Rational(std::min(1.0, c + data.radius)));
    }
    try {
      if (data.exact) {
        AngleSumDecision d = compare_arccos_sum(cosines, Rational(1));
        entry.sign = d.sign;
        entry.difference = d.difference;
      } else {
        Interval sum(Rational(0));
        for (const auto& iv : enclosures) sum = sum + arccos_enclosure(iv, 128);
        entry.difference = sum - pi_enclosure(128);
        entry.sign = entry.difference.certain_sign();
        if (entry.sign == 0) throw Inconclusive("float enclosure too wide");
      }
      entry.verdict = entry.sign > 0 ? "greater" : "less";
    } catch (const Inconclusive&) {
      entry.sign = 0;
      entry.verdict = "inconclusive";
    }
    out.push_back(entry);
  }
  return out;
}

std::set<Rational> edge_length_classes_by_angle(const Simplex& s, const AlgebraicReal& cosine) {
  if (s.dim() != 2 && s.dim() != 3) throw DomainError("edge classes are defined for triangles and tetrahedra");
  const DihedralData data = dihedral_data(s);
  if (!data.exact) throw std::logic_error("edge classes need an exact simplex");
  std::set<Rational> out;
  for (const auto& [pair, c] : data.cosines) {
    if (c != cosine) continue;
    if (s.dim() == 3) {
      std::vector<int> e = ridge(3, pair.first, pair.second);
      out.insert(s.squared_length(e[0], e[1]));
    } else {
      out.insert(s.squared_length(pair.first, pair.second));
    }
  }
  if (out.empty()) throw DomainError("angle does not occur in the simplex");
  return out;
}

AngleValue AngleValue::of(const RationalAngle& a, int multiplicity) {
  return {cosine_of(a), a.canonical(), multiplicity};
}

AngleValue AngleValue::of_cosine(const AlgebraicReal& c, int multiplicity) {
  return {c, match_rational_angle(c), multiplicity};
}

AngleMultiset angle_multiset(const DihedralData& data) {
  if (!data.exact) throw std::logic_error("angle multisets need exact dihedral data");
  AngleMultiset out;
  for (const auto& [pair, c] : data.cosines) {
    auto it = std::find_if(out.begin(), out.end(), [&](const AngleValue& a) { return a.cosine == c; });
    if (it != out.end()) ++it->multiplicity;
    else out.push_back(AngleValue::of_cosine(c));
  }
  // increasing angle = decreasing cosine
  std::sort(out.begin(), out.end(), [](const AngleValue& a, const AngleValue& b) { return a.cosine > b.cosine; });
  return out;
}

namespace {

// Enclosure of angle / pi.
Interval angle_fraction(const AngleValue& a, const Rational& width) {
  if (a.rational) return Interval(a.rational->fraction());
  return arccos_over_pi(a.cosine, width);
}

// exp(i * angle) with exact entries, for angles whose cosine is rational or a rational multiple
// of a square root; sin >= 0 on [0, pi].
std::optional<std::pair<SurdSum, SurdSum>> unit_point(const AngleValue& a) {
  auto c = SurdSum::from_algebraic(a.cosine);
  if (!c) return std::nullopt;
  auto c2 = (*c * *c).rational();
  if (!c2) return std::nullopt;
  return std::make_pair(*c, SurdSum::sqrt(1 - *c2));
}

// Exact test of sum_k n_k beta_k == target, given that the enclosures already agree to high precision.
bool combination_equals(const std::vector<std::int64_t>& n, const std::vector<AngleValue>& basis, const AngleValue& target) {
  bool rational = target.rational.has_value();
  for (const auto& b : basis) rational = rational && b.rational.has_value();
  if (rational) {
    Rational sum = 0;
    for (std::size_t k = 0; k < n.size(); ++k) sum += n[k] * basis[k].rational->fraction();
    return sum == target.rational->fraction();
  }
  auto t = unit_point(target);
  std::pair<SurdSum, SurdSum> acc{SurdSum(1), SurdSum(0)};
  if (!t) throw UnsupportedDegree("exact angle-combination test needs cosines with rational squares");
  for (std::size_t k = 0; k < n.size(); ++k) {
    auto p = unit_point(basis[k]);
    if (!p) throw UnsupportedDegree("exact angle-combination test needs cosines with rational squares");
    for (std::int64_t r = 0; r < n[k]; ++r)
      acc = {acc.first * p->first - acc.second * p->second, acc.first * p->second + acc.second * p->first};
  }
  return acc.first == t->first && acc.second == t->second;
}

bool is_combination(const std::vector<AngleValue>& basis, const AngleValue& target) {
  // Bounded search: every coefficient is at most target / beta_1 <= pi / beta_1.
  const Rational floor_width = refinement_floor();
  std::vector<Interval> fractions;
  Rational width = make_rational(1, 1000000);
  for (const auto& b : basis) fractions.push_back(angle_fraction(b, width));
  Interval goal = angle_fraction(target, width);
  std::vector<std::int64_t> n(basis.size(), 0);
  std::function<bool(std::size_t, Interval)> search = [&](std::size_t k, Interval partial) -> bool {
    if (partial.lo > goal.hi) return false;
    if (k == basis.size()) {
      if (partial.hi < goal.lo) return false;
      // Enclosures overlap: refine to decide, then settle exact ties algebraically.
      for (Rational w = width / 1000; w >= floor_width; w /= 1000) {
        Interval sum(Rational(0));
        for (std::size_t i = 0; i < basis.size(); ++i)
          sum = sum + Interval(Rational(n[i])) * angle_fraction(basis[i], w);
        if (disjoint(sum, angle_fraction(target, w))) return false;
      }
      return combination_equals(n, basis, target);
    }
    for (n[k] = 0;; ++n[k]) {
      Interval next = partial + Interval(Rational(n[k])) * fractions[k];
      if (next.lo > goal.hi) break;
      if (search(k + 1, next)) return true;
    }
    n[k] = 0;
    return false;
  };
  return search(0, Interval(Rational(0)));
}

}  // namespace

std::vector<AngleValue> greedy_indivisible_basis(const AngleMultiset& angles) {
  AngleMultiset sorted = angles;
  std::sort(sorted.begin(), sorted.end(), [](const AngleValue& a, const AngleValue& b) { return a.cosine > b.cosine; });
  std::vector<AngleValue> basis;
  for (const auto& a : sorted) {
    if (!basis.empty() && a.cosine == basis.back().cosine) continue;
    if (basis.empty() || !is_combination(basis, a)) basis.push_back(a);
  }
  return basis;
}

std::optional<std::vector<std::int64_t>> integer_combination_pi(const std::vector<RationalAngle>& angles) {
  for (const auto& a : angles)
    if (a.p() <= 0) throw DomainError("angles must be positive");
  std::optional<std::vector<std::int64_t>> best;
  auto support = [](const std::vector<std::int64_t>& v) { return std::count_if(v.begin(), v.end(), [](std::int64_t x) { return x != 0; }); };
  std::vector<std::int64_t> n(angles.size(), 0);
  std::function<void(std::size_t, Rational)> search = [&](std::size_t k, Rational remaining) {
    if (remaining < 0) return;
    if (k == angles.size()) {
      if (remaining != 0) return;
      if (!best || support(n) > support(*best)) best = n;
      return;
    }
    for (n[k] = 0; n[k] * angles[k].fraction() <= remaining; ++n[k]) search(k + 1, remaining - n[k] * angles[k].fraction());
    n[k] = 0;
  };
  search(0, Rational(1));
  return best;
}

std::optional<std::vector<Rational>> positive_rational_combination_pi(const std::vector<RationalAngle>& angles) {
  if (angles.empty()) return std::nullopt;
  Rational total = 0;
  for (const auto& a : angles) {
    if (a.p() <= 0) throw DomainError("angles must be positive");
    total += a.fraction();
  }
  return std::vector<Rational>(angles.size(), Rational(1 / total));
}

}  // namespace reptile
