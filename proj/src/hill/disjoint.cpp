#include "reptile/hill/disjoint.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

namespace reptile {

std::string to_string(Separation s) {
  switch (s) {
    case Separation::box: return "box";
    case Separation::facet: return "facet";
    case Separation::clipping: return "clipping";
    case Separation::overlap: return "overlap";
  }
  return "unknown";
}

namespace {

struct ExactOps {
  using T = Rational;
  bool zero(const T& x) const { return x == 0; }
  bool pos(const T& x) const { return x > 0; }
  bool nonneg(const T& x) const { return x >= 0; }
  double approx(const T& x) const { return to_double(x); }
  // Pick the first nonzero pivot; any choice is exact.
  bool better_pivot(const T& cand, const T& best) const { return best == 0 && cand != 0; }
};

struct FloatOps {
  using T = double;
  double tol;
  bool zero(T x) const { return std::abs(x) <= tol; }
  bool pos(T x) const { return x > tol; }
  bool nonneg(T x) const { return x >= -tol; }
  double approx(T x) const { return x; }
  bool better_pivot(T cand, T best) const { return std::abs(cand) > std::abs(best); }
};

template <class Ops, class T = typename Ops::T>
std::optional<std::vector<T>> solve(std::vector<std::vector<T>> a, std::vector<T> b, const Ops& ops) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (ops.better_pivot(a[r][c], a[p][c])) p = r;
    if (ops.zero(a[p][c])) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == T(0)) continue;
      const T f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  std::vector<T> x(n);
  for (std::size_t i = n; i-- > 0;) {
    T acc = b[i];
    for (std::size_t k = i + 1; k < n; ++k) acc -= a[i][k] * x[k];
    x[i] = acc / a[i][i];
  }
  return x;
}

// Affine barycentric functions lambda_k(x) = g_k . x + h_k as rows (g_k, h_k).
template <class Ops, class T = typename Ops::T>
std::vector<std::vector<T>> barycentric_rows(const std::vector<std::vector<T>>& v, const Ops& ops) {
  const std::size_t d = v.size() - 1;
  // Solve [v_0 .. v_d ; 1 .. 1] lambda = [x ; 1]: the inverse rows give the functions.
  std::vector<std::vector<T>> m(d + 1, std::vector<T>(d + 1));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c <= d; ++c) m[r][c] = v[c][r];
  for (std::size_t c = 0; c <= d; ++c) m[d][c] = T(1);
  std::vector<std::vector<T>> inv(d + 1, std::vector<T>(d + 1));
  for (std::size_t col = 0; col <= d; ++col) {
    std::vector<T> e(d + 1, T(0));
    e[col] = T(1);
    auto x = solve(m, e, ops);
    if (!x) throw std::invalid_argument("degenerate simplex");
    for (std::size_t r = 0; r <= d; ++r) inv[r][col] = (*x)[r];
  }
  return inv;  // row k: coefficients of x_0..x_{d-1}, then the constant
}

template <class T>
T affine_value(const std::vector<T>& row, const std::vector<T>& x) {
  T acc = row.back();
  for (std::size_t i = 0; i < x.size(); ++i) acc += row[i] * x[i];
  return acc;
}

template <class Ops, class T = typename Ops::T>
std::vector<double> to_doubles(const std::vector<T>& x, const Ops& ops) {
  std::vector<double> out;
  for (const auto& v : x) out.push_back(ops.approx(v));
  return out;
}

template <class Ops, class T = typename Ops::T>
PairDecision decide(const std::vector<std::vector<T>>& p, const std::vector<std::vector<T>>& q, const Ops& ops) {
  if (p.size() != q.size() || p.empty()) throw std::invalid_argument("simplices of different dimension");
  const std::size_t d = p.size() - 1;
  PairDecision out;
  for (std::size_t axis = 0; axis < d; ++axis) {
    T pmin = p[0][axis], pmax = p[0][axis], qmin = q[0][axis], qmax = q[0][axis];
    for (std::size_t k = 1; k <= d; ++k) {
      pmin = std::min(pmin, p[k][axis]);
      pmax = std::max(pmax, p[k][axis]);
      qmin = std::min(qmin, q[k][axis]);
      qmax = std::max(qmax, q[k][axis]);
    }
    if (ops.nonneg(qmin - pmax) || ops.nonneg(pmin - qmax)) {
      out.how = Separation::box;
      return out;
    }
  }
  const auto lp = barycentric_rows(p, ops);
  const auto lq = barycentric_rows(q, ops);
  auto separates = [&](const std::vector<std::vector<T>>& rows, const std::vector<std::vector<T>>& other) {
    for (const auto& row : rows) {
      bool all_outside = true;
      for (const auto& x : other)
        if (ops.pos(affine_value(row, x))) {
          all_outside = false;
          break;
        }
      if (all_outside) return true;
    }
    return false;
  };
  if (separates(lp, q) || separates(lq, p)) {
    out.how = Separation::facet;
    return out;
  }
  // maximize eps subject to lambda(x) - eps >= 0 for all 2(d+1) functions; optimum at a vertex.
  std::vector<std::vector<T>> rows = lp;
  rows.insert(rows.end(), lq.begin(), lq.end());
  const std::size_t m = rows.size(), k = d + 1;
  std::optional<T> best;
  std::vector<T> best_x;
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<std::vector<T>> a;
    std::vector<T> b;
    for (std::size_t i = 0; i < m; ++i) {
      if (!pick[i]) continue;
      std::vector<T> row(rows[i].begin(), rows[i].end() - 1);
      row.push_back(T(-1));
      a.push_back(row);
      b.push_back(-rows[i].back());
    }
    auto sol = solve(a, b, ops);
    if (!sol) continue;
    const T eps = sol->back();
    std::vector<T> x(sol->begin(), sol->end() - 1);
    bool feasible = true;
    for (const auto& row : rows)
      if (!ops.nonneg(affine_value(row, x) - eps)) {
        feasible = false;
        break;
      }
    if (feasible && (!best || eps > *best)) {
      best = eps;
      best_x = x;
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  if (!best) throw std::logic_error("intersection program has no vertex");
  out.depth = ops.approx(*best);
  if (ops.pos(*best)) {
    out.how = Separation::overlap;
    out.witness = to_doubles(best_x, ops);
  } else {
    out.how = Separation::clipping;
  }
  return out;
}

}  // namespace

PairDecision interiors_disjoint(const std::vector<RatVector>& p, const std::vector<RatVector>& q) {
  return decide(p, q, ExactOps{});
}

PairDecision interiors_disjoint(const std::vector<std::vector<double>>& p, const std::vector<std::vector<double>>& q,
                                double tol) {
  return decide(p, q, FloatOps{tol});
}

RatVector barycentric(const std::vector<RatVector>& simplex, const RatVector& x) {
  RatVector out;
  for (const auto& row : barycentric_rows(simplex, ExactOps{})) out.push_back(affine_value(row, x));
  return out;
}

std::vector<double> barycentric(const std::vector<std::vector<double>>& simplex, const std::vector<double>& x) {
  std::vector<double> out;
  for (const auto& row : barycentric_rows(simplex, FloatOps{1e-300})) out.push_back(affine_value(row, x));
  return out;
}

}  // namespace reptile
