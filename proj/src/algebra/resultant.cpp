#include "reptile/algebra/resultant.hpp"

#include <algorithm>

namespace reptile {

int BiPoly::degree_z() const {
  int d = -1;
  for (const auto& t : terms) d = std::max(d, degree(t));
  return d;
}

RatPoly BiPoly::at(const Rational& z0) const {
  RatPoly out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    Rational acc = 0;
    for (auto it = t.rbegin(); it != t.rend(); ++it) acc = acc * z0 + *it;
    out.push_back(acc);
  }
  return out;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

Rational resultant(const RatPoly& f, const RatPoly& g_in) {
  RatPoly g = g_in;
  trim(g);
  const int m = static_cast<int>(f.size()) - 1;
  const int n = degree(g);
  if (m < 0 || n < 0) return Rational(0);
  if (m == 0 || n == 0) {
    // Res(c, g) = c^deg g and Res(f, c) = c^deg f.
    const Rational& base = m == 0 ? f[0] : g[0];
    Rational r = 1;
    for (int i = 0; i < (m == 0 ? n : m); ++i) r *= base;
    return r;
  }
  const int size = m + n;
  std::vector<std::vector<Rational>> s(static_cast<std::size_t>(size), std::vector<Rational>(static_cast<std::size_t>(size), Rational(0)));
  // Rows 0..n-1 hold shifted copies of f, rows n..n+m-1 copies of g; highest degree first.
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] = f[static_cast<std::size_t>(m - i)];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i)
      s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + i)] = g[static_cast<std::size_t>(n - i)];
  return determinant(std::move(s));
}

RatPoly interpolate_at_naturals(const std::vector<Rational>& values) {
  const std::size_t n = values.size();
  // Newton divided differences on nodes 0, 1, ..., n-1.
  std::vector<Rational> dd = values;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / static_cast<long>(level);
  RatPoly out = {dd[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    // out = out * (x - k) + dd[k]
    RatPoly next(out.size() + 1, Rational(0));
    for (std::size_t j = 0; j < out.size(); ++j) {
      next[j + 1] += out[j];
      next[j] -= out[j] * static_cast<long>(k);
    }
    next[0] += dd[k];
    out = std::move(next);
  }
  trim(out);
  return out;
}

IntPolynomial eliminate_variable(const BiPoly& f, const IntPolynomial& q) {
  const int bound = std::max(0, f.degree_z()) * q.degree();
  const RatPoly g = q.to_rationals();
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(bound) + 1);
  for (int k = 0; k <= bound; ++k) values.push_back(resultant(f.at(Rational(k)), g));
  return IntPolynomial::from_rationals(interpolate_at_naturals(values));
}

}  // namespace reptile
