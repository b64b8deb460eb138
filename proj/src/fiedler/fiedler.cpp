#include "reptile/fiedler/fiedler.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace reptile {

std::string to_string(RealizabilityFailure f) {
  switch (f) {
    case RealizabilityFailure::none: return "none";
    case RealizabilityFailure::nonsingular: return "nonsingular";
    case RealizabilityFailure::rank_deficient: return "rank_deficient";
    case RealizabilityFailure::positive_eigenvalue: return "positive_eigenvalue";
    case RealizabilityFailure::nonpositive_kernel: return "nonpositive_kernel";
  }
  return "unknown";
}

namespace {

template <class F>
using Matrix = std::vector<std::vector<F>>;

template <class F>
Matrix<F> submatrix(const Matrix<F>& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  Matrix<F> out(rows.size(), std::vector<F>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out[i][j] = m[rows[i]][cols[j]];
  return out;
}

std::vector<std::size_t> all_but(std::size_t n, std::size_t skip) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (i != skip) out.push_back(i);
  return out;
}

// E_k = sum of the k x k principal minors, k = 0..n.
template <class F>
std::vector<F> principal_minor_sums(const Matrix<F>& m) {
  const std::size_t n = m.size();
  std::vector<F> e(n + 1, F(0L));
  e[0] = F(1L);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    e[idx.size()] = e[idx.size()] + leibniz_det(submatrix(m, idx, idx));
  }
  return e;
}

// det(lambda I - M), constant term first.
template <class F>
std::vector<F> characteristic(const Matrix<F>& m) {
  const std::size_t n = m.size();
  const auto e = principal_minor_sums(m);
  std::vector<F> c(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    const std::size_t k = n - j;
    c[j] = (k % 2 == 0) ? e[k] : F(0L) - e[k];
  }
  return c;
}

template <class F>
F cofactor(const Matrix<F>& m, std::size_t i, std::size_t j) {
  const F minor = leibniz_det(submatrix(m, all_but(m.size(), i), all_but(m.size(), j)));
  return ((i + j) % 2 == 0) ? minor : F(0L) - minor;
}

std::string text_of(const SurdSum& x) { return x.to_string(); }
std::string text_of(const AlgebraicReal& x) { return x.to_string(); }
double approx_of(const SurdSum& x) { return x.approx(); }
double approx_of(const AlgebraicReal& x) { return x.approx(); }
int sign_of(const SurdSum& x) { return x.sign(); }
int sign_of(const AlgebraicReal& x) { return x.sign(); }
int sign_of(const Rational& x) { return sign(x); }

template <class F>
struct Decision {
  RealizabilityVerdict verdict;
  std::vector<F> kernel;
};

template <class F>
Decision<F> decide(const Matrix<F>& m) {
  const std::size_t n = m.size();
  Decision<F> out;
  RealizabilityVerdict& v = out.verdict;
  const auto coeffs = characteristic(m);
  for (const auto& c : coeffs) {
    v.char_poly.push_back(text_of(c));
    v.char_poly_approx.push_back(approx_of(c));
  }
  // -A is PSD iff every coefficient of det(lambda I - A) is >= 0 (the polynomial is real rooted).
  if (!coeffs[0].is_zero()) {
    v.failure = RealizabilityFailure::nonsingular;
    v.detail = "det(A) = " + text_of(coeffs[0]) + " is nonzero";
    return out;
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (coeffs[j].sign() < 0) {
      v.failure = RealizabilityFailure::positive_eigenvalue;
      v.detail = "coefficient of lambda^" + std::to_string(j) + " in det(lambda I - A) is negative: " +
                 text_of(coeffs[j]);
      return out;
    }
  }
  if (coeffs[1].is_zero()) {
    v.failure = RealizabilityFailure::rank_deficient;
    v.detail = "zero is a multiple eigenvalue, rank below d";
    return out;
  }
  // Rank n-1: every nonzero column of adj(A) spans the kernel.
  std::size_t col = n;
  F pivot(0L);
  for (std::size_t j = 0; j < n && col == n; ++j) {
    pivot = cofactor(m, j, j);
    if (!pivot.is_zero()) col = j;
  }
  if (col == n) throw std::logic_error("adjugate has zero diagonal at rank n-1");
  const int flip = pivot.sign();
  std::vector<F> z(n);
  for (std::size_t i = 0; i < n; ++i) {
    z[i] = cofactor(m, col, i);
    if (flip < 0) z[i] = F(0L) - z[i];
  }
  for (std::size_t i = 0; i < n; ++i) {
    F row(0L);
    for (std::size_t k = 0; k < n; ++k) row = row + m[i][k] * z[k];
    if (!row.is_zero()) throw std::logic_error("adjugate column is not in the kernel");
  }
  double total = 0;
  for (const auto& zi : z) total += approx_of(zi);
  for (const auto& zi : z) v.kernel_approx.push_back(approx_of(zi) / total);
  out.kernel = z;
  for (std::size_t i = 0; i < n; ++i) {
    if (z[i].sign() <= 0) {
      v.failure = RealizabilityFailure::nonpositive_kernel;
      v.detail = "kernel component " + std::to_string(i) + " is " + text_of(z[i]);
      return out;
    }
  }
  v.valid = true;
  return out;
}

std::optional<Matrix<SurdSum>> surd_matrix(const CosMatrix& a) {
  Matrix<SurdSum> m(a.size(), std::vector<SurdSum>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      auto s = SurdSum::from_algebraic(a(i, j));
      if (!s) return std::nullopt;
      m[i][j] = *s;
    }
  return m;
}

std::optional<RatMatrix> rational_matrix(const CosMatrix& a) {
  RatMatrix m(a.size(), RatVector(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      auto r = a(i, j).rational();
      if (!r) return std::nullopt;
      m[i][j] = *r;
    }
  return m;
}

double approx_of(const Rational& x) { return to_double(x); }

// For a valid certificate: the number of zero entries of c^T A and their approximate sum.
struct CertificateShape {
  int zeros = 0;
  double sum = 0;
};

template <class F>
std::optional<CertificateShape> rowspace_shape(const Matrix<F>& m, const RatVector& c) {
  CertificateShape shape;
  bool nonzero = false;
  for (std::size_t j = 0; j < m.size(); ++j) {
    F acc(0L);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (c[i] != 0) acc = acc + F(c[i]) * m[i][j];
    const int s = sign_of(acc);
    if (s < 0) return std::nullopt;
    if (s > 0) nonzero = true;
    if (s == 0) ++shape.zeros;
    shape.sum += approx_of(acc);
  }
  if (!nonzero) return std::nullopt;
  return shape;
}

template <class F>
bool rowspace_ok(const Matrix<F>& m, const RatVector& c) {
  return rowspace_shape(m, c).has_value();
}

std::optional<CertificateShape> rowspace_shape_any(const CosMatrix& a, const RatVector& c) {
  if (auto s = surd_matrix(a)) return rowspace_shape(*s, c);
  return rowspace_shape(a.entries, c);
}

bool rowspace_ok_any(const CosMatrix& a, const RatVector& c) { return rowspace_shape_any(a, c).has_value(); }

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t k = 0; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<RatVector> nullspace(RatMatrix m) {
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  const auto pivots = rref(m);
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    RatVector x(cols, Rational(0));
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m[r][free];
    basis.push_back(x);
  }
  return basis;
}

// Some solution of m x = b, or nullopt when inconsistent.
std::optional<RatVector> particular_solution(const RatMatrix& m, const RatVector& b) {
  RatMatrix aug = m;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  RatVector x(cols, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
  return x;
}

// Vertices of {v >= 0, sum v = 1, K^T v = 0}: a nonnegative nonzero vector of the row space.
std::optional<RatVector> nonneg_rowspace_vector(const RatMatrix& a) {
  const std::size_t n = a.size();
  const auto kernel = nullspace(a);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) support.push_back(i);
    if (support.size() > kernel.size() + 1) continue;
    RatMatrix eq;
    RatVector rhs;
    for (const auto& k : kernel) {
      RatVector row;
      for (auto i : support) row.push_back(k[i]);
      eq.push_back(row);
      rhs.push_back(0);
    }
    eq.push_back(RatVector(support.size(), Rational(1)));
    rhs.push_back(1);
    auto sol = particular_solution(eq, rhs);
    if (!sol) continue;
    if (std::any_of(sol->begin(), sol->end(), [](const Rational& x) { return x < 0; })) continue;
    RatVector v(n, Rational(0));
    for (std::size_t k = 0; k < support.size(); ++k) v[support[k]] = (*sol)[k];
    return v;
  }
  return std::nullopt;
}

Rational rationalize(double x) {
  const double slack = 1e-9 * std::max(1.0, std::abs(x));
  return simplest_between(Rational(x - slack), Rational(x + slack));
}

// Numeric search for irrational entries: candidate vertices of the same polytope, in doubles.
std::vector<RatVector> numeric_certificate_candidates(const CosMatrix& a) {
  const auto m = a.approx();
  const auto n = static_cast<Eigen::Index>(m.size());
  Eigen::MatrixXd e(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) e(i, j) = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  Eigen::FullPivLU<Eigen::MatrixXd> lu(e);
  lu.setThreshold(1e-9);
  const Eigen::MatrixXd kernel = lu.kernel();
  const bool trivial = lu.rank() == n;
  std::vector<RatVector> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<Eigen::Index> support;
    for (Eigen::Index i = 0; i < n; ++i)
      if (mask & (1u << i)) support.push_back(i);
    const Eigen::Index kdim = trivial ? 0 : kernel.cols();
    if (static_cast<Eigen::Index>(support.size()) > kdim + 1) continue;
    Eigen::MatrixXd eq(kdim + 1, static_cast<Eigen::Index>(support.size()));
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(kdim + 1);
    for (Eigen::Index r = 0; r < kdim; ++r)
      for (std::size_t k = 0; k < support.size(); ++k) eq(r, static_cast<Eigen::Index>(k)) = kernel(support[k], r);
    for (std::size_t k = 0; k < support.size(); ++k) eq(kdim, static_cast<Eigen::Index>(k)) = 1;
    rhs(kdim) = 1;
    Eigen::VectorXd sol = eq.completeOrthogonalDecomposition().solve(rhs);
    if ((eq * sol - rhs).norm() > 1e-9 || sol.minCoeff() < -1e-12) continue;
    Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
    for (std::size_t k = 0; k < support.size(); ++k) v(support[k]) = sol(static_cast<Eigen::Index>(k));
    Eigen::VectorXd c = e.completeOrthogonalDecomposition().solve(v);
    const double scale = c.cwiseAbs().maxCoeff();
    if (!(scale > 0)) continue;
    RatVector rc;
    for (Eigen::Index i = 0; i < n; ++i) rc.push_back(rationalize(c(i) / scale));
    out.push_back(rc);
  }
  return out;
}

}  // namespace

RealizabilityVerdict realizability_check(const CosMatrix& a) {
  a.validate();
  if (auto s = surd_matrix(a)) {
    auto d = decide(*s);
    d.verdict.field = "surd";
    d.verdict.surd_kernel = d.kernel;
    bool all = true;
    std::vector<AlgebraicReal> alg;
    for (const auto& z : d.kernel) {
      auto x = z.to_algebraic();
      if (!x) {
        all = false;
        break;
      }
      alg.push_back(*x);
    }
    if (all) d.verdict.kernel = alg;
    return d.verdict;
  }
  auto d = decide(a.entries);
  d.verdict.field = "algebraic";
  d.verdict.kernel = d.kernel;
  return d.verdict;
}

bool verify_kernel(const CosMatrix& a, const RealizabilityVerdict& v) {
  if (!v.valid) return false;
  const std::size_t n = a.size();
  if (!v.surd_kernel.empty()) {
    auto m = surd_matrix(a);
    if (!m || v.surd_kernel.size() != n) return false;
    for (const auto& z : v.surd_kernel)
      if (z.sign() <= 0) return false;
    for (std::size_t i = 0; i < n; ++i) {
      SurdSum row;
      for (std::size_t k = 0; k < n; ++k) row += (*m)[i][k] * v.surd_kernel[k];
      if (!row.is_zero()) return false;
    }
    return true;
  }
  if (v.kernel.size() != n) return false;
  for (const auto& z : v.kernel)
    if (z.sign() <= 0) return false;
  for (std::size_t i = 0; i < n; ++i) {
    AlgebraicReal row;
    for (std::size_t k = 0; k < n; ++k) row = row + a(i, k) * v.kernel[k];
    if (!row.is_zero()) return false;
  }
  return true;
}

std::vector<SurdSum> char_poly(const CosMatrix& a) {
  auto s = surd_matrix(a);
  if (!s) throw UnsupportedDegree("characteristic polynomial needs entries of degree at most 2");
  return characteristic(*s);
}

bool verify_rowspace_certificate(const CosMatrix& a, const RatVector& c) {
  if (c.size() != a.size()) return false;
  return rowspace_ok_any(a, c);
}

std::optional<RatVector> nonneg_rowspace_certificate(const CosMatrix& a) {
  a.validate();
  const std::size_t n = a.size();
  // Coefficients in {-1, 0, 1} first, by support size. Among those of the smallest support, prefer
  // the combination with the most zero entries, then the smallest entry sum: the sparsest witness.
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  for (std::size_t support = 1; support <= n; ++support) {
    std::optional<RatVector> best;
    CertificateShape best_shape;
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t x = code, used = 0;
      RatVector c(n, Rational(0));
      for (std::size_t i = 0; i < n; ++i, x /= 3) {
        const int digit = static_cast<int>(x % 3);
        c[i] = digit == 0 ? 0 : (digit == 1 ? 1 : -1);
        if (digit) ++used;
      }
      if (used != support) continue;
      const auto shape = rowspace_shape_any(a, c);
      if (!shape) continue;
      if (!best || shape->zeros > best_shape.zeros ||
          (shape->zeros == best_shape.zeros && shape->sum < best_shape.sum - 1e-12)) {
        best = c;
        best_shape = *shape;
      }
    }
    if (best) return best;
  }
  if (auto r = rational_matrix(a)) {
    auto v = nonneg_rowspace_vector(*r);
    if (!v) return std::nullopt;
    auto c = particular_solution(*r, *v);
    if (c && rowspace_ok(*r, *c)) return c;
    return std::nullopt;
  }
  for (const auto& c : numeric_certificate_candidates(a))
    if (rowspace_ok_any(a, c)) return c;
  return std::nullopt;
}

Simplex reconstruct_simplex(const CosMatrix& a) {
  const auto verdict = realizability_check(a);
  if (!verdict.valid)
    throw std::invalid_argument("not realizable (" + to_string(verdict.failure) + "): " + verdict.detail);
  const auto m = a.approx();
  const auto n = static_cast<Eigen::Index>(m.size());
  const Eigen::Index d = n - 1;
  Eigen::MatrixXd g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) = -m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(g);
  // Rows of U: sqrt(mu_k) q_k^T for the d positive eigenvalues; its columns are the unit normals.
  Eigen::MatrixXd u(d, n);
  for (Eigen::Index k = 1; k <= d; ++k)
    u.row(k - 1) = std::sqrt(std::max(eig.eigenvalues()(k), 0.0)) * eig.eigenvectors().col(k).transpose();
  // Vertex d at the origin; <u_i, v_j> = delta_ij / z_i for i, j < d.
  Eigen::VectorXd h(d);
  for (Eigen::Index i = 0; i < d; ++i) h(i) = 1.0 / verdict.kernel_approx[static_cast<std::size_t>(i)];
  const Eigen::MatrixXd ud = u.leftCols(d);
  const Eigen::MatrixXd verts = ud.transpose().fullPivLu().solve(Eigen::MatrixXd(h.asDiagonal()));
  std::vector<Eigen::VectorXd> pts;
  for (Eigen::Index j = 0; j < d; ++j) pts.push_back(verts.col(j));
  pts.push_back(Eigen::VectorXd::Zero(d));
  double longest = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) longest = std::max(longest, (pts[i] - pts[j]).norm());
  std::vector<std::vector<double>> out;
  double extent = 0;
  for (const auto& p : pts) {
    std::vector<double> row;
    for (Eigen::Index k = 0; k < d; ++k) {
      row.push_back(p(k) / longest);
      extent = std::max(extent, std::abs(row.back()));
    }
    out.push_back(row);
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(ud);
  const auto sv = svd.singularValues();
  const double condition = sv(0) / sv(sv.size() - 1);
  const double radius = 64 * 2.220446049250313e-16 * condition * std::max(extent, 1.0);
  return Simplex::certified(out, radius);
}

double cosine_residual(const CosMatrix& a, const Simplex& s) {
  const auto data = dihedral_data(s);
  const auto m = a.approx();
  double worst = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (i != j) worst = std::max(worst, std::abs(data.approx_cosines[i][j] - m[i][j]));
  return worst;
}

GoldenPoly symbolic_det(const GoldenMatrix& m) { return leibniz_det(m); }

GoldenPoly symbolic_char_poly(const GoldenMatrix& m) {
  GoldenMatrix shifted = m;
  const GoldenPoly lambda = GoldenPoly::var(GoldenPoly::lambda);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (auto& x : shifted[i]) x = -x;
    shifted[i][i] = lambda + shifted[i][i];
  }
  return leibniz_det(shifted);
}

}  // namespace reptile
