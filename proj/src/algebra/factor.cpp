#include "reptile/algebra/factor.hpp"

#include <bit>
#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "reptile/algebra/sturm.hpp"

namespace reptile {

namespace {

namespace mp = boost::multiprecision;
using Real = mp::cpp_bin_float_100;
using Complex = mp::cpp_complex_100;

std::optional<Rational> rational_sqrt(const Rational& x) {
  if (x < 0) return std::nullopt;
  if (mpz_perfect_square_p(x.get_num_mpz_t()) == 0 || mpz_perfect_square_p(x.get_den_mpz_t()) == 0)
    return std::nullopt;
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), x.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), x.get_den_mpz_t());
  return make_rational(n, d);
}

Real larger(const Real& a, const Real& b) { return a < b ? b : a; }

Real to_real(const Integer& z) { return Real(z.get_str()); }

Integer round_to_integer(const Real& x) {
  mp::cpp_int ci = mp::round(x).convert_to<mp::cpp_int>();
  return Integer(ci.str());
}

// Aberth-Ehrlich iteration for all complex roots of a squarefree polynomial.
std::vector<Complex> complex_roots(const IntPolynomial& p) {
  const int n = p.degree();
  std::vector<Real> c;
  c.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) c.push_back(to_real(p.coeff(i)));

  auto eval = [&](const Complex& z, Complex& value, Complex& deriv) {
    value = Complex(c[static_cast<std::size_t>(n)]);
    deriv = Complex(0);
    for (int i = n - 1; i >= 0; --i) {
      deriv = deriv * z + value;
      value = value * z + Complex(c[static_cast<std::size_t>(i)]);
    }
  };

  const Real radius(to_double(cauchy_bound(p)));
  std::vector<Complex> z;
  for (int k = 0; k < n; ++k) {
    Real angle = Real(2) * boost::math::constants::pi<Real>() * k / n + Real(0.4);
    z.emplace_back(radius * mp::cos(angle) / 2, radius * mp::sin(angle) / 2);
  }
  const Real tolerance("1e-85");
  for (int iter = 0; iter < 2000; ++iter) {
    Real largest_step = 0;
    for (int k = 0; k < n; ++k) {
      Complex value, deriv;
      eval(z[static_cast<std::size_t>(k)], value, deriv);
      if (mp::abs(value) == 0) continue;
      Complex ratio = value / deriv;
      Complex repulsion(0);
      for (int j = 0; j < n; ++j)
        if (j != k) repulsion += Complex(1) / (z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)]);
      Complex step = ratio / (Complex(1) - ratio * repulsion);
      z[static_cast<std::size_t>(k)] -= step;
      Real scale = larger(Real(1), Real(mp::abs(z[static_cast<std::size_t>(k)])));
      largest_step = larger(largest_step, Real(mp::abs(step) / scale));
    }
    if (largest_step < tolerance) break;
  }
  return z;
}

// Integer polynomial lc * prod_{i in mask} (x - roots[i]) when all its coefficients are
// numerically integral; nullopt otherwise.
std::optional<IntPolynomial> candidate_factor(const std::vector<Complex>& roots, unsigned mask, const Integer& lc) {
  std::vector<Complex> prod = {Complex(1)};
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if ((mask & (1u << i)) == 0) continue;
    std::vector<Complex> next(prod.size() + 1, Complex(0));
    for (std::size_t j = 0; j < prod.size(); ++j) {
      next[j + 1] += prod[j];
      next[j] -= prod[j] * roots[i];
    }
    prod = std::move(next);
  }
  const Real lead = to_real(lc);
  const Real tolerance("1e-40");
  std::vector<Integer> coeffs;
  for (const auto& coef : prod) {
    Complex scaled = coef * Complex(lead);
    Real re = scaled.real();
    Real im = scaled.imag();
    Real scale = larger(Real(1), Real(mp::abs(re)));
    if (mp::abs(im) > tolerance * scale) return std::nullopt;
    if (mp::abs(re - mp::round(re)) > tolerance * scale) return std::nullopt;
    coeffs.push_back(round_to_integer(re));
  }
  IntPolynomial f = IntPolynomial(std::move(coeffs)).normalized();
  if (f.degree() < 1) return std::nullopt;
  return f;
}

void split_without_rational_roots(const IntPolynomial& g, std::vector<IntPolynomial>& out) {
  const int n = g.degree();
  if (n <= 0) return;
  if (n <= 3) {
    out.push_back(g.normalized());
    return;
  }
  if (n == 4) {
    if (auto quad = quadratic_factor_of_quartic(g)) {
      out.push_back(quad->normalized());
      out.push_back(exact_quotient(g, *quad)->normalized());
    } else {
      out.push_back(g.normalized());
    }
    return;
  }
  std::vector<Complex> roots = complex_roots(g);
  for (int k = 2; k <= n / 2; ++k) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) != k) continue;
      auto f = candidate_factor(roots, mask, g.leading());
      if (!f) continue;
      auto cofactor = exact_quotient(g, *f);
      if (!cofactor) continue;
      split_without_rational_roots(*f, out);
      split_without_rational_roots(*cofactor, out);
      return;
    }
  }
  out.push_back(g.normalized());
}

}  // namespace

std::vector<Rational> rational_roots(const IntPolynomial& p) {
  std::vector<Rational> out;
  if (p.degree() < 1) return out;
  IntPolynomial q = squarefree_part(p);
  Integer lead = abs(q.leading());
  // Distinct rationals with denominators <= lead are at least 1/lead^2 apart.
  Rational width = make_rational(Integer(1), lead * lead);
  for (const Interval& iv : sturm_isolate(q)) {
    Interval narrow = bisect_root(q, iv, width);
    Rational candidate = narrow.is_point() ? narrow.lo : simplest_between(narrow.lo, narrow.hi);
    if (q.sign_at(candidate) == 0) out.push_back(candidate);
  }
  return out;
}

std::optional<IntPolynomial> quadratic_factor_of_quartic(const IntPolynomial& p) {
  if (p.degree() != 4) throw std::invalid_argument("quadratic_factor_of_quartic expects degree 4");
  const Rational lead(p.leading());
  const Rational a = Rational(p.coeff(3)) / lead;
  const Rational b = Rational(p.coeff(2)) / lead;
  const Rational c = Rational(p.coeff(1)) / lead;
  const Rational d = Rational(p.coeff(0)) / lead;
  // Roots of the resolvent cubic are r1 r2 + r3 r4 and its two conjugates.
  RatPoly resolvent = {-(a * a * d - 4 * b * d + c * c), a * c - 4 * d, -b, Rational(1)};
  for (const Rational& theta : rational_roots(IntPolynomial::from_rationals(resolvent))) {
    auto root = rational_sqrt(theta * theta - 4 * d);
    if (!root) continue;
    const Rational v = (theta + *root) / 2;
    const Rational w = (theta - *root) / 2;
    std::vector<std::pair<Rational, Rational>> linear_pairs;
    if (v != w) {
      Rational u = (c - a * v) / (w - v);
      linear_pairs.emplace_back(u, a - u);
    } else if (auto disc = rational_sqrt(a * a - 4 * (b - 2 * v))) {
      linear_pairs.emplace_back((a + *disc) / 2, (a - *disc) / 2);
    }
    for (const auto& [u, u2] : linear_pairs) {
      if (v + w + u * u2 != b || u * w + u2 * v != c) continue;
      RatPoly quad = {v, u, Rational(1)};
      IntPolynomial f = IntPolynomial::from_rationals(quad).normalized();
      if (divides(f, p)) return f;
    }
  }
  return std::nullopt;
}

bool is_irreducible(const IntPolynomial& p) {
  if (p.degree() < 1) throw DomainError("irreducibility is defined for degree >= 1");
  if (p.degree() > 4) throw UnsupportedDegree("unsupported degree " + std::to_string(p.degree()));
  if (p.degree() == 1) return true;
  if (!rational_roots(p).empty()) return false;
  if (p.degree() < 4) return true;
  return !quadratic_factor_of_quartic(p).has_value();
}

std::vector<IntPolynomial> factor_squarefree(const IntPolynomial& p) {
  std::vector<IntPolynomial> out;
  IntPolynomial q = squarefree_part(p);
  if (q.degree() < 1) return out;
  if (q.degree() > kMaxFactorDegree)
    throw UnsupportedDegree("factorization beyond degree " + std::to_string(kMaxFactorDegree) + " (got " +
                            std::to_string(q.degree()) + ")");
  for (const Rational& r : rational_roots(q)) {
    IntPolynomial linear({-r.get_num(), r.get_den()});
    out.push_back(linear);
    q = *exact_quotient(q, linear);
  }
  split_without_rational_roots(q, out);
  std::sort(out.begin(), out.end(), [](const IntPolynomial& x, const IntPolynomial& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    return x.coefficients() < y.coefficients();
  });
  return out;
}

}  // namespace reptile
