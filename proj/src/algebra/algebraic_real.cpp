#include "reptile/algebra/algebraic_real.hpp"

#include <functional>
#include <sstream>

#include "reptile/algebra/factor.hpp"
#include "reptile/algebra/resultant.hpp"
#include "reptile/algebra/sturm.hpp"

namespace reptile {

namespace {

Integer binomial(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// The factor of `factors` that has a root inside the open interval `iv`.
const IntPolynomial& factor_with_root(const std::vector<IntPolynomial>& factors, const Interval& iv) {
  for (const auto& f : factors) {
    if (count_roots_open(f, iv.lo, iv.hi) > 0) return f;
  }
  throw DomainError("interval " + to_string(iv) + " contains no root");
}

bool isolates_single_root(const IntPolynomial& squarefree, const Interval& iv) {
  if (iv.is_point()) return squarefree.sign_at(iv.lo) == 0;
  if (squarefree.sign_at(iv.lo) == 0 || squarefree.sign_at(iv.hi) == 0) return false;
  return count_roots_open(squarefree, iv.lo, iv.hi) == 1;
}

Interval apply(const Interval& a, const Interval& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw std::logic_error("unknown op");
}

Rational apply(const Rational& a, const Rational& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw std::logic_error("unknown op");
}

Interval sqrt_enclosure(const Interval& iv, unsigned bits) {
  auto lower = [&](const Rational& q) -> Rational {
    if (q <= 0) return Rational(0);
    Integer scaled = q.get_num() * q.get_den();
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * bits);
    Integer root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    Integer den = q.get_den();
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
    return make_rational(root, den);
  };
  auto upper = [&](const Rational& q) -> Rational {
    Rational lo = lower(q);
    Integer den = q.get_den();
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
    return lo + make_rational(Integer(1), den);
  };
  return {lower(iv.lo), upper(iv.hi)};
}

}  // namespace

AlgebraicReal::AlgebraicReal(const Rational& value)
    : minpoly_(IntPolynomial({-value.get_num(), value.get_den()})), interval_(value) {}

AlgebraicReal::AlgebraicReal(IntPolynomial minpoly, Interval isolating)
    : minpoly_(std::move(minpoly)), interval_(std::move(isolating)) {}

AlgebraicReal AlgebraicReal::from_minpoly(const IntPolynomial& minpoly, const Interval& isolating) {
  IntPolynomial p = minpoly.normalized();
  if (p.degree() < 1) throw DomainError("minimal polynomial must have degree >= 1");
  if (p.degree() == 1) {
    Rational r = make_rational(-p.coeff(0), p.coeff(1));
    if (!isolating.contains(r)) throw DomainError("interval does not contain the rational root");
    return AlgebraicReal(r);
  }
  if (isolating.is_point() || p.sign_at(isolating.lo) * p.sign_at(isolating.hi) >= 0)
    throw DomainError("interval " + reptile::to_string(isolating) + " is not isolating for " + p.to_string());
  return AlgebraicReal(std::move(p), isolating);
}

AlgebraicReal AlgebraicReal::from_polynomial_root(const IntPolynomial& p, const Interval& isolating) {
  if (p.is_zero()) throw DomainError("undefined root set");
  if (isolating.is_point()) {
    if (p.sign_at(isolating.lo) != 0) throw DomainError("point interval is not a root");
    return AlgebraicReal(isolating.lo);
  }
  const std::vector<IntPolynomial> factors = factor_squarefree(p);
  const IntPolynomial& f = factor_with_root(factors, isolating);
  if (f.degree() == 1) return AlgebraicReal(make_rational(-f.coeff(0), f.coeff(1)));
  return from_minpoly(f, isolating);
}

std::vector<AlgebraicReal> AlgebraicReal::real_roots(const IntPolynomial& p, const std::optional<Interval>& range) {
  std::vector<AlgebraicReal> out;
  std::vector<Interval> intervals = sturm_isolate(p, range);
  if (intervals.empty()) return out;
  std::vector<IntPolynomial> factors = factor_squarefree(p);
  for (const auto& iv : intervals) {
    if (iv.is_point()) {
      out.emplace_back(iv.lo);
      continue;
    }
    const IntPolynomial& f = factor_with_root(factors, iv);
    if (f.degree() == 1) out.emplace_back(make_rational(-f.coeff(0), f.coeff(1)));
    else out.push_back(from_minpoly(f, iv));
  }
  return out;
}

AlgebraicReal AlgebraicReal::sqrt(const Rational& value) {
  if (value < 0) throw DomainError("square root of a negative number");
  if (mpz_perfect_square_p(value.get_num_mpz_t()) != 0 && mpz_perfect_square_p(value.get_den_mpz_t()) != 0) {
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), value.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), value.get_den_mpz_t());
    return AlgebraicReal(make_rational(n, d));
  }
  IntPolynomial p({-value.get_num(), 0, value.get_den()});
  return AlgebraicReal(p, Interval(Rational(0), value + 1));
}

std::optional<Rational> AlgebraicReal::rational() const {
  if (!is_rational()) return std::nullopt;
  return interval_.lo;
}

int AlgebraicReal::sign() const {
  if (is_rational()) return reptile::sign(interval_.lo);
  if (interval_.lo >= 0) return 1;
  if (interval_.hi <= 0) return -1;
  // 0 is not a root of an irreducible polynomial of degree >= 2
  return minpoly_.sign_at(Rational(0)) == minpoly_.sign_at(interval_.lo) ? 1 : -1;
}

Interval AlgebraicReal::refine(const Rational& width) const {
  if (width <= 0) throw DomainError("refinement width must be positive");
  if (is_rational()) return interval_;
  return bisect_root(minpoly_, interval_, width);
}

AlgebraicReal AlgebraicReal::refined(const Rational& width) const {
  if (is_rational()) return *this;
  return AlgebraicReal(minpoly_, refine(width));
}

double AlgebraicReal::approx() const {
  if (is_rational()) return to_double(interval_.lo);
  Rational scale = 1 + abs(interval_.lo) + abs(interval_.hi);
  return to_double(refine(scale / Rational(Integer(1) << 60)).midpoint());
}

std::string AlgebraicReal::to_string() const {
  if (is_rational()) return reptile::to_string(interval_.lo);
  return "root of " + minpoly_.to_string() + " in " + reptile::to_string(interval_);
}

namespace {

AlgebraicReal negate(const AlgebraicReal& x) {
  if (x.is_rational()) return AlgebraicReal(Rational(-*x.rational()));
  return AlgebraicReal::from_minpoly(x.minpoly().reflected(), -x.interval());
}

AlgebraicReal reciprocal(const AlgebraicReal& x) {
  if (x.is_zero()) throw DomainError("division by zero");
  if (x.is_rational()) return AlgebraicReal(Rational(1 / *x.rational()));
  Interval iv = x.interval();
  if (iv.contains_zero()) {
    // Split at 0, which is never a root of the irreducible minimal polynomial.
    if (x.sign() > 0) iv.lo = 0;
    else iv.hi = 0;
    // The endpoint at 0 maps to infinity; tighten it away from zero first.
    iv = bisect_root(x.minpoly(), iv, abs(iv.lo + iv.hi) / 4);
  }
  return AlgebraicReal::from_minpoly(x.minpoly().reversed(), Interval(1 / iv.hi, 1 / iv.lo));
}

AlgebraicReal with_rational(const AlgebraicReal& x, const Rational& r, ArithOp op) {
  // x irrational, r rational; the minimal polynomial transforms without factorization.
  const IntPolynomial& p = x.minpoly();
  const Interval& iv = x.interval();
  switch (op) {
    case ArithOp::add: return AlgebraicReal::from_minpoly(p.shift_roots(r), iv + Interval(r));
    case ArithOp::sub: return AlgebraicReal::from_minpoly(p.shift_roots(-r), iv - Interval(r));
    case ArithOp::mul:
      if (r == 0) return AlgebraicReal(Rational(0));
      return AlgebraicReal::from_minpoly(p.scale_roots(r), iv * Interval(r));
    case ArithOp::div:
      if (r == 0) throw DomainError("division by zero");
      return AlgebraicReal::from_minpoly(p.scale_roots(1 / r), iv * Interval(Rational(1 / r)));
  }
  throw std::logic_error("unknown op");
}

BiPoly operation_polynomial(const IntPolynomial& p, ArithOp op) {
  // Polynomial in (z, y) vanishing at z = x op y whenever p(x) = 0.
  const int m = p.degree();
  BiPoly f;
  f.terms.assign(static_cast<std::size_t>(m) + 1, RatPoly(static_cast<std::size_t>(m) + 1, Rational(0)));
  for (int i = 0; i <= m; ++i) {
    const Integer& a = p.coeff(i);
    switch (op) {
      case ArithOp::add:  // p(z - y)
      case ArithOp::sub:  // p(z + y)
        for (int k = 0; k <= i; ++k) {
          Integer c = a * binomial(i, k);
          if (op == ArithOp::add && (k % 2) == 1) c = -c;
          f.terms[static_cast<std::size_t>(k)][static_cast<std::size_t>(i - k)] += c;
        }
        break;
      case ArithOp::mul:  // y^m p(z / y)
        f.terms[static_cast<std::size_t>(m - i)][static_cast<std::size_t>(i)] += a;
        break;
      case ArithOp::div:  // p(z y)
        f.terms[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] += a;
        break;
    }
  }
  for (auto& t : f.terms) trim(t);
  return f;
}

// Refines the operands until `enclose` yields an interval isolating exactly one root of `r`,
// then identifies the minimal polynomial among the factors of `r`.
AlgebraicReal locate_root(const IntPolynomial& r, std::vector<AlgebraicReal> operands,
                          const std::function<Interval(const std::vector<AlgebraicReal>&)>& enclose) {
  IntPolynomial q = squarefree_part(r);
  for (int iter = 0; iter < 4000; ++iter) {
    Interval iv = enclose(operands);
    if (isolates_single_root(q, iv)) return AlgebraicReal::from_polynomial_root(q, iv);
    for (auto& x : operands) x = x.refined(x.interval().width() / 4);
  }
  throw std::runtime_error("root location did not converge");
}

}  // namespace

AlgebraicReal arith(const AlgebraicReal& x, const AlgebraicReal& y, ArithOp op) {
  if (op == ArithOp::div && y.is_zero()) throw DomainError("division by zero");
  if (x.is_rational() && y.is_rational()) return AlgebraicReal(apply(*x.rational(), *y.rational(), op));
  if (y.is_rational()) return with_rational(x, *y.rational(), op);
  if (x.is_rational()) {
    const Rational r = *x.rational();
    switch (op) {
      case ArithOp::add: return with_rational(y, r, ArithOp::add);
      case ArithOp::sub: return negate(with_rational(y, r, ArithOp::sub));
      case ArithOp::mul: return with_rational(y, r, ArithOp::mul);
      case ArithOp::div: return with_rational(reciprocal(y), r, ArithOp::mul);
    }
  }
  if (x.degree() * y.degree() > kMaxFactorDegree)
    throw UnsupportedDegree("arithmetic result degree bound " + std::to_string(x.degree() * y.degree()) +
                            " exceeds " + std::to_string(kMaxFactorDegree));
  IntPolynomial r = eliminate_variable(operation_polynomial(x.minpoly(), op), y.minpoly());
  std::vector<AlgebraicReal> ops = {x, y};
  if (op == ArithOp::div) {
    while (ops[1].interval().contains_zero()) ops[1] = ops[1].refined(ops[1].interval().width() / 4);
  }
  return locate_root(r, std::move(ops), [op](const std::vector<AlgebraicReal>& v) {
    return apply(v[0].interval(), v[1].interval(), op);
  });
}

AlgebraicReal operator+(const AlgebraicReal& x, const AlgebraicReal& y) { return arith(x, y, ArithOp::add); }
AlgebraicReal operator-(const AlgebraicReal& x, const AlgebraicReal& y) { return arith(x, y, ArithOp::sub); }
AlgebraicReal operator*(const AlgebraicReal& x, const AlgebraicReal& y) { return arith(x, y, ArithOp::mul); }
AlgebraicReal operator/(const AlgebraicReal& x, const AlgebraicReal& y) { return arith(x, y, ArithOp::div); }
AlgebraicReal operator-(const AlgebraicReal& x) { return negate(x); }

std::strong_ordering compare(const AlgebraicReal& x_in, const AlgebraicReal& y_in) {
  if (x_in.is_rational() && y_in.is_rational()) {
    int c = cmp(*x_in.rational(), *y_in.rational());
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  if (x_in.minpoly() == y_in.minpoly()) {
    // Same irreducible polynomial: equal iff the isolating intervals share its root.
    const Interval& a = x_in.interval();
    const Interval& b = y_in.interval();
    Rational lo = std::max(a.lo, b.lo);
    Rational hi = std::min(a.hi, b.hi);
    if (lo < hi && count_roots_open(x_in.minpoly(), lo, hi) > 0) return std::strong_ordering::equal;
  }
  // Distinct values: refine until the enclosures separate.
  AlgebraicReal x = x_in;
  AlgebraicReal y = y_in;
  for (;;) {
    const Interval& a = x.interval();
    const Interval& b = y.interval();
    if (a.hi < b.lo || (a.hi == b.lo && !(a.is_point() && b.is_point()))) return std::strong_ordering::less;
    if (b.hi < a.lo || (b.hi == a.lo && !(a.is_point() && b.is_point()))) return std::strong_ordering::greater;
    if (!x.is_rational()) x = x.refined(a.width() / 4);
    if (!y.is_rational()) y = y.refined(b.width() / 4);
  }
}

Rational certified_gap(const AlgebraicReal& x_in, const AlgebraicReal& y_in) {
  auto order = compare(x_in, y_in);
  if (order == 0) throw DomainError("certified_gap of equal numbers");
  AlgebraicReal x = order < 0 ? x_in : y_in;
  AlgebraicReal y = order < 0 ? y_in : x_in;
  for (;;) {
    Rational gap = y.interval().lo - x.interval().hi;
    if (gap > 0) return gap;
    if (!x.is_rational()) x = x.refined(x.interval().width() / 4);
    if (!y.is_rational()) y = y.refined(y.interval().width() / 4);
  }
}

AlgebraicReal sqrt(const AlgebraicReal& x) {
  if (x.sign() < 0) throw DomainError("square root of a negative number");
  if (x.is_rational()) return AlgebraicReal::sqrt(*x.rational());
  if (2 * x.degree() > kMaxFactorDegree) throw UnsupportedDegree("square root degree exceeds bound");
  // p(z^2)
  std::vector<Integer> c(static_cast<std::size_t>(2 * x.degree()) + 1, 0);
  for (int i = 0; i <= x.degree(); ++i) c[static_cast<std::size_t>(2 * i)] = x.minpoly().coeff(i);
  IntPolynomial r(std::move(c));
  unsigned bits = 32;
  AlgebraicReal positive = x;
  while (positive.interval().lo <= 0) positive = positive.refined(positive.interval().width() / 4);
  return locate_root(r, {positive}, [&bits](const std::vector<AlgebraicReal>& v) {
    bits += 8;
    return sqrt_enclosure(v[0].interval(), bits);
  });
}

AlgebraicReal evaluate(const RatPoly& f, const AlgebraicReal& x) {
  if (x.is_rational()) {
    Rational acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * *x.rational() + *it;
    return AlgebraicReal(acc);
  }
  BiPoly g;  // z - f(y)
  for (std::size_t j = 0; j < std::max<std::size_t>(f.size(), 1); ++j) {
    RatPoly term = {j < f.size() ? Rational(-f[j]) : Rational(0)};
    if (j == 0) term.push_back(Rational(1));
    trim(term);
    g.terms.push_back(term);
  }
  IntPolynomial r = eliminate_variable(g, x.minpoly());
  return locate_root(r, {x}, [&f](const std::vector<AlgebraicReal>& v) {
    Interval acc(Rational(0));
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * v[0].interval() + Interval(*it);
    return acc;
  });
}

}  // namespace reptile
