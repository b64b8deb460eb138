#include "reptile/algebra/polynomial.hpp"

#include <sstream>

namespace reptile {

namespace {
const Integer kZero = 0;
}

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::from_rationals(std::span<const Rational> coefficients) {
  Integer lcm_den = 1;
  for (const auto& c : coefficients) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(coefficients.size());
  for (const auto& c : coefficients) out.emplace_back(c.get_num() * (lcm_den / c.get_den()));
  return IntPolynomial(std::move(out)).primitive_part();
}

IntPolynomial IntPolynomial::monomial(int degree, const Integer& coefficient) {
  std::vector<Integer> c(static_cast<std::size_t>(degree) + 1, 0);
  c.back() = coefficient;
  return IntPolynomial(std::move(c));
}

const Integer& IntPolynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return kZero;
  return coeffs_[static_cast<std::size_t>(i)];
}

const Integer& IntPolynomial::leading() const {
  if (is_zero()) return kZero;
  return coeffs_.back();
}

Integer IntPolynomial::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  Integer g = content();
  std::vector<Integer> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.emplace_back(c / g);
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::normalized() const {
  IntPolynomial p = primitive_part();
  if (!p.is_zero() && p.leading() < 0) return -p;
  return p;
}

IntPolynomial IntPolynomial::derivative() const {
  if (degree() < 1) return {};
  std::vector<Integer> out;
  for (int i = 1; i <= degree(); ++i) out.emplace_back(coeffs_[static_cast<std::size_t>(i)] * i);
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::reflected() const {
  std::vector<Integer> out = coeffs_;
  for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::reversed() const {
  std::vector<Integer> out(coeffs_.rbegin(), coeffs_.rend());
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::scale_roots(const Rational& s) const {
  if (s == 0) throw DomainError("scale_roots by zero");
  RatPoly out(coeffs_.size());
  Rational power = 1;
  for (int i = degree(); i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = Rational(coeffs_[static_cast<std::size_t>(i)]) * power;
    power *= s;
  }
  return from_rationals(out);
}

IntPolynomial IntPolynomial::shift_roots(const Rational& r) const {
  // Horner: q = (((a_n)(x - r) + a_{n-1})(x - r) + ...)
  RatPoly acc;
  const RatPoly lin = {Rational(-r), Rational(1)};
  for (int i = degree(); i >= 0; --i) {
    acc = multiply(acc, lin);
    if (acc.empty()) acc.resize(1);
    acc[0] += coeffs_[static_cast<std::size_t>(i)];
  }
  return from_rationals(acc);
}

Rational IntPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (int i = degree(); i >= 0; --i) acc = acc * x + coeffs_[static_cast<std::size_t>(i)];
  return acc;
}

int IntPolynomial::sign_at(const Rational& x) const {
  // Clear the denominator of x to stay in integer arithmetic: sign(p(a/b)) = sign(b^n p(a/b)).
  if (is_zero()) return 0;
  const Integer& a = x.get_num();
  const Integer& b = x.get_den();
  Integer acc = 0;
  Integer bpow = 1;
  for (int i = degree(); i >= 0; --i) {
    acc = acc * a + coeffs_[static_cast<std::size_t>(i)] * bpow;
    bpow *= b;
  }
  return sgn(acc);
}

Interval IntPolynomial::evaluate(const Interval& x) const {
  if (x.is_point()) return Interval(evaluate(x.lo));
  Interval acc(Rational(0));
  for (int i = degree(); i >= 0; --i) acc = acc * x + Interval(Rational(coeffs_[static_cast<std::size_t>(i)]));
  return acc;
}

RatPoly IntPolynomial::to_rationals() const {
  RatPoly out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.emplace_back(c);
  return out;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a) {
  std::vector<Integer> out = a.coeffs_;
  for (auto& c : out) c = -c;
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const Integer& c, const IntPolynomial& a) {
  std::vector<Integer> out = a.coeffs_;
  for (auto& x : out) x *= c;
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

RatPoly multiply(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a_in, const RatPoly& b_in) {
  RatPoly a = a_in;
  RatPoly b = b_in;
  trim(a);
  trim(b);
  if (b.empty()) throw DomainError("polynomial division by zero");
  if (a.size() < b.size()) return {RatPoly{}, a};
  RatPoly q(a.size() - b.size() + 1, Rational(0));
  const Rational& lb = b.back();
  for (int i = degree(a) - degree(b); i >= 0; --i) {
    Rational factor = a[static_cast<std::size_t>(i) + b.size() - 1] / lb;
    q[static_cast<std::size_t>(i)] = factor;
    if (factor == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[static_cast<std::size_t>(i) + j] -= factor * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  while (!y.is_zero()) {
    IntPolynomial r = positive_remainder(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return x.normalized();
}

IntPolynomial positive_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  auto [q, r] = divmod(a.to_rationals(), b.to_rationals());
  return IntPolynomial::from_rationals(r);
}

std::optional<IntPolynomial> exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  auto [q, r] = divmod(a.to_rationals(), b.to_rationals());
  if (!r.empty()) return std::nullopt;
  return IntPolynomial::from_rationals(q);
}

bool divides(const IntPolynomial& divisor, const IntPolynomial& p) {
  return exact_quotient(p, divisor).has_value();
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.degree() < 1) return p.normalized();
  IntPolynomial g = gcd(p, p.derivative());
  if (g.degree() == 0) return p.normalized();
  return exact_quotient(p, g)->normalized();
}

}  // namespace reptile
