#include "reptile/algebra/surd.hpp"

#include <sstream>

namespace reptile {

namespace {

// Removes square factors p^2 for small primes p; the radicand only needs to be a representative
// of its square class, so this is purely a size reduction.
void strip_small_squares(Integer& radicand, Rational& coefficient) {
  for (unsigned long p = 2; p < 200; ++p) {
    Integer square = p * p;
    while (mpz_divisible_p(radicand.get_mpz_t(), square.get_mpz_t()) != 0) {
      radicand /= square;
      coefficient *= p;
    }
  }
  Integer root;
  if (mpz_perfect_square_p(radicand.get_mpz_t()) != 0) {
    mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
    coefficient *= root;
    radicand = 1;
  }
}

Interval sqrt_bounds(const Integer& n, unsigned bits) {
  Integer scaled = n;
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * bits);
  Integer root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  Integer den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
  Rational lo = make_rational(root, den);
  if (root * root == scaled) return Interval(lo);
  return Interval(lo, make_rational(root + 1, den));
}

}  // namespace

SurdSum::SurdSum(const Rational& value) {
  if (value != 0) terms_.emplace(Integer(1), value);
}

SurdSum SurdSum::sqrt(const Rational& value) {
  if (value < 0) throw DomainError("square root of a negative number");
  SurdSum out;
  // sqrt(n/d) = sqrt(n d) / d
  out.add_term(value.get_num() * value.get_den(), make_rational(Integer(1), value.get_den()));
  return out;
}

std::optional<SurdSum> SurdSum::from_algebraic(const AlgebraicReal& x) {
  if (x.is_rational()) return SurdSum(*x.rational());
  if (x.degree() != 2) return std::nullopt;
  const IntPolynomial& p = x.minpoly();
  const Rational a(p.coeff(2)), b(p.coeff(1)), c(p.coeff(0));
  const Rational center = -b / (2 * a);
  const Rational disc = (b * b - 4 * a * c) / (4 * a * a);
  AlgebraicReal y = x;
  while (y.interval().contains(center)) y = y.refined(y.interval().width() / 4);
  SurdSum root = sqrt(disc);
  return y.interval().lo > center ? SurdSum(center) + root : SurdSum(center) - root;
}

void SurdSum::add_term(Integer radicand, Rational coefficient) {
  if (coefficient == 0 || radicand == 0) return;
  strip_small_squares(radicand, coefficient);
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    Integer product = it->first * radicand;
    if (mpz_perfect_square_p(product.get_mpz_t()) == 0) continue;
    // sqrt(r) = sqrt(r k) / k * sqrt(k) for the class representative k
    Integer root;
    mpz_sqrt(root.get_mpz_t(), product.get_mpz_t());
    it->second += coefficient * make_rational(root, it->first);
    if (it->second == 0) terms_.erase(it);
    return;
  }
  terms_.emplace(std::move(radicand), std::move(coefficient));
}

bool SurdSum::is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1); }

std::optional<Rational> SurdSum::rational() const {
  if (!is_rational()) return std::nullopt;
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

Interval SurdSum::enclosure(unsigned bits) const {
  Interval acc(Rational(0));
  for (const auto& [radicand, coefficient] : terms_) acc = acc + Interval(coefficient) * sqrt_bounds(radicand, bits);
  return acc;
}

int SurdSum::sign() const {
  if (terms_.empty()) return 0;
  for (unsigned bits = 64;; bits *= 2) {
    int s = enclosure(bits).certain_sign();
    if (s != 0) return s;
  }
}

double SurdSum::approx() const { return to_double(enclosure(80).midpoint()); }

std::optional<AlgebraicReal> SurdSum::to_algebraic() const {
  if (terms_.empty()) return AlgebraicReal(0);
  Rational base = 0;
  const std::pair<const Integer, Rational>* irrational = nullptr;
  for (const auto& term : terms_) {
    if (term.first == 1) base = term.second;
    else if (irrational != nullptr) return std::nullopt;
    else irrational = &term;
  }
  if (irrational == nullptr) return AlgebraicReal(base);
  AlgebraicReal root = AlgebraicReal::sqrt(Rational(irrational->first));
  return root * AlgebraicReal(irrational->second) + AlgebraicReal(base);
}

std::string SurdSum::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [radicand, coefficient] : terms_) {
    Rational mag = abs(coefficient);
    if (!first) out << (coefficient < 0 ? " - " : " + ");
    else if (coefficient < 0) out << "-";
    first = false;
    if (radicand == 1) out << reptile::to_string(mag);
    else if (mag == 1) out << "sqrt(" << radicand.get_str() << ")";
    else out << reptile::to_string(mag) << "*sqrt(" << radicand.get_str() << ")";
  }
  return out.str();
}

SurdSum operator+(const SurdSum& a, const SurdSum& b) {
  SurdSum out = a;
  for (const auto& [r, c] : b.terms_) out.add_term(r, c);
  return out;
}

SurdSum operator-(const SurdSum& a) {
  SurdSum out = a;
  for (auto& term : out.terms_) term.second = -term.second;
  return out;
}

SurdSum operator-(const SurdSum& a, const SurdSum& b) { return a + (-b); }

SurdSum operator*(const SurdSum& a, const SurdSum& b) {
  SurdSum out;
  for (const auto& [ra, ca] : a.terms_) {
    for (const auto& [rb, cb] : b.terms_) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), ra.get_mpz_t(), rb.get_mpz_t());
      out.add_term((ra / g) * (rb / g), ca * cb * g);
    }
  }
  return out;
}

}  // namespace reptile
