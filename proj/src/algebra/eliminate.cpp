#include "reptile/algebra/eliminate.hpp"

#include "reptile/algebra/resultant.hpp"

namespace reptile {

IntPolynomial eliminate(const GeneratedPolynomial& p) {
  // Swap roles: the bivariate polynomial has z = s and y = t.
  BiPoly f;
  std::size_t degree_t = 0;
  for (const auto& c : p.coefficients) degree_t = std::max(degree_t, c.size());
  f.terms.assign(std::max<std::size_t>(degree_t, 1), RatPoly(p.coefficients.size(), Rational(0)));
  for (std::size_t i = 0; i < p.coefficients.size(); ++i)
    for (std::size_t j = 0; j < p.coefficients[i].size(); ++j) f.terms[j][i] = p.coefficients[i][j];
  for (auto& t : f.terms) trim(t);
  if (f.degree_z() < 0) return IntPolynomial();
  return eliminate_variable(f, p.generator.minpoly()).normalized();
}

IntPolynomial eliminate(const std::vector<GeneratedCoefficient>& coefficients) {
  if (coefficients.empty()) return IntPolynomial();
  GeneratedPolynomial p{coefficients.front().generator, {}};
  for (const auto& c : coefficients) {
    if (c.generator != p.generator) throw DomainError("inconsistent coefficient field");
    p.coefficients.push_back(c.expression);
  }
  return eliminate(p);
}

Interval enclose(const RatPoly& f, const Interval& t) {
  Interval acc(Rational(0));
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * t + Interval(*it);
  return acc;
}

namespace {

RatPoly remainder(const RatPoly& a, const RatPoly& m) { return divmod(a, m).second; }

// a^{-1} mod m over Q, for a coprime to m.
RatPoly inverse_mod(const RatPoly& a, const RatPoly& m) {
  RatPoly r0 = m, r1 = remainder(a, m);
  RatPoly s0 = {}, s1 = {Rational(1)};
  while (degree(r1) > 0) {
    auto [q, r2] = divmod(r0, r1);
    RatPoly qs = multiply(q, s1);
    RatPoly s2(std::max(s0.size(), qs.size()), Rational(0));
    for (std::size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
    for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (degree(r1) < 0) throw DomainError("polynomial is not invertible modulo the minimal polynomial");
  for (auto& c : s1) c /= r1[0];
  return remainder(s1, m);
}

}  // namespace

std::vector<AlgebraicReal> genuine_roots(const GeneratedPolynomial& p, const Interval& range) {
  IntPolynomial r = eliminate(p);
  const AlgebraicReal& t = p.generator;
  std::vector<AlgebraicReal> roots = AlgebraicReal::real_roots(r, range);
  if (t.is_rational()) return roots;
  if (t.degree() > 2) throw UnsupportedDegree("root filtering supports generators of degree <= 2");
  // p(x, t) = A(x) + t B(x) after reducing every coefficient modulo minpoly(t).
  const RatPoly q = t.minpoly().to_rationals();
  RatPoly a(p.coefficients.size(), Rational(0)), b(p.coefficients.size(), Rational(0));
  for (std::size_t i = 0; i < p.coefficients.size(); ++i) {
    RatPoly c = remainder(p.coefficients[i], q);
    if (!c.empty()) a[i] = c[0];
    if (c.size() > 1) b[i] = c[1];
  }
  trim(a);
  trim(b);
  std::vector<AlgebraicReal> out;
  for (const AlgebraicReal& s : roots) {
    const RatPoly ms = s.minpoly().to_rationals();
    RatPoly bs = remainder(b, ms);
    if (degree(bs) < 0) {
      // B(s) = 0, so p(s, t) = A(s) for every conjugate of t.
      if (degree(remainder(a, ms)) < 0) out.push_back(s);
      continue;
    }
    // Genuine iff t = -A(s) / B(s); the quotient is a polynomial in s modulo its minimal polynomial.
    RatPoly quotient = remainder(multiply(a, inverse_mod(bs, ms)), ms);
    for (auto& c : quotient) c = -c;
    if (evaluate(quotient, s) == t) out.push_back(s);
  }
  return out;
}

}  // namespace reptile
