#include "reptile/algebra/golden.hpp"

#include <sstream>

namespace reptile {

int GoldenNumber::sign() const {
  // a + b phi = (2a + b + b sqrt5) / 2
  const Rational p = 2 * a + b;
  const int sp = reptile::sign(p);
  const int sq = reptile::sign(b);
  if (sp == sq) return sp;
  if (sp == 0) return sq;
  if (sq == 0) return sp;
  // Opposite signs: compare p^2 with 5 b^2.
  int c = cmp(p * p, 5 * b * b);
  return c > 0 ? sp : c < 0 ? sq : 0;
}

GoldenNumber GoldenNumber::inverse() const {
  // (a + b phi)(a + b - b phi) = a^2 + ab - b^2
  const Rational norm = a * a + a * b - b * b;
  if (norm == 0) throw DomainError("division by zero in Q(phi)");
  return {(a + b) / norm, -b / norm};
}

std::string GoldenNumber::to_string() const {
  if (b == 0) return reptile::to_string(a);
  std::string phi_part = (b == 1 ? "" : b == -1 ? "-" : reptile::to_string(b) + "*") + std::string("phi");
  if (a == 0) return phi_part;
  return reptile::to_string(a) + (b > 0 ? " + " : " ") + phi_part;
}

GoldenNumber operator+(const GoldenNumber& x, const GoldenNumber& y) { return {x.a + y.a, x.b + y.b}; }
GoldenNumber operator-(const GoldenNumber& x, const GoldenNumber& y) { return {x.a - y.a, x.b - y.b}; }
GoldenNumber operator-(const GoldenNumber& x) { return {-x.a, -x.b}; }
GoldenNumber operator*(const GoldenNumber& x, const GoldenNumber& y) {
  return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
}
GoldenNumber operator/(const GoldenNumber& x, const GoldenNumber& y) { return x * y.inverse(); }

GoldenPoly::GoldenPoly(const GoldenNumber& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

GoldenPoly GoldenPoly::var(Var v) {
  GoldenPoly p;
  Monomial m{};
  m[v] = 1;
  p.terms_.emplace(m, GoldenNumber(Rational(1)));
  return p;
}

void GoldenPoly::add(const Monomial& m, const GoldenNumber& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

int GoldenPoly::degree(Var v) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
  return d;
}

GoldenPoly GoldenPoly::substitute(Var v, const GoldenPoly& value) const {
  GoldenPoly out;
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    rest[v] = 0;
    GoldenPoly term;
    term.terms_.emplace(rest, c);
    out = out + term * pow(value, m[v]);
  }
  return out;
}

GoldenNumber GoldenPoly::evaluate(const std::array<GoldenNumber, kVars>& point) const {
  GoldenNumber acc;
  for (const auto& [m, c] : terms_) {
    GoldenNumber term = c;
    for (int v = 0; v < kVars; ++v)
      for (int e = 0; e < m[static_cast<std::size_t>(v)]; ++e) term = term * point[static_cast<std::size_t>(v)];
    acc = acc + term;
  }
  return acc;
}

bool GoldenPoly::is_rational() const {
  for (const auto& [m, c] : terms_)
    if (c.b != 0) return false;
  return true;
}

std::string GoldenPoly::to_string() const {
  if (terms_.empty()) return "0";
  static const char* names[kVars] = {"s", "t", "u", "lambda"};
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!first) out << " + ";
    first = false;
    out << "(" << c.to_string() << ")";
    for (int v = 0; v < kVars; ++v) {
      int e = m[static_cast<std::size_t>(v)];
      if (e == 0) continue;
      out << "*" << names[v];
      if (e > 1) out << "^" << e;
    }
  }
  return out.str();
}

GoldenPoly operator+(const GoldenPoly& x, const GoldenPoly& y) {
  GoldenPoly out = x;
  for (const auto& [m, c] : y.terms_) out.add(m, c);
  return out;
}

GoldenPoly operator-(const GoldenPoly& x) {
  GoldenPoly out;
  for (const auto& [m, c] : x.terms_) out.terms_.emplace(m, -c);
  return out;
}

GoldenPoly operator-(const GoldenPoly& x, const GoldenPoly& y) { return x + (-y); }

GoldenPoly operator*(const GoldenPoly& x, const GoldenPoly& y) {
  GoldenPoly out;
  for (const auto& [mx, cx] : x.terms_) {
    for (const auto& [my, cy] : y.terms_) {
      GoldenPoly::Monomial m;
      for (std::size_t v = 0; v < m.size(); ++v) m[v] = mx[v] + my[v];
      out.add(m, cx * cy);
    }
  }
  return out;
}

GoldenPoly pow(const GoldenPoly& x, int n) {
  GoldenPoly out(1L);
  for (int i = 0; i < n; ++i) out = out * x;
  return out;
}

}  // namespace reptile
