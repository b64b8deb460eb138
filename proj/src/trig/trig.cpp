#include "reptile/trig/trig.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "reptile/algebra/factor.hpp"
#include "reptile/algebra/number_theory.hpp"
#include "reptile/algebra/sturm.hpp"

namespace reptile {

RationalAngle::RationalAngle(std::int64_t p, std::int64_t q) {
  if (q == 0) throw DomainError("angle with zero denominator");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  std::int64_t g = std::gcd(p, q);
  p_ = p / g;
  q_ = q / g;
}

RationalAngle RationalAngle::from_fraction(const Rational& f) {
  if (!f.get_num().fits_slong_p() || !f.get_den().fits_slong_p()) throw DomainError("angle out of range");
  return {f.get_num().get_si(), f.get_den().get_si()};
}

RationalAngle RationalAngle::turn(std::int64_t m, std::int64_t n) { return {2 * m, n}; }

RationalAngle RationalAngle::canonical() const {
  // Reduce modulo 2 pi, then reflect (pi, 2 pi) onto (0, pi).
  std::int64_t two_q = 2 * q_;
  std::int64_t p = ((p_ % two_q) + two_q) % two_q;
  if (p > q_) p = two_q - p;
  return {p, q_};
}

std::int64_t RationalAngle::turn_denominator() const {
  // (p/q) pi = 2 pi * p / (2q)
  std::int64_t m = p_, n = 2 * q_;
  return n / std::gcd(m, n);
}

double RationalAngle::degrees() const { return 180.0 * static_cast<double>(p_) / static_cast<double>(q_); }

std::string RationalAngle::to_string() const {
  if (p_ == 0) return "0";
  std::string num = p_ == 1 ? "pi" : p_ == -1 ? "-pi" : std::to_string(p_) + "pi";
  return q_ == 1 ? num : num + "/" + std::to_string(q_);
}

std::strong_ordering operator<=>(const RationalAngle& a, const RationalAngle& b) {
  return a.p() * b.q() <=> b.p() * a.q();
}

RationalAngle operator+(const RationalAngle& a, const RationalAngle& b) {
  return {a.p() * b.q() + b.p() * a.q(), a.q() * b.q()};
}
RationalAngle operator-(const RationalAngle& a, const RationalAngle& b) {
  return {a.p() * b.q() - b.p() * a.q(), a.q() * b.q()};
}
RationalAngle operator*(std::int64_t k, const RationalAngle& a) { return {k * a.p(), a.q()}; }

IntPolynomial cyclotomic(std::int64_t n) {
  if (n < 1) throw DomainError("cyclotomic index must be positive");
  IntPolynomial p = IntPolynomial::monomial(static_cast<int>(n)) - IntPolynomial{1};
  for (std::uint64_t d : divisors(static_cast<std::uint64_t>(n))) {
    if (static_cast<std::int64_t>(d) == n) continue;
    p = *exact_quotient(p, cyclotomic(static_cast<std::int64_t>(d)));
  }
  return p.normalized();
}

IntPolynomial cosine_minpoly(std::int64_t n) {
  if (n == 1) return IntPolynomial{-1, 1};
  if (n == 2) return IntPolynomial{1, 1};
  // Phi_n is palindromic of degree 2k: Phi_n(x) / x^k = c_k + sum_j c_{k+j} (x^j + x^-j),
  // and x^j + x^-j = D_j(x + 1/x) with D_0 = 2, D_1 = y, D_{j+1} = y D_j - D_{j-1}.
  const IntPolynomial phi = cyclotomic(n);
  const int k = phi.degree() / 2;
  const IntPolynomial y = IntPolynomial::monomial(1);
  IntPolynomial previous{2};
  IntPolynomial current = y;
  IntPolynomial psi(std::vector<Integer>{phi.coeff(k)});
  for (int j = 1; j <= k; ++j) {
    psi = psi + phi.coeff(k + j) * current;
    IntPolynomial next = y * current - previous;
    previous = current;
    current = next;
  }
  // y = 2 cos: roots scaled by 1/2
  return psi.scale_roots(make_rational(1, 2));
}

AlgebraicReal cosine_of(const RationalAngle& angle) {
  const RationalAngle a = angle.canonical();
  // a = 2 pi m / n with 0 <= m <= n/2
  const std::int64_t n = a.turn_denominator();
  const std::int64_t m = a.p() * n / (2 * a.q());
  const IntPolynomial p = cosine_minpoly(n);
  if (p.degree() == 1) return AlgebraicReal(make_rational(-p.coeff(0), p.coeff(1)));
  // Roots cos(2 pi j / n), j coprime to n in (0, n/2), increase as j decreases.
  int index = 0;
  for (std::int64_t j = m + 1; 2 * j < n; ++j)
    if (std::gcd(j, n) == 1) ++index;
  const std::vector<Interval> roots = sturm_isolate(p);
  const Interval& iv = roots.at(static_cast<std::size_t>(index));
  if (iv.is_point()) return AlgebraicReal(iv.lo);
  return AlgebraicReal::from_minpoly(p, iv);
}

int cosine_degree(const RationalAngle& angle) {
  const std::int64_t n = angle.turn_denominator();
  if (n <= 2) return 1;
  return static_cast<int>(euler_totient(static_cast<std::uint64_t>(n)) / 2);
}

namespace {

CosineCatalog build_catalog(int degree) {
  CosineCatalog out;
  out.degree = degree;
  const std::int64_t bound = 2 * (2 * degree) * (2 * degree);
  for (std::int64_t n = 1; n <= bound; ++n) {
    const std::uint64_t phi = euler_totient(static_cast<std::uint64_t>(n));
    const int d = n <= 2 ? 1 : static_cast<int>(phi / 2);
    if (d != degree) continue;
    for (std::int64_t m = 0; 2 * m <= n; ++m) {
      if (std::gcd(m, n) != 1) continue;
      RationalAngle angle = RationalAngle::turn(m, n);
      AlgebraicReal c = cosine_of(angle);
      bool duplicate = false;
      for (const auto& e : out.entries) duplicate = duplicate || e.cosine == c;
      if (!duplicate) out.entries.push_back({angle, c});
    }
  }
  std::sort(out.entries.begin(), out.entries.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) { return a.cosine < b.cosine; });
  return out;
}

}  // namespace

const CosineCatalog& catalog(int degree) {
  if (degree < 1 || degree > kMaxFactorDegree) throw DomainError("catalog degree must be in [1, 8]");
  static std::mutex mutex;
  static std::map<int, CosineCatalog> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(degree);
  if (it == cache.end()) it = cache.emplace(degree, build_catalog(degree)).first;
  return it->second;
}

std::optional<RationalAngle> match_rational_angle(const AlgebraicReal& x) {
  if (x < AlgebraicReal(-1) || x > AlgebraicReal(1)) throw DomainError("cosine value outside [-1, 1]");
  if (x.degree() > kMaxFactorDegree) return std::nullopt;
  for (const auto& e : catalog(x.degree()).entries) {
    if (e.cosine.minpoly() == x.minpoly() && e.cosine == x) return e.angle;
  }
  return std::nullopt;
}

}  // namespace reptile
