#include "reptile/algebra/rational.hpp"

#include <algorithm>
#include <cctype>

namespace reptile {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(long num, long den) { return make_rational(Integer(num), Integer(den)); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

Integer parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  text = trim(text);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return make_rational(parse_integer(trim(text.substr(0, slash))), parse_integer(trim(text.substr(slash + 1))));
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole.remove_prefix(1);
    if (whole.empty()) whole = "0";
    if (frac.empty() || !is_integer_literal(frac) || frac[0] == '-' || frac[0] == '+')
      throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Rational value = make_rational(parse_integer(whole) * scale + parse_integer(frac), scale);
    return negative ? Rational(-value) : value;
  }
  return Rational(parse_integer(text));
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

double to_double(const Rational& value) { return value.get_d(); }

Integer floor(const Rational& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& value) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }
int sign(const Rational& value) { return sgn(value); }
int sign(const Integer& value) { return sgn(value); }

Rational simplest_between(const Rational& lo_in, const Rational& hi_in) {
  if (lo_in > hi_in) throw std::invalid_argument("simplest_between: empty interval");
  if (lo_in <= 0 && hi_in >= 0) return Rational(0);
  if (hi_in < 0) return -simplest_between(-hi_in, -lo_in);
  // Continued-fraction descent on 0 < lo <= hi.
  Rational lo = lo_in;
  Rational hi = hi_in;
  Integer fl = reptile::floor(lo);
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  // lo and hi share the integer part fl; recurse on reciprocals of the fractional parts.
  Rational inner = simplest_between(1 / (hi - fl), 1 / (lo - fl));
  return Rational(fl) + 1 / inner;
}

Interval::Interval(Rational point) : lo(point), hi(std::move(point)) {}

Interval::Interval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (lo > hi) throw std::invalid_argument("interval with lo > hi");
}

int Interval::certain_sign() const {
  if (lo > 0) return 1;
  if (hi < 0) return -1;
  return 0;
}

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  auto [mn, mx] = std::minmax_element(std::begin(p), std::end(p));
  return {*mn, *mx};
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw DomainError("interval division by an interval containing zero");
  return a * Interval(1 / b.hi, 1 / b.lo);
}

Interval hull(const Interval& a, const Interval& b) { return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)}; }

bool disjoint(const Interval& a, const Interval& b) { return a.hi < b.lo || b.hi < a.lo; }

std::string to_string(const Interval& value) { return "[" + to_string(value.lo) + ", " + to_string(value.hi) + "]"; }

}  // namespace reptile
