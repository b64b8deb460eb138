#include "reptile/algebra/certified.hpp"

#include <mpfr.h>

#include <cmath>
#include <cstdlib>
#include <string>

namespace reptile {

namespace {

class Mpfr {
 public:
  explicit Mpfr(long bits) { mpfr_init2(value_, bits); }
  ~Mpfr() { mpfr_clear(value_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return value_; }

  Rational to_rational() {
    Integer mantissa;
    mpfr_exp_t e = mpfr_get_z_2exp(mantissa.get_mpz_t(), value_);
    Rational out(mantissa);
    if (e >= 0) mpq_mul_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
    else mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
    return out;
  }

 private:
  mpfr_t value_;
};

long bits_for(const Rational& width) {
  // log2(1 / width) plus guard bits
  double w = to_double(width);
  long bits = w > 0 ? static_cast<long>(std::ceil(-std::log2(w))) : 200;
  return std::max(64L, bits + 32);
}

}  // namespace

Rational parse_tolerance(std::string_view text) {
  auto e = text.find_first_of("eE");
  if (e == std::string_view::npos) return parse_rational(text);
  Rational mantissa = parse_rational(text.substr(0, e));
  int exponent = std::stoi(std::string(text.substr(e + 1)));
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(exponent)));
  return exponent >= 0 ? Rational(mantissa * scale) : Rational(mantissa / scale);
}

Rational refinement_floor() {
  if (const char* env = std::getenv("REPTILE_FORGE_PRECISION"); env != nullptr && *env != '\0') {
    Rational value = parse_tolerance(env);
    if (value > 0) return value;
    throw DomainError("REPTILE_FORGE_PRECISION must be positive");
  }
  return parse_tolerance("1e-30");
}

Interval pi_enclosure(long bits) {
  Mpfr lo(bits), hi(bits);
  mpfr_const_pi(lo.get(), MPFR_RNDD);
  mpfr_const_pi(hi.get(), MPFR_RNDU);
  return {lo.to_rational(), hi.to_rational()};
}

Interval arccos_enclosure(const Interval& x, long bits) {
  if (x.lo < -1 || x.hi > 1) throw DomainError("arccos argument outside [-1, 1]");
  // arccos is decreasing: arccos(hi) <= arccos(x) <= arccos(lo)
  Mpfr arg(bits), lo(bits), hi(bits);
  mpfr_set_q(arg.get(), x.hi.get_mpq_t(), MPFR_RNDU);
  mpfr_acos(lo.get(), arg.get(), MPFR_RNDD);
  mpfr_set_q(arg.get(), x.lo.get_mpq_t(), MPFR_RNDD);
  mpfr_acos(hi.get(), arg.get(), MPFR_RNDU);
  return {lo.to_rational(), hi.to_rational()};
}

namespace {

Interval clamp_unit(Interval iv) {
  if (iv.lo < -1) iv.lo = -1;
  if (iv.hi > 1) iv.hi = 1;
  return iv;
}

}  // namespace

AngleSumDecision compare_arccos_sum(const std::vector<AlgebraicReal>& cosines, const Rational& multiple) {
  for (const auto& c : cosines)
    if (c < AlgebraicReal(-1) || c > AlgebraicReal(1)) throw DomainError("cosine outside [-1, 1]");
  const Rational floor_width = refinement_floor();
  for (Rational width = make_rational(1, 10000); width >= floor_width; width /= 2) {
    const long bits = bits_for(width);
    Interval sum(Rational(0));
    for (const auto& c : cosines) sum = sum + arccos_enclosure(clamp_unit(c.refine(width)), bits);
    Interval diff = sum - Interval(multiple) * pi_enclosure(bits);
    if (int s = diff.certain_sign(); s != 0) return {s, width, diff};
  }
  throw Inconclusive("angle-sum comparison undecided at width " + to_string(floor_width));
}

Interval arccos_over_pi(const AlgebraicReal& x, const Rational& width) {
  for (Rational w = width;; w /= 4) {
    const long bits = bits_for(w) + 8;
    Interval angle = arccos_enclosure(clamp_unit(x.refine(w)), bits) / pi_enclosure(bits);
    if (angle.width() < width) return angle;
  }
}

}  // namespace reptile
