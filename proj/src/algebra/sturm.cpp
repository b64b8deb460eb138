#include "reptile/algebra/sturm.hpp"

#include <algorithm>

namespace reptile {

SturmSequence::SturmSequence(const IntPolynomial& p) {
  if (p.is_zero()) throw DomainError("undefined root set");
  chain_.push_back(p.primitive_part());
  if (p.degree() < 1) return;
  chain_.push_back(p.derivative().primitive_part());
  while (chain_.back().degree() > 0) {
    IntPolynomial r = positive_remainder(chain_[chain_.size() - 2], chain_.back());
    if (r.is_zero()) break;
    chain_.push_back(-r);
  }
}

int SturmSequence::variations(const Rational& x) const {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain_) {
    int s = q.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }

Rational cauchy_bound(const IntPolynomial& p) {
  if (p.degree() < 1) return Rational(1);
  Rational mx = 0;
  const Integer lead = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) mx = std::max(mx, Rational(abs(p.coeff(i)), lead));
  mx.canonicalize();
  return mx + 1;
}

namespace {

// Candidate split points strictly inside (a, b), tried in order until one is not a root.
Rational split_point(const IntPolynomial& q, const Rational& a, const Rational& b) {
  static const long kFractions[][2] = {{1, 2}, {1, 3}, {2, 3}, {2, 5}, {3, 5}, {3, 7}, {4, 7}, {5, 11}, {6, 11}};
  for (const auto& f : kFractions) {
    Rational m = a + (b - a) * make_rational(f[0], f[1]);
    if (q.sign_at(m) != 0) return m;
  }
  // A polynomial has finitely many roots, so a denser scan always succeeds.
  for (long den = 13;; den += 2) {
    for (long num = 1; num < den; ++num) {
      Rational m = a + (b - a) * make_rational(num, den);
      if (q.sign_at(m) != 0) return m;
    }
  }
}

}  // namespace

int count_roots_open(const IntPolynomial& p, const Rational& a, const Rational& b) {
  if (a >= b) return 0;
  IntPolynomial q = squarefree_part(p);
  SturmSequence seq(q);
  // roots in (a, b] minus b itself when b is a root
  int n = seq.count(a, b);
  if (q.sign_at(b) == 0) --n;
  return n;
}

std::vector<Interval> sturm_isolate(const IntPolynomial& p, const std::optional<Interval>& range) {
  if (p.is_zero()) throw DomainError("undefined root set");
  std::vector<Interval> out;
  if (p.degree() < 1) return out;
  IntPolynomial q = squarefree_part(p);
  SturmSequence seq(q);
  Rational bound = cauchy_bound(q);

  struct Pending {
    Rational a, b;
    int n;
  };
  std::vector<Pending> stack;
  int total = seq.count(-bound, bound);
  if (total > 0) stack.push_back({-bound, bound, total});
  std::vector<Interval> isolated;
  while (!stack.empty()) {
    Pending cur = stack.back();
    stack.pop_back();
    if (cur.n == 1) {
      isolated.emplace_back(cur.a, cur.b);
      continue;
    }
    Rational m = split_point(q, cur.a, cur.b);
    int left = seq.count(cur.a, m);
    if (left > 0) stack.push_back({cur.a, m, left});
    if (cur.n - left > 0) stack.push_back({m, cur.b, cur.n - left});
  }
  std::sort(isolated.begin(), isolated.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });

  for (Interval iv : isolated) {
    if (range) {
      const Rational& lo = range->lo;
      const Rational& hi = range->hi;
      if (iv.hi <= lo || iv.lo >= hi) continue;
      if (iv.lo < lo) {  // lo inside (iv.lo, iv.hi)
        int s = q.sign_at(lo);
        if (s == 0) continue;  // the root is lo itself, excluded from the open range
        if (s == q.sign_at(iv.lo)) iv.lo = lo;  // root lies right of lo
        else continue;
      }
      if (iv.hi > hi) {
        int s = q.sign_at(hi);
        if (s == 0) continue;
        if (s == q.sign_at(iv.hi)) iv.hi = hi;
        else continue;
      }
    }
    out.push_back(iv);
  }
  return out;
}

Interval bisect_root(const IntPolynomial& p, Interval iv, const Rational& width) {
  if (iv.is_point()) return iv;
  int slo = p.sign_at(iv.lo);
  if (slo == 0) return Interval(iv.lo);
  if (p.sign_at(iv.hi) == 0) return Interval(iv.hi);
  while (iv.width() >= width) {
    Rational m = iv.midpoint();
    int sm = p.sign_at(m);
    if (sm == 0) return Interval(m);
    if (sm == slo) iv.lo = m;
    else iv.hi = m;
  }
  return iv;
}

}  // namespace reptile
