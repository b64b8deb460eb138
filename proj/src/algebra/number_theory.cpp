#include "reptile/algebra/number_theory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "reptile/algebra/rational.hpp"

namespace reptile {

std::uint64_t euler_totient(std::uint64_t n) {
  if (n == 0) throw DomainError("euler_totient requires n >= 1");
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw DomainError("divisors requires n >= 1");
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool is_perfect_cube(std::int64_t k) {
  Integer z(static_cast<long>(k));
  return mpz_root(z.get_mpz_t(), z.get_mpz_t(), 3) != 0;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

}  // namespace reptile
