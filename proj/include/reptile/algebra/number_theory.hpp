#pragma once

#include <cstdint>
#include <vector>

namespace reptile {

/// Count of 1 <= j <= n with gcd(j, n) = 1. Throws DomainError for n = 0.
std::uint64_t euler_totient(std::uint64_t n);

/// Positive divisors of n >= 1 in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

bool is_perfect_cube(std::int64_t k);

std::int64_t gcd64(std::int64_t a, std::int64_t b);

}  // namespace reptile
