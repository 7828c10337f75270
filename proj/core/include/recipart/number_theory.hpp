#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace recipart {

bool is_prime(std::uint64_t n) noexcept;

/// Distinct prime factors in ascending order (trial division).
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

std::uint64_t largest_prime_factor(std::uint64_t n);

/// True when every prime factor of n lies in `primes` (sorted ascending).
bool is_smooth_over(std::uint64_t n, std::span<const std::uint64_t> primes) noexcept;

/// Inverse of a modulo m, if gcd(a, m) = 1.
std::optional<std::uint64_t> mod_inverse(std::uint64_t a, std::uint64_t m) noexcept;

}  // namespace recipart
