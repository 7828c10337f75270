#include "recipart/number_theory.hpp"

#include <utility>

#include "recipart/wide_uint.hpp"

namespace recipart {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d <= n / d; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t largest_prime_factor(std::uint64_t n) {
  const auto f = prime_factors(n);
  return f.empty() ? 1 : f.back();
}

bool is_smooth_over(std::uint64_t n, std::span<const std::uint64_t> primes) noexcept {
  if (n == 0) return false;
  for (std::uint64_t p : primes) {
    while (n % p == 0) n /= p;
    if (n == 1) return true;
  }
  return n == 1;
}

std::optional<std::uint64_t> mod_inverse(std::uint64_t a, std::uint64_t m) noexcept {
  if (m == 1) return 0;
  // extended Euclid on signed 128-bit to stay clear of overflow
  i128 old_r = static_cast<i128>(a % m), r = m;
  i128 old_s = 1, s = 0;
  while (r != 0) {
    const i128 q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) return std::nullopt;
  i128 inv = old_s % static_cast<i128>(m);
  if (inv < 0) inv += m;
  return static_cast<std::uint64_t>(inv);
}

}  // namespace recipart
