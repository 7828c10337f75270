#pragma once

// Internal: exact reciprocal sums over a fixed common denominator L.
// With L = lcm(pool), 1/a becomes the integer L/a and every reciprocal sum an
// integer numerator, so the hot loops only add, subtract and compare.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>

#include "recipart/wide_uint.hpp"

namespace recipart::detail {

inline mpz_class lcm_of(std::span<const std::uint64_t> values) {
  mpz_class l = 1;
  mpz_class v;
  for (std::uint64_t a : values) {
    mpz_set_ui(v.get_mpz_t(), a);
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_mpz_t());
  }
  return l;
}

template <class Acc>
Acc acc_from_mpz(const mpz_class& z) {
  if constexpr (std::is_same_v<Acc, mpz_class>) {
    return z;
  } else {
    return Acc::from_mpz(z);
  }
}

template <class Acc>
bool acc_is_zero(const Acc& v) {
  if constexpr (std::is_same_v<Acc, mpz_class>) {
    return sgn(v) == 0;
  } else {
    return v.is_zero();
  }
}

template <class Acc>
std::uint64_t acc_mod(const Acc& v, std::uint64_t d) {
  if constexpr (std::is_same_v<Acc, mpz_class>) {
    return mpz_fdiv_ui(v.get_mpz_t(), d);
  } else {
    return v.mod(d);
  }
}

template <class Acc>
mpz_class acc_to_mpz(const Acc& v) {
  if constexpr (std::is_same_v<Acc, mpz_class>) {
    return v;
  } else {
    return v.to_mpz();
  }
}

/// A divisor of g that fits in 62 bits, built from prime powers of g taken
/// largest prime first. `primes` must contain every prime factor of g,
/// ascending. Returns 1 when g = 1.
inline std::uint64_t small_divisor(const mpz_class& g, std::span<const std::uint64_t> primes) {
  if (mpz_sizeinbase(g.get_mpz_t(), 2) <= 62) return mpz_get_ui(g.get_mpz_t());
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 62;
  std::uint64_t d = 1;
  for (auto it = primes.rbegin(); it != primes.rend(); ++it) {
    const std::uint64_t p = *it;
    if (!mpz_divisible_ui_p(g.get_mpz_t(), p)) continue;
    mpz_class rest = g;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) && d <= kLimit / p) {
      d *= p;
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    }
  }
  return d;
}

/// Calls fn.template operator()<Acc>() with the narrowest accumulator that
/// holds `bits`-bit values; falls back to mpz_class beyond 512 bits.
template <class Fn>
decltype(auto) with_accumulator(std::size_t bits, Fn&& fn) {
  if (bits < 64) return fn.template operator()<WideUint<1>>();
  if (bits < 128) return fn.template operator()<WideUint<2>>();
  if (bits < 192) return fn.template operator()<WideUint<3>>();
  if (bits < 256) return fn.template operator()<WideUint<4>>();
  if (bits < 384) return fn.template operator()<WideUint<6>>();
  if (bits < 512) return fn.template operator()<WideUint<8>>();
  return fn.template operator()<mpz_class>();
}

}  // namespace recipart::detail
