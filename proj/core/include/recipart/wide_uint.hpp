#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <cstdint>

namespace recipart {

__extension__ typedef unsigned __int128 u128;
__extension__ typedef __int128 i128;

/// Fixed-width unsigned integer of N 64-bit limbs (little-endian limb order).
/// Only what the search loops need: add, subtract, compare, hash. Callers
/// size N so that no value they form can overflow.
template <std::size_t N>
struct WideUint {
  std::array<std::uint64_t, N> limb{};

  static constexpr std::size_t bits = 64 * N;

  WideUint& operator+=(const WideUint& rhs) noexcept {
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < N; ++i) {
      const u128 t = static_cast<u128>(limb[i]) + rhs.limb[i] + carry;
      limb[i] = static_cast<std::uint64_t>(t);
      carry = static_cast<std::uint64_t>(t >> 64);
    }
    return *this;
  }

  WideUint& operator-=(const WideUint& rhs) noexcept {
    std::uint64_t borrow = 0;
    for (std::size_t i = 0; i < N; ++i) {
      const u128 t = static_cast<u128>(limb[i]) - rhs.limb[i] - borrow;
      limb[i] = static_cast<std::uint64_t>(t);
      borrow = static_cast<std::uint64_t>(t >> 64) & 1;
    }
    return *this;
  }

  friend WideUint operator+(WideUint a, const WideUint& b) noexcept { return a += b; }
  friend WideUint operator-(WideUint a, const WideUint& b) noexcept { return a -= b; }

  friend bool operator==(const WideUint& a, const WideUint& b) noexcept { return a.limb == b.limb; }

  friend bool operator<(const WideUint& a, const WideUint& b) noexcept {
    for (std::size_t i = N; i-- > 0;) {
      if (a.limb[i] != b.limb[i]) return a.limb[i] < b.limb[i];
    }
    return false;
  }
  friend bool operator>(const WideUint& a, const WideUint& b) noexcept { return b < a; }
  friend bool operator<=(const WideUint& a, const WideUint& b) noexcept { return !(b < a); }
  friend bool operator>=(const WideUint& a, const WideUint& b) noexcept { return !(a < b); }

  [[nodiscard]] bool is_zero() const noexcept {
    for (std::uint64_t l : limb) {
      if (l != 0) return false;
    }
    return true;
  }

  /// Remainder modulo a 64-bit divisor (d > 0).
  [[nodiscard]] std::uint64_t mod(std::uint64_t d) const noexcept {
    u128 r = 0;
    for (std::size_t i = N; i-- > 0;) {
      r = ((r << 64) | limb[i]) % d;
    }
    return static_cast<std::uint64_t>(r);
  }

  [[nodiscard]] std::size_t hash() const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::uint64_t l : limb) {
      h ^= l + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    h ^= h >> 31;
    h *= 0xbf58476d1ce4e5b9ULL;
    h ^= h >> 29;
    return static_cast<std::size_t>(h);
  }

  /// Precondition: 0 <= z < 2^bits.
  static WideUint from_mpz(const mpz_class& z) {
    WideUint out;
    std::size_t count = 0;
    mpz_export(out.limb.data(), &count, -1, sizeof(std::uint64_t), 0, 0, z.get_mpz_t());
    return out;
  }

  [[nodiscard]] mpz_class to_mpz() const {
    mpz_class z;
    mpz_import(z.get_mpz_t(), N, -1, sizeof(std::uint64_t), 0, 0, limb.data());
    return z;
  }
};

template <std::size_t N>
struct WideUintHash {
  std::size_t operator()(const WideUint<N>& v) const noexcept { return v.hash(); }
};

}  // namespace recipart
