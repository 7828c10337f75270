#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace recipart {

/// Non-negative exact fraction kept in lowest terms at all times, so equality
/// and hashing are plain comparisons of numerator and denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::uint64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::uint64_t num, std::uint64_t den);
  Rational(mpz_class num, mpz_class den);

  static Rational reciprocal(std::uint64_t a);

  /// Parses "p", "p/q" (decimal, non-negative); throws InvalidRational.
  static Rational parse(std::string_view text);

  [[nodiscard]] const mpz_class& num() const noexcept { return num_; }
  [[nodiscard]] const mpz_class& den() const noexcept { return den_; }

  [[nodiscard]] bool is_zero() const noexcept { return sgn(num_) == 0; }
  [[nodiscard]] bool is_integer() const noexcept { return den_ == 1; }

  /// Canonical "p/q", or "p" when q = 1.
  [[nodiscard]] std::string str() const;

  /// Rough value, for display and heuristics only.
  [[nodiscard]] double approx() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  /// Throws InvalidRational when the result would be negative.
  friend Rational operator-(const Rational& lhs, const Rational& rhs);
  /// Throws InvalidRational on division by zero.
  friend Rational operator/(const Rational& lhs, const Rational& rhs);

  /// lhs - rhs, or nothing when the difference is negative.
  static std::optional<Rational> checked_sub(const Rational& lhs, const Rational& rhs);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.den_ == b.den_ && a.num_ == b.num_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  [[nodiscard]] std::size_t hash() const noexcept;

 private:
  void canonicalize();

  mpz_class num_;
  mpz_class den_;
};

std::size_t hash_mpz(const mpz_class& z) noexcept;

/// mpz_class <-> uint64 helpers; to_u64 throws if the value does not fit.
mpz_class to_mpz(std::uint64_t v);
std::uint64_t to_u64(const mpz_class& z);

}  // namespace recipart

template <>
struct std::hash<recipart::Rational> {
  std::size_t operator()(const recipart::Rational& r) const noexcept { return r.hash(); }
};
