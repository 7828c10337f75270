#include "recipart/rational.hpp"

#include "recipart/errors.hpp"

namespace recipart {

mpz_class to_mpz(std::uint64_t v) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return z;
}

std::uint64_t to_u64(const mpz_class& z) {
  if (sgn(z) < 0 || mpz_sizeinbase(z.get_mpz_t(), 2) > 64) {
    throw Error(ErrorCode::InvalidRational, "integer " + z.get_str() + " does not fit in 64 bits");
  }
  std::uint64_t v = 0;
  mpz_export(&v, nullptr, 1, sizeof(v), 0, 0, z.get_mpz_t());
  return v;
}

std::size_t hash_mpz(const mpz_class& z) noexcept {
  const std::size_t limbs = mpz_size(z.get_mpz_t());
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (std::size_t i = 0; i < limbs; ++i) {
    h ^= static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), static_cast<mp_size_t>(i)));
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return h;
}

Rational::Rational(std::uint64_t value) : num_(to_mpz(value)), den_(1) {}

Rational::Rational(std::uint64_t num, std::uint64_t den) : num_(to_mpz(num)), den_(to_mpz(den)) {
  canonicalize();
}

Rational::Rational(mpz_class num, mpz_class den) : num_(std::move(num)), den_(std::move(den)) {
  canonicalize();
}

Rational Rational::reciprocal(std::uint64_t a) { return Rational(1, a); }

void Rational::canonicalize() {
  if (sgn(den_) == 0) throw Error(ErrorCode::InvalidRational, "zero denominator");
  if (sgn(den_) < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  if (sgn(num_) < 0) throw Error(ErrorCode::InvalidRational, "negative value");
  if (sgn(num_) == 0) {
    den_ = 1;
    return;
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  if (g != 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

namespace {

mpz_class parse_natural(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw Error(ErrorCode::InvalidRational, "empty number in '" + std::string(whole) + "'");
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw Error(ErrorCode::InvalidRational, "not a non-negative rational: '" + std::string(whole) + "'");
    }
  }
  return mpz_class(std::string(digits), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_natural(text, text), 1);
  mpz_class den = parse_natural(text.substr(slash + 1), text);
  if (sgn(den) == 0) throw Error(ErrorCode::InvalidRational, "zero denominator in '" + std::string(text) + "'");
  return Rational(parse_natural(text.substr(0, slash), text), std::move(den));
}

std::string Rational::str() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

double Rational::approx() const { return mpq_class(num_, den_).get_d(); }

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  canonicalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  canonicalize();
  return *this;
}

std::optional<Rational> Rational::checked_sub(const Rational& lhs, const Rational& rhs) {
  mpz_class num = lhs.num_ * rhs.den_ - rhs.num_ * lhs.den_;
  if (sgn(num) < 0) return std::nullopt;
  return Rational(std::move(num), lhs.den_ * rhs.den_);
}

Rational operator-(const Rational& lhs, const Rational& rhs) {
  auto diff = Rational::checked_sub(lhs, rhs);
  if (!diff) throw Error(ErrorCode::InvalidRational, lhs.str() + " - " + rhs.str() + " is negative");
  return *std::move(diff);
}

Rational operator/(const Rational& lhs, const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::InvalidRational, "division by zero");
  return Rational(lhs.num_ * rhs.den_, lhs.den_ * rhs.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) {
    const int c = cmp(a.num_, b.num_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  const int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::size_t Rational::hash() const noexcept { return hash_mpz(num_) * 31 + hash_mpz(den_); }

}  // namespace recipart
