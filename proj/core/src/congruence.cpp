#include "recipart/congruence.hpp"

#include "recipart/errors.hpp"
#include "recipart/wide_uint.hpp"
#include "recipart/number_theory.hpp"

namespace recipart {

std::optional<std::uint64_t> congruence_obstruction(std::uint64_t m) {
  if (m < 2) throw Error(ErrorCode::InvalidSpec, "M must be at least 2");
  if (m == 2) return 8;
  if (m == 3) return 3;
  return std::nullopt;
}

std::uint64_t residue_of(const Rational& alpha, std::uint64_t modulus) {
  if (modulus == 0) throw Error(ErrorCode::InvalidSpec, "modulus must be positive");
  const mpz_class mod = to_mpz(modulus);
  mpz_class num_r, den_r;
  mpz_mod(num_r.get_mpz_t(), alpha.num().get_mpz_t(), mod.get_mpz_t());
  mpz_mod(den_r.get_mpz_t(), alpha.den().get_mpz_t(), mod.get_mpz_t());
  const auto inv = mod_inverse(to_u64(den_r), modulus);
  if (!inv) {
    throw Error(ErrorCode::NonInvertibleDenominator,
                "denominator of " + alpha.str() + " is not invertible mod " + std::to_string(modulus));
  }
  return static_cast<std::uint64_t>((static_cast<u128>(to_u64(num_r)) * *inv) % modulus);
}

}  // namespace recipart
