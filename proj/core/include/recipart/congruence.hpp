#pragma once

#include <cstdint>
#include <optional>

#include "recipart/rational.hpp"

namespace recipart {

/// Modulus M' forced by the self-inverse obstruction: an M-free partition
/// (M = 2 or 3) has all parts coprime to M', so its sum is congruent to its
/// reciprocal sum mod M'. Returns 8 for M = 2, 3 for M = 3, nothing else.
std::optional<std::uint64_t> congruence_obstruction(std::uint64_t m);

/// alpha mod `modulus`, read as numerator * denominator^-1.
/// Throws NonInvertibleDenominator when gcd(denominator, modulus) != 1.
std::uint64_t residue_of(const Rational& alpha, std::uint64_t modulus);

}  // namespace recipart
