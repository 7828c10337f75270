#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>

#include "recipart/search.hpp"

namespace recipart {

/// Threshold N_M past which every n admits an M-free 1-partition (for
/// M = 2, 3 only the n congruent to 1 mod M' = 8, 3 are required).

enum class NmClass {
  TableEntry,    // M listed explicitly
  PrimeGe11,     // largest prime factor >= 11, not listed
  Prime7Family,  // largest prime factor 7, divisible by 35, 42, 49, 56 or 63
  Prime5Family,  // largest prime factor 5, divisible by 25, 40, 45 or 60
  Pow23Family,   // M = 2^x 3^y, divisible by 16, 27 or 36
};

std::string_view to_string(NmClass c) noexcept;

struct NmCase {
  std::uint64_t M = 0;
  NmClass classification = NmClass::TableEntry;
  std::optional<std::uint64_t> divisor_witness;
  std::uint64_t value = 78;
  bool upper_bound_only = false;
  std::optional<std::uint64_t> congruence_caveat;
};

struct NmValue {
  std::uint64_t value = 78;
  bool exact = true;
  std::optional<std::uint64_t> congruence_caveat;
};

/// The explicit (M, N_M) entries; every other M >= 2 has N_M = 78.
std::span<const std::pair<std::uint64_t, std::uint64_t>> nm_table() noexcept;

NmCase nm_classify(std::uint64_t m);
NmValue nm_value(std::uint64_t m);

/// Desk-scale re-derivation of part of an N_M claim with the search engine:
/// the largest admissible n below the threshold has no M-free 1-partition,
/// and every admissible n in [threshold, horizon] has one.
struct NmVerification {
  std::uint64_t M = 0;
  NmValue claimed;
  std::optional<std::uint64_t> failure_n;  // unset when the value is only an upper bound
  bool failure_confirmed = false;
  std::optional<RangeReport> existence;    // unset when horizon < threshold

  [[nodiscard]] bool holds() const noexcept {
    return (!failure_n || failure_confirmed) && (!existence || existence->holds());
  }
};

NmVerification nm_verify(std::uint64_t m, std::uint64_t horizon, const RangeOptions& options = {});

}  // namespace recipart
