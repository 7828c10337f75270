#include "recipart/nm.hpp"

#include <algorithm>
#include <array>

#include "recipart/congruence.hpp"
#include "recipart/errors.hpp"
#include "recipart/number_theory.hpp"

namespace recipart {

namespace {

constexpr std::array<std::pair<std::uint64_t, std::uint64_t>, 22> kTable{{
    {2, 737},  {3, 154}, {4, 155},  {5, 126},  {6, 183},  {7, 97},   {8, 101},  {9, 91},
    {10, 108}, {11, 92}, {12, 98},  {14, 81},  {15, 108}, {16, 78},  {18, 91},  {20, 106},
    {21, 81},  {22, 92}, {24, 80},  {28, 81},  {30, 108}, {33, 92},
}};

constexpr std::uint64_t kDefault = 78;

std::optional<std::uint64_t> first_divisor(std::uint64_t m, std::span<const std::uint64_t> candidates) {
  for (std::uint64_t d : candidates) {
    if (m % d == 0) return d;
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(NmClass c) noexcept {
  switch (c) {
    case NmClass::TableEntry: return "table-entry";
    case NmClass::PrimeGe11: return "prime-ge-11";
    case NmClass::Prime7Family: return "prime-7-family";
    case NmClass::Prime5Family: return "prime-5-family";
    case NmClass::Pow23Family: return "pow23-family";
  }
  return "unknown";
}

std::span<const std::pair<std::uint64_t, std::uint64_t>> nm_table() noexcept { return kTable; }

NmCase nm_classify(std::uint64_t m) {
  if (m < 2) throw Error(ErrorCode::InvalidSpec, "M must be at least 2");
  NmCase out;
  out.M = m;
  out.congruence_caveat = congruence_obstruction(m);
  out.upper_bound_only = m == 2;

  const auto hit = std::find_if(kTable.begin(), kTable.end(), [m](const auto& e) { return e.first == m; });
  if (hit != kTable.end()) {
    out.classification = NmClass::TableEntry;
    out.value = hit->second;
    return out;
  }

  out.value = kDefault;
  const std::uint64_t p = largest_prime_factor(m);
  static constexpr std::array<std::uint64_t, 5> k7{35, 42, 49, 56, 63};
  static constexpr std::array<std::uint64_t, 4> k5{25, 40, 45, 60};
  static constexpr std::array<std::uint64_t, 3> k23{16, 27, 36};
  if (p >= 11) {
    out.classification = NmClass::PrimeGe11;
  } else if (p == 7) {
    out.classification = NmClass::Prime7Family;
    out.divisor_witness = first_divisor(m, k7);
  } else if (p == 5) {
    out.classification = NmClass::Prime5Family;
    out.divisor_witness = first_divisor(m, k5);
  } else {
    out.classification = NmClass::Pow23Family;
    out.divisor_witness = first_divisor(m, k23);
  }
  if (p < 11 && !out.divisor_witness) {
    // cannot happen for unlisted M; the covering-divisor lemmas are exhaustive
    throw Error(ErrorCode::ValidationFailure, "no covering divisor for M=" + std::to_string(m));
  }
  return out;
}

NmValue nm_value(std::uint64_t m) {
  const NmCase c = nm_classify(m);
  return NmValue{c.value, !c.upper_bound_only, c.congruence_caveat};
}

NmVerification nm_verify(std::uint64_t m, std::uint64_t horizon, const RangeOptions& options) {
  NmVerification out;
  out.M = m;
  out.claimed = nm_value(m);
  ConstraintSpec spec;
  spec.m_free = {m};

  const auto admissible = [&](std::uint64_t n) {
    return !out.claimed.congruence_caveat || n % *out.claimed.congruence_caveat == 1;
  };

  if (out.claimed.exact) {
    for (std::uint64_t n = out.claimed.value - 1; n >= 1; --n) {
      if (admissible(n)) {
        out.failure_n = n;
        break;
      }
    }
    if (out.failure_n) {
      out.failure_confirmed = !find_one(*out.failure_n, Rational(1), spec, options.budget).has_value();
    }
  }

  if (horizon >= out.claimed.value) {
    std::optional<ResidueFilter> filter;
    if (out.claimed.congruence_caveat) filter = ResidueFilter{*out.claimed.congruence_caveat, 1};
    out.existence = verify_range(Rational(1), spec, out.claimed.value, horizon, filter, options);
  }
  return out;
}

}  // namespace recipart
