#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "recipart/partition.hpp"

namespace recipart {

/// Declarative property Q on the parts of a partition. Default-constructed
/// means "no constraint": plain alpha-partitions.
struct ConstraintSpec {
  /// No part may be divisible by any of these (each >= 2).
  std::vector<std::uint64_t> m_free;
  /// When set, every prime factor of every part must be listed here.
  std::optional<std::vector<std::uint64_t>> allowed_primes;
  /// Parts that may not appear.
  std::vector<std::uint64_t> forbidden;
  std::uint64_t min_part = 1;
  std::optional<std::uint64_t> max_part;

  /// Sorts and dedups the lists, then checks the field invariants.
  /// Throws InvalidSpec.
  [[nodiscard]] ConstraintSpec normalized() const;

  /// Whether a single part is allowed.
  [[nodiscard]] bool admits(std::uint64_t part) const noexcept;

  [[nodiscard]] bool is_unconstrained() const noexcept;

  /// Short human-readable summary, e.g. "m-free{7} forbid{1,39}".
  [[nodiscard]] std::string describe() const;

  friend bool operator==(const ConstraintSpec&, const ConstraintSpec&) = default;
};

/// True iff every part passes every active constraint.
bool satisfies(const PartitionSet& set, const ConstraintSpec& spec) noexcept;

}  // namespace recipart
