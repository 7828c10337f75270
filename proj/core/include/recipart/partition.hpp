#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "recipart/rational.hpp"

namespace recipart {

/// A set of distinct positive integers with its sum and reciprocal sum.
///
/// Immutable once built; every constructor path goes through make_partition,
/// so `parts()` is strictly increasing and the cached totals are exact.
class PartitionSet {
 public:
  [[nodiscard]] std::span<const std::uint64_t> parts() const noexcept { return parts_; }
  [[nodiscard]] std::uint64_t n() const noexcept { return n_; }
  [[nodiscard]] const Rational& alpha() const noexcept { return alpha_; }
  [[nodiscard]] std::size_t size() const noexcept { return parts_.size(); }
  [[nodiscard]] bool contains(std::uint64_t a) const noexcept;

  /// Ascending comma-separated part list, e.g. "2,3,6".
  [[nodiscard]] std::string str() const;

  friend bool operator==(const PartitionSet& a, const PartitionSet& b) { return a.parts_ == b.parts_; }
  /// Lexicographic on the ascending part list.
  friend auto operator<=>(const PartitionSet& a, const PartitionSet& b) { return a.parts_ <=> b.parts_; }

 private:
  friend PartitionSet make_partition(std::vector<std::uint64_t> parts);
  friend PartitionSet make_partition_allow_empty(std::vector<std::uint64_t> parts);

  std::vector<std::uint64_t> parts_;
  std::uint64_t n_ = 0;
  Rational alpha_;
};

/// Validates and canonicalizes (sorts) a part list. Throws DuplicatePart,
/// NonPositive, or ValidationFailure for an empty list.
PartitionSet make_partition(std::vector<std::uint64_t> parts);

/// As make_partition but accepts the empty set (n = 0, alpha = 0); proof
/// table rows use it for A_i = {}.
PartitionSet make_partition_allow_empty(std::vector<std::uint64_t> parts);

/// {m*a : a in A}.
PartitionSet scale_set(std::uint64_t m, const PartitionSet& set);

/// Exact sum of 1/a over `parts`.
Rational reciprocal_sum(std::span<const std::uint64_t> parts);

}  // namespace recipart
