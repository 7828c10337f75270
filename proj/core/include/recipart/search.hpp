#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "recipart/constraints.hpp"
#include "recipart/partition.hpp"
#include "recipart/rational.hpp"

namespace recipart {

/// Optional caps on a search. Hitting a cap never yields "absent": the
/// search reports BudgetExhausted instead.
struct SearchBudget {
  std::optional<std::uint64_t> max_nodes;
  std::optional<std::uint64_t> max_solutions;
};

/// Restricts a range to n with n mod modulus == residue.
struct ResidueFilter {
  std::uint64_t modulus = 1;
  std::uint64_t residue = 0;

  [[nodiscard]] bool accepts(std::uint64_t n) const noexcept { return n % modulus == residue; }
  friend bool operator==(const ResidueFilter&, const ResidueFilter&) = default;
};

/// Outcome of checking every filtered n in [lo, hi]. Each such n lands in
/// exactly one of: witnesses, failures (proven absent), unknown (budget hit).
struct RangeReport {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::optional<ResidueFilter> residue_filter;
  std::vector<std::uint64_t> failures;
  std::vector<std::uint64_t> unknown;
  std::map<std::uint64_t, PartitionSet> witnesses;

  /// The claim "a partition exists for every filtered n" is proven.
  [[nodiscard]] bool holds() const noexcept { return failures.empty() && unknown.empty(); }
};

struct EnumerationResult {
  std::vector<PartitionSet> solutions;  // ascending lexicographic order
  bool complete = true;                 // false when a cap fired
  std::uint64_t nodes = 0;
};

/// Integers in [min_part, min(n, max_part)] admitted by the spec, ascending.
std::vector<std::uint64_t> candidate_pool(std::uint64_t n, const ConstraintSpec& spec);

/// Exact search over a given ascending candidate pool. Calls `visit` with the
/// ascending part list of every subset summing to n with reciprocal sum
/// alpha; a false return stops the search. Returns false if the node cap
/// fired before the search finished.
bool search_pool(std::span<const std::uint64_t> pool, std::uint64_t n, const Rational& alpha,
                 std::optional<std::uint64_t> max_nodes,
                 const std::function<bool(std::span<const std::uint64_t>)>& visit,
                 std::uint64_t* nodes_out = nullptr);

/// Any alpha-partition of n satisfying spec, or nothing when none exists.
/// Tries a few small-prime sub-pools before the full pool; only the full
/// pool can prove absence. Throws BudgetExhausted if a cap fires.
std::optional<PartitionSet> find_one(std::uint64_t n, const Rational& alpha, const ConstraintSpec& spec,
                                     const SearchBudget& budget = {});

/// All qualifying partitions in lexicographic order, stopping at caps.
EnumerationResult enumerate_bounded(std::uint64_t n, const Rational& alpha, const ConstraintSpec& spec,
                                    const SearchBudget& budget = {});

/// As enumerate_bounded, but throws BudgetExhausted unless complete.
std::vector<PartitionSet> enumerate(std::uint64_t n, const Rational& alpha, const ConstraintSpec& spec,
                                    const SearchBudget& budget = {});

/// Number of qualifying partitions without materializing them.
std::uint64_t count_partitions(std::uint64_t n, const Rational& alpha, const ConstraintSpec& spec,
                               const SearchBudget& budget = {});

struct RangeOptions {
  std::size_t jobs = 0;  // 0 = available parallelism
  SearchBudget budget;   // per n
};

RangeReport verify_range(const Rational& alpha, const ConstraintSpec& spec, std::uint64_t lo, std::uint64_t hi,
                         std::optional<ResidueFilter> residue_filter = std::nullopt,
                         const RangeOptions& options = {});

}  // namespace recipart
