#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "recipart/constraints.hpp"
#include "recipart/partition.hpp"
#include "recipart/rational.hpp"

namespace recipart {

/// One induction case: n = sum(A) + m * n', with a beta-partition B of n'
/// lifted to A ∪ mB.
struct ProofRow {
  std::uint64_t index = 1;  // 1-based
  std::uint64_t m = 1;
  Rational beta;
  PartitionSet A = make_partition_allow_empty({});
};

/// The rows for one alpha together with the ambient data shared by every
/// table of a collection: the set S, the property Q, the optional
/// obstruction modulus M' and the base threshold X.
struct ProofTable {
  Rational alpha;
  std::vector<ProofRow> rows;
  std::vector<Rational> S;
  ConstraintSpec Q;
  std::optional<std::uint64_t> M_prime;
  std::optional<std::uint64_t> X;
  /// Betas taken from an earlier, separately established level (for
  /// example the k-1 step of a nested induction). Accepted by property 1
  /// without needing a table here.
  std::vector<Rational> assumed;

  /// Checks structural invariants (alpha in S, A non-empty when m = 1,
  /// m >= 1, 1-based consecutive indices). Throws ValidationFailure.
  void validate() const;
};

/// Tables for every alpha of one S, plus a display name.
struct TableCollection {
  std::string name;
  std::vector<ProofTable> tables;

  [[nodiscard]] const ProofTable* find(const Rational& alpha) const noexcept;
  [[nodiscard]] const std::vector<Rational>& S() const;
  [[nodiscard]] const ConstraintSpec& Q() const;
  [[nodiscard]] std::optional<std::uint64_t> M_prime() const;
  [[nodiscard]] std::optional<std::uint64_t> X() const;
};

enum class PropertyStatus { Verified, Refuted, Inconclusive };
std::string_view to_string(PropertyStatus s) noexcept;

struct PropertyResult {
  PropertyStatus status = PropertyStatus::Verified;
  std::string detail;  // counterexample for refuted, unmet condition for inconclusive
};

struct PropertyReport {
  Rational alpha;
  std::array<PropertyResult, 5> properties;      // properties 1..5 at [0..4]
  std::optional<PropertyResult> congruence;      // set by check_congruence_variant

  [[nodiscard]] bool all_verified() const noexcept;
};

/// Properties 1-5 of one table on its own. Property 1 only checks
/// membership of each beta in S (or `assumed`).
PropertyReport check_table(const ProofTable& table);

/// Properties 1-5 for every table of the collection. Throws MissingTable when
/// some alpha of S, or some beta in S, has no table.
std::vector<PropertyReport> check_properties(const TableCollection& tables);

/// gcd(m_i, M') = gcd(a, M') = 1 for every row, and n' = (n - sum A_i)/m_i is
/// congruent to beta_i mod M' whenever n is congruent to alpha. Throws
/// GcdViolation naming the offending element.
PropertyResult check_congruence_variant(const ProofTable& table);

/// max over all rows of all tables of sum(A_i) + m_i (X - 1).
std::uint64_t window_bound(const TableCollection& tables, std::uint64_t X);
/// Same, restricted to one table.
std::uint64_t window_bound(const ProofTable& table, std::uint64_t X);

/// A minus E with updated totals. Throws NotASubset.
PartitionSet strip_elements(const PartitionSet& set, std::span<const std::uint64_t> elements);

/// True when b cannot be a part of any beta-partition with property Q of
/// some n' >= X: b violates Q, 1/b exceeds beta, or {b} alone is the
/// partition and b < X.
bool part_excluded(std::uint64_t b, const Rational& beta, const ConstraintSpec& Q, std::optional<std::uint64_t> X);

}  // namespace recipart
