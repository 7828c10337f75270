#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "recipart/proof_table.hpp"
#include "recipart/search.hpp"

namespace recipart {

enum class WitnessStatus { Found, Absent, Unknown };

struct WitnessResult {
  WitnessStatus status = WitnessStatus::Unknown;
  std::optional<PartitionSet> set;
  std::string_view source;  // name of the provider that answered
};

/// Source of base-case witnesses. Implementations must be safe to call from
/// several threads at once.
class WitnessProvider {
 public:
  virtual ~WitnessProvider() = default;
  virtual WitnessResult witness(const Rational& alpha, std::uint64_t n, const ConstraintSpec& Q) const = 0;
  [[nodiscard]] virtual std::string_view name() const noexcept = 0;
};

/// Runs the search engine. Absent is a proof of non-existence; a budget hit
/// gives Unknown.
class SearchProvider final : public WitnessProvider {
 public:
  explicit SearchProvider(SearchBudget budget = {}) : budget_(budget) {}
  WitnessResult witness(const Rational& alpha, std::uint64_t n, const ConstraintSpec& Q) const override;
  [[nodiscard]] std::string_view name() const noexcept override { return "search"; }

 private:
  SearchBudget budget_;
};

/// Witnesses loaded from certificates. A miss is Unknown, never Absent.
class StoreProvider final : public WitnessProvider {
 public:
  void add(const Rational& alpha, const PartitionSet& set);
  void add(const Rational& alpha, const RangeReport& report);
  WitnessResult witness(const Rational& alpha, std::uint64_t n, const ConstraintSpec& Q) const override;
  [[nodiscard]] std::string_view name() const noexcept override { return "store"; }
  [[nodiscard]] std::size_t size() const noexcept { return sets_.size(); }

 private:
  std::map<std::pair<Rational, std::uint64_t>, PartitionSet> sets_;
};

/// Asks each provider in order; the first Found or Absent answer wins.
class ChainProvider final : public WitnessProvider {
 public:
  explicit ChainProvider(std::vector<const WitnessProvider*> chain) : chain_(std::move(chain)) {}
  WitnessResult witness(const Rational& alpha, std::uint64_t n, const ConstraintSpec& Q) const override;
  [[nodiscard]] std::string_view name() const noexcept override { return "chain"; }

 private:
  std::vector<const WitnessProvider*> chain_;
};

struct BaseWindowOptions {
  std::size_t jobs = 0;
  /// Use each alpha's own window sum(A_i) + m_i(X - 1) instead of the
  /// maximum over the whole collection.
  bool per_alpha_window = false;
  /// Alphas whose base case is established elsewhere.
  std::vector<Rational> skip;
};

/// Every n in [X, window] (restricted to n = alpha mod M' when M' is set)
/// has a witness, for each alpha of the collection's S.
struct BaseWindowReport {
  std::uint64_t X = 0;
  std::uint64_t window = 0;
  std::map<Rational, RangeReport> per_alpha;

  [[nodiscard]] bool holds() const noexcept;
};

BaseWindowReport check_base_window(const TableCollection& tables, std::uint64_t X, const WitnessProvider& provider,
                                   const BaseWindowOptions& options = {});

/// Least X in [lo, hi] whose base window is fully witnessed, or nothing.
std::optional<std::uint64_t> find_least_X(const TableCollection& tables, std::uint64_t lo, std::uint64_t hi,
                                          const WitnessProvider& provider, const BaseWindowOptions& options = {});

struct ConstructStep {
  Rational alpha;
  std::uint64_t n = 0;
  std::uint64_t row = 0;  // 1-based row index used to descend
  std::uint64_t m = 1;
};

struct ConstructResult {
  PartitionSet set = make_partition_allow_empty({});
  std::vector<ConstructStep> steps;  // descent, outermost first
  Rational base_alpha;
  std::uint64_t base_n = 0;
  std::string base_source;
};

/// Builds an alpha-partition of n with property Q by descending through the
/// tables to the base window and lifting the base witness back up.
/// Throws BelowThreshold, CongruenceViolation, MissingTable or
/// MissingBaseCertificate.
ConstructResult construct(const Rational& alpha, std::uint64_t n, const TableCollection& tables,
                          const WitnessProvider& provider, std::optional<std::uint64_t> X = std::nullopt);

}  // namespace recipart
