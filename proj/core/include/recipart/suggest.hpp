#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "recipart/proof_table.hpp"

namespace recipart {

struct SuggestParams {
  std::vector<std::uint64_t> m_values{2};
  std::uint64_t pool_max = 100;      // largest element allowed in any A_i
  std::size_t max_set_size = 6;      // largest |A_i|
  std::uint64_t max_nodes = 2'000'000;
  std::optional<std::uint64_t> X = 2;  // threshold assumed for property 4
};

struct SuggestResult {
  std::vector<ProofRow> rows;
  std::uint64_t modulus = 1;                   // lcm of the row moduli
  std::vector<std::uint64_t> uncovered;        // residues mod `modulus` no row covers
  [[nodiscard]] bool covers() const noexcept { return uncovered.empty(); }
};

/// Searches for proof rows for alpha. Every returned row satisfies properties
/// 1 and 3 and the sufficient conditions for 4 and 5; property 2 is reported
/// through `uncovered`. For each m the row with the smallest sum(A) is kept
/// per residue class. The m = 1, A = {1}, beta = alpha - 1 rule is tried
/// first. Throws NoCandidateFound.
SuggestResult suggest_rows(const Rational& alpha, const std::vector<Rational>& S, const ConstraintSpec& Q,
                           const SuggestParams& params = {});

}  // namespace recipart
