#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "recipart/constraints.hpp"
#include "recipart/partition.hpp"
#include "recipart/proof_table.hpp"
#include "recipart/prover.hpp"
#include "recipart/search.hpp"

namespace recipart {

inline constexpr std::size_t kShardCapacity = 10'000;

struct PartitionCert {
  PartitionSet set;
  ConstraintSpec spec;
};

/// Index of a verified range: which n are covered and where the witnesses live.
struct RangeManifest {
  Rational alpha;
  ConstraintSpec spec;
  std::optional<ResidueFilter> residue;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;  // sorted, disjoint, inclusive
  std::vector<std::string> shards;                                 // file names relative to the manifest
};

/// A manifest with its witnesses in memory. Written as the manifest file plus
/// shard files of at most kShardCapacity witnesses each.
struct RangeCert {
  RangeManifest manifest;
  std::map<std::uint64_t, PartitionSet> witnesses;
};

using Certificate = std::variant<PartitionCert, ProofTable, TableCollection, RangeCert>;

enum class CertKind { Partition, ProofTable, ProofTables, Range, RangeShard };
std::string_view to_string(CertKind k) noexcept;

struct CertReport {
  CertKind kind = CertKind::Partition;
  std::size_t items = 0;  // parts, rows, tables or witnesses checked
  std::string summary;
};

/// Hex SHA-256 of the canonical JSON of the normalized spec.
std::string constraint_digest(const ConstraintSpec& spec);

/// Canonical JSON text: sorted keys, rationals as "p/q", integers above 2^53
/// as decimal strings. For a RangeCert only the manifest is serialized.
std::string serialize(const Certificate& cert);

/// Parses any certificate kind except shards. A range manifest comes back
/// with no witnesses loaded. Throws CorruptFile.
Certificate parse_certificate(std::string_view text);

/// Validates the payload, then writes atomically (temp file + rename). A
/// RangeCert also writes its shards next to `path`. Throws ValidationFailure
/// or IoFailure.
void write_certificate(const Certificate& cert, const std::filesystem::path& path);

/// Re-derives every claim from the raw payload. Throws CorruptFile or
/// VerificationFailed naming the first failing claim.
CertReport verify_certificate(const std::filesystem::path& path);

/// Reads a range manifest and all of its shards.
RangeCert load_range(const std::filesystem::path& manifest_path);

/// Witnesses of a range report, with the covered n grouped into maximal runs.
RangeCert make_range_cert(const Rational& alpha, const ConstraintSpec& spec, const RangeReport& report);

/// Union of two manifests over the same alpha, spec and residue filter.
/// Throws SpecMismatch.
RangeManifest merge_manifests(const RangeManifest& a, const RangeManifest& b);

/// Loads every range manifest under `dir` into a witness store.
StoreProvider load_witness_store(const std::filesystem::path& dir);

}  // namespace recipart
