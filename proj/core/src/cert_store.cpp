#include "recipart/cert_store.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "recipart/errors.hpp"

#ifndef RECIPART_VERSION
#define RECIPART_VERSION "0.0.0"
#endif

namespace recipart {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const std::string kToolVersion = std::string("recipart ") + RECIPART_VERSION;
constexpr std::uint64_t kMaxExact = 1ULL << 53;

// ---- primitive encoders ----------------------------------------------------

json enc_int(std::uint64_t v) { return v > kMaxExact ? json(std::to_string(v)) : json(v); }

json enc_ints(std::span<const std::uint64_t> v) {
  json a = json::array();
  for (std::uint64_t x : v) a.push_back(enc_int(x));
  return a;
}

json enc_rats(const std::vector<Rational>& v) {
  json a = json::array();
  for (const Rational& r : v) a.push_back(r.str());
  return a;
}

[[noreturn]] void corrupt(const std::string& what) { throw Error(ErrorCode::CorruptFile, what); }

std::uint64_t dec_int(const json& j, const char* what) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      corrupt(std::string("bad integer in ") + what);
    }
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      corrupt(std::string("integer out of range in ") + what);
    }
  }
  corrupt(std::string("expected an integer for ") + what);
}

std::vector<std::uint64_t> dec_ints(const json& j, const char* what) {
  if (!j.is_array()) corrupt(std::string("expected an array for ") + what);
  std::vector<std::uint64_t> out;
  for (const json& x : j) out.push_back(dec_int(x, what));
  return out;
}

Rational dec_rat(const json& j, const char* what) {
  if (!j.is_string()) corrupt(std::string("expected a rational string for ") + what);
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error&) {
    corrupt(std::string("bad rational in ") + what);
  }
}

std::vector<Rational> dec_rats(const json& j, const char* what) {
  if (!j.is_array()) corrupt(std::string("expected an array for ") + what);
  std::vector<Rational> out;
  for (const json& x : j) out.push_back(dec_rat(x, what));
  return out;
}

const json& field(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) corrupt(std::string("missing field '") + key + "'");
  return *it;
}

// ---- domain encoders -------------------------------------------------------

json enc_spec(const ConstraintSpec& raw) {
  const ConstraintSpec s = raw.normalized();
  json j = json::object();
  j["m_free"] = enc_ints(s.m_free);
  if (s.allowed_primes) j["allowed_primes"] = enc_ints(*s.allowed_primes);
  j["forbidden"] = enc_ints(s.forbidden);
  j["min_part"] = enc_int(s.min_part);
  if (s.max_part) j["max_part"] = enc_int(*s.max_part);
  return j;
}

ConstraintSpec dec_spec(const json& j) {
  if (!j.is_object()) corrupt("spec must be an object");
  ConstraintSpec s;
  s.m_free = dec_ints(field(j, "m_free"), "m_free");
  if (j.contains("allowed_primes")) s.allowed_primes = dec_ints(j["allowed_primes"], "allowed_primes");
  s.forbidden = dec_ints(field(j, "forbidden"), "forbidden");
  s.min_part = dec_int(field(j, "min_part"), "min_part");
  if (j.contains("max_part")) s.max_part = dec_int(j["max_part"], "max_part");
  try {
    return s.normalized();
  } catch (const Error& e) {
    corrupt(std::string("invalid spec: ") + e.what());
  }
}

json enc_table_body(const ProofTable& t) {
  json j = json::object();
  j["alpha"] = t.alpha.str();
  j["S"] = enc_rats(t.S);
  j["Q"] = enc_spec(t.Q);
  if (t.M_prime) j["M_prime"] = enc_int(*t.M_prime);
  if (t.X) j["X"] = enc_int(*t.X);
  if (!t.assumed.empty()) j["assumed"] = enc_rats(t.assumed);
  json rows = json::array();
  for (const ProofRow& r : t.rows) {
    rows.push_back({{"i", enc_int(r.index)}, {"m", enc_int(r.m)}, {"beta", r.beta.str()}, {"A", enc_ints(r.A.parts())}});
  }
  j["rows"] = rows;
  j["constraint_digest"] = constraint_digest(t.Q);
  return j;
}

ProofTable dec_table_body(const json& j) {
  if (!j.is_object()) corrupt("table must be an object");
  ProofTable t;
  t.alpha = dec_rat(field(j, "alpha"), "alpha");
  t.S = dec_rats(field(j, "S"), "S");
  t.Q = dec_spec(field(j, "Q"));
  if (j.contains("M_prime")) t.M_prime = dec_int(j["M_prime"], "M_prime");
  if (j.contains("X")) t.X = dec_int(j["X"], "X");
  if (j.contains("assumed")) t.assumed = dec_rats(j["assumed"], "assumed");
  const json& rows = field(j, "rows");
  if (!rows.is_array()) corrupt("rows must be an array");
  for (const json& r : rows) {
    ProofRow row;
    row.index = dec_int(field(r, "i"), "i");
    row.m = dec_int(field(r, "m"), "m");
    row.beta = dec_rat(field(r, "beta"), "beta");
    try {
      row.A = make_partition_allow_empty(dec_ints(field(r, "A"), "A"));
    } catch (const Error& e) {
      corrupt(std::string("row ") + std::to_string(row.index) + ": " + e.what());
    }
    t.rows.push_back(std::move(row));
  }
  if (field(j, "constraint_digest") != constraint_digest(t.Q)) corrupt("constraint_digest does not match Q");
  return t;
}

json enc_manifest(const RangeManifest& m) {
  json j = json::object();
  j["kind"] = "range";
  j["alpha"] = m.alpha.str();
  j["spec"] = enc_spec(m.spec);
  if (m.residue) j["residue"] = {{"modulus", enc_int(m.residue->modulus)}, {"residue", enc_int(m.residue->residue)}};
  json ranges = json::array();
  for (const auto& [lo, hi] : m.ranges) ranges.push_back(json::array({enc_int(lo), enc_int(hi)}));
  j["ranges"] = ranges;
  j["shards"] = m.shards;
  j["constraint_digest"] = constraint_digest(m.spec);
  j["tool_version"] = kToolVersion;
  return j;
}

RangeManifest dec_manifest(const json& j) {
  RangeManifest m;
  m.alpha = dec_rat(field(j, "alpha"), "alpha");
  m.spec = dec_spec(field(j, "spec"));
  if (j.contains("residue")) {
    const json& r = j["residue"];
    m.residue = ResidueFilter{dec_int(field(r, "modulus"), "modulus"), dec_int(field(r, "residue"), "residue")};
    if (m.residue->modulus == 0) corrupt("residue modulus is 0");
  }
  const json& ranges = field(j, "ranges");
  if (!ranges.is_array()) corrupt("ranges must be an array");
  for (const json& r : ranges) {
    if (!r.is_array() || r.size() != 2) corrupt("range must be [lo, hi]");
    m.ranges.emplace_back(dec_int(r[0], "range"), dec_int(r[1], "range"));
  }
  const json& shards = field(j, "shards");
  if (!shards.is_array()) corrupt("shards must be an array");
  for (const json& s : shards) {
    if (!s.is_string()) corrupt("shard names must be strings");
    m.shards.push_back(s.get<std::string>());
  }
  if (field(j, "constraint_digest") != constraint_digest(m.spec)) corrupt("constraint_digest does not match spec");
  return m;
}

json enc_shard(const RangeManifest& m, const std::vector<const PartitionSet*>& sets) {
  json j = json::object();
  j["kind"] = "range-shard";
  j["alpha"] = m.alpha.str();
  j["constraint_digest"] = constraint_digest(m.spec);
  json w = json::array();
  for (const PartitionSet* s : sets) w.push_back({{"n", enc_int(s->n())}, {"parts", enc_ints(s->parts())}});
  j["witnesses"] = w;
  j["tool_version"] = kToolVersion;
  return j;
}

json enc(const Certificate& cert) {
  return std::visit(
      [](const auto& c) -> json {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, PartitionCert>) {
          json j = json::object();
          j["kind"] = "partition";
          j["n"] = enc_int(c.set.n());
          j["alpha"] = c.set.alpha().str();
          j["parts"] = enc_ints(c.set.parts());
          j["spec"] = enc_spec(c.spec);
          j["constraint_digest"] = constraint_digest(c.spec);
          j["tool_version"] = kToolVersion;
          return j;
        } else if constexpr (std::is_same_v<T, ProofTable>) {
          json j = enc_table_body(c);
          j["kind"] = "proof-table";
          j["tool_version"] = kToolVersion;
          return j;
        } else if constexpr (std::is_same_v<T, TableCollection>) {
          json tables = json::array();
          for (const ProofTable& t : c.tables) tables.push_back(enc_table_body(t));
          return {{"kind", "proof-tables"}, {"name", c.name}, {"tables", tables}, {"tool_version", kToolVersion}};
        } else {
          return enc_manifest(c.manifest);
        }
      },
      cert);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    corrupt(std::string("not valid JSON: ") + e.what());
  }
}

std::string kind_of(const json& j) {
  if (!j.is_object()) corrupt("certificate must be a JSON object");
  const json& k = field(j, "kind");
  if (!k.is_string()) corrupt("kind must be a string");
  return k.get<std::string>();
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoFailure, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_atomic(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    if (ec) throw Error(ErrorCode::IoFailure, "cannot create " + path.parent_path().string() + ": " + ec.message());
  }
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoFailure, "cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) throw Error(ErrorCode::IoFailure, "short write to " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(ErrorCode::IoFailure, "cannot rename into " + path.string());
  }
}

[[noreturn]] void failed(const std::string& what) { throw Error(ErrorCode::VerificationFailed, what); }

// Rebuilds a witness from raw parts and checks every claim about it.
PartitionSet check_witness(const std::vector<std::uint64_t>& parts, std::uint64_t n, const Rational& alpha,
                           const ConstraintSpec& spec, const std::string& tag) {
  PartitionSet set = make_partition_allow_empty({});
  try {
    set = make_partition(parts);
  } catch (const Error& e) {
    failed(tag + ": " + e.what());
  }
  if (set.n() != n) failed(tag + ": parts sum to " + std::to_string(set.n()) + ", claimed n=" + std::to_string(n));
  if (set.alpha() != alpha) {
    failed(tag + ": reciprocal sum is " + set.alpha().str() + ", claimed alpha=" + alpha.str());
  }
  if (!satisfies(set, spec)) failed(tag + ": parts violate " + spec.describe());
  return set;
}

std::vector<std::pair<std::uint64_t, PartitionSet>> read_shard(const fs::path& path, const RangeManifest& m) {
  const json j = parse_json(read_file(path));
  if (kind_of(j) != "range-shard") corrupt(path.filename().string() + " is not a shard");
  if (dec_rat(field(j, "alpha"), "alpha") != m.alpha) failed(path.filename().string() + ": alpha differs");
  if (field(j, "constraint_digest") != constraint_digest(m.spec)) failed(path.filename().string() + ": spec differs");
  const json& w = field(j, "witnesses");
  if (!w.is_array()) corrupt("witnesses must be an array");
  std::vector<std::pair<std::uint64_t, PartitionSet>> out;
  for (const json& e : w) {
    const std::uint64_t n = dec_int(field(e, "n"), "n");
    out.emplace_back(n, check_witness(dec_ints(field(e, "parts"), "parts"), n, m.alpha, m.spec,
                                      "witness n=" + std::to_string(n)));
  }
  return out;
}

void check_ranges(const RangeManifest& m) {
  for (std::size_t i = 0; i < m.ranges.size(); ++i) {
    if (m.ranges[i].first > m.ranges[i].second) failed("range with lo > hi");
    if (i > 0 && m.ranges[i - 1].second >= m.ranges[i].first) failed("ranges are not sorted and disjoint");
  }
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> fuse(std::vector<std::pair<std::uint64_t, std::uint64_t>> r) {
  std::sort(r.begin(), r.end());
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (const auto& iv : r) {
    if (!out.empty() && iv.first <= out.back().second + 1) {
      out.back().second = std::max(out.back().second, iv.second);
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(CertKind k) noexcept {
  switch (k) {
    case CertKind::Partition: return "partition";
    case CertKind::ProofTable: return "proof-table";
    case CertKind::ProofTables: return "proof-tables";
    case CertKind::Range: return "range";
    case CertKind::RangeShard: return "range-shard";
  }
  return "unknown";
}

std::string constraint_digest(const ConstraintSpec& spec) {
  const std::string text = enc_spec(spec).dump();
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::ValidationFailure, "SHA-256 failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return hex.str();
}

std::string serialize(const Certificate& cert) { return dump(enc(cert)); }

Certificate parse_certificate(std::string_view text) {
  const json j = parse_json(text);
  const std::string kind = kind_of(j);
  if (kind == "partition") {
    PartitionCert c{make_partition_allow_empty({}), dec_spec(field(j, "spec"))};
    try {
      c.set = make_partition(dec_ints(field(j, "parts"), "parts"));
    } catch (const Error& e) {
      corrupt(std::string("parts: ") + e.what());
    }
    if (field(j, "constraint_digest") != constraint_digest(c.spec)) corrupt("constraint_digest does not match spec");
    return c;
  }
  if (kind == "proof-table") return dec_table_body(j);
  if (kind == "proof-tables") {
    TableCollection c;
    const json& name = field(j, "name");
    if (!name.is_string()) corrupt("name must be a string");
    c.name = name.get<std::string>();
    const json& tables = field(j, "tables");
    if (!tables.is_array()) corrupt("tables must be an array");
    for (const json& t : tables) c.tables.push_back(dec_table_body(t));
    return c;
  }
  if (kind == "range") return RangeCert{dec_manifest(j), {}};
  corrupt("unsupported certificate kind '" + kind + "'");
}

void write_certificate(const Certificate& cert, const fs::path& path) {
  if (const auto* p = std::get_if<PartitionCert>(&cert)) {
    if (p->set.size() == 0) throw Error(ErrorCode::ValidationFailure, "empty partition");
    if (!satisfies(p->set, p->spec)) throw Error(ErrorCode::ValidationFailure, "partition violates its spec");
  } else if (const auto* t = std::get_if<ProofTable>(&cert)) {
    t->validate();
  } else if (const auto* c = std::get_if<TableCollection>(&cert)) {
    for (const ProofTable& t : c->tables) t.validate();
  } else if (const auto* r = std::get_if<RangeCert>(&cert)) {
    RangeManifest m = r->manifest;
    const ConstraintSpec spec = m.spec.normalized();
    for (const auto& [n, set] : r->witnesses) {
      if (set.n() != n || set.alpha() != m.alpha || !satisfies(set, spec)) {
        throw Error(ErrorCode::ValidationFailure, "witness for n=" + std::to_string(n) + " does not check out");
      }
    }
    std::vector<const PartitionSet*> all;
    for (const auto& kv : r->witnesses) all.push_back(&kv.second);
    m.shards.clear();
    const std::string stem = path.stem().string();
    for (std::size_t start = 0, k = 0; start < all.size(); start += kShardCapacity, ++k) {
      const std::size_t stop = std::min(all.size(), start + kShardCapacity);
      std::ostringstream name;
      name << stem << ".shard-" << std::setw(4) << std::setfill('0') << k << ".json";
      m.shards.push_back(name.str());
      const std::vector<const PartitionSet*> chunk(all.begin() + start, all.begin() + stop);
      write_atomic(path.parent_path() / name.str(), dump(enc_shard(m, chunk)));
    }
    write_atomic(path, dump(enc_manifest(m)));
    return;
  }
  write_atomic(path, serialize(cert));
}

RangeCert load_range(const fs::path& manifest_path) {
  const json j = parse_json(read_file(manifest_path));
  if (kind_of(j) != "range") corrupt(manifest_path.string() + " is not a range manifest");
  RangeCert out{dec_manifest(j), {}};
  for (const std::string& shard : out.manifest.shards) {
    if (shard.find('/') != std::string::npos || shard.find('\\') != std::string::npos) {
      corrupt("shard names must be plain file names");
    }
    for (auto& [n, set] : read_shard(manifest_path.parent_path() / shard, out.manifest)) {
      if (!out.witnesses.emplace(n, std::move(set)).second) failed("two witnesses for n=" + std::to_string(n));
    }
  }
  return out;
}

CertReport verify_certificate(const fs::path& path) {
  const std::string text = read_file(path);
  const json j = parse_json(text);
  const std::string kind = kind_of(j);
  CertReport report;

  if (kind == "partition") {
    report.kind = CertKind::Partition;
    const ConstraintSpec spec = dec_spec(field(j, "spec"));
    if (field(j, "constraint_digest") != constraint_digest(spec)) failed("constraint_digest does not match spec");
    const PartitionSet set = check_witness(dec_ints(field(j, "parts"), "parts"), dec_int(field(j, "n"), "n"),
                                           dec_rat(field(j, "alpha"), "alpha"), spec, "partition");
    report.items = set.size();
    report.summary = "{" + set.str() + "} is a " + set.alpha().str() + "-partition of " + std::to_string(set.n());
    return report;
  }

  if (kind == "proof-table" || kind == "proof-tables") {
    const Certificate c = parse_certificate(text);
    std::vector<PropertyReport> reports;
    std::vector<const ProofTable*> tables;
    try {
      if (const auto* t = std::get_if<ProofTable>(&c)) {
        report.kind = CertKind::ProofTable;
        reports.push_back(check_table(*t));
        tables.push_back(t);
      } else {
        report.kind = CertKind::ProofTables;
        const auto& coll = std::get<TableCollection>(c);
        reports = check_properties(coll);
        for (const ProofTable& t : coll.tables) tables.push_back(&t);
      }
      for (std::size_t i = 0; i < tables.size(); ++i) {
        if (tables[i]->M_prime) reports[i].congruence = check_congruence_variant(*tables[i]);
      }
    } catch (const Error& e) {
      failed(e.what());
    }
    for (const PropertyReport& r : reports) {
      for (std::size_t p = 0; p < r.properties.size(); ++p) {
        if (r.properties[p].status != PropertyStatus::Verified) {
          failed("alpha=" + r.alpha.str() + " property " + std::to_string(p + 1) + " " +
                 std::string(to_string(r.properties[p].status)) + ": " + r.properties[p].detail);
        }
      }
      if (r.congruence && r.congruence->status != PropertyStatus::Verified) {
        failed("alpha=" + r.alpha.str() + " congruence variant: " + r.congruence->detail);
      }
      report.items += 1;
    }
    report.summary = std::to_string(reports.size()) + " table(s), all properties verified";
    return report;
  }

  if (kind == "range") {
    report.kind = CertKind::Range;
    const RangeCert r = load_range(path);
    check_ranges(r.manifest);
    for (const auto& [lo, hi] : r.manifest.ranges) {
      for (std::uint64_t n = lo; n <= hi; ++n) {
        if (r.manifest.residue && !r.manifest.residue->accepts(n)) continue;
        if (!r.witnesses.contains(n)) failed("n=" + std::to_string(n) + " is covered but has no witness");
        if (n == hi) break;
      }
    }
    report.items = r.witnesses.size();
    report.summary = std::to_string(r.witnesses.size()) + " witnesses over " +
                     std::to_string(r.manifest.ranges.size()) + " range(s)";
    return report;
  }

  if (kind == "range-shard") {
    report.kind = CertKind::RangeShard;
    RangeManifest m;
    m.alpha = dec_rat(field(j, "alpha"), "alpha");
    // a shard alone carries only the digest, so Q itself is unknown here;
    // the arithmetic claims are still re-derived
    const json& w = field(j, "witnesses");
    if (!w.is_array()) corrupt("witnesses must be an array");
    for (const json& e : w) {
      const std::uint64_t n = dec_int(field(e, "n"), "n");
      check_witness(dec_ints(field(e, "parts"), "parts"), n, m.alpha, ConstraintSpec{}, "witness n=" + std::to_string(n));
      ++report.items;
    }
    report.summary = std::to_string(report.items) + " witnesses (spec checked via the manifest)";
    return report;
  }
  corrupt("unsupported certificate kind '" + kind + "'");
}

RangeCert make_range_cert(const Rational& alpha, const ConstraintSpec& spec, const RangeReport& report) {
  RangeCert c;
  c.manifest.alpha = alpha;
  c.manifest.spec = spec.normalized();
  c.manifest.residue = report.residue_filter;
  c.witnesses = report.witnesses;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> run;
  for (std::uint64_t n = report.lo; n <= report.hi; ++n) {
    if (report.residue_filter && !report.residue_filter->accepts(n)) {
      if (n == report.hi) break;
      continue;
    }
    if (report.witnesses.contains(n)) {
      if (run) {
        run->second = n;
      } else {
        run = {n, n};
      }
    } else if (run) {
      c.manifest.ranges.push_back(*run);
      run.reset();
    }
    if (n == report.hi) break;
  }
  if (run) c.manifest.ranges.push_back(*run);
  // runs separated only by filtered-out n are one interval
  auto& r = c.manifest.ranges;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> merged;
  for (const auto& iv : r) {
    bool joins = !merged.empty();
    if (joins) {
      for (std::uint64_t n = merged.back().second + 1; n < iv.first; ++n) {
        if (!report.residue_filter || report.residue_filter->accepts(n)) {
          joins = false;
          break;
        }
      }
    }
    if (joins) {
      merged.back().second = iv.second;
    } else {
      merged.push_back(iv);
    }
  }
  r = std::move(merged);
  return c;
}

RangeManifest merge_manifests(const RangeManifest& a, const RangeManifest& b) {
  if (a.alpha != b.alpha) throw Error(ErrorCode::SpecMismatch, "alpha " + a.alpha.str() + " vs " + b.alpha.str());
  if (!(a.spec.normalized() == b.spec.normalized())) {
    throw Error(ErrorCode::SpecMismatch, a.spec.describe() + " vs " + b.spec.describe());
  }
  if (a.residue != b.residue) throw Error(ErrorCode::SpecMismatch, "residue filters differ");
  RangeManifest out = a;
  out.spec = a.spec.normalized();
  out.ranges.insert(out.ranges.end(), b.ranges.begin(), b.ranges.end());
  out.ranges = fuse(std::move(out.ranges));
  for (const std::string& s : b.shards) {
    if (std::find(out.shards.begin(), out.shards.end(), s) == out.shards.end()) out.shards.push_back(s);
  }
  return out;
}

StoreProvider load_witness_store(const fs::path& dir) {
  StoreProvider store;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) return store;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
    if (entry.path().stem().string().find(".shard-") != std::string::npos) continue;
    json j;
    try {
      j = json::parse(read_file(entry.path()));
    } catch (const json::exception&) {
      continue;
    }
    if (!j.is_object() || j.value("kind", "") != "range") continue;
    const RangeCert r = load_range(entry.path());
    for (const auto& [n, set] : r.witnesses) store.add(r.manifest.alpha, set);
  }
  return store;
}

}  // namespace recipart
