#include "recipart/proof_table.hpp"

#include <algorithm>
#include <numeric>

#include "recipart/congruence.hpp"
#include "recipart/errors.hpp"
#include "recipart/number_theory.hpp"
#include "recipart/wide_uint.hpp"

namespace recipart {

namespace {

bool in_list(const std::vector<Rational>& v, const Rational& r) { return std::find(v.begin(), v.end(), r) != v.end(); }

std::string row_tag(const ProofRow& row) { return "row " + std::to_string(row.index); }

PropertyResult verified() { return {PropertyStatus::Verified, {}}; }
PropertyResult refuted(std::string d) { return {PropertyStatus::Refuted, std::move(d)}; }
PropertyResult inconclusive(std::string d) { return {PropertyStatus::Inconclusive, std::move(d)}; }

// Largest modulus product we brute-force for the covering property.
constexpr std::uint64_t kMaxCoverModulus = 50'000'000;

PropertyResult check_p1(const ProofTable& t) {
  for (const ProofRow& row : t.rows) {
    if (!in_list(t.S, row.beta) && !in_list(t.assumed, row.beta)) {
      return refuted(row_tag(row) + ": beta=" + row.beta.str() + " is not in S");
    }
  }
  return verified();
}

PropertyResult check_p2(const ProofTable& t) {
  std::uint64_t L = 1;
  for (const ProofRow& row : t.rows) {
    L = std::lcm(L, row.m);
    if (L > kMaxCoverModulus) return inconclusive("lcm of the moduli exceeds " + std::to_string(kMaxCoverModulus));
  }
  for (std::uint64_t r = 0; r < L; ++r) {
    const bool covered = std::any_of(t.rows.begin(), t.rows.end(), [&](const ProofRow& row) {
      return r % row.m == row.A.n() % row.m;
    });
    if (!covered) return refuted("residue " + std::to_string(r) + " mod " + std::to_string(L) + " is not covered");
  }
  return verified();
}

PropertyResult check_p3(const ProofTable& t) {
  for (const ProofRow& row : t.rows) {
    const Rational total = row.A.alpha() + row.beta / Rational(row.m);
    if (total != t.alpha) {
      return refuted(row_tag(row) + ": reciprocal sum is " + total.str() + ", expected " + t.alpha.str());
    }
  }
  return verified();
}

PropertyResult check_p4(const ProofTable& t) {
  for (const ProofRow& row : t.rows) {
    for (std::uint64_t a : row.A.parts()) {
      if (a % row.m != 0) continue;
      const std::uint64_t b = a / row.m;
      if (!part_excluded(b, row.beta, t.Q, t.X)) {
        return inconclusive(row_tag(row) + ": " + std::to_string(a) + " = " + std::to_string(row.m) + "*" +
                            std::to_string(b) + " and " + std::to_string(b) + " may lie in a " + row.beta.str() +
                            "-partition");
      }
    }
  }
  return verified();
}

PropertyResult check_p5(const ProofTable& t) {
  const ConstraintSpec& Q = t.Q;
  std::optional<PropertyResult> pending;
  for (const ProofRow& row : t.rows) {
    for (std::uint64_t a : row.A.parts()) {
      if (!Q.admits(a)) return refuted(row_tag(row) + ": " + std::to_string(a) + " violates " + Q.describe());
    }
    for (std::uint64_t M : Q.m_free) {
      const std::uint64_t rest = M / std::gcd(M, row.m);
      if (rest == 1) {
        return refuted(row_tag(row) + ": m=" + std::to_string(row.m) + " is a multiple of " + std::to_string(M));
      }
      // m*b divisible by M means rest | b; fine when b is already barred from that
      const bool covered =
          std::any_of(Q.m_free.begin(), Q.m_free.end(), [&](std::uint64_t M2) { return rest % M2 == 0; });
      if (!covered && !pending) {
        pending = inconclusive(row_tag(row) + ": m*b may be a multiple of " + std::to_string(M));
      }
    }
    if (Q.allowed_primes && !is_smooth_over(row.m, *Q.allowed_primes)) {
      return refuted(row_tag(row) + ": m=" + std::to_string(row.m) + " has a prime outside the allowed set");
    }
    for (std::uint64_t f : Q.forbidden) {
      if (f % row.m != 0) continue;
      if (!part_excluded(f / row.m, row.beta, Q, t.X) && !pending) {
        pending = inconclusive(row_tag(row) + ": forbidden " + std::to_string(f) + " could arise as " +
                               std::to_string(row.m) + "*" + std::to_string(f / row.m));
      }
    }
    if (Q.max_part && row.m != 1 && !pending) {
      pending = inconclusive(row_tag(row) + ": scaling by m may exceed max part");
    }
  }
  return pending ? *pending : verified();
}

std::uint64_t checked_bound(std::uint64_t sum, std::uint64_t m, std::uint64_t X) {
  const u128 v = static_cast<u128>(m) * (X - 1) + sum;
  if (v > UINT64_MAX) throw Error(ErrorCode::InvalidSpec, "window bound overflows 64 bits");
  return static_cast<std::uint64_t>(v);
}

}  // namespace

void ProofTable::validate() const {
  if (!in_list(S, alpha)) throw Error(ErrorCode::ValidationFailure, "alpha=" + alpha.str() + " is not in S");
  if (rows.empty()) throw Error(ErrorCode::ValidationFailure, "table for " + alpha.str() + " has no rows");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const ProofRow& row = rows[i];
    if (row.index != i + 1) throw Error(ErrorCode::ValidationFailure, "row indices must be 1, 2, ...");
    if (row.m == 0) throw Error(ErrorCode::NonPositive, row_tag(row) + ": m must be positive");
    if (row.m == 1 && row.A.size() == 0) {
      throw Error(ErrorCode::ValidationFailure, row_tag(row) + ": A must be non-empty when m = 1");
    }
    if (row.beta.is_zero()) throw Error(ErrorCode::NonPositive, row_tag(row) + ": beta must be positive");
  }
  if (M_prime && *M_prime < 2) throw Error(ErrorCode::InvalidSpec, "M' must be at least 2");
  if (X && *X == 0) throw Error(ErrorCode::NonPositive, "X must be positive");
}

const ProofTable* TableCollection::find(const Rational& alpha) const noexcept {
  for (const ProofTable& t : tables) {
    if (t.alpha == alpha) return &t;
  }
  return nullptr;
}

namespace {
const ProofTable& first_table(const TableCollection& c) {
  if (c.tables.empty()) throw Error(ErrorCode::MissingTable, "collection '" + c.name + "' is empty");
  return c.tables.front();
}
}  // namespace

const std::vector<Rational>& TableCollection::S() const { return first_table(*this).S; }
const ConstraintSpec& TableCollection::Q() const { return first_table(*this).Q; }
std::optional<std::uint64_t> TableCollection::M_prime() const { return first_table(*this).M_prime; }
std::optional<std::uint64_t> TableCollection::X() const { return first_table(*this).X; }

std::string_view to_string(PropertyStatus s) noexcept {
  switch (s) {
    case PropertyStatus::Verified: return "verified";
    case PropertyStatus::Refuted: return "refuted";
    case PropertyStatus::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

bool PropertyReport::all_verified() const noexcept {
  const bool base = std::all_of(properties.begin(), properties.end(),
                                [](const PropertyResult& p) { return p.status == PropertyStatus::Verified; });
  return base && (!congruence || congruence->status == PropertyStatus::Verified);
}

bool part_excluded(std::uint64_t b, const Rational& beta, const ConstraintSpec& Q, std::optional<std::uint64_t> X) {
  if (b == 0 || !Q.admits(b)) return true;
  const Rational r = Rational::reciprocal(b);
  if (r > beta) return true;
  // 1/b == beta forces B = {b}, a partition of n' = b
  return r == beta && X && b < *X;
}

PropertyReport check_table(const ProofTable& table) {
  table.validate();
  PropertyReport report;
  report.alpha = table.alpha;
  report.properties = {check_p1(table), check_p2(table), check_p3(table), check_p4(table), check_p5(table)};
  return report;
}

std::vector<PropertyReport> check_properties(const TableCollection& tables) {
  const std::vector<Rational>& S = tables.S();
  for (const Rational& alpha : S) {
    if (!tables.find(alpha)) throw Error(ErrorCode::MissingTable, "no table for alpha=" + alpha.str());
  }
  std::vector<PropertyReport> out;
  for (const ProofTable& t : tables.tables) {
    if (t.S != S || !(t.Q == tables.Q())) {
      throw Error(ErrorCode::ValidationFailure, "tables of one collection must share S and Q");
    }
    for (const ProofRow& row : t.rows) {
      if (in_list(S, row.beta) && !tables.find(row.beta)) {
        throw Error(ErrorCode::MissingTable, "no table for beta=" + row.beta.str());
      }
    }
    out.push_back(check_table(t));
  }
  return out;
}

PropertyResult check_congruence_variant(const ProofTable& table) {
  if (!table.M_prime) return inconclusive("no M' set");
  const std::uint64_t Mp = *table.M_prime;
  for (const ProofRow& row : table.rows) {
    if (std::gcd(row.m, Mp) != 1) {
      throw Error(ErrorCode::GcdViolation,
                  row_tag(row) + ": gcd(m=" + std::to_string(row.m) + ", " + std::to_string(Mp) + ") != 1");
    }
    for (std::uint64_t a : row.A.parts()) {
      if (std::gcd(a, Mp) != 1) {
        throw Error(ErrorCode::GcdViolation,
                    row_tag(row) + ": gcd(" + std::to_string(a) + ", " + std::to_string(Mp) + ") != 1");
      }
    }
  }
  const std::uint64_t ra = residue_of(table.alpha, Mp);
  for (const ProofRow& row : table.rows) {
    const std::uint64_t rb = residue_of(row.beta, Mp);
    // symbolic: m(alpha - sum 1/a) is beta, so residues agree by construction
    const Rational lifted = (table.alpha - row.A.alpha()) * Rational(row.m);
    if (residue_of(lifted, Mp) != rb) {
      return refuted(row_tag(row) + ": m(alpha - sum 1/a) and beta differ mod " + std::to_string(Mp));
    }
    // residue route: n = alpha mod M' gives n' = (alpha - sum A) m^-1
    const std::uint64_t inv = *mod_inverse(row.m % Mp, Mp);
    const std::uint64_t diff = (ra + Mp - row.A.n() % Mp) % Mp;
    const std::uint64_t np = static_cast<std::uint64_t>(static_cast<u128>(diff) * inv % Mp);
    if (np != rb) {
      return refuted(row_tag(row) + ": n' = " + std::to_string(np) + " mod " + std::to_string(Mp) +
                     " but beta = " + std::to_string(rb));
    }
  }
  return verified();
}

std::uint64_t window_bound(const ProofTable& table, std::uint64_t X) {
  if (X == 0) throw Error(ErrorCode::NonPositive, "X must be positive");
  std::uint64_t w = 0;
  for (const ProofRow& row : table.rows) w = std::max(w, checked_bound(row.A.n(), row.m, X));
  return w;
}

std::uint64_t window_bound(const TableCollection& tables, std::uint64_t X) {
  std::uint64_t w = 0;
  for (const ProofTable& t : tables.tables) w = std::max(w, window_bound(t, X));
  return w;
}

PartitionSet strip_elements(const PartitionSet& set, std::span<const std::uint64_t> elements) {
  std::vector<std::uint64_t> kept(set.parts().begin(), set.parts().end());
  for (std::uint64_t e : elements) {
    const auto it = std::find(kept.begin(), kept.end(), e);
    if (it == kept.end()) throw Error(ErrorCode::NotASubset, std::to_string(e) + " is not in {" + set.str() + "}");
    kept.erase(it);
  }
  return make_partition_allow_empty(std::move(kept));
}

}  // namespace recipart
