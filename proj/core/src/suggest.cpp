#include "recipart/suggest.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "recipart/errors.hpp"

namespace recipart {

namespace {

// 1 and 3 plus the sufficient conditions for 4 and 5, as check_table sees them.
bool row_passes(const Rational& alpha, const std::vector<Rational>& S, const ConstraintSpec& Q,
                std::optional<std::uint64_t> X, const ProofRow& row) {
  ProofTable t;
  t.alpha = alpha;
  t.S = S;
  if (std::find(S.begin(), S.end(), alpha) == S.end()) t.S.push_back(alpha);
  t.Q = Q;
  t.X = X;
  t.rows = {row};
  t.rows.front().index = 1;
  if (row.m == 1 && row.A.size() == 0) return false;
  const PropertyReport r = check_table(t);
  return r.properties[0].status == PropertyStatus::Verified && r.properties[2].status == PropertyStatus::Verified &&
         r.properties[3].status == PropertyStatus::Verified && r.properties[4].status == PropertyStatus::Verified;
}

// Subsets of `pool` (ascending) with reciprocal sum `target`, at most
// `max_size` elements. Calls fn(parts) for each.
class EgyptianDfs {
 public:
  EgyptianDfs(const std::vector<std::uint64_t>& pool, std::size_t max_size, std::uint64_t max_nodes)
      : pool_(pool), max_size_(max_size), max_nodes_(max_nodes) {}

  template <class Fn>
  void run(const Rational& target, Fn&& fn) {
    chosen_.clear();
    rec(0, target, fn);
  }

 private:
  template <class Fn>
  void rec(std::size_t start, const Rational& rest, Fn& fn) {
    if (++nodes_ > max_nodes_) return;
    if (rest.is_zero()) {
      fn(chosen_);
      return;
    }
    const std::size_t slots = max_size_ - chosen_.size();
    if (slots == 0) return;
    // 1/a <= rest and slots/a >= rest
    const mpz_class lo = (rest.den() + rest.num() - 1) / rest.num();
    const mpz_class hi = rest.den() * slots / rest.num();
    for (std::size_t i = start; i < pool_.size(); ++i) {
      const std::uint64_t a = pool_[i];
      if (hi < a) break;
      if (lo > a) continue;
      chosen_.push_back(a);
      rec(i + 1, rest - Rational::reciprocal(a), fn);
      chosen_.pop_back();
      if (nodes_ > max_nodes_) return;
    }
  }

  const std::vector<std::uint64_t>& pool_;
  std::size_t max_size_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint64_t> chosen_;
};

struct Candidate {
  std::vector<ProofRow> rows;  // one per covered residue, residue order
  std::uint64_t m = 0;
  std::size_t covered = 0;
  std::uint64_t worst_sum = 0;
};

Candidate best_for_m(const Rational& alpha, const std::vector<Rational>& S, const ConstraintSpec& Q,
                     const SuggestParams& params, std::uint64_t m) {
  std::map<std::uint64_t, ProofRow> best;  // residue -> row with least sum(A)
  const Rational mr(m);
  for (const Rational& beta : S) {
    const Rational lifted = beta / mr;
    const auto target = Rational::checked_sub(alpha, lifted);
    if (!target) continue;

    std::vector<std::uint64_t> pool;
    for (std::uint64_t a = 1; a <= params.pool_max; ++a) {
      if (!Q.admits(a)) continue;
      if (a % m == 0 && !part_excluded(a / m, beta, Q, params.X)) continue;
      pool.push_back(a);
    }

    EgyptianDfs dfs(pool, params.max_set_size, params.max_nodes);
    dfs.run(*target, [&](const std::vector<std::uint64_t>& parts) {
      const std::uint64_t sum = std::accumulate(parts.begin(), parts.end(), std::uint64_t{0});
      const std::uint64_t r = sum % m;
      const auto it = best.find(r);
      if (it != best.end() && it->second.A.n() <= sum) return;
      ProofRow row{1, m, beta, make_partition_allow_empty(parts)};
      if (!row_passes(alpha, S, Q, params.X, row)) return;
      best.insert_or_assign(r, std::move(row));
    });
  }

  Candidate c;
  c.m = m;
  for (auto& [r, row] : best) {
    c.worst_sum = std::max(c.worst_sum, row.A.n());
    c.rows.push_back(std::move(row));
  }
  c.covered = c.rows.size();
  return c;
}

}  // namespace

SuggestResult suggest_rows(const Rational& alpha, const std::vector<Rational>& S, const ConstraintSpec& Q,
                           const SuggestParams& params) {
  const ConstraintSpec q = Q.normalized();
  SuggestResult out;

  if (const auto beta = Rational::checked_sub(alpha, Rational(1)); beta && !beta->is_zero()) {
    if (std::find(S.begin(), S.end(), *beta) != S.end()) {
      ProofRow row{1, 1, *beta, make_partition_allow_empty({1})};
      if (row_passes(alpha, S, q, params.X, row)) {
        out.rows.push_back(std::move(row));
        return out;
      }
    }
  }

  std::optional<Candidate> pick;
  for (std::uint64_t m : params.m_values) {
    if (m == 0) throw Error(ErrorCode::NonPositive, "m must be positive");
    Candidate c = best_for_m(alpha, S, q, params, m);
    if (c.rows.empty()) continue;
    const bool full = c.covered == m;
    if (!pick) {
      pick = std::move(c);
      continue;
    }
    const bool pick_full = pick->covered == pick->m;
    if ((full && !pick_full) || (full == pick_full && c.worst_sum < pick->worst_sum)) pick = std::move(c);
  }
  if (!pick) throw Error(ErrorCode::NoCandidateFound, "no rows for alpha=" + alpha.str() + " within the bounds");

  out.rows = std::move(pick->rows);
  std::uint64_t idx = 1;
  for (ProofRow& r : out.rows) r.index = idx++;
  out.modulus = pick->m;
  for (std::uint64_t r = 0; r < pick->m; ++r) {
    const bool hit =
        std::any_of(out.rows.begin(), out.rows.end(), [&](const ProofRow& row) { return row.A.n() % row.m == r; });
    if (!hit) out.uncovered.push_back(r);
  }
  return out;
}

}  // namespace recipart
