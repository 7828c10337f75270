#include "recipart/prover.hpp"

#include <algorithm>

#include "recipart/congruence.hpp"
#include "recipart/errors.hpp"
#include "recipart/parallel.hpp"

namespace recipart {

WitnessResult SearchProvider::witness(const Rational& alpha, std::uint64_t n, const ConstraintSpec& Q) const {
  try {
    auto set = find_one(n, alpha, Q, budget_);
    if (!set) return {WitnessStatus::Absent, std::nullopt, name()};
    return {WitnessStatus::Found, std::move(set), name()};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BudgetExhausted) throw;
    return {WitnessStatus::Unknown, std::nullopt, name()};
  }
}

void StoreProvider::add(const Rational& alpha, const PartitionSet& set) { sets_.insert_or_assign({alpha, set.n()}, set); }

void StoreProvider::add(const Rational& alpha, const RangeReport& report) {
  for (const auto& [n, set] : report.witnesses) add(alpha, set);
}

WitnessResult StoreProvider::witness(const Rational& alpha, std::uint64_t n, const ConstraintSpec& Q) const {
  const auto it = sets_.find({alpha, n});
  // stored sets are re-checked rather than trusted
  if (it == sets_.end() || it->second.alpha() != alpha || !satisfies(it->second, Q)) {
    return {WitnessStatus::Unknown, std::nullopt, name()};
  }
  return {WitnessStatus::Found, it->second, name()};
}

WitnessResult ChainProvider::witness(const Rational& alpha, std::uint64_t n, const ConstraintSpec& Q) const {
  for (const WitnessProvider* p : chain_) {
    WitnessResult r = p->witness(alpha, n, Q);
    if (r.status != WitnessStatus::Unknown) return r;
  }
  return {WitnessStatus::Unknown, std::nullopt, "none"};
}

bool BaseWindowReport::holds() const noexcept {
  return std::all_of(per_alpha.begin(), per_alpha.end(), [](const auto& kv) { return kv.second.holds(); });
}

namespace {

std::optional<ResidueFilter> filter_for(const TableCollection& tables, const Rational& alpha) {
  const auto Mp = tables.M_prime();
  if (!Mp) return std::nullopt;
  return ResidueFilter{*Mp, residue_of(alpha, *Mp)};
}

bool skipped(const BaseWindowOptions& options, const Rational& alpha) {
  return std::find(options.skip.begin(), options.skip.end(), alpha) != options.skip.end();
}

std::uint64_t window_for(const TableCollection& tables, const ProofTable& t, std::uint64_t X,
                         const BaseWindowOptions& options) {
  return options.per_alpha_window ? window_bound(t, X) : window_bound(tables, X);
}

struct Job {
  Rational alpha;
  std::uint64_t n;
};

std::vector<WitnessResult> run_jobs(const std::vector<Job>& jobs, const ConstraintSpec& Q,
                                    const WitnessProvider& provider, std::size_t threads) {
  std::vector<WitnessResult> out(jobs.size());
  parallel_for(jobs.size(), threads, [&](std::size_t i) { out[i] = provider.witness(jobs[i].alpha, jobs[i].n, Q); });
  return out;
}

}  // namespace

BaseWindowReport check_base_window(const TableCollection& tables, std::uint64_t X, const WitnessProvider& provider,
                                   const BaseWindowOptions& options) {
  if (X == 0) throw Error(ErrorCode::NonPositive, "X must be positive");
  const ConstraintSpec Q = tables.Q().normalized();
  BaseWindowReport report;
  report.X = X;
  report.window = window_bound(tables, X);

  std::vector<Job> jobs;
  for (const ProofTable& t : tables.tables) {
    if (skipped(options, t.alpha)) continue;
    RangeReport& r = report.per_alpha[t.alpha];
    r.lo = X;
    r.hi = window_for(tables, t, X, options);
    r.residue_filter = filter_for(tables, t.alpha);
    for (std::uint64_t n = r.lo; n <= r.hi; ++n) {
      if (!r.residue_filter || r.residue_filter->accepts(n)) jobs.push_back({t.alpha, n});
    }
  }

  std::vector<WitnessResult> results = run_jobs(jobs, Q, provider, options.jobs);
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    RangeReport& r = report.per_alpha[jobs[i].alpha];
    switch (results[i].status) {
      case WitnessStatus::Found: r.witnesses.emplace(jobs[i].n, *std::move(results[i].set)); break;
      case WitnessStatus::Absent: r.failures.push_back(jobs[i].n); break;
      case WitnessStatus::Unknown: r.unknown.push_back(jobs[i].n); break;
    }
  }
  return report;
}

std::optional<std::uint64_t> find_least_X(const TableCollection& tables, std::uint64_t lo, std::uint64_t hi,
                                          const WitnessProvider& provider, const BaseWindowOptions& options) {
  if (lo == 0) lo = 1;
  const ConstraintSpec Q = tables.Q().normalized();
  std::map<std::pair<Rational, std::uint64_t>, bool> found;

  std::uint64_t X = lo;
  while (X <= hi) {
    std::vector<Job> pending;
    std::vector<Job> window;
    for (const ProofTable& t : tables.tables) {
      if (skipped(options, t.alpha)) continue;
      const auto filter = filter_for(tables, t.alpha);
      const std::uint64_t w = window_for(tables, t, X, options);
      for (std::uint64_t n = X; n <= w; ++n) {
        if (filter && !filter->accepts(n)) continue;
        window.push_back({t.alpha, n});
        if (!found.contains({t.alpha, n})) pending.push_back({t.alpha, n});
      }
    }
    const std::vector<WitnessResult> results = run_jobs(pending, Q, provider, options.jobs);
    for (std::size_t i = 0; i < pending.size(); ++i) {
      found[{pending[i].alpha, pending[i].n}] = results[i].status == WitnessStatus::Found;
    }
    // any X' <= the last gap still has that gap in its window
    std::optional<std::uint64_t> last_gap;
    for (const Job& j : window) {
      if (!found.at({j.alpha, j.n})) last_gap = std::max(last_gap.value_or(0), j.n);
    }
    if (!last_gap) return X;
    X = *last_gap + 1;
  }
  return std::nullopt;
}

ConstructResult construct(const Rational& alpha, std::uint64_t n, const TableCollection& tables,
                          const WitnessProvider& provider, std::optional<std::uint64_t> X) {
  if (!X) X = tables.X();
  if (!X) throw Error(ErrorCode::InvalidSpec, "no threshold X given and the tables carry none");
  const ConstraintSpec Q = tables.Q().normalized();
  if (n < *X) {
    throw Error(ErrorCode::BelowThreshold, "n=" + std::to_string(n) + " is below X=" + std::to_string(*X));
  }
  if (const auto Mp = tables.M_prime()) {
    const std::uint64_t want = residue_of(alpha, *Mp);
    if (n % *Mp != want) {
      throw Error(ErrorCode::CongruenceViolation, "n=" + std::to_string(n) + " is not " + std::to_string(want) +
                                                      " mod " + std::to_string(*Mp));
    }
  }
  const std::uint64_t W = window_bound(tables, *X);

  ConstructResult out;
  std::vector<const ProofRow*> used;
  Rational a = alpha;
  std::uint64_t k = n;
  while (k > W) {
    const ProofTable* t = tables.find(a);
    if (!t) throw Error(ErrorCode::MissingTable, "no table for alpha=" + a.str() + " (n=" + std::to_string(k) + ")");
    const auto row = std::find_if(t->rows.begin(), t->rows.end(),
                                  [&](const ProofRow& r) { return k % r.m == r.A.n() % r.m && k >= r.A.n(); });
    if (row == t->rows.end()) {
      throw Error(ErrorCode::ValidationFailure, "no row of " + a.str() + " covers n=" + std::to_string(k));
    }
    out.steps.push_back({a, k, row->index, row->m});
    used.push_back(&*row);
    k = (k - row->A.n()) / row->m;
    a = row->beta;
  }

  const WitnessResult base = provider.witness(a, k, Q);
  if (base.status != WitnessStatus::Found) {
    throw Error(ErrorCode::MissingBaseCertificate,
                "no " + a.str() + "-partition of " + std::to_string(k) + " from " + std::string(provider.name()));
  }
  out.base_alpha = a;
  out.base_n = k;
  out.base_source = std::string(base.source);

  PartitionSet cur = *base.set;
  for (std::size_t i = used.size(); i-- > 0;) {
    const ProofRow& row = *used[i];
    const PartitionSet lifted = scale_set(row.m, cur);
    std::vector<std::uint64_t> merged(row.A.parts().begin(), row.A.parts().end());
    for (std::uint64_t p : lifted.parts()) {
      if (row.A.contains(p)) {
        throw Error(ErrorCode::ValidationFailure, "row " + std::to_string(row.index) + " of " +
                                                      out.steps[i].alpha.str() + ": " + std::to_string(p) +
                                                      " lies in both A and mB");
      }
      merged.push_back(p);
    }
    cur = make_partition(std::move(merged));
  }

  if (cur.n() != n || cur.alpha() != alpha || !satisfies(cur, Q)) {
    throw Error(ErrorCode::ValidationFailure, "constructed set {" + cur.str() + "} does not check out");
  }
  out.set = std::move(cur);
  return out;
}

}  // namespace recipart
