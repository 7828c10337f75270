#include "recipart/search.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "recipart/errors.hpp"
#include "recipart/number_theory.hpp"
#include "recipart/parallel.hpp"
#include "scaled.hpp"

namespace recipart {

std::vector<std::uint64_t> candidate_pool(std::uint64_t n, const ConstraintSpec& spec) {
  const ConstraintSpec s = spec.normalized();
  const std::uint64_t top = s.max_part ? std::min(n, *s.max_part) : n;
  std::vector<std::uint64_t> pool;
  if (s.allowed_primes) {
    // Generate the smooth numbers directly rather than filtering [1, top].
    std::vector<std::uint64_t> smooth{1};
    for (std::uint64_t p : *s.allowed_primes) {
      const std::size_t base = smooth.size();
      for (std::size_t i = 0; i < base; ++i) {
        std::uint64_t v = smooth[i];
        while (v <= top / p) {
          v *= p;
          smooth.push_back(v);
        }
      }
    }
    std::sort(smooth.begin(), smooth.end());
    for (std::uint64_t v : smooth) {
      if (v <= top && s.admits(v)) pool.push_back(v);
    }
    return pool;
  }
  for (std::uint64_t a = s.min_part; a <= top; ++a) {
    if (s.admits(a)) pool.push_back(a);
  }
  return pool;
}

namespace {

using Visitor = std::function<bool(std::span<const std::uint64_t>)>;

// Depth-first include/exclude search over the candidates, largest first.
// Sound pruning only: every cut is justified by a bound that holds for all
// completions of the current branch.
template <class Acc>
class SubsetDfs {
 public:
  SubsetDfs(std::span<const std::uint64_t> pool, const mpz_class& scale, const Visitor& visit,
            std::uint64_t max_nodes)
      : c_(pool), visit_(visit), max_nodes_(max_nodes) {
    const std::size_t k = c_.size();
    w_.reserve(k);
    ps_.assign(k + 1, 0);
    ws_.reserve(k + 1);
    ws_.push_back(detail::acc_from_mpz<Acc>(mpz_class(0)));
    mpz_class q;
    for (std::size_t i = 0; i < k; ++i) {
      mpz_divexact_ui(q.get_mpz_t(), scale.get_mpz_t(), c_[i]);
      w_.push_back(detail::acc_from_mpz<Acc>(q));
      ws_.push_back(ws_.back() + w_.back());
      ps_[i + 1] = ps_[i] + c_[i];
    }

    // gd_[h] divides every weight in c_[0 .. h), hence every reachable
    // remaining target once only those candidates are left.
    std::vector<std::uint64_t> primes;
    for (std::uint64_t a : c_) {
      for (std::uint64_t p : prime_factors(a)) primes.push_back(p);
    }
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    gd_.assign(k + 1, 1);
    mpz_class prefix_lcm = 1, g;
    for (std::size_t h = 1; h <= k; ++h) {
      mpz_lcm_ui(prefix_lcm.get_mpz_t(), prefix_lcm.get_mpz_t(), c_[h - 1]);
      mpz_divexact(g.get_mpz_t(), scale.get_mpz_t(), prefix_lcm.get_mpz_t());
      gd_[h] = detail::small_divisor(g, primes);
    }
  }

  // Returns false if the node cap fired.
  bool run(std::uint64_t n, const Acc& target) {
    go(c_.size(), n, target);
    return !exhausted_;
  }

  [[nodiscard]] std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  void go(std::size_t limit, std::uint64_t remaining, Acc target) {
    for (;;) {
      if (stop_) return;
      if (++nodes_ > max_nodes_) {
        exhausted_ = stop_ = true;
        return;
      }
      if (remaining == 0) {
        if (detail::acc_is_zero(target)) emit();
        return;
      }
      if (detail::acc_is_zero(target)) return;

      // usable candidates: c_[0 .. hi) with c <= remaining
      const auto first = c_.begin();
      const std::size_t hi =
          static_cast<std::size_t>(std::upper_bound(first, first + static_cast<std::ptrdiff_t>(limit), remaining) - first);
      if (hi == 0 || ps_[hi] < remaining) return;
      if (gd_[hi] > 1 && detail::acc_mod(target, gd_[hi]) != 0) return;

      // Most parts that fit: the t smallest. Reciprocal mass is at most theirs.
      const auto pfirst = ps_.begin();
      const std::size_t t = static_cast<std::size_t>(
          std::upper_bound(pfirst, pfirst + static_cast<std::ptrdiff_t>(hi) + 1, remaining) - pfirst - 1);
      if (ws_[t] < target) return;

      // Fewest parts that reach the sum: the largest ones. Mass is at least theirs.
      const std::size_t s = static_cast<std::size_t>(
          std::upper_bound(pfirst, pfirst + static_cast<std::ptrdiff_t>(hi) + 1, ps_[hi] - remaining) - pfirst - 1);
      if (target < ws_[hi] - ws_[s]) return;

      const std::size_t idx = hi - 1;
      if (w_[idx] <= target) {
        chosen_.push_back(c_[idx]);
        go(idx, remaining - c_[idx], target - w_[idx]);
        chosen_.pop_back();
      }
      limit = idx;
    }
  }

  void emit() {
    std::vector<std::uint64_t> parts(chosen_.rbegin(), chosen_.rend());
    if (!visit_(parts)) stop_ = true;
  }

  std::span<const std::uint64_t> c_;
  const Visitor& visit_;
  std::uint64_t max_nodes_;
  std::vector<Acc> w_;
  std::vector<Acc> ws_;
  std::vector<std::uint64_t> ps_;
  std::vector<std::uint64_t> gd_;
  std::vector<std::uint64_t> chosen_;
  std::uint64_t nodes_ = 0;
  bool stop_ = false;
  bool exhausted_ = false;
};

}  // namespace

bool search_pool(std::span<const std::uint64_t> pool, std::uint64_t n, const Rational& alpha,
                 std::optional<std::uint64_t> max_nodes, const Visitor& visit, std::uint64_t* nodes_out) {
  if (nodes_out) *nodes_out = 0;
  if (alpha.is_zero() || pool.empty()) return true;

  const mpz_class scale = detail::lcm_of(pool);
  // alpha * L must be an integer, otherwise no subset can hit alpha
  if (!mpz_divisible_p(scale.get_mpz_t(), alpha.den().get_mpz_t())) return true;
  mpz_class target = scale / alpha.den() * alpha.num();

  mpz_class total = 0;
  for (std::uint64_t a : pool) total += scale / a;
  if (target > total) return true;

  const std::size_t bits = mpz_sizeinbase(total.get_mpz_t(), 2) + 1;
  const std::uint64_t cap = max_nodes.value_or(std::numeric_limits<std::uint64_t>::max());
  return detail::with_accumulator(bits, [&]<class Acc>() {
    SubsetDfs<Acc> dfs(pool, scale, visit, cap);
    const bool finished = dfs.run(n, detail::acc_from_mpz<Acc>(target));
    if (nodes_out) *nodes_out = dfs.nodes();
    return finished;
  });
}

namespace {

// Sub-pools tried before the full pool. A hit in any of them is a valid
// witness; a miss proves nothing, so each gets a fixed node allowance.
constexpr std::array<std::array<std::uint64_t, 6>, 4> kStagePrimes{{
    {2, 3, 0, 0, 0, 0},
    {2, 3, 5, 0, 0, 0},
    {2, 3, 5, 7, 0, 0},
    {2, 3, 5, 7, 11, 13},
}};
constexpr std::uint64_t kStageNodes = 400'000;

std::optional<PartitionSet> first_in_pool(std::span<const std::uint64_t> pool, std::uint64_t n,
                                          const Rational& alpha, std::optional<std::uint64_t> max_nodes,
                                          bool& finished, std::uint64_t& nodes) {
  std::optional<PartitionSet> found;
  finished = search_pool(
      pool, n, alpha, max_nodes,
      [&](std::span<const std::uint64_t> parts) {
        found = make_partition(std::vector<std::uint64_t>(parts.begin(), parts.end()));
        return false;
      },
      &nodes);
  if (found) finished = true;
  return found;
}

}  // namespace

std::optional<PartitionSet> find_one(std::uint64_t n, const Rational& alpha, const ConstraintSpec& spec,
                                     const SearchBudget& budget) {
  if (n == 0) throw Error(ErrorCode::NonPositive, "n must be positive");
  if (alpha.is_zero()) throw Error(ErrorCode::InvalidRational, "alpha must be positive");
  const std::vector<std::uint64_t> pool = candidate_pool(n, spec);

  // the stages draw on the caller's node budget too
  std::optional<std::uint64_t> left = budget.max_nodes;
  std::size_t previous = 0;
  for (const auto& primes : kStagePrimes) {
    std::vector<std::uint64_t> set;
    for (std::uint64_t p : primes) {
      if (p != 0) set.push_back(p);
    }
    std::vector<std::uint64_t> sub;
    for (std::uint64_t a : pool) {
      if (is_smooth_over(a, set)) sub.push_back(a);
    }
    if (sub.size() == pool.size()) break;
    if (sub.size() == previous) continue;
    previous = sub.size();
    bool finished = false;
    std::uint64_t used = 0;
    const std::uint64_t cap = left ? std::min(*left, kStageNodes) : kStageNodes;
    if (auto hit = first_in_pool(sub, n, alpha, cap, finished, used)) return hit;
    if (left) *left -= std::min(*left, used);
  }

  bool finished = false;
  std::uint64_t used = 0;
  auto hit = first_in_pool(pool, n, alpha, left, finished, used);
  if (!finished) {
    throw Error(ErrorCode::BudgetExhausted, "node cap reached searching n=" + std::to_string(n));
  }
  return hit;
}

EnumerationResult enumerate_bounded(std::uint64_t n, const Rational& alpha, const ConstraintSpec& spec,
                                    const SearchBudget& budget) {
  if (n == 0) throw Error(ErrorCode::NonPositive, "n must be positive");
  if (alpha.is_zero()) throw Error(ErrorCode::InvalidRational, "alpha must be positive");
  const std::vector<std::uint64_t> pool = candidate_pool(n, spec);
  EnumerationResult out;
  bool capped = false;
  const bool finished = search_pool(
      pool, n, alpha, budget.max_nodes,
      [&](std::span<const std::uint64_t> parts) {
        if (budget.max_solutions && out.solutions.size() >= *budget.max_solutions) {
          capped = true;
          return false;
        }
        out.solutions.push_back(make_partition(std::vector<std::uint64_t>(parts.begin(), parts.end())));
        return true;
      },
      &out.nodes);
  out.complete = finished && !capped;
  std::sort(out.solutions.begin(), out.solutions.end());
  return out;
}

std::vector<PartitionSet> enumerate(std::uint64_t n, const Rational& alpha, const ConstraintSpec& spec,
                                    const SearchBudget& budget) {
  EnumerationResult r = enumerate_bounded(n, alpha, spec, budget);
  if (!r.complete) {
    throw Error(ErrorCode::BudgetExhausted, "enumeration of n=" + std::to_string(n) + " stopped at a cap");
  }
  return std::move(r.solutions);
}

std::uint64_t count_partitions(std::uint64_t n, const Rational& alpha, const ConstraintSpec& spec,
                               const SearchBudget& budget) {
  if (n == 0) throw Error(ErrorCode::NonPositive, "n must be positive");
  const std::vector<std::uint64_t> pool = candidate_pool(n, spec);
  std::uint64_t count = 0;
  bool capped = false;
  const bool finished = search_pool(pool, n, alpha, budget.max_nodes, [&](std::span<const std::uint64_t>) {
    if (budget.max_solutions && count >= *budget.max_solutions) {
      capped = true;
      return false;
    }
    ++count;
    return true;
  });
  if (!finished || capped) {
    throw Error(ErrorCode::BudgetExhausted, "count of n=" + std::to_string(n) + " stopped at a cap");
  }
  return count;
}

RangeReport verify_range(const Rational& alpha, const ConstraintSpec& spec, std::uint64_t lo, std::uint64_t hi,
                         std::optional<ResidueFilter> residue_filter, const RangeOptions& options) {
  if (lo > hi) throw Error(ErrorCode::InvalidSpec, "empty range: lo > hi");
  if (lo == 0) throw Error(ErrorCode::NonPositive, "range must start at 1 or above");
  if (residue_filter && residue_filter->modulus == 0) throw Error(ErrorCode::InvalidSpec, "residue modulus is 0");
  const ConstraintSpec s = spec.normalized();

  std::vector<std::uint64_t> targets;
  for (std::uint64_t n = lo; n <= hi; ++n) {
    if (!residue_filter || residue_filter->accepts(n)) targets.push_back(n);
    if (n == std::numeric_limits<std::uint64_t>::max()) break;
  }

  enum class Outcome { Found, Absent, Unknown };
  std::vector<Outcome> outcome(targets.size(), Outcome::Unknown);
  std::vector<std::optional<PartitionSet>> found(targets.size());
  parallel_for(targets.size(), options.jobs, [&](std::size_t i) {
    try {
      found[i] = find_one(targets[i], alpha, s, options.budget);
      outcome[i] = found[i] ? Outcome::Found : Outcome::Absent;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExhausted) throw;
      outcome[i] = Outcome::Unknown;
    }
  });

  RangeReport report;
  report.lo = lo;
  report.hi = hi;
  report.residue_filter = residue_filter;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    switch (outcome[i]) {
      case Outcome::Found: report.witnesses.emplace(targets[i], *std::move(found[i])); break;
      case Outcome::Absent: report.failures.push_back(targets[i]); break;
      case Outcome::Unknown: report.unknown.push_back(targets[i]); break;
    }
  }
  return report;
}

}  // namespace recipart
