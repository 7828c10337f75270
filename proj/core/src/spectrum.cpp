#include "recipart/spectrum.hpp"

#include <algorithm>
#include <unordered_set>

#include "recipart/errors.hpp"
#include "recipart/parallel.hpp"
#include "scaled.hpp"

namespace recipart {

bool RationalSet::contains(const Rational& r) const {
  return std::binary_search(members.begin(), members.end(), r);
}

const RationalSet& WindowSweep::at(std::uint64_t k) const {
  if (k < first || k > hi) throw Error(ErrorCode::InvalidSpec, "window " + std::to_string(k) + " not in sweep");
  return windows[k - first];
}

namespace {

// Reciprocal sums are keyed as integers over L = lcm(1..N), so the keys of
// B(i) for every i <= N live in one space and intersect by plain equality.
template <class Acc>
class DistinctPartitions {
 public:
  explicit DistinctPartitions(std::uint64_t top) : scale_(1) {
    mpz_class a;
    for (std::uint64_t i = 1; i <= top; ++i) mpz_lcm_ui(scale_.get_mpz_t(), scale_.get_mpz_t(), i);
    weight_.resize(top + 1);
    for (std::uint64_t i = 1; i <= top; ++i) {
      mpz_divexact_ui(a.get_mpz_t(), scale_.get_mpz_t(), i);
      weight_[i] = Acc::from_mpz(a);
    }
  }

  [[nodiscard]] const mpz_class& scale() const noexcept { return scale_; }

  /// fn(key) for every partition of n into distinct parts.
  template <class Fn>
  void for_each(std::uint64_t n, Fn&& fn) const {
    rec(n, n, Acc{}, fn);
  }

 private:
  template <class Fn>
  void rec(std::uint64_t max_part, std::uint64_t remaining, const Acc& acc, Fn& fn) const {
    if (remaining == 0) {
      fn(acc);
      return;
    }
    // the largest part a must satisfy 1 + 2 + ... + a >= remaining
    std::uint64_t lowest = 1;
    while (lowest * (lowest + 1) / 2 < remaining) ++lowest;
    for (std::uint64_t a = std::min(max_part, remaining); a >= lowest; --a) {
      rec(a - 1, remaining - a, acc + weight_[a], fn);
    }
  }

  mpz_class scale_;
  std::vector<Acc> weight_;
};

template <class Acc>
using KeySet = std::unordered_set<Acc, WideUintHash<sizeof(Acc) / 8>>;

template <class Acc>
RationalSet to_rational_set(const KeySet<Acc>& keys, const mpz_class& scale, std::uint64_t n, std::uint64_t N) {
  RationalSet out;
  out.n = n;
  out.N = N;
  out.members.reserve(keys.size());
  for (const Acc& k : keys) out.members.emplace_back(k.to_mpz(), scale);
  std::sort(out.members.begin(), out.members.end());
  return out;
}

template <class Acc>
KeySet<Acc> collect(const DistinctPartitions<Acc>& parts, std::uint64_t n) {
  KeySet<Acc> keys;
  parts.for_each(n, [&](const Acc& k) { keys.insert(k); });
  return keys;
}

template <class Acc>
KeySet<Acc> filter(const DistinctPartitions<Acc>& parts, std::uint64_t i, const KeySet<Acc>& keep) {
  KeySet<Acc> hits;
  parts.for_each(i, [&](const Acc& k) {
    if (keep.count(k) != 0) hits.insert(k);
  });
  return hits;
}

template <class Acc>
void intersect_into(KeySet<Acc>& running, const KeySet<Acc>& other) {
  for (auto it = running.begin(); it != running.end();) {
    it = other.count(*it) != 0 ? std::next(it) : running.erase(it);
  }
}

// B(n, N) as keys: B(n) filtered by each B(i), i = n+1..N in turn.
template <class Acc>
KeySet<Acc> window_keys(const DistinctPartitions<Acc>& parts, std::uint64_t n, std::uint64_t N, std::size_t jobs) {
  KeySet<Acc> running = collect(parts, n);
  if (N == n || running.empty()) return running;
  if (jobs <= 1) {
    for (std::uint64_t i = n + 1; i <= N && !running.empty(); ++i) running = filter(parts, i, running);
    return running;
  }
  std::vector<KeySet<Acc>> hits(N - n);
  parallel_for(hits.size(), jobs, [&](std::size_t j) { hits[j] = filter(parts, n + 1 + j, running); });
  for (const auto& h : hits) intersect_into(running, h);
  return running;
}

// Accumulator wide enough for every key over lcm(1..N): the largest is
// L * H_N < L * (1 + ln N).
template <class Fn>
decltype(auto) with_window_accumulator(std::uint64_t N, Fn&& fn) {
  mpz_class l = 1;
  for (std::uint64_t i = 1; i <= N; ++i) mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), i);
  const std::size_t bits = mpz_sizeinbase(l.get_mpz_t(), 2) + 8;
  if (bits >= 512) throw Error(ErrorCode::InvalidSpec, "N=" + std::to_string(N) + " is too large for B(n) sweeps");
  if (bits < 64) return fn.template operator()<WideUint<1>>();
  if (bits < 128) return fn.template operator()<WideUint<2>>();
  if (bits < 192) return fn.template operator()<WideUint<3>>();
  if (bits < 256) return fn.template operator()<WideUint<4>>();
  if (bits < 384) return fn.template operator()<WideUint<6>>();
  return fn.template operator()<WideUint<8>>();
}

}  // namespace

RationalSet build_B(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::NonPositive, "n must be positive");
  return with_window_accumulator(n, [&]<class Acc>() {
    DistinctPartitions<Acc> parts(n);
    return to_rational_set(collect(parts, n), parts.scale(), n, n);
  });
}

RationalSet build_B_window(std::uint64_t n, std::uint64_t N, std::size_t jobs) {
  if (n == 0) throw Error(ErrorCode::NonPositive, "n must be positive");
  if (n > N) throw Error(ErrorCode::InvalidSpec, "window needs n <= N");
  return with_window_accumulator(N, [&]<class Acc>() {
    DistinctPartitions<Acc> parts(N);
    return to_rational_set(window_keys(parts, n, N, jobs), parts.scale(), n, N);
  });
}

WindowSweep sweep_windows(std::uint64_t lo, std::uint64_t hi, std::uint64_t N, std::size_t jobs) {
  if (lo == 0) throw Error(ErrorCode::NonPositive, "lo must be positive");
  if (lo > hi || hi > N) throw Error(ErrorCode::InvalidSpec, "sweep needs lo <= hi <= N");
  WindowSweep sweep;
  sweep.lo = lo;
  sweep.hi = hi;
  sweep.N = N;
  sweep.first = lo > 1 ? lo - 1 : 1;
  sweep.windows.resize(hi - sweep.first + 1);

  with_window_accumulator(N, [&]<class Acc>() {
    DistinctPartitions<Acc> parts(N);
    KeySet<Acc> running = window_keys(parts, hi, N, jobs);
    sweep.windows.back() = to_rational_set(running, parts.scale(), hi, N);
    if (hi == sweep.first) return 0;

    // B(k, N) = B(k) ∩ B(k+1, N), walking down from hi; each B(k, N) is a
    // subset of B(hi, N), so B(k) only ever needs filtering against it.
    std::vector<KeySet<Acc>> hits(hi - sweep.first);
    parallel_for(hits.size(), jobs, [&](std::size_t j) { hits[j] = filter(parts, sweep.first + j, running); });
    for (std::uint64_t k = hi; k-- > sweep.first;) {
      intersect_into(running, hits[k - sweep.first]);
      sweep.windows[k - sweep.first] = to_rational_set(running, parts.scale(), k, N);
    }
    return 0;
  });
  return sweep;
}

std::vector<GrowthRow> growth_table(const WindowSweep& sweep) {
  std::vector<GrowthRow> rows;
  for (std::uint64_t k = sweep.lo; k <= sweep.hi; ++k) {
    const RationalSet& cur = sweep.at(k);
    std::uint64_t fresh = cur.size();
    if (k > sweep.first) {
      // B(k-1, N) is a subset of B(k, N), so the difference is a count gap
      fresh -= sweep.at(k - 1).size();
    }
    rows.push_back({k, fresh});
  }
  return rows;
}

std::vector<GrowthRow> growth_table(std::uint64_t lo, std::uint64_t hi, std::uint64_t N, std::size_t jobs) {
  return growth_table(sweep_windows(lo, hi, N, jobs));
}

std::string growth_csv(std::span<const GrowthRow> rows) {
  std::string out = "n,count\n";
  for (const GrowthRow& r : rows) out += std::to_string(r.n) + "," + std::to_string(r.count) + "\n";
  return out;
}

}  // namespace recipart
