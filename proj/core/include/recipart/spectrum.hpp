#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "recipart/rational.hpp"

namespace recipart {

/// A finite set of rationals in ascending order, tagged with the window
/// [n, N] it was built for (N == n for a single B(n)).
struct RationalSet {
  std::uint64_t n = 0;
  std::uint64_t N = 0;
  std::vector<Rational> members;  // ascending, unique

  [[nodiscard]] bool contains(const Rational& r) const;
  [[nodiscard]] std::size_t size() const noexcept { return members.size(); }
  [[nodiscard]] bool empty() const noexcept { return members.empty(); }
};

/// Reciprocal sums of every partition of n into distinct parts.
RationalSet build_B(std::uint64_t n);

/// Intersection of B(i) over n <= i <= N, folded one B(i) at a time.
/// With jobs > 1 the B(i) are filtered concurrently against B(n) first.
RationalSet build_B_window(std::uint64_t n, std::uint64_t N, std::size_t jobs = 1);

/// All windows B(k, N) for lo - 1 <= k <= hi (k >= 1), from one sweep.
struct WindowSweep {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::uint64_t N = 0;
  std::vector<RationalSet> windows;  // windows[k - first] is B(k, N)
  std::uint64_t first = 0;           // max(lo - 1, 1)

  [[nodiscard]] const RationalSet& at(std::uint64_t k) const;
};

WindowSweep sweep_windows(std::uint64_t lo, std::uint64_t hi, std::uint64_t N, std::size_t jobs = 1);

struct GrowthRow {
  std::uint64_t n = 0;
  std::uint64_t count = 0;  // |B(n, N) \ B(n - 1, N)|
  friend bool operator==(const GrowthRow&, const GrowthRow&) = default;
};

std::vector<GrowthRow> growth_table(const WindowSweep& sweep);
std::vector<GrowthRow> growth_table(std::uint64_t lo, std::uint64_t hi, std::uint64_t N, std::size_t jobs = 1);

/// "n,count" CSV with a header line.
std::string growth_csv(std::span<const GrowthRow> rows);

}  // namespace recipart
