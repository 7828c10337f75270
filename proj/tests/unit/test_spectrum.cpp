#include <doctest.h>

#include "bridge.hpp"
#include "recipart/errors.hpp"
#include "recipart/spectrum.hpp"

using namespace recipart;

namespace {

std::set<mpq_class> as_set(const RationalSet& s) {
  std::set<mpq_class> out;
  for (const auto& r : s.members) out.insert(bridge::to_mpq(r));
  return out;
}

}  // namespace

TEST_CASE("B(n) matches the naive oracle") {
  CHECK(build_B(3).members == std::vector<Rational>{Rational(1, 3), Rational(3, 2)});
  for (std::uint64_t n = 1; n <= 30; ++n) CHECK(as_set(build_B(n)) == oracle::reciprocal_sums(n));
}

TEST_CASE("windows are intersections of B(i)") {
  for (std::uint64_t n = 10; n <= 22; n += 3) {
    const std::uint64_t N = n + 6;
    std::set<mpq_class> expect = oracle::reciprocal_sums(n);
    for (std::uint64_t i = n + 1; i <= N; ++i) {
      const auto b = oracle::reciprocal_sums(i);
      std::set<mpq_class> keep;
      for (const auto& x : expect) {
        if (b.count(x)) keep.insert(x);
      }
      expect = keep;
    }
    CHECK(as_set(build_B_window(n, N, 1)) == expect);
    CHECK(as_set(build_B_window(n, N, 3)) == expect);
  }
}

TEST_CASE("sweep agrees with direct windows and growth telescopes") {
  const WindowSweep sweep = sweep_windows(20, 30, 34, 2);
  CHECK(sweep.first == 19);
  std::uint64_t total = 0;
  for (std::uint64_t k = 19; k <= 30; ++k) {
    CHECK(sweep.at(k).members == build_B_window(k, 34).members);
    if (k > 19) {
      // monotone: B(k-1, N) is contained in B(k, N)
      for (const auto& r : sweep.at(k - 1).members) CHECK(sweep.at(k).contains(r));
    }
  }
  for (const GrowthRow& g : growth_table(sweep)) total += g.count;
  CHECK(total == sweep.at(30).size() - sweep.at(19).size());
  CHECK_THROWS_AS((void)sweep.at(31), Error);
  CHECK(growth_csv(growth_table(sweep)).rfind("n,count\n", 0) == 0);
}

TEST_CASE("B(65,78) is empty") { CHECK(build_B_window(65, 78, 1).empty()); }

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(build_B(0), Error);
  CHECK_THROWS_AS(build_B_window(5, 4), Error);
  CHECK_THROWS_AS(sweep_windows(5, 10, 8), Error);
}
