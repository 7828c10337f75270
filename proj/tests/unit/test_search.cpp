#include <doctest.h>

#include "bridge.hpp"
#include "recipart/errors.hpp"
#include "recipart/search.hpp"

using namespace recipart;

namespace {

std::vector<oracle::Parts> lib_parts(const std::vector<PartitionSet>& v) {
  std::vector<oracle::Parts> out;
  for (const auto& s : v) out.push_back(bridge::parts_of(s));
  return out;
}

}  // namespace

TEST_CASE("enumerate matches the naive oracle for small n") {
  std::vector<ConstraintSpec> specs(3);
  specs[1].m_free = {2};
  specs[2].allowed_primes = std::vector<std::uint64_t>{2, 3};
  const std::vector<Rational> alphas{Rational(1), Rational(3, 2), Rational(2)};
  for (std::uint64_t n = 1; n <= 30; ++n) {
    for (const auto& a : alphas) {
      for (const auto& s : specs) {
        const auto expect = oracle::alpha_partitions(n, bridge::to_mpq(a), bridge::to_oracle(s));
        CHECK(lib_parts(enumerate(n, a, s)) == expect);
        CHECK(count_partitions(n, a, s) == expect.size());
        CHECK(find_one(n, a, s).has_value() == !expect.empty());
      }
    }
  }
}

TEST_CASE("worked examples") {
  CHECK(find_one(11, Rational(1), {})->str() == "2,3,6");
  const auto p91 = enumerate(91, Rational(1), {});
  REQUIRE(p91.size() == 1);
  CHECK(p91[0].str() == "3,4,6,11,12,22,33");
  ConstraintSpec seven;
  seven.m_free = {7};
  CHECK(!find_one(96, Rational(1), seven));
  CHECK(find_one(97, Rational(1), seven));
}

TEST_CASE("candidate pool respects the spec") {
  ConstraintSpec s;
  s.allowed_primes = std::vector<std::uint64_t>{2, 3};
  s.forbidden = {1};
  CHECK(candidate_pool(20, s) == std::vector<std::uint64_t>{2, 3, 4, 6, 8, 9, 12, 16, 18});
  ConstraintSpec t;
  t.min_part = 5;
  t.max_part = 8;
  CHECK(candidate_pool(100, t) == std::vector<std::uint64_t>{5, 6, 7, 8});
  CHECK(candidate_pool(3, {}) == std::vector<std::uint64_t>{1, 2, 3});
}

TEST_CASE("budgets report exhaustion rather than absence") {
  SearchBudget tiny;
  tiny.max_nodes = 3;
  CHECK_THROWS_AS(enumerate(151, Rational(1), {}, tiny), Error);
  const EnumerationResult r = enumerate_bounded(151, Rational(1), {}, tiny);
  CHECK(!r.complete);
  SearchBudget two;
  two.max_solutions = 2;
  const EnumerationResult s = enumerate_bounded(96, Rational(1), {}, two);
  CHECK(s.solutions.size() == 2);
  CHECK(!s.complete);
  try {
    (void)find_one(5000, Rational(1, 7), {}, tiny);
    FAIL("expected BudgetExhausted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExhausted);
  }
}

TEST_CASE("search_pool visits every exact subset") {
  const std::vector<std::uint64_t> pool{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  std::vector<oracle::Parts> seen;
  const bool done = search_pool(pool, 24, Rational(1), std::nullopt, [&](std::span<const std::uint64_t> p) {
    seen.emplace_back(p.begin(), p.end());
    return true;
  });
  CHECK(done);
  std::sort(seen.begin(), seen.end());
  oracle::Spec cap;
  cap.max_part = 12;
  CHECK(seen == oracle::alpha_partitions(24, 1, cap));
}

TEST_CASE("verify_range buckets and residue filter") {
  ConstraintSpec seven;
  seven.m_free = {7};
  RangeOptions o;
  o.jobs = 2;
  const RangeReport r = verify_range(Rational(1), seven, 90, 100, std::nullopt, o);
  CHECK(r.witnesses.size() + r.failures.size() + r.unknown.size() == 11);
  CHECK(std::find(r.failures.begin(), r.failures.end(), 96) != r.failures.end());
  for (const auto& [n, w] : r.witnesses) {
    CHECK(oracle::is_valid(bridge::parts_of(w), n, 1, bridge::to_oracle(seven)));
  }
  const RangeReport f = verify_range(Rational(1), {}, 78, 120, ResidueFilter{8, 1}, o);
  for (const auto& [n, w] : f.witnesses) CHECK(n % 8 == 1);
  CHECK(f.holds());
  CHECK_THROWS_AS(verify_range(Rational(1), {}, 10, 5), Error);
}

TEST_CASE("invalid inputs") {
  CHECK(!find_one(1, Rational(2), {}));
  ConstraintSpec bad;
  bad.m_free = {0};
  CHECK_THROWS_AS((void)find_one(10, Rational(1), bad), Error);
}
