#include <doctest.h>

#include <numeric>
#include <random>

#include "bridge.hpp"
#include "recipart/builtin_tables.hpp"
#include "recipart/congruence.hpp"
#include "recipart/errors.hpp"
#include "recipart/nm.hpp"
#include "recipart/prover.hpp"
#include "recipart/suggest.hpp"

using namespace recipart;

namespace {

ProofTable one_row_table(std::uint64_t m, Rational beta, std::vector<std::uint64_t> A, ConstraintSpec Q = {}) {
  ProofTable t;
  t.alpha = make_partition_allow_empty(A).alpha() + beta / Rational(m);
  t.S = {t.alpha, beta};
  t.Q = std::move(Q);
  t.X = 10;
  t.rows = {{1, m, beta, make_partition_allow_empty(std::move(A))}};
  return t;
}

// Covering check written independently of the library: a residue is hit
// when some row's sum agrees with it mod that row's modulus.
bool covers_brute(const ProofTable& t) {
  std::uint64_t L = 1;
  for (const auto& r : t.rows) L = std::lcm(L, r.m);
  for (std::uint64_t x = 0; x < L; ++x) {
    bool hit = false;
    for (const auto& r : t.rows) hit = hit || (x % r.m == r.A.n() % r.m);
    if (!hit) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("every built-in table passes all five properties") {
  std::vector<std::string> names{"graham-q", "graham-s", "sp(3)", "sp(5)", "sp(7)", "m469", "m469(6)", "m469(9)",
                                 "odd15"};
  for (std::uint64_t k = 2; k <= 5; ++k) names.push_back("arbsmall(" + std::to_string(k) + ")");
  for (const auto& name : names) {
    CAPTURE(name);
    const TableCollection c = builtin_tables(name);
    for (const PropertyReport& r : check_properties(c)) {
      CAPTURE(r.alpha.str());
      for (const auto& p : r.properties) CHECK_MESSAGE(p.status == PropertyStatus::Verified, p.detail);
    }
    for (const ProofTable& t : c.tables) {
      CHECK(check_table(t).properties[1].status == PropertyStatus::Verified);
      CHECK(covers_brute(t));
    }
  }
}

TEST_CASE("built-in table shapes") {
  const TableCollection odd = builtin_tables("odd15");
  REQUIRE(odd.tables.size() == 1);
  REQUIRE(odd.tables[0].rows.size() == 15);
  for (const ProofRow& r : odd.tables[0].rows) {
    CHECK(r.A.n() % 15 == r.index % 15);
    CHECK(r.A.alpha() == Rational(14, 15));
  }
  CHECK(check_congruence_variant(odd.tables[0]).status == PropertyStatus::Verified);

  const TableCollection m = builtin_tables("m469");
  REQUIRE(m.tables.size() == 2);
  for (const ProofTable& t : m.tables) {
    REQUIRE(t.rows.size() == 5);
    for (const ProofRow& r : t.rows) CHECK(r.A.n() % 5 == r.index % 5);
  }

  const TableCollection arb = builtin_tables("arbsmall(3,2/9)");
  REQUIRE(arb.tables.size() == 1);
  std::vector<std::uint64_t> ms;
  for (const ProofRow& r : arb.tables[0].rows) ms.push_back(r.m);
  CHECK(ms == std::vector<std::uint64_t>{4, 2, 4});

  const TableCollection sp5 = builtin_tables("sp(5)");
  CHECK(sp5.S().size() == 21);
  for (const ProofTable& t : sp5.tables) CHECK(check_congruence_variant(t).status == PropertyStatus::Verified);

  const TableCollection sp3 = sp_tables(3);
  const ProofTable* t49 = sp3.find(Rational(4, 9));
  REQUIRE(t49);
  CHECK(t49->rows[0].beta == Rational(2, 3));
  CHECK(t49->rows[0].A.str() == "9");
  const ProofTable* t10 = sp3.find(Rational(10, 9));
  REQUIRE(t10);
  CHECK(t10->rows[0].beta == Rational(2));
  CHECK(t10->rows[1].A.str() == "3,9");

  CHECK_THROWS_AS(builtin_tables("nonsense"), Error);
  CHECK_THROWS_AS(sp_tables(9), Error);
}

TEST_CASE("arbsmall bound") {
  CHECK(arbsmall_bound(2) == 814);
  CHECK(arbsmall_bound(3) == 4138);
  CHECK(arbsmall_bound(4) == 19198);
}

TEST_CASE("window bounds") {
  CHECK(window_bound(builtin_tables("graham-q"), 78) == 333);
  CHECK(window_bound(builtin_tables("odd15"), 3609) == 67098);
  CHECK(window_bound(builtin_tables("sp(3)"), 814) == 1638);
  CHECK(window_bound(builtin_tables("sp(5)"), 6482) == 12992);
  CHECK(window_bound(builtin_tables("m469"), 211) == 1451);
  const TableCollection g = builtin_tables("graham-s");
  for (std::uint64_t x = 1; x < 200; ++x) CHECK(window_bound(g, x) < window_bound(g, x + 1));
}

TEST_CASE("property failures are reported, not thrown") {
  // wrong reciprocal sum
  ProofTable t = one_row_table(1, Rational(1), {2});
  t.rows[0].beta = Rational(1, 2);
  t.S.push_back(Rational(1, 2));
  CHECK(check_table(t).properties[2].status == PropertyStatus::Refuted);

  // beta outside S
  ProofTable u = one_row_table(2, Rational(1), {3});
  u.S = {u.alpha};
  CHECK(check_table(u).properties[0].status == PropertyStatus::Refuted);

  // one row with m = 2 leaves a residue uncovered
  CHECK(check_table(one_row_table(2, Rational(1), {3})).properties[1].status == PropertyStatus::Refuted);

  // 4 = 2*2 could collide with 2B
  CHECK(check_table(one_row_table(2, Rational(1), {3, 4})).properties[3].status == PropertyStatus::Inconclusive);

  // m a multiple of the forbidden divisor
  ConstraintSpec q;
  q.m_free = {2};
  CHECK(check_table(one_row_table(2, Rational(1), {3}, q)).properties[4].status == PropertyStatus::Refuted);
  ConstraintSpec q6;
  q6.m_free = {6};
  CHECK(check_table(one_row_table(2, Rational(1), {5}, q6)).properties[4].status == PropertyStatus::Inconclusive);
}

TEST_CASE("missing tables and gcd violations throw") {
  TableCollection c = builtin_tables("graham-s");
  c.tables.pop_back();
  CHECK_THROWS_AS(check_properties(c), Error);
  ProofTable t = builtin_tables("graham-q").tables[0];
  t.M_prime = 8;
  try {
    (void)check_congruence_variant(t);
    FAIL("expected GcdViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GcdViolation);
  }
}

TEST_CASE("property 2 agrees with brute force on random tables") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    ProofTable t;
    t.alpha = Rational(1);
    t.S = {Rational(1)};
    const std::size_t rows = 1 + rng() % 4;
    for (std::size_t i = 0; i < rows; ++i) {
      std::vector<std::uint64_t> A;
      for (std::uint64_t a = 2; a < 12; ++a) {
        if (rng() % 3 == 0) A.push_back(a);
      }
      t.rows.push_back({i + 1, 2 + rng() % 5, Rational(1), make_partition_allow_empty(A)});
    }
    const bool verified = check_table(t).properties[1].status == PropertyStatus::Verified;
    CHECK(verified == covers_brute(t));
  }
}

TEST_CASE("strip elements") {
  const PartitionSet s = strip_elements(make_partition({2, 3, 6}), std::vector<std::uint64_t>{6});
  CHECK(s.str() == "2,3");
  CHECK(s.alpha() == Rational(5, 6));
  CHECK(strip_elements(s, {}) == s);
  CHECK_THROWS_AS(strip_elements(s, std::vector<std::uint64_t>{7}), Error);
}

TEST_CASE("base windows") {
  const SearchProvider search;
  CHECK(check_base_window(builtin_tables("graham-s"), 79, search).holds());
  const BaseWindowReport q = check_base_window(builtin_tables("graham-q"), 78, search);
  CHECK(q.holds());
  CHECK(q.window == 333);
  const BaseWindowReport low = check_base_window(builtin_tables("graham-q"), 10, search);
  CHECK(!low.holds());
  const auto& f = low.per_alpha.at(Rational(1)).failures;
  CHECK(std::find(f.begin(), f.end(), 10) != f.end());
  CHECK(find_least_X(builtin_tables("graham-q"), 1, 100, search) == 78u);
}

TEST_CASE("construct is sound on sampled n") {
  const SearchProvider search;
  std::mt19937_64 rng(5);
  struct Case {
    const char* table;
    Rational alpha;
    std::uint64_t mod;
  };
  const std::vector<Case> cases{{"graham-q", Rational(1), 1}, {"graham-s", Rational(4, 3), 1},
                                {"graham-s", Rational(2), 1}, {"m469", Rational(5, 6), 1},
                                {"sp(3)", Rational(10, 9), 1}, {"odd15", Rational(1), 8}};
  for (const Case& c : cases) {
    const TableCollection t = builtin_tables(c.table);
    const std::uint64_t W = window_bound(t, *t.X());
    for (int i = 0; i < 15; ++i) {
      std::uint64_t n = *t.X() + rng() % (10 * W);
      if (c.mod > 1) n += (c.mod + residue_of(c.alpha, c.mod) - n % c.mod) % c.mod;
      CAPTURE(c.table);
      CAPTURE(n);
      const ConstructResult r = construct(c.alpha, n, t, search);
      CHECK(oracle::is_valid(bridge::parts_of(r.set), n, bridge::to_mpq(c.alpha), bridge::to_oracle(t.Q())));
      if (n > W) CHECK(!r.steps.empty());
      double bound = std::log2(static_cast<double>(n)) + 1;
      CHECK(static_cast<double>(r.steps.size()) <= bound);
      CHECK(r.base_source == "search");
    }
  }
}

TEST_CASE("construct preconditions") {
  const SearchProvider search;
  const TableCollection q = builtin_tables("graham-q");
  CHECK_THROWS_AS(construct(Rational(1), 50, q, search), Error);
  const TableCollection odd = builtin_tables("odd15");
  try {
    (void)construct(Rational(1), 4000, odd, search);
    FAIL("expected CongruenceViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CongruenceViolation);
  }
  const StoreProvider empty;
  try {
    (void)construct(Rational(1), 1001, q, empty);
    FAIL("expected MissingBaseCertificate");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingBaseCertificate);
  }
}

TEST_CASE("construct for alpha = 2 uses the m = 1 rule") {
  const SearchProvider search;
  const ConstructResult r = construct(Rational(2), 500, builtin_tables("graham-s"), search);
  REQUIRE(!r.steps.empty());
  CHECK(r.steps[0].m == 1);
  CHECK(r.set.contains(1));
  CHECK(r.set.alpha() == Rational(2));
}

TEST_CASE("store and chain providers") {
  StoreProvider store;
  store.add(Rational(1), make_partition({2, 3, 6}));
  CHECK(store.witness(Rational(1), 11, {}).status == WitnessStatus::Found);
  CHECK(store.witness(Rational(1), 12, {}).status == WitnessStatus::Unknown);
  ConstraintSpec no2;
  no2.forbidden = {2};
  CHECK(store.witness(Rational(1), 11, no2).status == WitnessStatus::Unknown);
  const SearchProvider search;
  const ChainProvider chain({&store, &search});
  CHECK(chain.witness(Rational(1), 11, {}).source == "store");
  CHECK(chain.witness(Rational(1), 24, {}).source == "search");
  CHECK(chain.witness(Rational(1), 5, {}).status == WitnessStatus::Absent);
}

TEST_CASE("suggest_rows") {
  ConstraintSpec q;
  q.forbidden = {1, 39};
  SuggestParams p;
  p.m_values = {2};
  p.pool_max = 100;
  p.max_set_size = 4;
  const SuggestResult r = suggest_rows(Rational(1), {Rational(1)}, q, p);
  CHECK(r.covers());
  ProofTable t;
  t.alpha = Rational(1);
  t.S = {Rational(1)};
  t.Q = q;
  t.X = 78;
  t.rows = r.rows;
  const PropertyReport rep = check_table(t);
  CHECK(rep.all_verified());
  bool even_two = false;
  for (const auto& row : r.rows) even_two = even_two || row.A.str() == "2";
  CHECK(even_two);

  const SuggestResult two = suggest_rows(Rational(2), {Rational(1), Rational(2)}, {}, {});
  REQUIRE(two.rows.size() == 1);
  CHECK(two.rows[0].m == 1);
  CHECK(two.rows[0].A.str() == "1");

  SuggestParams none;
  none.pool_max = 0;
  CHECK_THROWS_AS(suggest_rows(Rational(1), {Rational(1)}, q, none), Error);
}

TEST_CASE("N_M values and classification") {
  CHECK(nm_value(7).value == 97);
  CHECK(!nm_value(2).exact);
  CHECK(nm_value(2).congruence_caveat == 8u);
  CHECK(nm_value(3).congruence_caveat == 3u);
  CHECK(nm_value(13).value == 78);
  CHECK(nm_classify(13).classification == NmClass::PrimeGe11);
  CHECK(nm_classify(35).divisor_witness == 35u);
  CHECK(nm_classify(50).classification == NmClass::Prime5Family);
  CHECK(nm_classify(48).divisor_witness == 16u);
  CHECK(nm_classify(12).classification == NmClass::TableEntry);
  CHECK_THROWS_AS(nm_classify(1), Error);
  // every M up to 2000 has a classification
  for (std::uint64_t m = 2; m <= 2000; ++m) CHECK_NOTHROW(nm_classify(m));
}

TEST_CASE("nm_verify on a small case") {
  RangeOptions o;
  o.jobs = 1;
  const NmVerification v = nm_verify(7, 120, o);
  CHECK(v.failure_n == 96u);
  CHECK(v.failure_confirmed);
  CHECK(v.holds());
}
