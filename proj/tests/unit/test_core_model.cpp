#include <doctest.h>

#include <random>

#include "bridge.hpp"
#include "recipart/congruence.hpp"
#include "recipart/errors.hpp"
#include "recipart/number_theory.hpp"

using namespace recipart;

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(6, 4).str() == "3/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational::parse("7").is_integer());
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("-1/2"), Error);
  CHECK_THROWS_AS(Rational::parse("abc"), Error);
  CHECK_THROWS_AS(Rational::parse(""), Error);
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(2) - Rational(1, 2) == Rational(3, 2));
  CHECK_THROWS_AS(Rational(1, 3) - Rational(1, 2), Error);
  CHECK(!Rational::checked_sub(Rational(1, 3), Rational(1, 2)));
  CHECK(Rational(3, 4) / Rational(3) == Rational(1, 4));
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("rational arithmetic agrees with mpq on random values") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const std::uint64_t a = rng() % 1000 + 1, b = rng() % 1000 + 1, c = rng() % 1000 + 1, d = rng() % 1000 + 1;
    const Rational x(a, b), y(c, d);
    mpq_class qx(a, b), qy(c, d);
    qx.canonicalize();
    qy.canonicalize();
    CHECK(bridge::to_mpq(x + y) == qx + qy);
    CHECK(bridge::to_mpq(x * y) == qx * qy);
    CHECK((x < y) == (qx < qy));
    CHECK(std::hash<Rational>{}(x) == std::hash<Rational>{}(Rational(a * 3, b * 3)));
  }
}

TEST_CASE("number theory helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK(!is_prime(1));
  CHECK(!is_prime(91));
  CHECK(prime_factors(360) == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(largest_prime_factor(63) == 7);
  const std::vector<std::uint64_t> p{2, 3};
  CHECK(is_smooth_over(72, p));
  CHECK(!is_smooth_over(10, p));
  CHECK(mod_inverse(3, 8) == 3u);
  CHECK(!mod_inverse(2, 8));
}

TEST_CASE("make_partition validates and canonicalizes") {
  const PartitionSet s = make_partition({6, 2, 3});
  CHECK(s.str() == "2,3,6");
  CHECK(s.n() == 11);
  CHECK(s.alpha() == Rational(1));
  CHECK(s.contains(3));
  CHECK(!s.contains(4));
  CHECK_THROWS_AS(make_partition({2, 2}), Error);
  CHECK_THROWS_AS(make_partition({0, 3}), Error);
  CHECK_THROWS_AS(make_partition({}), Error);
  CHECK(make_partition_allow_empty({}).n() == 0);
  CHECK(make_partition_allow_empty({}).alpha().is_zero());
  try {
    make_partition({5, 5});
    FAIL("expected DuplicatePart");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicatePart);
  }
}

TEST_CASE("scale_set multiplies parts and divides alpha") {
  const PartitionSet s = scale_set(2, make_partition({2, 3, 6}));
  CHECK(s.str() == "4,6,12");
  CHECK(s.n() == 22);
  CHECK(s.alpha() == Rational(1, 2));
  CHECK_THROWS_AS(scale_set(0, make_partition({1})), Error);
}

TEST_CASE("constraint specs") {
  ConstraintSpec s;
  s.m_free = {7, 7};
  s.forbidden = {39, 1};
  const ConstraintSpec n = s.normalized();
  CHECK(n.m_free == std::vector<std::uint64_t>{7});
  CHECK(n.forbidden == std::vector<std::uint64_t>{1, 39});
  CHECK(!n.admits(14));
  CHECK(!n.admits(39));
  CHECK(n.admits(2));
  CHECK(n.describe().find("7") != std::string::npos);

  ConstraintSpec bad;
  bad.m_free = {1};
  CHECK_THROWS_AS((void)bad.normalized(), Error);

  ConstraintSpec full;
  full.allowed_primes = std::vector<std::uint64_t>{2, 3};
  CHECK(satisfies(make_partition({2, 3, 6}), full));
  CHECK(!satisfies(make_partition({2, 3, 10}), full));
  CHECK(ConstraintSpec{}.is_unconstrained());
}

TEST_CASE("congruence obstruction and residues") {
  CHECK(congruence_obstruction(2) == 8u);
  CHECK(congruence_obstruction(3) == 3u);
  CHECK(!congruence_obstruction(5));
  CHECK(residue_of(Rational(1), 8) == 1);
  CHECK(residue_of(Rational(1, 3), 8) == 3);
  CHECK_THROWS_AS(residue_of(Rational(1, 2), 8), Error);
}

TEST_CASE("odd sets: sum and reciprocal sum agree mod 8; 3-coprime sets mod 3") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 2000; ++t) {
    std::vector<std::uint64_t> odd, coprime3;
    const int k = 1 + static_cast<int>(rng() % 8);
    for (int i = 0; i < k; ++i) {
      odd.push_back(2 * (rng() % 500) + 1);
      std::uint64_t c = rng() % 1500 + 1;
      if (c % 3 == 0) ++c;
      coprime3.push_back(c);
    }
    std::sort(odd.begin(), odd.end());
    odd.erase(std::unique(odd.begin(), odd.end()), odd.end());
    std::sort(coprime3.begin(), coprime3.end());
    coprime3.erase(std::unique(coprime3.begin(), coprime3.end()), coprime3.end());
    const PartitionSet a = make_partition(odd), b = make_partition(coprime3);
    CHECK(a.n() % 8 == residue_of(a.alpha(), 8));
    CHECK(b.n() % 3 == residue_of(b.alpha(), 3));
  }
}
