#pragma once

// Independent reference implementations for tests. Deliberately naive: plain
// recursion over distinct parts and GMP rationals, no shared code with the
// library beyond the types used to compare results.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using Parts = std::vector<std::uint64_t>;

struct Spec {
  std::vector<std::uint64_t> m_free;
  std::optional<std::vector<std::uint64_t>> primes;
  std::vector<std::uint64_t> forbidden;
  std::uint64_t min_part = 1;
  std::optional<std::uint64_t> max_part;
};

inline bool smooth(std::uint64_t a, const std::vector<std::uint64_t>& primes) {
  for (std::uint64_t p : primes) {
    while (a % p == 0) a /= p;
  }
  return a == 1;
}

inline bool admits(const Spec& s, std::uint64_t a) {
  for (std::uint64_t m : s.m_free) {
    if (a % m == 0) return false;
  }
  if (s.primes && !smooth(a, *s.primes)) return false;
  if (std::find(s.forbidden.begin(), s.forbidden.end(), a) != s.forbidden.end()) return false;
  if (a < s.min_part) return false;
  if (s.max_part && a > *s.max_part) return false;
  return true;
}

inline mpq_class recip_sum(const Parts& parts) {
  mpq_class r = 0;
  for (std::uint64_t a : parts) r += mpq_class(1, a);
  r.canonicalize();
  return r;
}

/// Every partition of n into distinct parts, ascending part lists.
inline void distinct_partitions(std::uint64_t n, const std::function<void(const Parts&)>& fn) {
  Parts cur;
  std::function<void(std::uint64_t, std::uint64_t)> rec = [&](std::uint64_t smallest, std::uint64_t rest) {
    if (rest == 0) {
      fn(cur);
      return;
    }
    for (std::uint64_t a = smallest; a <= rest; ++a) {
      cur.push_back(a);
      rec(a + 1, rest - a);
      cur.pop_back();
    }
  };
  rec(1, n);
}

/// All alpha-partitions of n satisfying the spec, in lexicographic order.
inline std::vector<Parts> alpha_partitions(std::uint64_t n, const mpq_class& alpha, const Spec& spec) {
  std::vector<Parts> out;
  distinct_partitions(n, [&](const Parts& p) {
    if (!std::all_of(p.begin(), p.end(), [&](std::uint64_t a) { return admits(spec, a); })) return;
    if (recip_sum(p) == alpha) out.push_back(p);
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// B(n) as a set of GMP rationals.
inline std::set<mpq_class> reciprocal_sums(std::uint64_t n) {
  std::set<mpq_class> out;
  distinct_partitions(n, [&](const Parts& p) { out.insert(recip_sum(p)); });
  return out;
}

/// p/q mod m as p * q^-1; nothing when q is not invertible.
inline std::optional<std::uint64_t> residue(const mpq_class& r, std::uint64_t m) {
  mpz_class inv;
  const mpz_class mod = m;
  if (mpz_invert(inv.get_mpz_t(), r.get_den().get_mpz_t(), mod.get_mpz_t()) == 0) return std::nullopt;
  mpz_class v = r.get_num() * inv;
  mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), mod.get_mpz_t());
  return v.get_ui();
}

/// Exact re-check of a claimed alpha-partition of n.
inline bool is_valid(const Parts& parts, std::uint64_t n, const mpq_class& alpha, const Spec& spec) {
  if (parts.empty()) return false;
  std::set<std::uint64_t> seen(parts.begin(), parts.end());
  if (seen.size() != parts.size() || seen.count(0)) return false;
  std::uint64_t sum = 0;
  for (std::uint64_t a : parts) {
    if (!admits(spec, a)) return false;
    sum += a;
  }
  return sum == n && recip_sum(parts) == alpha;
}

}  // namespace oracle
