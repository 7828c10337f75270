#include "recipart/builtin_tables.hpp"

#include <algorithm>
#include <regex>

#include "recipart/errors.hpp"
#include "recipart/number_theory.hpp"

namespace recipart {

namespace {

struct RowSpec {
  std::uint64_t m;
  Rational beta;
  std::vector<std::uint64_t> A;
};

struct Ambient {
  std::vector<Rational> S;
  ConstraintSpec Q;
  std::optional<std::uint64_t> M_prime;
  std::optional<std::uint64_t> X;
  std::vector<Rational> assumed;
};

ProofTable make_table(const Ambient& env, const Rational& alpha, const std::vector<RowSpec>& rows) {
  ProofTable t;
  t.alpha = alpha;
  t.S = env.S;
  t.Q = env.Q;
  t.M_prime = env.M_prime;
  t.X = env.X;
  t.assumed = env.assumed;
  std::uint64_t i = 1;
  for (const RowSpec& r : rows) t.rows.push_back({i++, r.m, r.beta, make_partition_allow_empty(r.A)});
  t.validate();
  return t;
}

Rational q(std::uint64_t p, std::uint64_t d) { return Rational(p, d); }

TableCollection graham_q() {
  Ambient env;
  env.S = {Rational(1)};
  env.Q.forbidden = {1, 39};
  env.X = 78;
  TableCollection c{"graham-q", {}};
  c.tables.push_back(make_table(env, Rational(1), {{2, Rational(1), {3, 7, 78, 91}}, {2, Rational(1), {2}}}));
  return c;
}

TableCollection graham_s() {
  Ambient env;
  env.S = {Rational(1), q(4, 3), Rational(2)};
  env.X = 79;
  TableCollection c{"graham-s", {}};
  c.tables.push_back(make_table(env, Rational(1), {{2, q(4, 3), {3}}, {2, Rational(2), {}}}));
  c.tables.push_back(make_table(env, q(4, 3), {{2, Rational(2), {3}}, {2, q(4, 3), {3, 5, 9, 45}}}));
  c.tables.push_back(make_table(env, Rational(2), {{1, Rational(1), {1}}}));
  return c;
}

// Q is M-free for one M divisible by 4, 6 or 9; plain "m469" means M = 4.
TableCollection m469(std::uint64_t M, std::string name) {
  Ambient env;
  const Rational five_sixths = q(5, 6);
  env.S = {five_sixths, Rational(1)};
  env.Q.m_free = {M};
  env.X = 211;
  TableCollection c{std::move(name), {}};
  const auto rows = [&](std::vector<std::vector<std::uint64_t>> sets) {
    std::vector<RowSpec> out;
    for (auto& s : sets) out.push_back({5, five_sixths, std::move(s)});
    return out;
  };
  c.tables.push_back(make_table(env, five_sixths,
                                rows({{3, 7, 13, 14, 26, 273},
                                      {2, 14, 22, 33, 77, 154},
                                      {2, 11, 22, 33},
                                      {3, 7, 13, 14, 39, 91, 182},
                                      {2, 11, 26, 33, 143}})));
  c.tables.push_back(make_table(env, Rational(1),
                                rows({{2, 11, 13, 21, 22, 26, 33, 273},
                                      {2, 7, 11, 21, 22, 154},
                                      {2, 7, 13, 14, 39, 91, 182},
                                      {2, 7, 14, 21, 23, 46, 161},
                                      {2, 3}})));
  return c;
}

TableCollection odd15() {
  Ambient env;
  env.S = {Rational(1)};
  env.Q.allowed_primes = std::vector<std::uint64_t>{3, 5, 7};
  env.Q.forbidden = {1};
  env.M_prime = 8;
  env.X = 3609;
  static const std::vector<std::vector<std::uint64_t>> kSets{
      {3, 5, 7, 9, 21, 27, 35, 81, 147, 189, 245, 441, 567, 3969},
      {3, 5, 7, 9, 15, 25, 63, 81, 189, 441, 567, 1225, 1323, 3969},
      {3, 5, 7, 9, 15, 25, 49, 125, 147, 441, 1225, 1715, 3087, 6125},
      {3, 5, 7, 9, 21, 27, 35, 63, 147, 189, 245, 1323},
      {3, 5, 7, 9, 21, 25, 27, 125, 189, 245, 441, 1225, 1323, 6125},
      {3, 5, 7, 9, 21, 25, 35, 63, 147, 245, 441, 1225},
      {3, 5, 7, 9, 15, 27, 49, 81, 189, 441, 567, 3969},
      {3, 5, 7, 9, 21, 25, 35, 63, 175, 245, 441, 1029, 1225, 8575},
      {3, 5, 7, 9, 15, 25, 35, 147, 441, 1225, 1715, 3087},
      {3, 5, 7, 9, 15, 27, 49, 63, 189, 1323},
      {3, 5, 7, 9, 15, 27, 49, 63, 343, 441, 1323, 9261},
      {3, 5, 7, 9, 15, 25, 49, 63, 441, 1225},
      {3, 5, 7, 9, 15, 21, 35, 441, 1715, 3087},
      {3, 5, 7, 9, 21, 27, 35, 49, 189, 245, 441, 1323},
      {3, 5, 7, 9, 25, 27, 35, 63, 81, 189, 245, 567, 1225, 3969},
  };
  std::vector<RowSpec> rows;
  for (const auto& s : kSets) rows.push_back({15, Rational(1), s});
  TableCollection c{"odd15", {}};
  c.tables.push_back(make_table(env, Rational(1), rows));
  return c;
}

std::uint64_t pow3(std::uint64_t e) {
  std::uint64_t v = 1;
  while (e-- > 0) v *= 3;
  return v;
}

// Keeps the tables for `alpha` and everything reachable from it via betas.
TableCollection restrict_to(const TableCollection& all, const Rational& alpha) {
  if (!all.find(alpha)) throw Error(ErrorCode::UnknownName, "no table for " + alpha.str() + " in " + all.name);
  std::vector<Rational> todo{alpha};
  std::vector<Rational> keep;
  while (!todo.empty()) {
    const Rational a = todo.back();
    todo.pop_back();
    if (std::find(keep.begin(), keep.end(), a) != keep.end()) continue;
    keep.push_back(a);
    for (const ProofRow& r : all.find(a)->rows) {
      if (all.find(r.beta)) todo.push_back(r.beta);
    }
  }
  TableCollection out{all.name + "," + alpha.str(), {}};
  for (const ProofTable& t : all.tables) {
    if (std::find(keep.begin(), keep.end(), t.alpha) != keep.end()) out.tables.push_back(t);
  }
  // the dropped alphas leave S so that the completeness check stays meaningful
  for (ProofTable& t : out.tables) {
    std::vector<Rational> S;
    for (const Rational& s : t.S) {
      if (std::find(keep.begin(), keep.end(), s) != keep.end()) S.push_back(s);
    }
    t.S = std::move(S);
  }
  return out;
}

}  // namespace

TableCollection sp_tables(std::uint64_t p, std::optional<std::uint64_t> X, std::optional<std::uint64_t> M_prime) {
  if (p < 3 || !is_prime(p)) throw Error(ErrorCode::InvalidSpec, "p must be an odd prime");
  if (p > (1ULL << 20)) throw Error(ErrorCode::InvalidSpec, "p is too large");
  const std::uint64_t pp = p * p;
  if (!X) X = p == 3 ? 814 : p == 5 ? 6482 : 2;

  Ambient env;
  for (std::uint64_t s = 4; s <= 2 * pp - 2 * p; s += 2) env.S.push_back(q(s, pp));
  env.S.push_back(Rational(1));
  env.S.push_back(Rational(2));
  std::sort(env.S.begin(), env.S.end());
  env.S.erase(std::unique(env.S.begin(), env.S.end()), env.S.end());
  env.Q.allowed_primes = std::vector<std::uint64_t>{2, p};
  env.M_prime = M_prime;
  env.X = X;

  TableCollection c{"sp(" + std::to_string(p) + ")", {}};
  std::vector<std::uint64_t> numerators;
  for (std::uint64_t s = 4; s <= 2 * pp - 2 * p; s += 2) numerators.push_back(s);
  numerators.push_back(pp);
  std::sort(numerators.begin(), numerators.end());
  for (std::uint64_t s : numerators) {
    const Rational alpha = q(s, pp);
    std::vector<RowSpec> rows;
    if (s <= pp - p) {
      rows = {{2, q(2 * s - 2, pp), {pp}}, {2, q(2 * s, pp), {}}};
    } else if (s <= pp) {
      rows = {{2, q(2 * s - 2 * p, pp), {p}}, {2, q(2 * s - 2 * p - 2, pp), {p, pp}}};
    } else if (s == pp + 1) {
      // beta_1 is 2 here: 1/p^2 + 2/2 = (p^2 + 1)/p^2
      rows = {{2, Rational(2), {pp}}, {2, q(2 * pp - 2 * p, pp), {p, pp}}};
    } else {
      rows = {{2, q(2 * s - 2 * pp, pp), {1}}, {2, q(2 * s - 2 * pp - 2, pp), {1, pp}}};
    }
    c.tables.push_back(make_table(env, alpha, rows));
  }
  c.tables.push_back(make_table(env, Rational(2), {{1, Rational(1), {1}}}));
  return c;
}

TableCollection arbsmall_tables(std::uint64_t k) {
  if (k < 2 || k > 30) throw Error(ErrorCode::InvalidSpec, "arbsmall needs 2 <= k <= 30");
  const std::uint64_t t = pow3(k - 1);  // 3^(k-1)
  const Rational a1 = q(2, t);
  const Rational a2 = q(4, 3 * t);
  const Rational prev = q(4, t);

  Ambient env;
  env.S = {a1, a2};
  std::sort(env.S.begin(), env.S.end());
  env.Q.m_free = {5};
  env.assumed = {prev};

  TableCollection c{"arbsmall(" + std::to_string(k) + ")", {}};
  c.tables.push_back(make_table(env, a1, {{4, prev, {t}}, {2, prev, {}}, {4, prev, {2 * t, 3 * t, 6 * t}}}));
  c.tables.push_back(make_table(env, a2,
                                {{4, prev, {3 * t}},
                                 {4, a1, {2 * t, 6 * t, 9 * t, 27 * t, 54 * t}},
                                 {4, prev, {6 * t, 9 * t, 18 * t}},
                                 {4, prev, {6 * t, 9 * t, 27 * t, 54 * t}}}));
  return c;
}

mpz_class arbsmall_bound(std::uint64_t k) {
  mpz_class a, b;
  mpz_ui_pow_ui(a.get_mpz_t(), 4, k);
  mpz_ui_pow_ui(b.get_mpz_t(), 3, k);
  return 106 * a - 98 * b;
}

std::vector<std::string> builtin_table_names() {
  return {"graham-q", "graham-s", "sp(p)", "m469", "m469(M)", "odd15", "arbsmall(k)", "arbsmall(k,alpha)"};
}

TableCollection builtin_tables(std::string_view name) {
  std::string s;
  for (char ch : name) {
    if (ch != ' ') s.push_back(ch);
  }
  if (s == "graham-q") return graham_q();
  if (s == "graham-s") return graham_s();
  if (s == "odd15") return odd15();
  if (s == "m469") return m469(4, "m469");

  static const std::regex kSp(R"(sp[(:]?(\d+)\)?)");
  static const std::regex kM469(R"(m469[(:](\d+)\)?)");
  static const std::regex kArb(R"(arbsmall[(:](\d+)(?:,([0-9/]+))?\)?)");
  std::smatch m;
  try {
    if (std::regex_match(s, m, kSp)) {
      const std::uint64_t p = std::stoull(m[1]);
      // the M = 3 use of S_5 only needs n = alpha mod 3
      return sp_tables(p, std::nullopt, p == 5 ? std::optional<std::uint64_t>(3) : std::nullopt);
    }
    if (std::regex_match(s, m, kM469)) {
      const std::uint64_t M = std::stoull(m[1]);
      if (M % 4 != 0 && M % 6 != 0 && M % 9 != 0) {
        throw Error(ErrorCode::InvalidSpec, "m469 needs M divisible by 4, 6 or 9");
      }
      return m469(M, "m469(" + std::to_string(M) + ")");
    }
    if (std::regex_match(s, m, kArb)) {
      TableCollection all = arbsmall_tables(std::stoull(m[1]));
      if (!m[2].matched) return all;
      return restrict_to(all, Rational::parse(m[2].str()));
    }
  } catch (const std::out_of_range&) {
    throw Error(ErrorCode::InvalidSpec, "number out of range in '" + s + "'");
  }
  throw Error(ErrorCode::UnknownName, "unknown table '" + std::string(name) + "'");
}

}  // namespace recipart
