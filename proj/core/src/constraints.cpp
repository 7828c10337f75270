#include "recipart/constraints.hpp"

#include <algorithm>

#include "recipart/errors.hpp"
#include "recipart/number_theory.hpp"

namespace recipart {

namespace {

void sort_unique(std::vector<std::uint64_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

ConstraintSpec ConstraintSpec::normalized() const {
  ConstraintSpec out = *this;
  sort_unique(out.m_free);
  sort_unique(out.forbidden);
  if (out.allowed_primes) sort_unique(*out.allowed_primes);

  for (std::uint64_t m : out.m_free) {
    if (m < 2) throw Error(ErrorCode::InvalidSpec, "m-free modulus " + std::to_string(m) + " is below 2");
  }
  if (out.allowed_primes) {
    for (std::uint64_t p : *out.allowed_primes) {
      if (!is_prime(p)) throw Error(ErrorCode::InvalidSpec, std::to_string(p) + " is not prime");
    }
  }
  for (std::uint64_t f : out.forbidden) {
    if (f == 0) throw Error(ErrorCode::InvalidSpec, "forbidden element must be positive");
  }
  if (out.min_part < 1) throw Error(ErrorCode::InvalidSpec, "min part must be at least 1");
  if (out.max_part && *out.max_part < out.min_part) {
    throw Error(ErrorCode::InvalidSpec, "max part is below min part");
  }
  return out;
}

bool ConstraintSpec::admits(std::uint64_t part) const noexcept {
  if (part < min_part) return false;
  if (max_part && part > *max_part) return false;
  for (std::uint64_t m : m_free) {
    if (part % m == 0) return false;
  }
  if (std::find(forbidden.begin(), forbidden.end(), part) != forbidden.end()) return false;
  if (allowed_primes && !is_smooth_over(part, *allowed_primes)) return false;
  return true;
}

bool ConstraintSpec::is_unconstrained() const noexcept {
  return m_free.empty() && !allowed_primes && forbidden.empty() && min_part == 1 && !max_part;
}

std::string ConstraintSpec::describe() const {
  if (is_unconstrained()) return "unconstrained";
  std::string out;
  auto add = [&out](const std::string& s) {
    if (!out.empty()) out += ' ';
    out += s;
  };
  if (!m_free.empty()) add("m-free{" + join(m_free) + "}");
  if (allowed_primes) add("primes{" + join(*allowed_primes) + "}");
  if (!forbidden.empty()) add("forbid{" + join(forbidden) + "}");
  if (min_part != 1) add("min-part=" + std::to_string(min_part));
  if (max_part) add("max-part=" + std::to_string(*max_part));
  return out;
}

bool satisfies(const PartitionSet& set, const ConstraintSpec& spec) noexcept {
  return std::all_of(set.parts().begin(), set.parts().end(),
                     [&spec](std::uint64_t a) { return spec.admits(a); });
}

}  // namespace recipart
