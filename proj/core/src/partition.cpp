#include "recipart/partition.hpp"

#include <algorithm>

#include "recipart/errors.hpp"

namespace recipart {

Rational reciprocal_sum(std::span<const std::uint64_t> parts) {
  // Accumulate over the running lcm; one reduction at the end.
  mpz_class den = 1;
  for (std::uint64_t a : parts) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), to_mpz(a).get_mpz_t());
  }
  mpz_class num = 0;
  mpz_class q;
  for (std::uint64_t a : parts) {
    mpz_divexact(q.get_mpz_t(), den.get_mpz_t(), to_mpz(a).get_mpz_t());
    num += q;
  }
  return Rational(std::move(num), std::move(den));
}

PartitionSet make_partition_allow_empty(std::vector<std::uint64_t> parts) {
  std::sort(parts.begin(), parts.end());
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == 0) throw Error(ErrorCode::NonPositive, "part 0 is not positive");
    if (i > 0 && parts[i] == parts[i - 1]) {
      throw Error(ErrorCode::DuplicatePart, "part " + std::to_string(parts[i]) + " repeats");
    }
    if (__builtin_add_overflow(total, parts[i], &total)) {
      throw Error(ErrorCode::ValidationFailure, "part sum overflows 64 bits");
    }
  }
  PartitionSet out;
  out.alpha_ = reciprocal_sum(parts);
  out.n_ = total;
  out.parts_ = std::move(parts);
  return out;
}

PartitionSet make_partition(std::vector<std::uint64_t> parts) {
  if (parts.empty()) throw Error(ErrorCode::ValidationFailure, "a partition needs at least one part");
  return make_partition_allow_empty(std::move(parts));
}

PartitionSet scale_set(std::uint64_t m, const PartitionSet& set) {
  if (m == 0) throw Error(ErrorCode::NonPositive, "scale factor must be positive");
  std::vector<std::uint64_t> scaled;
  scaled.reserve(set.size());
  for (std::uint64_t a : set.parts()) {
    std::uint64_t v = 0;
    if (__builtin_mul_overflow(a, m, &v)) throw Error(ErrorCode::ValidationFailure, "scaled part overflows");
    scaled.push_back(v);
  }
  return make_partition_allow_empty(std::move(scaled));
}

bool PartitionSet::contains(std::uint64_t a) const noexcept {
  return std::binary_search(parts_.begin(), parts_.end(), a);
}

std::string PartitionSet::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

}  // namespace recipart
