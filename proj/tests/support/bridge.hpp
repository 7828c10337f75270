#pragma once

#include <gmpxx.h>

#include <vector>

#include "oracle.hpp"
#include "recipart/constraints.hpp"
#include "recipart/partition.hpp"
#include "recipart/rational.hpp"

namespace bridge {

inline mpq_class to_mpq(const recipart::Rational& r) { return mpq_class(r.num(), r.den()); }

inline oracle::Parts parts_of(const recipart::PartitionSet& s) { return {s.parts().begin(), s.parts().end()}; }

inline oracle::Spec to_oracle(const recipart::ConstraintSpec& s) {
  return {s.m_free, s.allowed_primes, s.forbidden, s.min_part, s.max_part};
}

}  // namespace bridge
