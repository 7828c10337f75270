#pragma once

#include <cstddef>
#include <functional>

namespace recipart {

/// Number of workers to use when the caller passes 0.
std::size_t default_jobs() noexcept;

/// Runs fn(i) for every i in [0, count) on up to `jobs` threads. Tasks must
/// not share mutable state; results go into caller-owned slots indexed by i.
/// The first exception thrown by any task is rethrown after all threads join.
void parallel_for(std::size_t count, std::size_t jobs, const std::function<void(std::size_t)>& fn);

}  // namespace recipart
