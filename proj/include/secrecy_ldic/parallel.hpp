#pragma once

#include <cstddef>
#include <functional>

namespace secrecy_ldic {

// Worker count: SECRECY_LDIC_THREADS when set to a positive integer, otherwise the
// hardware concurrency (at least one).
int default_worker_count();

// Runs body(i) for i in [0, count) on up to `workers` threads. Items are handed out
// in contiguous index order; callers reduce per-item results in index order, so the
// outcome does not depend on the worker count.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& body);

}  // namespace secrecy_ldic
