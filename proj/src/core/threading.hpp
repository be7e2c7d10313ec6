// SPDX-License-Identifier: Apache-2.0
//
// Tiny deterministic work-sharing helper. Results never depend on the thread
// count: workers fill disjoint index ranges of preallocated storage.
#pragma once

#include <cstddef>
#include <functional>

namespace mgli {

// Number of worker threads to use: hardware concurrency, capped by the
// MGLI_THREADS environment variable when it is set to a positive integer.
std::size_t thread_count();

// Runs fn(begin, end) over a partition of [0, n) on up to thread_count()
// threads. Rethrows the first worker exception after joining.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace mgli
