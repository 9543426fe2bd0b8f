#pragma once

#include <cstddef>
#include <functional>

namespace bcc {

/// Number of worker threads to use: min(BCC_LAB_THREADS, hardware). The env
/// var is re-read on every call so tests can toggle it.
std::size_t thread_budget();

/// Runs fn(i) for i in [0, count) split into contiguous blocks across
/// threads. Callers write results into preallocated per-index slots and
/// reduce in index order, so output never depends on the thread count.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn,
                  std::size_t threads = 0);

}  // namespace bcc
