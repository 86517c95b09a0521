#pragma once

#include <cstddef>
#include <functional>

namespace isospec {

// Worker count: ISOSPEC_THREADS if set and positive, else hardware concurrency.
unsigned thread_count();

// Runs body(i) for i in [0, n). Each index runs exactly once; results must be
// written to per-index slots so the outcome does not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace isospec
