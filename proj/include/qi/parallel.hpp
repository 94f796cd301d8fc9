#pragma once

#include <cstddef>
#include <functional>

namespace qi {

/// Worker count: QI_THREADS if set and positive, otherwise the hardware concurrency.
std::size_t thread_count();

/// Runs body(i) for i in [0, n). Results must be written to per-index slots so the
/// merged output does not depend on scheduling. Exceptions are rethrown (lowest index first).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace qi
