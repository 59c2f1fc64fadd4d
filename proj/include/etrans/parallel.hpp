#pragma once

#include <cstddef>
#include <functional>

namespace etrans {

/// Worker count: ETRANS_THREADS if set and positive, else the hardware
/// concurrency (at least 1).
int thread_count();

/// Calls body(i) for i in [0, n), split into contiguous blocks across
/// threads. Each index is handled exactly once, so results written per index
/// do not depend on the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace etrans
