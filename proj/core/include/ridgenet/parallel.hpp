#pragma once

#include <cstddef>
#include <functional>

namespace ridgenet {

/// Worker count: explicit value if > 0, else RIDGENET_WORKERS, else the
/// hardware concurrency (at least 1).
unsigned resolve_workers(unsigned requested = 0);

/// Runs body(begin, end) over contiguous chunks of [0, n). Each index is
/// visited exactly once; callers write disjoint outputs so results do not
/// depend on the worker count.
void parallel_for(std::size_t n, unsigned workers,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace ridgenet
