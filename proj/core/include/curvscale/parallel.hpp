#ifndef CURVSCALE_PARALLEL_HPP
#define CURVSCALE_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace curvscale {

/// Worker cap from CURVSCALE_THREADS (default 1). Results must not depend on
/// the thread count: callers write per-item slots and reduce in fixed order.
int max_threads();

/// Runs fn(begin, end) over a partition of [0, count) on up to max_threads()
/// workers. Falls back to a single inline call when only one is allowed.
void parallel_chunks(std::size_t count,
                     const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace curvscale

#endif
