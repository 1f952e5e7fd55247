#ifndef QUDIT_PARALLEL_HPP
#define QUDIT_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace qudit {

/// Upper bound on worker threads used by grid sampling. Defaults to the
/// hardware concurrency; 1 disables threading.
void set_max_threads(unsigned n);
unsigned max_threads();

/// Runs body(i) for i in [0, count), split into contiguous chunks across at
/// most max_threads() workers. Each index is visited exactly once, so
/// results written per index do not depend on scheduling. The first
/// exception thrown by any worker is rethrown on the caller.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace qudit

#endif  // QUDIT_PARALLEL_HPP
