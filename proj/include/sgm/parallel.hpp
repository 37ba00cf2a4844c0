#pragma once

#include <cstddef>
#include <functional>

namespace sgm {

/// Worker count used by parallel_for; 1 by default.
void set_thread_count(int n);
int thread_count();

/// Calls body(i) for i in [0, count). Iterations are distributed over worker
/// threads; the body must write only to its own slot. The first exception
/// thrown by any iteration is rethrown after all workers join.
void parallel_for(size_t count, const std::function<void(size_t)>& body);

}  // namespace sgm
