#pragma once

#include <cstddef>
#include <functional>

namespace cohomcat {

/// Worker count used by pointwise loops. Defaults to 1; results never depend on it.
void set_thread_count(std::size_t n);
std::size_t thread_count();

/// Runs body(begin, end) over disjoint contiguous chunks of [0, n).
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace cohomcat
