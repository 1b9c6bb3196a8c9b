#pragma once

#include <cstddef>
#include <functional>

namespace defw {

// DEFW_THREADS if set and positive, else the hardware concurrency (at least 1)
int thread_budget();

// runs body(0..n-1); results must be written by index so order never matters
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace defw
