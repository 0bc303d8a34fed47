#pragma once

#include <cstddef>
#include <functional>

namespace artifact {

/** Worker count used by parallel_for; 1 means sequential. Defaults to 1. */
void set_threads(unsigned n);
unsigned threads();

/**
 * Calls body(i) for i in [0, count). Each index is handled exactly once; callers write into
 * preallocated slots so results do not depend on the worker count.
 */
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace artifact
