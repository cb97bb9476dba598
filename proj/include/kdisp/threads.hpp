#pragma once

#include <cstddef>
#include <functional>

namespace kdisp {

// Worker count: explicit request wins, then KDISP_THREADS, then hardware.
std::size_t resolve_threads(std::size_t requested = 0);

// Runs fn(i) for i in [0, n) on `threads` workers with a static block
// partition. fn must only write to per-index slots; results are then
// scheduling-independent.
void parallel_for_index(std::size_t n, std::size_t threads,
                        const std::function<void(std::size_t)>& fn);

}  // namespace kdisp
