#pragma once

#include <cstdint>
#include <functional>

namespace levgraph {

// Worker threads used by the fan-out helpers; 0 selects the hardware
// concurrency. Results never depend on the setting.
int thread_count();
void set_thread_count(int n);

// Runs body(chunk_begin, chunk_end) over a block partition of [begin, end).
// The body must only write to slots owned by its chunk. The first exception
// thrown by any chunk is rethrown after all workers have joined.
void parallel_for(std::int64_t begin, std::int64_t end,
                  const std::function<void(std::int64_t, std::int64_t)>& body);

}  // namespace levgraph
