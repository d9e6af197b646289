#pragma once

#include <cstddef>
#include <functional>

namespace semidyn {

/// 0 means "use the hardware concurrency".
int resolve_threads(int requested) noexcept;

/// Calls body(index) for every index in [0, count) using up to `threads`
/// workers over contiguous chunks. Each index must write only its own
/// output slots; results are then independent of the partition.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body);

}  // namespace semidyn
