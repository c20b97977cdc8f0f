#pragma once

#include <cstddef>
#include <functional>

namespace phasespace {

/// Upper bound on worker threads used by the row/column-parallel kernels.
/// 0 means "let the runtime decide".
void set_max_threads(int threads) noexcept;
int max_threads() noexcept;

/// Reads PHASESPACE_THREADS (0 = auto) and applies it. Returns the value used.
int configure_threads_from_env();

/// Runs body(i) for i in [0, count) with a static partition. Each index is
/// handled by exactly one thread, so any body that writes only to slot i gives
/// results independent of the thread count.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace phasespace
