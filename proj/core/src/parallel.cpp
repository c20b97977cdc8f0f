#include "phasespace/parallel.hpp"

#include <omp.h>

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>

#include "phasespace/error.hpp"

namespace phasespace {
namespace {
std::atomic<int> g_max_threads{0};
}

void set_max_threads(int threads) noexcept { g_max_threads.store(threads < 0 ? 0 : threads); }

int max_threads() noexcept { return g_max_threads.load(); }

int configure_threads_from_env() {
  const char* raw = std::getenv("PHASESPACE_THREADS");
  if (raw == nullptr || *raw == '\0') return max_threads();
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || value < 0) {
    throw Error(module_name::kCli, std::string("PHASESPACE_THREADS must be a non-negative integer, got '") +
                                       raw + "'");
  }
  set_max_threads(static_cast<int>(value));
  return static_cast<int>(value);
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  const int cap = max_threads();
  const int threads = cap > 0 ? cap : omp_get_max_threads();
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  // Exceptions may not escape an OpenMP region; keep the first one.
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(static) num_threads(threads)
  for (long long i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace phasespace
