#include "runo/sweep.hpp"

#include <stdexcept>

namespace runo::sweep {

namespace {
std::atomic<bool> g_parallel{true};
}

std::uint64_t tuple_count(std::size_t n, std::size_t arity) {
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 62;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    if (n != 0 && total > kLimit / n) throw std::overflow_error("sweep: too many tuples");
    total *= n;
  }
  return total;
}

void set_parallel(bool enabled) noexcept { g_parallel.store(enabled); }
bool parallel_enabled() noexcept { return g_parallel.load(); }

}  // namespace runo::sweep
