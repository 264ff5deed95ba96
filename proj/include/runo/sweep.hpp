#pragma once

// Exhaustive tuple sweeps over a finite carrier.
//
// Every decision procedure in the library reduces to "find the first tuple in
// {0..n-1}^k where a predicate fails". Tuples are ordered lexicographically with
// the first coordinate most significant, so the first failure is canonical.
// The *_serial functions are the reference; the unsuffixed ones partition the
// index range across OpenMP threads and must return identical results.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "runo/algebra.hpp"

namespace runo::sweep {

/// n^k, throwing std::overflow_error past 2^62.
std::uint64_t tuple_count(std::size_t n, std::size_t arity);

/// Write the index-th tuple (lexicographic order) into `out`.
inline void decode(std::uint64_t index, std::size_t n, std::span<Element> out) noexcept {
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = static_cast<Element>(index % n);
    index /= n;
  }
}

/// Advance `t` to the next tuple; false after the last one.
inline bool next(std::span<Element> t, std::size_t n) noexcept {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (static_cast<std::size_t>(t[i]) + 1 < n) {
      ++t[i];
      return true;
    }
    t[i] = 0;
  }
  return false;
}

/// Below this many tuples the parallel entry points run the serial loop.
inline constexpr std::uint64_t kParallelThreshold = 2048;

/// Global switch, mainly for tests and the benchmark. Defaults to enabled.
void set_parallel(bool enabled) noexcept;
bool parallel_enabled() noexcept;

template <class Pred>
std::optional<std::vector<Element>> first_failure_serial(std::size_t n, std::size_t arity,
                                                         Pred&& ok) {
  std::vector<Element> t(arity, 0);
  if (n == 0) return std::nullopt;
  do {
    if (!ok(std::span<const Element>(t))) return t;
  } while (next(t, n));
  return std::nullopt;
}

template <class Pred>
std::optional<std::vector<Element>> first_failure(std::size_t n, std::size_t arity, Pred&& ok) {
  const std::uint64_t total = tuple_count(n, arity);
  if (!parallel_enabled() || total < kParallelThreshold) {
    return first_failure_serial(n, arity, ok);
  }
  std::atomic<std::uint64_t> best{total};
  const auto count = static_cast<std::int64_t>(total);
#pragma omp parallel
  {
    std::vector<Element> t(arity, 0);
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
      const auto idx = static_cast<std::uint64_t>(i);
      if (idx >= best.load(std::memory_order_relaxed)) continue;
      decode(idx, n, t);
      if (!ok(std::span<const Element>(t))) {
        std::uint64_t cur = best.load(std::memory_order_relaxed);
        while (idx < cur && !best.compare_exchange_weak(cur, idx, std::memory_order_relaxed)) {
        }
      }
    }
  }
  const std::uint64_t found = best.load();
  if (found == total) return std::nullopt;
  std::vector<Element> t(arity);
  decode(found, n, t);
  return t;
}

/// Evaluate `f` on every tuple; result[i] is f(i-th tuple).
template <class Fn>
std::vector<std::uint8_t> map_all_serial(std::size_t n, std::size_t arity, Fn&& f) {
  const std::uint64_t total = tuple_count(n, arity);
  std::vector<std::uint8_t> out(total);
  std::vector<Element> t(arity, 0);
  for (std::uint64_t i = 0; i < total; ++i) {
    out[i] = f(std::span<const Element>(t)) ? 1 : 0;
    next(t, n);
  }
  return out;
}

template <class Fn>
std::vector<std::uint8_t> map_all(std::size_t n, std::size_t arity, Fn&& f) {
  const std::uint64_t total = tuple_count(n, arity);
  if (!parallel_enabled() || total < kParallelThreshold) return map_all_serial(n, arity, f);
  std::vector<std::uint8_t> out(total);
  const auto count = static_cast<std::int64_t>(total);
#pragma omp parallel
  {
    std::vector<Element> t(arity, 0);
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
      decode(static_cast<std::uint64_t>(i), n, t);
      out[static_cast<std::size_t>(i)] = f(std::span<const Element>(t)) ? 1 : 0;
    }
  }
  return out;
}

}  // namespace runo::sweep
