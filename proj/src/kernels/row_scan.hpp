#pragma once

// Row-partitioned search for the lexicographically first witness. The
// callback scans one leading index x and returns that row's first hit; the
// smallest x with a hit wins, so the answer is independent of scheduling.

#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <vector>

namespace ordsum::kernels::detail {

template <class Row>
auto first_hit_serial(std::size_t n, Row&& row) -> decltype(row(std::size_t{})) {
  for (std::size_t x = 0; x < n; ++x)
    if (auto hit = row(x)) return hit;
  return std::nullopt;
}

template <class Row>
auto first_hit_parallel(std::size_t n, Row&& row) -> decltype(row(std::size_t{})) {
  using Hit = decltype(row(std::size_t{}));
  std::vector<Hit> hits(n);
  std::atomic<std::size_t> best{n};
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    const auto x = static_cast<std::size_t>(i);
    if (x > best.load(std::memory_order_relaxed)) continue;
    hits[x] = row(x);
    if (hits[x]) {
      std::size_t cur = best.load(std::memory_order_relaxed);
      while (x < cur && !best.compare_exchange_weak(cur, x, std::memory_order_relaxed)) {
      }
    }
  }
  const std::size_t b = best.load();
  if (b == n) return std::nullopt;
  return hits[b];
}

/// Fills out[x*n + y] = f(x, y) for all pairs.
template <class T, class F>
void fill_pairs_serial(std::size_t n, std::vector<T>& out, F&& f) {
  out.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) out[x * n + y] = f(x, y);
}

// Exceptions may not cross an OpenMP region; the one from the lowest row is
// rethrown afterwards.
template <class T, class F>
void fill_pairs_parallel(std::size_t n, std::vector<T>& out, F&& f) {
  out.resize(n * n);
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < count; ++i) {
    const auto x = static_cast<std::size_t>(i);
    try {
      for (std::size_t y = 0; y < n; ++y) out[x * n + y] = f(x, y);
    } catch (...) {
      errors[x] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace ordsum::kernels::detail
