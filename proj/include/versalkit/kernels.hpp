#pragma once

#include <atomic>
#include <climits>
#include <vector>

namespace vk::kernels {

// Exhaustive checks over index pairs and triples. Each search returns the
// lexicographically first failure, so the serial and OpenMP versions agree.

enum class Mode { Serial, Parallel };

struct Witness {
  bool found = false;
  int a = -1;
  int b = -1;
  int c = -1;
  bool operator==(const Witness&) const = default;
};

template <class F>
Witness first_failing_pair_serial(int n, int m, F&& ok) {
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < m; ++b)
      if (!ok(a, b)) return {true, a, b, -1};
  return {};
}

template <class F>
Witness first_failing_pair_parallel(int n, int m, F&& ok) {
  long long best = LLONG_MAX;
  std::atomic<long long> seen{LLONG_MAX};
#pragma omp parallel for schedule(dynamic) reduction(min : best)
  for (int a = 0; a < n; ++a) {
    if (static_cast<long long>(a) * m > seen.load(std::memory_order_relaxed)) continue;
    for (int b = 0; b < m; ++b)
      if (!ok(a, b)) {
        long long key = static_cast<long long>(a) * m + b;
        if (key < best) best = key;
        long long cur = seen.load();
        while (key < cur && !seen.compare_exchange_weak(cur, key)) {
        }
        break;
      }
  }
  if (best == LLONG_MAX) return {};
  return {true, static_cast<int>(best / m), static_cast<int>(best % m), -1};
}

template <class F>
Witness first_failing_pair(int n, int m, F&& ok, Mode mode = Mode::Parallel) {
  return mode == Mode::Serial ? first_failing_pair_serial(n, m, ok) : first_failing_pair_parallel(n, m, ok);
}

template <class F>
Witness first_failing_triple_serial(int n, F&& ok) {
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (!ok(a, b, c)) return {true, a, b, c};
  return {};
}

template <class F>
Witness first_failing_triple_parallel(int n, F&& ok) {
  long long best = LLONG_MAX;
  long long nn = static_cast<long long>(n) * n;
#pragma omp parallel for schedule(dynamic) reduction(min : best)
  for (int a = 0; a < n; ++a) {
    bool done = false;
    for (int b = 0; b < n && !done; ++b)
      for (int c = 0; c < n; ++c)
        if (!ok(a, b, c)) {
          long long key = a * nn + static_cast<long long>(b) * n + c;
          if (key < best) best = key;
          done = true;
          break;
        }
  }
  if (best == LLONG_MAX) return {};
  return {true, static_cast<int>(best / nn), static_cast<int>((best / n) % n), static_cast<int>(best % n)};
}

template <class F>
Witness first_failing_triple(int n, F&& ok, Mode mode = Mode::Parallel) {
  return mode == Mode::Serial ? first_failing_triple_serial(n, ok) : first_failing_triple_parallel(n, ok);
}

// Associativity of a multiplication table on n elements.
Witness associativity_failure(const std::vector<int>& table, int n, Mode mode = Mode::Parallel);

}  // namespace vk::kernels
