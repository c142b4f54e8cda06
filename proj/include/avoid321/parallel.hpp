#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "avoid321/permutation.hpp"

namespace avoid321 {

/// Worker count for parallel folds; 0 means hardware concurrency.
inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Folds `visit(acc, p)` over T_n. The insertion tree is cut at a fixed
/// depth and the subtrees are shared among workers; partial accumulators
/// are combined with `+=`, so Acc must form a commutative monoid.
template <class Acc, class Visit>
Acc fold_T(int n, unsigned threads, Visit visit, const Limits& limits = {}) {
  check_size(n, limits);
  threads = resolve_threads(threads);
  if (threads == 1 || n <= 4) {
    Acc acc{};
    for_each_T(n, [&](const Permutation& p) { visit(acc, p); }, limits);
    return acc;
  }
  const int depth = std::min(n, 7);
  const std::vector<Permutation> roots = enumerate_T(depth, limits);
  std::atomic<std::size_t> next{0};
  std::vector<Acc> partial(threads);
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < threads; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < roots.size(); i = next++) {
          for_each_T_from(roots[i], n, [&](const Permutation& p) { visit(partial[w], p); }, limits);
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  if (failure) std::rethrow_exception(failure);
  Acc total{};
  for (auto& acc : partial) total += acc;
  return total;
}

}  // namespace avoid321
