#pragma once

#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace xbmat {

/// Worker count for enumeration kernels: XBMAT_WORKERS if set and positive,
/// otherwise 1. Never affects results, only wall time.
int default_worker_count();

/// Splits [0, total) into contiguous chunks, evaluates `partial(begin, end)`
/// on up to `workers` threads and folds the partial results in chunk order.
template <class T, class Partial, class Combine>
T parallel_reduce(std::uint64_t total, int workers, Partial partial, Combine combine) {
  if (workers < 1) workers = 1;
  if (total < static_cast<std::uint64_t>(workers) * 64u) workers = 1;
  if (workers == 1) return partial(std::uint64_t{0}, total);

  const auto chunks = static_cast<std::uint64_t>(workers);
  std::vector<T> results(static_cast<std::size_t>(workers));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(workers));
  for (std::uint64_t c = 0; c < chunks; ++c) {
    const std::uint64_t begin = total * c / chunks;
    const std::uint64_t end = total * (c + 1) / chunks;
    threads.emplace_back([&, c, begin, end] {
      try {
        results[static_cast<std::size_t>(c)] = partial(begin, end);
      } catch (...) {
        errors[static_cast<std::size_t>(c)] = std::current_exception();
      }
    });
  }
  for (auto& th : threads) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  T acc = std::move(results.front());
  for (std::size_t c = 1; c < results.size(); ++c) combine(acc, results[c]);
  return acc;
}

}  // namespace xbmat
