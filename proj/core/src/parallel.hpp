#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace ascurve::detail {

/// Splits [begin, end) into at most `threads` contiguous ranges, runs
/// `chunk(lo, hi)` on each and folds the partial results in range order.
/// Results do not depend on the number of partitions as long as `merge`
/// is associative.
template <class T, class Chunk, class Merge>
T partitioned(std::uint64_t begin, std::uint64_t end, unsigned threads, T init, Chunk chunk,
              Merge merge) {
  constexpr std::uint64_t kMinPerPartition = 1U << 12;
  const std::uint64_t span = end - begin;
  std::uint64_t parts = std::max<std::uint64_t>(1, threads);
  parts = std::min<std::uint64_t>(parts, std::max<std::uint64_t>(1, span / kMinPerPartition));
  if (parts <= 1) return merge(std::move(init), chunk(begin, end));

  std::vector<T> partial(parts, init);
  std::vector<std::thread> workers;
  workers.reserve(parts);
  for (std::uint64_t i = 0; i < parts; ++i) {
    const std::uint64_t lo = begin + span * i / parts;
    const std::uint64_t hi = begin + span * (i + 1) / parts;
    workers.emplace_back([&, i, lo, hi] { partial[i] = chunk(lo, hi); });
  }
  for (auto& w : workers) w.join();
  T acc = std::move(init);
  for (auto& part : partial) acc = merge(std::move(acc), std::move(part));
  return acc;
}

}  // namespace ascurve::detail
