#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace hochschild::detail {

/// Splits [0, count) into contiguous chunks and runs fn(begin, end) for each,
/// one thread per chunk. Results are collected in chunk order, so the output
/// does not depend on scheduling.
template <class Result, class Fn>
std::vector<Result> map_chunks(std::size_t count, Fn fn, std::size_t min_chunk = 2048) {
  std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  std::size_t chunks = std::clamp<std::size_t>(count / min_chunk, 1, hw);
  std::vector<Result> results(chunks);
  if (chunks == 1) {
    results[0] = fn(std::size_t{0}, count);
    return results;
  }
  std::vector<std::jthread> workers;
  workers.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    std::size_t begin = count * c / chunks;
    std::size_t end = count * (c + 1) / chunks;
    workers.emplace_back([&results, &fn, c, begin, end] { results[c] = fn(begin, end); });
  }
  workers.clear();
  return results;
}

}  // namespace hochschild::detail
