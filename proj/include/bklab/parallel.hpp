#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace bklab {

/// Splits [0, count) into `jobs` contiguous blocks and runs body(begin, end, block)
/// for each, on its own thread when jobs > 1. Exceptions from any block are
/// rethrown on the caller's thread (the first one by block index wins).
template <class Body>
void parallel_blocks(std::size_t count, unsigned jobs, Body&& body) {
  jobs = std::max(1u, jobs);
  if (jobs == 1 || count < 2) {
    body(std::size_t{0}, count, std::size_t{0});
    return;
  }
  const std::size_t blocks = std::min<std::size_t>(jobs, count);
  std::vector<std::exception_ptr> errors(blocks);
  std::vector<std::thread> workers;
  workers.reserve(blocks);
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t begin = count * b / blocks;
    const std::size_t end = count * (b + 1) / blocks;
    workers.emplace_back([&, begin, end, b] {
      try {
        body(begin, end, b);
      } catch (...) {
        errors[b] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace bklab
