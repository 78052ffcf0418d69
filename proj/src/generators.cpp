#include <algorithm>
#include <limits>
#include <set>

#include "bklab/error.hpp"
#include "bklab/hypergraph.hpp"
#include "bklab/rng.hpp"

namespace bklab {

namespace {

// C(v, n) saturated at 2^64 - 1.
std::uint64_t binomial_saturating(std::uint64_t v, std::uint64_t n) {
  if (n > v) return 0;
  n = std::min(n, v - n);
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= n; ++i) {
    result = result * (v - n + i) / i;
    if (result > std::numeric_limits<std::uint64_t>::max())
      return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(result);
}

std::vector<std::vector<std::int64_t>> all_subsets(std::size_t v, std::size_t n) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur(n);
  for (std::size_t i = 0; i < n; ++i) cur[i] = static_cast<std::int64_t>(i);
  while (true) {
    out.push_back(cur);
    std::size_t i = n;
    while (i > 0 && cur[i - 1] == static_cast<std::int64_t>(v - n + i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < n; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace

Hypergraph fano_plane() {
  return Hypergraph::build(
      7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

Hypergraph complete_uniform(std::size_t v, std::size_t n) {
  if (n < 1 || n > v) throw PreconditionError("complete(v, n) requires 1 <= n <= v");
  if (binomial_saturating(v, n) > 5'000'000)
    throw PreconditionError("complete(v, n) has too many edges");
  return Hypergraph::build(v, all_subsets(v, n));
}

Hypergraph random_uniform(std::size_t v, std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n < 1 || n > v) throw PreconditionError("random(v, n, m) requires 1 <= n <= v");
  const std::uint64_t total = binomial_saturating(v, n);
  if (m > total)
    throw PreconditionError("random(v, n, m): m = " + std::to_string(m) +
                            " exceeds C(v, n) = " + std::to_string(total));

  std::vector<std::vector<std::int64_t>> edges;
  edges.reserve(m);
  if (total <= 4 * m && total <= 1'000'000) {
    // Dense request: draw a uniform m-subset of the enumerated n-sets.
    auto pool = all_subsets(v, n);
    CounterRng rng(stream_key(seed, Stream::generator));
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t pick = i + rng.below(pool.size() - i);
      std::swap(pool[i], pool[pick]);
      edges.push_back(pool[i]);
    }
    return Hypergraph::build(v, edges);
  }

  // Rejection sampling; attempt a draws its subset from its own stream.
  std::set<std::vector<std::int64_t>> seen;
  for (std::uint64_t attempt = 0; edges.size() < m; ++attempt) {
    CounterRng rng(stream_key(seed, Stream::generator, attempt));
    // Floyd's algorithm for a uniform n-subset of {0..v-1}.
    std::set<std::int64_t> subset;
    for (std::size_t j = v - n; j < v; ++j) {
      const auto t = static_cast<std::int64_t>(rng.below(j + 1));
      if (!subset.insert(t).second) subset.insert(static_cast<std::int64_t>(j));
    }
    std::vector<std::int64_t> edge(subset.begin(), subset.end());
    if (seen.insert(edge).second) edges.push_back(std::move(edge));
  }
  return Hypergraph::build(v, edges);
}

Hypergraph odd_cycle(std::size_t length) {
  if (length < 3 || length % 2 == 0)
    throw PreconditionError("odd_cycle requires an odd length >= 3");
  std::vector<std::vector<std::int64_t>> edges;
  for (std::size_t i = 0; i < length; ++i) {
    const auto a = static_cast<std::int64_t>(i);
    const auto b = static_cast<std::int64_t>((i + 1) % length);
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  return Hypergraph::build(length, edges);
}

}  // namespace bklab
