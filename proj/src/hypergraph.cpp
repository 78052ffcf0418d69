#include "bklab/hypergraph.hpp"

#include <algorithm>
#include <map>

#include "bklab/error.hpp"

namespace bklab {

Hypergraph::Hypergraph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)), incidence_(vertex_count) {
  for (EdgeIndex e = 0; e < edges_.size(); ++e)
    for (Vertex v : edges_[e]) incidence_[v].push_back(e);
  if (!edges_.empty()) {
    const std::size_t n = edges_.front().size();
    if (std::all_of(edges_.begin(), edges_.end(), [n](const Edge& e) { return e.size() == n; }))
      uniformity_ = n;
  }
}

Hypergraph Hypergraph::build(std::size_t vertex_count,
                             const std::vector<std::vector<std::int64_t>>& raw_edges) {
  if (vertex_count < 1) throw InvalidHypergraph("vertex_count must be at least 1");
  if (vertex_count > std::size_t{1} << 31) throw InvalidHypergraph("vertex_count too large");

  std::vector<Edge> edges;
  edges.reserve(raw_edges.size());
  std::map<Edge, std::size_t> seen;
  for (std::size_t pos = 0; pos < raw_edges.size(); ++pos) {
    const auto& raw = raw_edges[pos];
    if (raw.empty()) throw InvalidHypergraph("edge " + std::to_string(pos) + " is empty");
    Edge edge;
    edge.reserve(raw.size());
    for (std::int64_t x : raw) {
      if (x < 0 || static_cast<std::uint64_t>(x) >= vertex_count)
        throw InvalidHypergraph("edge " + std::to_string(pos) + ": vertex index " +
                                std::to_string(x) + " out of range [0, " +
                                std::to_string(vertex_count) + ")");
      edge.push_back(static_cast<Vertex>(x));
    }
    std::sort(edge.begin(), edge.end());
    if (std::adjacent_find(edge.begin(), edge.end()) != edge.end())
      throw InvalidHypergraph("edge " + std::to_string(pos) + " repeats a vertex");
    auto [it, inserted] = seen.emplace(edge, pos);
    if (!inserted)
      throw InvalidHypergraph("duplicate edge: positions " + std::to_string(it->second) +
                              " and " + std::to_string(pos));
    edges.push_back(std::move(edge));
  }
  return Hypergraph(vertex_count, std::move(edges));
}

std::size_t Hypergraph::min_edge_size() const {
  std::size_t smallest = 0;
  for (const auto& e : edges_)
    if (smallest == 0 || e.size() < smallest) smallest = e.size();
  return smallest;
}

Hypergraph Hypergraph::spanning_subhypergraph(std::span<const EdgeIndex> keep) const {
  std::vector<Edge> kept;
  kept.reserve(keep.size());
  for (EdgeIndex e : keep) kept.push_back(edges_.at(e));
  return Hypergraph(vertex_count_, std::move(kept));
}

std::size_t intersection_size(const Edge& a, const Edge& b) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

IntersectionProfile intersection_profile(const Hypergraph& h) {
  IntersectionProfile profile;
  const std::size_t m = h.edge_count();
  profile.pair_sizes.reserve(m * (m - (m > 0 ? 1 : 0)) / 2);
  std::vector<std::uint32_t> met(m, 0);

  // Pair sizes accumulate through the incidence lists: every shared vertex of
  // (i, j) contributes one to the counter of j while scanning row i.
  std::vector<std::uint32_t> row(m, 0);
  for (EdgeIndex i = 0; i < m; ++i) {
    std::fill(row.begin() + i + 1, row.end(), 0u);
    for (Vertex v : h.edge(i))
      for (EdgeIndex j : h.incident(v))
        if (j > i) ++row[j];
    for (EdgeIndex j = i + 1; j < m; ++j) {
      const std::uint32_t size = row[j];
      profile.pair_sizes.push_back(size);
      if (size > 0) {
        ++met[i];
        ++met[j];
        profile.max_intersection = std::max(profile.max_intersection, size);
        if (!profile.min_nonzero_intersection || size < *profile.min_nonzero_intersection)
          profile.min_nonzero_intersection = size;
      }
    }
  }
  for (auto d : met) profile.intersection_degree = std::max(profile.intersection_degree, d);
  return profile;
}

}  // namespace bklab
