#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bklab {

using Vertex = std::uint32_t;
using EdgeIndex = std::uint32_t;

/// Sorted, duplicate-free list of vertex indices.
using Edge = std::vector<Vertex>;

/// Finite hypergraph on the dense vertex set {0, ..., vertex_count-1}.
///
/// Values are immutable once built. Edges are stored sorted, in the order
/// they were supplied, and no two edges are equal as sets. The vertex to
/// edge incidence lists are precomputed because every predicate in the
/// library walks them.
class Hypergraph {
 public:
  /// Validates and normalizes raw input. Each raw edge is sorted; an empty
  /// edge, an out-of-range index, a vertex repeated inside an edge, or two
  /// edges equal as sets raise InvalidHypergraph.
  static Hypergraph build(std::size_t vertex_count,
                          const std::vector<std::vector<std::int64_t>>& raw_edges);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_[e]; }

  /// Common edge size when every edge has the same size (and there is at least one edge).
  std::optional<std::size_t> uniformity() const { return uniformity_; }
  std::size_t min_edge_size() const;

  /// Edges containing vertex v, in increasing edge index.
  const std::vector<EdgeIndex>& incident(Vertex v) const { return incidence_[v]; }

  /// Spanning subhypergraph keeping the listed edges (in the listed order).
  Hypergraph spanning_subhypergraph(std::span<const EdgeIndex> keep) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  Hypergraph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::optional<std::size_t> uniformity_;
  std::vector<std::vector<EdgeIndex>> incidence_;
};

/// Pairwise intersection statistics of a hypergraph.
struct IntersectionProfile {
  /// |e_i ∩ e_j| for i < j, in row-major order of the strict upper triangle.
  std::vector<std::uint32_t> pair_sizes;
  std::uint32_t max_intersection = 0;
  /// Max over edges of the number of other edges it meets.
  std::uint32_t intersection_degree = 0;
  /// Smallest non-zero intersection, or nullopt when all pairs are disjoint.
  std::optional<std::uint32_t> min_nonzero_intersection;

  bool is_simple() const { return max_intersection <= 1; }
  /// Every pair of edges is disjoint or shares at least h vertices.
  bool has_property_ah(std::uint32_t h) const {
    return !min_nonzero_intersection || *min_nonzero_intersection >= h;
  }
};

IntersectionProfile intersection_profile(const Hypergraph& h);

/// Size of the intersection of two sorted edges.
std::size_t intersection_size(const Edge& a, const Edge& b);

// Generators. All are deterministic in their arguments.

/// The Fano plane on 7 points (lines of PG(2,2)).
Hypergraph fano_plane();
/// All C(v, n) n-subsets of a v-set, in lexicographic order.
Hypergraph complete_uniform(std::size_t v, std::size_t n);
/// m distinct n-subsets of a v-set drawn uniformly without replacement.
Hypergraph random_uniform(std::size_t v, std::size_t n, std::size_t m, std::uint64_t seed);
/// The cycle graph C_length as a 2-uniform hypergraph; length must be odd and >= 3.
Hypergraph odd_cycle(std::size_t length);

// Serialization. Both formats round-trip bit-exactly through parse/serialize.

std::string to_hg(const Hypergraph& h);
Hypergraph parse_hg(const std::string& text);
std::string to_json(const Hypergraph& h);
Hypergraph parse_json(const std::string& text);
/// Dispatches on the first non-space character ('{' means JSON).
Hypergraph parse_any(const std::string& text);

}  // namespace bklab
