#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bklab/hypergraph.hpp"

namespace bklab {

/// One uniform (0,1) weight per vertex, and the seed that produced them.
struct VertexWeights {
  std::vector<double> weights;
  std::uint64_t seed = 0;
};

/// Bijection vertex -> rank in {1, ..., |V|}.
class Numeration {
 public:
  /// From 1-based ranks; throws PreconditionError unless `ranks` is a permutation of 1..|V|.
  static Numeration from_ranks(std::vector<std::uint32_t> ranks);
  /// Rank of v is the number of vertices w with (X_w, w) <= (X_v, v): ties go to the lower index.
  static Numeration from_weights(std::span<const double> weights);
  /// Ranks vertices in the given order (order[0] gets rank 1).
  static Numeration from_order(std::span<const Vertex> order);

  std::size_t size() const { return rank_.size(); }
  std::uint32_t rank(Vertex v) const { return rank_[v]; }
  Vertex vertex_at(std::uint32_t rank) const { return inverse_[rank - 1]; }
  const std::vector<std::uint32_t>& ranks() const { return rank_; }

  /// "sigma: r1 r2 ... rv"
  std::string to_string() const;
  static Numeration parse(const std::string& line);

  friend bool operator==(const Numeration&, const Numeration&) = default;

 private:
  std::vector<std::uint32_t> rank_;
  std::vector<Vertex> inverse_;
};

/// Density parameters: an edge is dense when l(A) - f(A) <= (1 - p) / 2.
struct DensityParams {
  unsigned k = 1;
  double p = 0.0;
  double threshold() const { return (1.0 - p) / 2.0; }
};

/// Named choices of p.
enum class PPreset {
  paper_k,    ///< 2k ln n / n
  paper_k1,   ///< ln n / n
  paper_eps,  ///< ln(n^{2k} ln n) / n
};

double preset_p(PPreset preset, std::size_t n, unsigned k);
/// Accepts "paper-k", "paper-k1", "paper-eps" or a literal real.
double parse_p(const std::string& text, std::size_t n, unsigned k);

/// Violation of the criterion L(f) ∩ F(s) = ∅, witnessed by v0.
struct BadPair {
  EdgeIndex f = 0;
  EdgeIndex s = 0;
  Vertex witness = 0;
  friend bool operator==(const BadPair&, const BadPair&) = default;
  friend auto operator<=>(const BadPair&, const BadPair&) = default;
};

/// Two-coloring with colors 1 and 2.
struct Coloring {
  std::vector<std::uint8_t> colors;

  /// One character '1' or '2' per vertex.
  std::string to_string() const;
  static Coloring parse(const std::string& text);
  friend bool operator==(const Coloring&, const Coloring&) = default;
};

struct EdgeExtremes {
  double f_val = 0.0;  ///< k-th smallest weight on the edge
  double l_val = 0.0;  ///< (n-k+1)-th smallest weight on the edge
  std::vector<Vertex> first_k;
  std::vector<Vertex> last_k;
};

/// Draws i.i.d. uniform weights from the stream (seed, trial) and the induced numeration.
std::pair<VertexWeights, Numeration> sample_numeration(std::size_t vertex_count,
                                                       std::uint64_t seed,
                                                       std::uint64_t trial = 0);

EdgeExtremes edge_extremes(const Hypergraph& h, const VertexWeights& w, EdgeIndex edge,
                           unsigned k);

/// First-k and last-k vertex sets of every edge under sigma. Requires every
/// edge to have at least 2k vertices.
struct EdgeRoles {
  std::vector<std::vector<Vertex>> first;
  std::vector<std::vector<Vertex>> last;
};
EdgeRoles edge_roles(const Hypergraph& h, const Numeration& sigma, unsigned k);

/// Every (f, s, v0), f != s, with v0 ∈ L(f) ∩ F(s), sorted by (f, s, v0).
std::vector<BadPair> find_bad_pairs(const Hypergraph& h, const Numeration& sigma, unsigned k);
/// Same criterion as find_bad_pairs(...).empty(), without building the list.
bool has_bad_pair(const Hypergraph& h, const Numeration& sigma, unsigned k);
/// Number of distinct ordered edge pairs (f, s) in a sorted bad-pair list.
std::size_t count_bad_edge_pairs(std::span<const BadPair> pairs);

/// Ordered pairs (A1, A2) with |A1 ∩ A2| = 1 and every rank in A1 <= every rank in A2.
std::vector<std::pair<EdgeIndex, EdgeIndex>> find_ordered_2chains(const Hypergraph& h,
                                                                  const Numeration& sigma);

/// Edges with l(A) - f(A) <= threshold; empty when the threshold is <= 0.
std::vector<EdgeIndex> dense_edges(const Hypergraph& h, const VertexWeights& w,
                                   const DensityParams& params);

/// Color 1 on the first k vertices of every edge, color 2 on everything else.
Coloring coloring_from_numeration(const Hypergraph& h, const Numeration& sigma, unsigned k);

/// Edges with fewer than k vertices of either color, in increasing index.
std::vector<EdgeIndex> verify_coloring(const Hypergraph& h, const Coloring& c, unsigned k);

/// Throws PreconditionError unless k >= 1 and every edge has at least 2k vertices.
void require_edges_at_least_2k(const Hypergraph& h, unsigned k);

}  // namespace bklab
