#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "bklab/hypergraph.hpp"
#include "bklab/ordering.hpp"

namespace bklab {

inline constexpr std::size_t kColoringVertexLimit = 24;
inline constexpr std::size_t kNumerationVertexLimit = 10;

/// A coloring in which every edge has at least k vertices of each color, if one
/// exists. Walks {1,2}^V in Gray-code order over the non-isolated vertices with
/// the first of them pinned to color 1 (swapping colors preserves the property).
/// Throws LimitExceeded when more than `vertex_limit` vertices lie on edges.
std::optional<Coloring> find_bk_coloring(const Hypergraph& h, unsigned k,
                                         std::size_t vertex_limit = kColoringVertexLimit);

bool decide_bk_exhaustive(const Hypergraph& h, unsigned k,
                          std::size_t vertex_limit = kColoringVertexLimit);

/// A numeration without bad pairs, if one exists, by enumerating the orders of
/// the non-isolated vertices. Requires every edge to have at least 2k vertices.
std::optional<Numeration> find_good_numeration(const Hypergraph& h, unsigned k,
                                               std::size_t vertex_limit = kNumerationVertexLimit);

bool decide_bk_numeration(const Hypergraph& h, unsigned k,
                          std::size_t vertex_limit = kNumerationVertexLimit);

/// True iff some numeration has no ordered 2-chain.
bool decide_b_by_2chains(const Hypergraph& h, std::size_t vertex_limit = kNumerationVertexLimit);

struct SearchOptions {
  /// Maximum number of edge sets to enumerate; a level that would exceed it is not started.
  std::uint64_t budget = 100'000'000;
  unsigned jobs = 1;
};

struct SearchCertificate {
  std::size_t v_max = 0;
  std::size_t m_max = 0;
  std::uint64_t examined = 0;          ///< edge sets enumerated
  std::uint64_t normal_form = 0;       ///< of those, the ones decided
  std::size_t levels_completed = 0;    ///< edge counts 1..levels_completed fully searched
  bool budget_exceeded = false;
};

struct SearchResult {
  std::size_t n = 0;
  unsigned k = 0;
  std::optional<std::size_t> min_edges;
  std::optional<Hypergraph> witness;
  SearchCertificate exhausted;
};

/// Smallest m <= m_max for which an n-uniform hypergraph on at most v_max
/// vertices lacks property B_k, with a witness.
///
/// Edge sets are enumerated in increasing m. Within a level, candidates have
/// the edge {0..n-1} first, the remaining edges in lexicographic order, and
/// their vertex set equal to a prefix {0..u-1}; every hypergraph is isomorphic
/// to at least one such candidate. The witness is the lexicographically first
/// non-B_k candidate of the smallest level, independent of `jobs`.
SearchResult min_nonbk_search(std::size_t n, unsigned k, std::size_t v_max, std::size_t m_max,
                              const SearchOptions& options = {});

std::string to_json(const SearchResult& result);

}  // namespace bklab
