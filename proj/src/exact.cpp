#include "bklab/exact.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

#include <json.hpp>

#include "bklab/error.hpp"
#include "bklab/parallel.hpp"

namespace bklab {

namespace {

// Edges over a compacted vertex range [0, vertex_count).
struct CompactSystem {
  std::size_t vertex_count = 0;
  std::vector<std::vector<std::uint32_t>> edges;
  std::vector<std::vector<std::uint32_t>> incidence;
};

// Renumbers the non-isolated vertices of h to 0..a-1 (in increasing original index).
CompactSystem compact(const Hypergraph& h, std::vector<Vertex>* original = nullptr) {
  std::vector<std::int64_t> index(h.vertex_count(), -1);
  CompactSystem sys;
  for (Vertex v = 0; v < h.vertex_count(); ++v)
    if (!h.incident(v).empty()) {
      index[v] = static_cast<std::int64_t>(sys.vertex_count++);
      if (original) original->push_back(v);
    }
  sys.incidence.resize(sys.vertex_count);
  for (EdgeIndex e = 0; e < h.edge_count(); ++e) {
    std::vector<std::uint32_t> edge;
    for (Vertex v : h.edge(e)) {
      edge.push_back(static_cast<std::uint32_t>(index[v]));
      sys.incidence[index[v]].push_back(e);
    }
    sys.edges.push_back(std::move(edge));
  }
  return sys;
}

// Gray-code walk. Returns the color-1 indicator of a proper coloring, if any.
std::optional<std::vector<std::uint8_t>> gray_code_bk(const CompactSystem& sys, unsigned k) {
  const std::size_t m = sys.edges.size();
  for (const auto& e : sys.edges)
    if (e.size() < 2 * static_cast<std::size_t>(k)) return std::nullopt;
  std::vector<std::uint8_t> is_one(sys.vertex_count, 0);
  if (m == 0) return is_one;

  // Vertex 0 is pinned to color 1; vertex i >= 1 follows bit i-1 of the Gray code.
  is_one[0] = 1;
  std::vector<std::uint32_t> ones(m, 0);
  std::size_t satisfied = 0;
  auto ok = [&](std::size_t e) {
    return ones[e] >= k && sys.edges[e].size() - ones[e] >= k;
  };
  for (std::uint32_t e : sys.incidence[0]) ++ones[e];
  for (std::size_t e = 0; e < m; ++e) satisfied += ok(e);
  if (satisfied == m) return is_one;

  const std::uint64_t steps = std::uint64_t{1} << (sys.vertex_count - 1);
  for (std::uint64_t g = 1; g < steps; ++g) {
    const std::size_t v = static_cast<std::size_t>(std::countr_zero(g)) + 1;
    const bool to_one = !is_one[v];
    is_one[v] = to_one;
    for (std::uint32_t e : sys.incidence[v]) {
      satisfied -= ok(e);
      ones[e] += to_one ? 1 : -1;
      satisfied += ok(e);
    }
    if (satisfied == m) return is_one;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Coloring> find_bk_coloring(const Hypergraph& h, unsigned k,
                                         std::size_t vertex_limit) {
  if (k < 1) throw PreconditionError("k must be at least 1");
  std::vector<Vertex> original;
  const auto sys = compact(h, &original);
  if (sys.vertex_count > vertex_limit)
    throw LimitExceeded("exhaustive coloring: " + std::to_string(sys.vertex_count) +
                        " non-isolated vertices exceed the limit of " +
                        std::to_string(vertex_limit));
  if (sys.vertex_count > 62) throw LimitExceeded("exhaustive coloring supports at most 62 vertices");
  auto found = gray_code_bk(sys, k);
  if (!found) return std::nullopt;
  Coloring c;
  c.colors.assign(h.vertex_count(), 2);
  for (std::size_t i = 0; i < original.size(); ++i)
    if ((*found)[i]) c.colors[original[i]] = 1;
  return c;
}

bool decide_bk_exhaustive(const Hypergraph& h, unsigned k, std::size_t vertex_limit) {
  return find_bk_coloring(h, k, vertex_limit).has_value();
}

namespace {

// Calls visit(order) for every ordering of the non-isolated vertices, where the
// isolated ones are appended at the end. Stops when visit returns true.
template <class Visit>
std::optional<Numeration> search_orders(const Hypergraph& h, std::size_t vertex_limit,
                                        Visit&& visit) {
  std::vector<Vertex> active, isolated;
  for (Vertex v = 0; v < h.vertex_count(); ++v)
    (h.incident(v).empty() ? isolated : active).push_back(v);
  if (active.size() > vertex_limit)
    throw LimitExceeded("numeration enumeration: " + std::to_string(active.size()) +
                        " non-isolated vertices exceed the limit of " +
                        std::to_string(vertex_limit));
  std::vector<Vertex> order;
  do {
    order = active;
    order.insert(order.end(), isolated.begin(), isolated.end());
    auto sigma = Numeration::from_order(order);
    if (visit(sigma)) return sigma;
  } while (std::next_permutation(active.begin(), active.end()));
  return std::nullopt;
}

}  // namespace

std::optional<Numeration> find_good_numeration(const Hypergraph& h, unsigned k,
                                               std::size_t vertex_limit) {
  require_edges_at_least_2k(h, k);
  return search_orders(h, vertex_limit,
                       [&](const Numeration& sigma) { return !has_bad_pair(h, sigma, k); });
}

bool decide_bk_numeration(const Hypergraph& h, unsigned k, std::size_t vertex_limit) {
  return find_good_numeration(h, k, vertex_limit).has_value();
}

bool decide_b_by_2chains(const Hypergraph& h, std::size_t vertex_limit) {
  return search_orders(h, vertex_limit, [&](const Numeration& sigma) {
           return find_ordered_2chains(h, sigma).empty();
         }).has_value();
}

namespace {

std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max())
      return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

struct BranchOutcome {
  std::uint64_t examined = 0;
  std::uint64_t normal_form = 0;
  std::optional<std::vector<std::size_t>> witness;  // candidate indices, lexicographically first
};

// Enumerates all sets {0} ∪ {c_1 < ... < c_{m-1}} with c_1 = first, c_i < candidates.size().
BranchOutcome search_branch(const std::vector<std::uint64_t>& candidates, std::size_t n,
                            unsigned k, std::size_t m, std::size_t first) {
  BranchOutcome out;
  const std::size_t total = candidates.size();
  std::vector<std::size_t> chosen{0};
  if (m >= 2) chosen.push_back(first);

  // Standard combination walk over the remaining m-2 slots after `first`.
  std::vector<std::size_t> rest(m >= 2 ? m - 2 : 0);
  std::iota(rest.begin(), rest.end(), first + 1);
  if (!rest.empty() && rest.back() >= total) return out;

  CompactSystem sys;
  while (true) {
    ++out.examined;
    std::uint64_t used = 0;
    std::vector<std::size_t> set = chosen;
    set.insert(set.end(), rest.begin(), rest.end());
    for (auto c : set) used |= candidates[c];
    // Vertex set must be a prefix {0..u-1}.
    if ((used & (used + 1)) == 0) {
      ++out.normal_form;
      sys.vertex_count = static_cast<std::size_t>(std::popcount(used));
      sys.edges.assign(set.size(), {});
      sys.incidence.assign(sys.vertex_count, {});
      for (std::size_t e = 0; e < set.size(); ++e)
        for (std::uint64_t bits = candidates[set[e]]; bits; bits &= bits - 1) {
          const auto v = static_cast<std::uint32_t>(std::countr_zero(bits));
          sys.edges[e].push_back(v);
          sys.incidence[v].push_back(static_cast<std::uint32_t>(e));
        }
      if (!gray_code_bk(sys, k)) {
        out.witness = set;
        return out;
      }
    }
    // Advance `rest`.
    std::size_t i = rest.size();
    while (i > 0 && rest[i - 1] == total - rest.size() + i - 1) --i;
    if (i == 0) break;
    ++rest[i - 1];
    for (std::size_t j = i; j < rest.size(); ++j) rest[j] = rest[j - 1] + 1;
  }
  (void)n;
  return out;
}

}  // namespace

SearchResult min_nonbk_search(std::size_t n, unsigned k, std::size_t v_max, std::size_t m_max,
                              const SearchOptions& options) {
  if (k < 1) throw PreconditionError("k must be at least 1");
  if (n < std::max<std::size_t>(2 * k, 2)) throw PreconditionError("search requires n >= max(2k, 2)");
  if (v_max < n) throw PreconditionError("search requires v_max >= n");
  if (v_max > kColoringVertexLimit)
    throw LimitExceeded("search requires v_max <= " + std::to_string(kColoringVertexLimit));

  // All n-subsets of {0..v_max-1} as bitmasks in lexicographic order; index 0 is {0..n-1}.
  std::vector<std::uint64_t> candidates;
  {
    std::vector<std::size_t> cur(n);
    std::iota(cur.begin(), cur.end(), std::size_t{0});
    while (true) {
      std::uint64_t mask = 0;
      for (auto v : cur) mask |= std::uint64_t{1} << v;
      candidates.push_back(mask);
      std::size_t i = n;
      while (i > 0 && cur[i - 1] == v_max - n + i - 1) --i;
      if (i == 0) break;
      ++cur[i - 1];
      for (std::size_t j = i; j < n; ++j) cur[j] = cur[j - 1] + 1;
    }
  }

  SearchResult result;
  result.n = n;
  result.k = k;
  result.exhausted.v_max = v_max;
  result.exhausted.m_max = m_max;
  const std::size_t total = candidates.size();

  for (std::size_t m = 1; m <= std::min(m_max, total); ++m) {
    const std::uint64_t level_size = binomial_u64(total - 1, m - 1);
    if (level_size > options.budget - std::min(options.budget, result.exhausted.examined)) {
      result.exhausted.budget_exceeded = true;
      return result;
    }
    std::vector<BranchOutcome> outcomes;
    if (m == 1) {
      outcomes.push_back(search_branch(candidates, n, k, 1, 0));
    } else {
      // One branch per choice of the second edge.
      const std::size_t branches = total - 1;
      outcomes.resize(branches);
      parallel_blocks(branches, options.jobs, [&](std::size_t begin, std::size_t end, std::size_t) {
        for (std::size_t b = begin; b < end; ++b)
          outcomes[b] = search_branch(candidates, n, k, m, b + 1);
      });
    }
    std::optional<std::vector<std::size_t>> witness;
    for (const auto& o : outcomes) {
      result.exhausted.normal_form += o.normal_form;
      if (!witness && o.witness) witness = o.witness;
    }
    // Branches stop at their first witness, so the certificate counts the full
    // level only when no witness exists.
    if (witness) {
      result.exhausted.examined += std::accumulate(
          outcomes.begin(), outcomes.end(), std::uint64_t{0},
          [](std::uint64_t acc, const BranchOutcome& o) { return acc + o.examined; });
      std::vector<std::vector<std::int64_t>> edges;
      for (auto c : *witness) {
        std::vector<std::int64_t> edge;
        for (std::uint64_t bits = candidates[c]; bits; bits &= bits - 1)
          edge.push_back(std::countr_zero(bits));
        edges.push_back(std::move(edge));
      }
      std::size_t used = 0;
      for (const auto& e : edges) used = std::max<std::size_t>(used, e.back() + 1);
      result.witness = Hypergraph::build(used, edges);
      result.min_edges = m;
      return result;
    }
    result.exhausted.examined += level_size;
    result.exhausted.levels_completed = m;
  }
  if (m_max > total) result.exhausted.levels_completed = m_max;
  return result;
}

std::string to_json(const SearchResult& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["min_edges"] = r.min_edges ? nlohmann::ordered_json(*r.min_edges) : nullptr;
  j["witness"] = r.witness ? nlohmann::ordered_json(to_hg(*r.witness)) : nullptr;
  j["exhausted"] = {{"v_max", r.exhausted.v_max},
                    {"m_max", r.exhausted.m_max},
                    {"examined", r.exhausted.examined},
                    {"normal_form", r.exhausted.normal_form},
                    {"levels_completed", r.exhausted.levels_completed},
                    {"budget_exceeded", r.exhausted.budget_exceeded}};
  return j.dump(2);
}

}  // namespace bklab
