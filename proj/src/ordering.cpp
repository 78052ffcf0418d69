#include "bklab/ordering.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>

#include "bklab/error.hpp"
#include "bklab/rng.hpp"

namespace bklab {

Numeration Numeration::from_ranks(std::vector<std::uint32_t> ranks) {
  Numeration sigma;
  sigma.inverse_.assign(ranks.size(), 0);
  std::vector<bool> used(ranks.size(), false);
  for (Vertex v = 0; v < ranks.size(); ++v) {
    const auto r = ranks[v];
    if (r < 1 || r > ranks.size() || used[r - 1])
      throw PreconditionError("ranks do not form a permutation of 1.." +
                              std::to_string(ranks.size()));
    used[r - 1] = true;
    sigma.inverse_[r - 1] = v;
  }
  sigma.rank_ = std::move(ranks);
  return sigma;
}

Numeration Numeration::from_order(std::span<const Vertex> order) {
  std::vector<std::uint32_t> ranks(order.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] >= order.size()) throw PreconditionError("order entry out of range");
    ranks[order[i]] = static_cast<std::uint32_t>(i + 1);
  }
  return from_ranks(std::move(ranks));
}

Numeration Numeration::from_weights(std::span<const double> weights) {
  std::vector<Vertex> order(weights.size());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return weights[a] < weights[b] || (weights[a] == weights[b] && a < b);
  });
  return from_order(order);
}

std::string Numeration::to_string() const {
  std::string out = "sigma:";
  for (auto r : rank_) {
    out += ' ';
    out += std::to_string(r);
  }
  return out;
}

Numeration Numeration::parse(const std::string& line) {
  std::istringstream in(line);
  std::string tag;
  if (!(in >> tag) || tag != "sigma:") throw ParseError("numeration must start with 'sigma:'");
  std::vector<std::uint32_t> ranks;
  for (std::string tok; in >> tok;) {
    std::uint32_t r = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), r);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw ParseError("bad rank '" + tok + "'");
    ranks.push_back(r);
  }
  try {
    return from_ranks(std::move(ranks));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

double preset_p(PPreset preset, std::size_t n, unsigned k) {
  if (n < 2) throw PreconditionError("p presets need n >= 2");
  const double dn = static_cast<double>(n);
  const double ln_n = std::log(dn);
  switch (preset) {
    case PPreset::paper_k:
      return 2.0 * k * ln_n / dn;
    case PPreset::paper_k1:
      return ln_n / dn;
    case PPreset::paper_eps:
      return (2.0 * k * ln_n + std::log(ln_n)) / dn;
  }
  return 0.0;
}

double parse_p(const std::string& text, std::size_t n, unsigned k) {
  if (text == "paper-k") return preset_p(PPreset::paper_k, n, k);
  if (text == "paper-k1") return preset_p(PPreset::paper_k1, n, k);
  if (text == "paper-eps") return preset_p(PPreset::paper_eps, n, k);
  try {
    std::size_t used = 0;
    const double p = std::stod(text, &used);
    if (used != text.size() || !std::isfinite(p)) throw std::invalid_argument(text);
    return p;
  } catch (const std::exception&) {
    throw ParseError("p must be paper-k, paper-k1, paper-eps or a real number, got '" + text +
                     "'");
  }
}

std::string Coloring::to_string() const {
  std::string out;
  out.reserve(colors.size());
  for (auto c : colors) out += static_cast<char>('0' + c);
  return out;
}

Coloring Coloring::parse(const std::string& text) {
  Coloring c;
  for (char ch : text) {
    if (ch == '1' || ch == '2')
      c.colors.push_back(static_cast<std::uint8_t>(ch - '0'));
    else if (ch != '\n' && ch != '\r' && ch != ' ')
      throw ParseError(std::string("coloring may only contain '1' and '2', got '") + ch + "'");
  }
  return c;
}

void require_edges_at_least_2k(const Hypergraph& h, unsigned k) {
  if (k < 1) throw PreconditionError("k must be at least 1");
  for (EdgeIndex e = 0; e < h.edge_count(); ++e)
    if (h.edge(e).size() < 2 * static_cast<std::size_t>(k))
      throw PreconditionError("edge " + std::to_string(e) + " has " +
                              std::to_string(h.edge(e).size()) + " vertices, fewer than 2k = " +
                              std::to_string(2 * k));
}

std::pair<VertexWeights, Numeration> sample_numeration(std::size_t vertex_count,
                                                       std::uint64_t seed, std::uint64_t trial) {
  if (vertex_count < 1) throw PreconditionError("vertex_count must be at least 1");
  VertexWeights w;
  w.seed = seed;
  w.weights.resize(vertex_count);
  CounterRng rng(stream_key(seed, Stream::numeration, trial));
  for (auto& x : w.weights) x = rng.uniform_open();
  auto sigma = Numeration::from_weights(w.weights);
  return {std::move(w), std::move(sigma)};
}

namespace {

// Edge vertices ordered by (weight, index).
std::vector<Vertex> sorted_by_weight(const Edge& edge, std::span<const double> weights) {
  std::vector<Vertex> order(edge.begin(), edge.end());
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return weights[a] < weights[b] || (weights[a] == weights[b] && a < b);
  });
  return order;
}

std::vector<Vertex> sorted_by_rank(const Edge& edge, const Numeration& sigma) {
  std::vector<Vertex> order(edge.begin(), edge.end());
  std::sort(order.begin(), order.end(),
            [&](Vertex a, Vertex b) { return sigma.rank(a) < sigma.rank(b); });
  return order;
}

void check_weights(const Hypergraph& h, const VertexWeights& w) {
  if (w.weights.size() != h.vertex_count())
    throw PreconditionError("weight vector length differs from vertex count");
}

void check_numeration(const Hypergraph& h, const Numeration& sigma) {
  if (sigma.size() != h.vertex_count())
    throw PreconditionError("numeration size differs from vertex count");
}

}  // namespace

EdgeExtremes edge_extremes(const Hypergraph& h, const VertexWeights& w, EdgeIndex edge,
                           unsigned k) {
  check_weights(h, w);
  if (edge >= h.edge_count()) throw PreconditionError("edge index out of range");
  const Edge& e = h.edge(edge);
  if (k < 1 || e.size() < 2 * static_cast<std::size_t>(k))
    throw PreconditionError("edge_extremes requires 1 <= k and 2k <= edge size");
  const auto order = sorted_by_weight(e, w.weights);
  EdgeExtremes out;
  out.f_val = w.weights[order[k - 1]];
  out.l_val = w.weights[order[order.size() - k]];
  out.first_k.assign(order.begin(), order.begin() + k);
  out.last_k.assign(order.end() - k, order.end());
  std::sort(out.first_k.begin(), out.first_k.end());
  std::sort(out.last_k.begin(), out.last_k.end());
  return out;
}

EdgeRoles edge_roles(const Hypergraph& h, const Numeration& sigma, unsigned k) {
  check_numeration(h, sigma);
  require_edges_at_least_2k(h, k);
  EdgeRoles roles;
  roles.first.resize(h.edge_count());
  roles.last.resize(h.edge_count());
  for (EdgeIndex e = 0; e < h.edge_count(); ++e) {
    const auto order = sorted_by_rank(h.edge(e), sigma);
    roles.first[e].assign(order.begin(), order.begin() + k);
    roles.last[e].assign(order.end() - k, order.end());
  }
  return roles;
}

std::vector<BadPair> find_bad_pairs(const Hypergraph& h, const Numeration& sigma, unsigned k) {
  const auto roles = edge_roles(h, sigma, k);
  // Per vertex: edges in which it is among the last k, and among the first k.
  std::vector<std::vector<EdgeIndex>> in_last(h.vertex_count()), in_first(h.vertex_count());
  for (EdgeIndex e = 0; e < h.edge_count(); ++e) {
    for (Vertex v : roles.last[e]) in_last[v].push_back(e);
    for (Vertex v : roles.first[e]) in_first[v].push_back(e);
  }
  std::vector<BadPair> pairs;
  for (Vertex v = 0; v < h.vertex_count(); ++v)
    for (EdgeIndex f : in_last[v])
      for (EdgeIndex s : in_first[v])
        if (f != s) pairs.push_back({f, s, v});
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

bool has_bad_pair(const Hypergraph& h, const Numeration& sigma, unsigned k) {
  // F(f) and L(f) are disjoint for a single edge, so a vertex that is in some
  // edge's last k and some edge's first k always pairs two distinct edges.
  const auto roles = edge_roles(h, sigma, k);
  std::vector<std::uint8_t> mark(h.vertex_count(), 0);
  for (const auto& last : roles.last)
    for (Vertex v : last) mark[v] = 1;
  for (const auto& first : roles.first)
    for (Vertex v : first)
      if (mark[v]) return true;
  return false;
}

std::size_t count_bad_edge_pairs(std::span<const BadPair> pairs) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (i == 0 || pairs[i].f != pairs[i - 1].f || pairs[i].s != pairs[i - 1].s) ++count;
  return count;
}

std::vector<std::pair<EdgeIndex, EdgeIndex>> find_ordered_2chains(const Hypergraph& h,
                                                                  const Numeration& sigma) {
  check_numeration(h, sigma);
  // The shared vertex of a 2-chain is the last vertex of A1 and the first of A2.
  std::vector<std::vector<EdgeIndex>> ends_at(h.vertex_count()), starts_at(h.vertex_count());
  for (EdgeIndex e = 0; e < h.edge_count(); ++e) {
    const Edge& edge = h.edge(e);
    auto [lo, hi] = std::minmax_element(edge.begin(), edge.end(), [&](Vertex a, Vertex b) {
      return sigma.rank(a) < sigma.rank(b);
    });
    starts_at[*lo].push_back(e);
    ends_at[*hi].push_back(e);
  }
  std::vector<std::pair<EdgeIndex, EdgeIndex>> chains;
  for (Vertex v = 0; v < h.vertex_count(); ++v)
    for (EdgeIndex a : ends_at[v])
      for (EdgeIndex b : starts_at[v])
        if (a != b && intersection_size(h.edge(a), h.edge(b)) == 1) chains.emplace_back(a, b);
  std::sort(chains.begin(), chains.end());
  return chains;
}

std::vector<EdgeIndex> dense_edges(const Hypergraph& h, const VertexWeights& w,
                                   const DensityParams& params) {
  check_weights(h, w);
  require_edges_at_least_2k(h, params.k);
  const double threshold = params.threshold();
  std::vector<EdgeIndex> dense;
  if (threshold <= 0.0) return dense;
  const std::size_t k = params.k;
  std::vector<double> values;
  for (EdgeIndex e = 0; e < h.edge_count(); ++e) {
    const Edge& edge = h.edge(e);
    values.clear();
    for (Vertex v : edge) values.push_back(w.weights[v]);
    std::nth_element(values.begin(), values.begin() + (k - 1), values.end());
    const double f_val = values[k - 1];
    std::nth_element(values.begin() + k, values.end() - k, values.end());
    const double l_val = values[values.size() - k];
    if (l_val - f_val <= threshold) dense.push_back(e);
  }
  return dense;
}

Coloring coloring_from_numeration(const Hypergraph& h, const Numeration& sigma, unsigned k) {
  const auto roles = edge_roles(h, sigma, k);
  Coloring c;
  c.colors.assign(h.vertex_count(), 2);
  for (const auto& first : roles.first)
    for (Vertex v : first) c.colors[v] = 1;
  return c;
}

std::vector<EdgeIndex> verify_coloring(const Hypergraph& h, const Coloring& c, unsigned k) {
  if (c.colors.size() != h.vertex_count())
    throw PreconditionError("coloring length differs from vertex count");
  std::vector<EdgeIndex> violations;
  for (EdgeIndex e = 0; e < h.edge_count(); ++e) {
    std::size_t ones = 0;
    for (Vertex v : h.edge(e)) ones += c.colors[v] == 1;
    const std::size_t twos = h.edge(e).size() - ones;
    if (ones < k || twos < k) violations.push_back(e);
  }
  return violations;
}

}  // namespace bklab
