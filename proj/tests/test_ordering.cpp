#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "bklab/error.hpp"
#include "bklab/hypergraph.hpp"
#include "bklab/ordering.hpp"

using namespace bklab;

namespace {

VertexWeights weights(std::vector<double> w) { return {std::move(w), 0}; }

Numeration identity(std::size_t v) {
  std::vector<std::uint32_t> r(v);
  for (std::size_t i = 0; i < v; ++i) r[i] = std::uint32_t(i + 1);
  return Numeration::from_ranks(r);
}

Numeration reversed(std::size_t v) {
  std::vector<std::uint32_t> r(v);
  for (std::size_t i = 0; i < v; ++i) r[i] = std::uint32_t(v - i);
  return Numeration::from_ranks(r);
}

// random small hypergraph with edges of size >= 2k
Hypergraph small_random(std::mt19937_64& gen, std::size_t v, std::size_t m, std::size_t lo,
                        std::size_t hi) {
  std::set<std::vector<std::int64_t>> seen;
  std::vector<std::vector<std::int64_t>> edges;
  std::uniform_int_distribution<std::size_t> size(lo, hi);
  for (std::size_t tries = 0; edges.size() < m && tries < 1000; ++tries) {
    std::vector<std::int64_t> all(v);
    for (std::size_t i = 0; i < v; ++i) all[i] = std::int64_t(i);
    std::shuffle(all.begin(), all.end(), gen);
    all.resize(size(gen));
    std::sort(all.begin(), all.end());
    if (seen.insert(all).second) edges.push_back(all);
  }
  return Hypergraph::build(v, edges);
}

}  // namespace

TEST_CASE("numeration from weights") {
  CHECK(Numeration::from_weights(std::vector<double>{0.9, 0.1, 0.5}).ranks() ==
        std::vector<std::uint32_t>{3, 1, 2});
  // ties go to the lower index
  CHECK(Numeration::from_weights(std::vector<double>{0.5, 0.5, 0.1}).ranks() ==
        std::vector<std::uint32_t>{2, 3, 1});
  CHECK_THROWS_AS(Numeration::from_ranks({1, 1, 2}), PreconditionError);
  CHECK_THROWS_AS(Numeration::from_ranks({0, 1, 2}), PreconditionError);

  const Numeration s = Numeration::from_order(std::vector<Vertex>{2, 0, 1});
  CHECK(s.ranks() == std::vector<std::uint32_t>{2, 3, 1});
  CHECK(Numeration::parse(s.to_string()) == s);
  CHECK(s.to_string() == "sigma: 2 3 1");
}

TEST_CASE("sample_numeration is a seeded bijection") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto [w, s] = sample_numeration(50, seed, 3);
    REQUIRE(w.weights.size() == 50);
    for (double x : w.weights) CHECK((x > 0.0 && x < 1.0));
    for (std::uint32_t r = 1; r <= 50; ++r) CHECK(s.rank(s.vertex_at(r)) == r);
    for (Vertex v = 0; v < 50; ++v) CHECK(s.vertex_at(s.rank(v)) == v);
    const auto [w2, s2] = sample_numeration(50, seed, 3);
    CHECK(w2.weights == w.weights);
    CHECK(s2 == s);
    CHECK(sample_numeration(50, seed, 4).second.ranks() != s.ranks());
  }
}

TEST_CASE("edge extremes") {
  const Hypergraph h = Hypergraph::build(4, {{0, 1, 2, 3}});
  const EdgeExtremes e = edge_extremes(h, weights({0.9, 0.05, 0.95, 0.1}), 0, 2);
  CHECK(e.f_val == 0.1);
  CHECK(e.l_val == 0.9);
  CHECK(e.first_k == std::vector<Vertex>{1, 3});
  CHECK(e.last_k == std::vector<Vertex>{0, 2});

  const Hypergraph g = Hypergraph::build(5, {{0, 1, 2, 3, 4}});
  const EdgeExtremes m = edge_extremes(g, weights({0.3, 0.7, 0.2, 0.9, 0.4}), 0, 1);
  CHECK(m.f_val == 0.2);
  CHECK(m.l_val == 0.9);
  CHECK_THROWS_AS(edge_extremes(g, weights({0.3, 0.7, 0.2, 0.9, 0.4}), 0, 3), PreconditionError);
}

TEST_CASE("first and last k of an edge are disjoint; at n = 2k they partition it") {
  std::mt19937_64 gen(5);
  for (int rep = 0; rep < 50; ++rep) {
    const unsigned k = 1 + rep % 3;
    const Hypergraph h = small_random(gen, 12, 6, 2 * k, 2 * k + 3);
    const Numeration s = sample_numeration(12, rep).second;
    EdgeRoles roles = edge_roles(h, s, k);
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
      std::sort(roles.first[e].begin(), roles.first[e].end());
      std::sort(roles.last[e].begin(), roles.last[e].end());
      std::vector<Vertex> both;
      std::set_intersection(roles.first[e].begin(), roles.first[e].end(), roles.last[e].begin(),
                            roles.last[e].end(), std::back_inserter(both));
      CHECK(both.empty());
      CHECK(roles.first[e].size() == k);
      if (h.edge(e).size() == 2 * k) {
        std::vector<Vertex> u;
        std::set_union(roles.first[e].begin(), roles.first[e].end(), roles.last[e].begin(),
                       roles.last[e].end(), std::back_inserter(u));
        CHECK(u == h.edge(e));
      }
    }
  }
}

TEST_CASE("bad pair examples") {
  const Hypergraph h = Hypergraph::build(7, {{0, 1, 2, 3}, {3, 4, 5, 6}});
  CHECK(find_bad_pairs(h, identity(7), 1) == std::vector<BadPair>{{0, 1, 3}});
  CHECK(has_bad_pair(h, identity(7), 1));

  const Hypergraph d = Hypergraph::build(8, {{0, 1, 2, 3}, {4, 5, 6, 7}});
  CHECK(find_bad_pairs(d, reversed(8), 2).empty());
  CHECK(find_bad_pairs(Hypergraph::build(4, {{0, 1, 2, 3}}), identity(4), 2).empty());
  CHECK_THROWS_AS(find_bad_pairs(h, identity(7), 3), PreconditionError);
}

TEST_CASE("bad pair witnesses lie in L(f) and F(s)") {
  std::mt19937_64 gen(6);
  for (int rep = 0; rep < 100; ++rep) {
    const unsigned k = 1 + rep % 2;
    const Hypergraph h = small_random(gen, 10, 5, 2 * k, 6);
    const Numeration s = sample_numeration(10, rep).second;
    const EdgeRoles roles = edge_roles(h, s, k);
    const auto pairs = find_bad_pairs(h, s, k);
    CHECK(std::is_sorted(pairs.begin(), pairs.end()));
    CHECK(pairs.empty() == !has_bad_pair(h, s, k));
    for (const BadPair& bp : pairs) {
      CHECK(bp.f != bp.s);
      const auto& L = roles.last[bp.f];
      const auto& F = roles.first[bp.s];
      CHECK(std::find(L.begin(), L.end(), bp.witness) != L.end());
      CHECK(std::find(F.begin(), F.end(), bp.witness) != F.end());
    }
  }
}

TEST_CASE("ordered 2-chains") {
  const Hypergraph h = Hypergraph::build(5, {{0, 1, 2}, {2, 3, 4}});
  using P = std::vector<std::pair<EdgeIndex, EdgeIndex>>;
  CHECK(find_ordered_2chains(h, identity(5)) == P{{0, 1}});
  CHECK(find_ordered_2chains(h, reversed(5)) == P{{1, 0}});
  const Hypergraph g = Hypergraph::build(4, {{0, 1, 2}, {1, 2, 3}});
  CHECK(find_ordered_2chains(g, identity(4)).empty());
}

TEST_CASE("k = 1: single-vertex bad pairs are exactly the ordered 2-chains") {
  std::mt19937_64 gen(7);
  for (int rep = 0; rep < 200; ++rep) {
    const Hypergraph h = small_random(gen, 8, 5, 2, 4);
    const Numeration s = sample_numeration(8, rep).second;
    std::set<std::pair<EdgeIndex, EdgeIndex>> bad;
    for (const BadPair& bp : find_bad_pairs(h, s, 1))
      if (intersection_size(h.edge(bp.f), h.edge(bp.s)) == 1) bad.insert({bp.f, bp.s});
    const auto chains = find_ordered_2chains(h, s);
    CHECK(bad == std::set<std::pair<EdgeIndex, EdgeIndex>>(chains.begin(), chains.end()));
  }
}

TEST_CASE("dense edges") {
  const Hypergraph one = Hypergraph::build(3, {{0, 1, 2}});
  CHECK(dense_edges(one, weights({0.1, 0.2, 0.3}), {1, 0.1}) == std::vector<EdgeIndex>{0});
  const Hypergraph four = Hypergraph::build(4, {{0, 1, 2, 3}});
  for (double p : {0.0, 0.3, 0.9})
    CHECK(dense_edges(four, weights({0.05, 0.1, 0.9, 0.95}), {2, p}).empty());
  CHECK(dense_edges(one, weights({0.5, 0.5, 0.5}), {1, 1.2}).empty());
  CHECK(DensityParams{1, 1.0}.threshold() <= 0.0);
}

TEST_CASE("dense edges shrink as p grows") {
  for (int rep = 0; rep < 30; ++rep) {
    const Hypergraph h = random_uniform(30, 6, 40, rep);
    const VertexWeights w = sample_numeration(30, rep).first;
    std::vector<EdgeIndex> prev = dense_edges(h, w, {2, 0.0});
    for (double p = 0.05; p < 1.1; p += 0.05) {
      const auto now = dense_edges(h, w, {2, p});
      CHECK(std::includes(prev.begin(), prev.end(), now.begin(), now.end()));
      prev = now;
    }
  }
}

TEST_CASE("p presets") {
  CHECK(preset_p(PPreset::paper_k, 30, 2) == doctest::Approx(4 * std::log(30.0) / 30));
  CHECK(preset_p(PPreset::paper_k1, 30, 2) == doctest::Approx(std::log(30.0) / 30));
  CHECK(preset_p(PPreset::paper_eps, 30, 2) ==
        doctest::Approx(std::log(std::pow(30.0, 4) * std::log(30.0)) / 30));
  CHECK(parse_p("paper-k", 30, 2) == preset_p(PPreset::paper_k, 30, 2));
  CHECK(parse_p("0.25", 30, 2) == 0.25);
  CHECK_THROWS(parse_p("paper-x", 30, 2));
}

TEST_CASE("coloring from numeration and verification") {
  const Hypergraph h = Hypergraph::build(5, {{0, 1, 2, 3}});
  const Coloring c = coloring_from_numeration(h, identity(5), 2);
  CHECK(c.to_string() == "11222");
  CHECK(verify_coloring(h, c, 2).empty());

  const Hypergraph t = Hypergraph::build(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(verify_coloring(t, Coloring::parse("112"), 1) == std::vector<EdgeIndex>{0});
  CHECK(Coloring::parse("1212").to_string() == "1212");
  CHECK_THROWS(Coloring::parse("1302"));

  const Hypergraph f = fano_plane();
  for (unsigned bits = 0; bits < 128; ++bits) {
    Coloring x;
    for (unsigned v = 0; v < 7; ++v) x.colors.push_back(std::uint8_t(1 + ((bits >> v) & 1)));
    CHECK_FALSE(verify_coloring(f, x, 1).empty());
  }
}

TEST_CASE("bad pair iff no proper coloring from the numeration, random small instances") {
  std::mt19937_64 gen(8);
  for (int rep = 0; rep < 300; ++rep) {
    const unsigned k = 1 + rep % 2;
    const std::size_t v = 9;
    const Hypergraph h = small_random(gen, v, 4, 2 * k, 2 * k + 2);
    const Numeration s = sample_numeration(v, rep).second;
    if (!has_bad_pair(h, s, k)) CHECK(verify_coloring(h, coloring_from_numeration(h, s, k), k).empty());

    // any proper coloring gives a numeration with the 1-class first and no bad pair
    Coloring c;
    for (std::size_t i = 0; i < v; ++i) c.colors.push_back(std::uint8_t(1 + (gen() & 1)));
    if (verify_coloring(h, c, k).empty()) {
      std::vector<Vertex> order;
      for (std::uint8_t col : {1, 2})
        for (Vertex x = 0; x < v; ++x)
          if (c.colors[x] == col) order.push_back(x);
      CHECK_FALSE(has_bad_pair(h, Numeration::from_order(order), k));
    }
  }
}
