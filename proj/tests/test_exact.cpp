#include <doctest.h>

#include <algorithm>
#include <random>

#include "bklab/analytics.hpp"
#include "bklab/error.hpp"
#include "bklab/exact.hpp"

using namespace bklab;

TEST_CASE("decider examples") {
  const Hypergraph single = Hypergraph::build(4, {{0, 1, 2, 3}});
  CHECK(decide_bk_exhaustive(single, 2));
  CHECK(decide_bk_numeration(single, 2));

  CHECK_FALSE(decide_bk_exhaustive(fano_plane(), 1));
  CHECK_FALSE(decide_bk_numeration(fano_plane(), 1));
  CHECK_FALSE(decide_b_by_2chains(fano_plane()));

  const Hypergraph tri = odd_cycle(3);
  CHECK_FALSE(decide_bk_exhaustive(tri, 1));
  CHECK_FALSE(decide_bk_numeration(tri, 1));
  CHECK(decide_bk_exhaustive(Hypergraph::build(3, {{0, 1}, {1, 2}}), 1));
  CHECK(decide_bk_numeration(Hypergraph::build(3, {{0, 2}, {1, 2}}), 1));

  // every 2-coloring of 5 points leaves a 4-set with at most one minority point
  CHECK_FALSE(decide_bk_exhaustive(complete_uniform(5, 4), 2));
  CHECK_FALSE(decide_bk_numeration(complete_uniform(5, 4), 2));
}

TEST_CASE("witnesses are checked") {
  const Hypergraph h = random_uniform(10, 4, 6, 3);
  const auto c = find_bk_coloring(h, 2);
  const auto s = find_good_numeration(h, 2);
  CHECK(c.has_value() == s.has_value());
  if (c) CHECK(verify_coloring(h, *c, 2).empty());
  if (s) CHECK_FALSE(has_bad_pair(h, *s, 2));
}

TEST_CASE("limits and preconditions") {
  CHECK_THROWS_AS(decide_bk_exhaustive(complete_uniform(25, 24), 1), LimitExceeded);
  CHECK_THROWS_AS(decide_bk_numeration(complete_uniform(11, 10), 1), LimitExceeded);
  CHECK_THROWS_AS(decide_bk_numeration(odd_cycle(3), 2), PreconditionError);
  // isolated vertices do not count toward the limit
  CHECK(decide_bk_exhaustive(Hypergraph::build(40, {{0, 1, 2, 3}}), 2));
}

TEST_CASE("search examples") {
  const SearchResult a = min_nonbk_search(2, 1, 3, 3);
  REQUIRE(a.min_edges == 3u);
  REQUIRE(a.witness.has_value());
  auto edges = a.witness->edges();
  std::sort(edges.begin(), edges.end());
  CHECK(edges == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});

  const SearchResult b = min_nonbk_search(2, 1, 4, 2);
  CHECK_FALSE(b.min_edges.has_value());
  CHECK_FALSE(b.witness.has_value());
  CHECK_FALSE(b.exhausted.budget_exceeded);
  CHECK(b.exhausted.levels_completed == 2);

  const SearchResult c = min_nonbk_search(4, 2, 5, 5);
  REQUIRE(c.min_edges.has_value());
  CHECK(*c.min_edges <= 5);
  CHECK_FALSE(decide_bk_exhaustive(*c.witness, 2));
  CHECK(c.witness->uniformity() == 4u);
  CHECK(c.witness->edge_count() == *c.min_edges);
}

TEST_CASE("search respects the naive lower bound and is independent of jobs") {
  for (auto [n, k, v, m] : {std::tuple{2u, 1u, 5u, 4u}, std::tuple{3u, 1u, 6u, 4u},
                             std::tuple{4u, 2u, 5u, 5u}, std::tuple{4u, 2u, 6u, 3u}}) {
    const SearchResult one = min_nonbk_search(n, k, v, m, {100'000'000, 1});
    const SearchResult many = min_nonbk_search(n, k, v, m, {100'000'000, 3});
    CHECK(to_json(one) == to_json(many));
    if (one.min_edges) {
      CHECK(Real(*one.min_edges) >= naive_bound(n, k));
      CHECK_FALSE(decide_bk_exhaustive(*one.witness, k));
    }
  }
}

TEST_CASE("budget overrun is reported") {
  const SearchResult r = min_nonbk_search(3, 1, 7, 7, {1000, 1});
  CHECK(r.exhausted.budget_exceeded);
  CHECK(r.exhausted.examined <= 1000);
}

TEST_CASE("removing an edge keeps property B_k") {
  std::mt19937_64 gen(4);
  for (int rep = 0; rep < 40; ++rep) {
    Hypergraph h = random_uniform(8, 4, 6 + rep % 6, rep);
    while (h.edge_count() > 0) {
      const bool before = decide_bk_exhaustive(h, 2);
      std::vector<EdgeIndex> keep;
      const EdgeIndex drop = EdgeIndex(gen() % h.edge_count());
      for (EdgeIndex e = 0; e < h.edge_count(); ++e)
        if (e != drop) keep.push_back(e);
      h = h.spanning_subhypergraph(keep);
      if (before) CHECK(decide_bk_exhaustive(h, 2));
    }
  }
}

TEST_CASE("search result json carries the certificate") {
  const std::string j = to_json(min_nonbk_search(2, 1, 3, 3));
  CHECK(j.find("\"levels_completed\"") != std::string::npos);
  CHECK(j.find("\"witness\"") != std::string::npos);
}
