#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "bklab/error.hpp"
#include "bklab/hypergraph.hpp"

using namespace bklab;

namespace {

Hypergraph triangle() { return Hypergraph::build(3, {{0, 1}, {1, 2}, {0, 2}}); }

}  // namespace

TEST_CASE("build normalizes and records uniformity") {
  const Hypergraph t = triangle();
  CHECK(t.edge_count() == 3);
  CHECK(t.uniformity() == 2u);

  const Hypergraph h = Hypergraph::build(5, {{3, 1, 0}, {4, 2}});
  CHECK(h.edge(0) == Edge{0, 1, 3});
  CHECK_FALSE(h.uniformity().has_value());
  CHECK(h.incident(1) == std::vector<EdgeIndex>{0});
}

TEST_CASE("build rejects malformed input") {
  CHECK_THROWS_AS(Hypergraph::build(4, {{0, 1}, {1, 0}}), InvalidHypergraph);
  CHECK_THROWS_AS(Hypergraph::build(3, {{0, 3}}), InvalidHypergraph);
  CHECK_THROWS_AS(Hypergraph::build(3, {{0, -1}}), InvalidHypergraph);
  CHECK_THROWS_AS(Hypergraph::build(3, {{}}), InvalidHypergraph);
  CHECK_THROWS_AS(Hypergraph::build(3, {{1, 1}}), InvalidHypergraph);
  CHECK_THROWS_AS(Hypergraph::build(0, {}), InvalidHypergraph);
  try {
    Hypergraph::build(4, {{0, 1}, {2, 3}, {1, 0}});
    FAIL("expected a duplicate-edge error");
  } catch (const InvalidHypergraph& e) {
    const std::string msg = e.what();
    CHECK(msg.find('0') != std::string::npos);
    CHECK(msg.find('2') != std::string::npos);
  }
}

TEST_CASE("fano plane lines meet in exactly one point") {
  const Hypergraph f = fano_plane();
  CHECK(f.edge_count() == 7);
  CHECK(f.uniformity() == 3u);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = i + 1; j < 7; ++j) CHECK(intersection_size(f.edge(i), f.edge(j)) == 1);

  const IntersectionProfile p = intersection_profile(f);
  CHECK(p.pair_sizes.size() == 21);
  CHECK(std::all_of(p.pair_sizes.begin(), p.pair_sizes.end(), [](auto s) { return s == 1; }));
  CHECK(p.is_simple());
  CHECK(p.intersection_degree == 6);
}

TEST_CASE("profile examples") {
  const IntersectionProfile t = intersection_profile(triangle());
  CHECK(t.is_simple());
  CHECK(t.max_intersection == 1);

  const IntersectionProfile p =
      intersection_profile(Hypergraph::build(6, {{0, 1, 2, 3}, {2, 3, 4, 5}}));
  CHECK(p.pair_sizes == std::vector<std::uint32_t>{2});
  CHECK(p.has_property_ah(2));
  CHECK_FALSE(p.has_property_ah(3));
  CHECK_FALSE(p.is_simple());

  const IntersectionProfile d = intersection_profile(Hypergraph::build(4, {{0, 1}, {2, 3}}));
  CHECK_FALSE(d.min_nonzero_intersection.has_value());
  CHECK(d.intersection_degree == 0);
}

TEST_CASE("generators") {
  CHECK(complete_uniform(5, 4).edge_count() == 5);
  CHECK(odd_cycle(3) == triangle());
  CHECK(odd_cycle(7).edge_count() == 7);
  CHECK_THROWS_AS(odd_cycle(4), PreconditionError);
  CHECK_THROWS_AS(odd_cycle(1), PreconditionError);
  CHECK_THROWS_AS(random_uniform(5, 4, 6, 1), PreconditionError);

  const Hypergraph a = random_uniform(300, 30, 1000, 7);
  const Hypergraph b = random_uniform(300, 30, 1000, 7);
  CHECK(a == b);
  CHECK(a.edge_count() == 1000);
  CHECK(a.uniformity() == 30u);
  CHECK_FALSE(a == random_uniform(300, 30, 1000, 8));
  // m = C(v, n) is the whole family
  CHECK(random_uniform(6, 3, 20, 3).edge_count() == 20);
}

TEST_CASE("complete(v, n) with v <= 2n - 1 has D = C(v, n) - 1") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t v = n + 1; v <= 2 * n - 1; ++v) {
      const Hypergraph h = complete_uniform(v, n);
      CHECK(intersection_profile(h).intersection_degree == h.edge_count() - 1);
    }
}

TEST_CASE("hg and json round trips are exact") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Hypergraph h = random_uniform(15, 2 + seed % 5, 10 + seed, seed);
    CHECK(parse_hg(to_hg(h)) == h);
    CHECK(parse_json(to_json(h)) == h);
    CHECK(parse_any(to_json(h)) == h);
    CHECK(to_hg(parse_hg(to_hg(h))) == to_hg(h));
  }
  CHECK(parse_hg("# comment\nv 3\n\ne 0 2\n").edge(0) == Edge{0, 2});
  CHECK_THROWS_AS(parse_hg("v 3\ne 2 0\n"), ParseError);
  CHECK_THROWS_AS(parse_hg("e 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_hg("v 3\ne 0 x\n"), ParseError);
  CHECK_THROWS_WITH_AS(parse_hg("v 3\ne 0 1\ne 0 1\n"), doctest::Contains("duplicate edge"), Error);
}

TEST_CASE("profile is invariant under edge permutation") {
  std::mt19937_64 gen(11);
  for (int rep = 0; rep < 20; ++rep) {
    const Hypergraph h = random_uniform(12, 4, 15, rep);
    std::vector<EdgeIndex> order(h.edge_count());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), gen);
    const Hypergraph g = h.spanning_subhypergraph(order);
    const IntersectionProfile a = intersection_profile(h), b = intersection_profile(g);
    auto sa = a.pair_sizes, sb = b.pair_sizes;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    CHECK(sa == sb);
    CHECK(a.intersection_degree == b.intersection_degree);
    CHECK(a.max_intersection == b.max_intersection);
    CHECK(a.min_nonzero_intersection == b.min_nonzero_intersection);
  }
}

TEST_CASE("property A_h: always for h = 1, monotone in h") {
  for (int rep = 0; rep < 30; ++rep) {
    const IntersectionProfile p = intersection_profile(random_uniform(10, 5, 8, rep));
    CHECK(p.has_property_ah(1));
    bool prev = true;
    for (std::uint32_t h = 1; h <= 6; ++h) {
      const bool now = p.has_property_ah(h);
      CHECK((prev || !now));
      prev = now;
    }
    for (auto s : p.pair_sizes) CHECK(s <= 5);
    CHECK(p.intersection_degree <= 7);
  }
}
