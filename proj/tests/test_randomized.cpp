#include <doctest.h>

#include <cmath>

#include "bklab/analytics.hpp"
#include "bklab/error.hpp"
#include "bklab/randomized.hpp"

using namespace bklab;

TEST_CASE("naive colorer on a single 4-edge succeeds w.p. 6/16") {
  const Hypergraph h = Hypergraph::build(4, {{0, 1, 2, 3}});
  // first-trial success frequency over many seeds
  int hits = 0;
  const int seeds = 20000;
  for (int s = 0; s < seeds; ++s) {
    const ColorerResult r = naive_random_colorer(h, 2, 1, s);
    if (r.coloring) {
      ++hits;
      CHECK(verify_coloring(h, *r.coloring, 2).empty());
    }
  }
  const double rate = double(hits) / seeds;
  const double se = std::sqrt(0.375 * 0.625 / seeds);
  CHECK(std::abs(rate - 0.375) < 4 * se);
  CHECK_THROWS_AS(naive_random_colorer(Hypergraph::build(2, {{0}}), 1, 1, 0), PreconditionError);
}

TEST_CASE("union bound") {
  CHECK(union_bound_fail_prob(4, 2, 1) == 0.625);
  CHECK(union_bound_fail_prob(4, 2, 2) == 1.0);
  for (unsigned n = 4; n <= 30; ++n)
    for (unsigned k = 1; 2 * k <= n && k <= 4; ++k) {
      const double m_max = std::floor(static_cast<double>(naive_bound(n, k) - 1));
      if (m_max >= 1) CHECK(union_bound_fail_prob(n, k, std::uint64_t(m_max)) < 1.0);
      CHECK(union_bound_fail_prob(n, k, 2) >= union_bound_fail_prob(n, k, 1));
      if (2 * (k + 1) <= n)
        CHECK(union_bound_fail_prob(n, k + 1, 1) >= union_bound_fail_prob(n, k, 1));
      CHECK(union_bound_fail_prob(n + 1, k, 1) <= union_bound_fail_prob(n, k, 1));
    }
}

TEST_CASE("ordering colorer") {
  const Hypergraph two = Hypergraph::build(10, {{0, 1, 2, 3}, {5, 6, 7, 8}});
  const ColorerResult r = ordering_colorer(two, 2, 0.3, 5, 1);
  REQUIRE(r.coloring);
  CHECK(r.stats.success_trial == 0u);
  CHECK(r.stats.trials_run == 1);

  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Hypergraph h = random_uniform(60, 8, 40, seed);
    const ColorerResult a = ordering_colorer(h, 2, 0.3, 200, seed);
    const ColorerResult b = ordering_colorer(h, 2, 0.3, 200, seed, {false, 3});
    CHECK(to_json(a.stats) == to_json(b.stats));
    CHECK(a.coloring == b.coloring);
    if (a.coloring) {
      CHECK(verify_coloring(h, *a.coloring, 2).empty());
      REQUIRE(a.stats.success_trial);
      CHECK(*a.stats.success_trial < a.stats.trials_run);
      CHECK(a.stats.records.back().X == 0);
      CHECK(a.stats.records.back().accepted);
    }
  }
}

TEST_CASE("strict mode also rejects dense trials") {
  const Hypergraph h = random_uniform(40, 8, 10, 2);
  const ColorerResult r = ordering_colorer(h, 2, 0.1, 300, 4, {true, 1});
  for (const TrialRecord& t : r.stats.records)
    if (t.accepted) CHECK((t.X == 0 && t.Y == 0));
}

TEST_CASE("epsilon pruning") {
  SUBCASE("eps = 1 accepts on the first trial") {
    const Hypergraph h = complete_uniform(6, 4);
    const PruneResult r = bk_epsilon_prune(h, 2, 1.0, 0.2, 3, 9);
    REQUIRE(r.subhypergraph);
    CHECK(r.stats.success_trial == 0u);
    CHECK(verify_coloring(*r.subhypergraph, *r.coloring, 2).empty());
  }
  SUBCASE("disjoint edges lose only dense ones") {
    const Hypergraph h = Hypergraph::build(12, {{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}});
    const PruneResult r = bk_epsilon_prune(h, 2, 0.9, 0.0, 10, 2);
    REQUIRE(r.subhypergraph);
    CHECK(r.removed.size() == r.stats.records.back().Y);
  }
  SUBCASE("accounting over random instances") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Hypergraph h = random_uniform(40, 6, 60, seed);
      const double eps = 0.5;
      const PruneResult r = bk_epsilon_prune(h, 2, eps, 0.3, 100, seed);
      if (!r.subhypergraph) continue;
      const TrialRecord& t = r.stats.records.back();
      CHECK(t.accepted);
      CHECK(double(t.X + t.Y) < eps * h.edge_count());
      CHECK(r.subhypergraph->edge_count() + r.removed.size() == h.edge_count());
      CHECK(r.subhypergraph->edge_count() >= h.edge_count() - t.X - t.Y);
      CHECK(double(r.subhypergraph->edge_count()) > (1 - eps) * h.edge_count());
      CHECK(verify_coloring(*r.subhypergraph, *r.coloring, 2).empty());
      const PruneResult again = bk_epsilon_prune(h, 2, eps, 0.3, 100, seed, 4);
      CHECK(again.removed == r.removed);
      CHECK(again.coloring == r.coloring);
    }
  }
  CHECK_THROWS_AS(bk_epsilon_prune(complete_uniform(6, 4), 2, 0.0, 0.2, 3, 9), PreconditionError);
}

TEST_CASE("trial stats csv") {
  const Hypergraph h = Hypergraph::build(8, {{0, 1, 2, 3}, {4, 5, 6, 7}});
  const std::string csv = to_csv(ordering_colorer(h, 2, 0.3, 5, 1).stats);
  CHECK(csv.rfind("trial,X,Y,accepted\n", 0) == 0);
}

TEST_CASE("degree condition") {
  const LllCheck c = degree_condition_check(30, 2, 0);
  CHECK(static_cast<double>(c.d_limit) == doctest::Approx(3.31e-4 - 1).epsilon(1e-4));
  CHECK_FALSE(c.degree_ok);
  CHECK_FALSE(c.satisfied);

  const LllCheck z = degree_condition_check(30, 2, 0, Real(0), Real(0));
  CHECK(z.sum == 0);
  CHECK(z.sum_ok);
  CHECK(z.satisfied == (z.d_limit >= 0));

  // far out the limit is huge and the condition holds at D = 0
  const LllCheck big = degree_condition_check(400, 2, 0);
  CHECK(big.degree_ok);
  CHECK(big.satisfied == (big.sum <= Real(0.25)));
  CHECK(big.satisfied == (big.sum_ok && big.degree_ok));
}

TEST_CASE("generic local lemma sum") {
  for (std::size_t d : {1u, 3u, 7u}) {
    const std::size_t events = 20;
    std::vector<double> probs(events, 1.0 / (8.0 * (d + 1)));
    std::vector<std::vector<std::size_t>> deps(events);
    for (std::size_t i = 0; i < events; ++i)
      for (std::size_t j = 1; j <= d; ++j) deps[i].push_back((i + j) % events);
    const LllCondition c = lll_condition(probs, deps);
    CHECK(c.max_sum == doctest::Approx(0.125));
    CHECK(c.satisfied);
  }
  const std::vector<double> heavy{0.2, 0.2};
  CHECK_FALSE(lll_condition(heavy, {{1}, {0}}).satisfied);
}
