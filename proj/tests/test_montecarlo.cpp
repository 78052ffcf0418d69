#include <doctest.h>

#include <cmath>

#include "bklab/analytics.hpp"
#include "bklab/error.hpp"
#include "bklab/montecarlo.hpp"

using namespace bklab;

namespace {

McParams params(unsigned n, unsigned k, unsigned h = 0, double t = 0, double p = 0) {
  McParams q;
  q.n = n;
  q.k = k;
  q.h = h;
  q.t = t;
  q.p = p;
  return q;
}

}  // namespace

TEST_CASE("targets by name") {
  CHECK(parse_target("order_stat") == McTarget::order_stat);
  CHECK(parse_target("order-stat") == McTarget::order_stat);
  CHECK(parse_target("colorer-success") == McTarget::colorer_success);
  CHECK_THROWS_AS(parse_target("nope"), PreconditionError);
}

TEST_CASE("estimates are reproducible and independent of jobs") {
  const McParams q = params(8, 2, 1, 0.5, 0.6);
  for (McTarget t : {McTarget::order_stat, McTarget::dense, McTarget::badpair}) {
    const McEstimate a = mc_estimate(t, q, 20000, 9, 1);
    const McEstimate b = mc_estimate(t, q, 20000, 9, 4);
    const McEstimate c = mc_estimate(t, q, 20000, 9, 3);
    CHECK(to_json(a) == to_json(b));
    CHECK(to_json(a) == to_json(c));
    CHECK(a.estimate >= 0);
    CHECK(a.estimate <= 1);
    CHECK(a.std_error == doctest::Approx(std::sqrt(a.estimate * (1 - a.estimate) / 20000)));
  }
  McParams g;
  g.v = 40;
  g.n = 6;
  g.m = 30;
  g.k = 2;
  CHECK(to_json(mc_estimate(McTarget::colorer_success, g, 200, 2, 1)) ==
        to_json(mc_estimate(McTarget::colorer_success, g, 200, 2, 3)));
}

TEST_CASE("order statistic estimate matches the closed form") {
  const McEstimate e = mc_estimate(McTarget::order_stat, params(4, 2, 0, 0.5), 200000, 1);
  CHECK(compare(0.3125, e, 3).pass);
  const McEstimate f = mc_estimate(McTarget::order_stat, params(30, 2, 0, 0.93), 200000, 2);
  CHECK(compare(order_stat_cdf(30, 2, 0.93), f, 3).pass);
}

TEST_CASE("dense estimate matches the closed form") {
  for (auto [n, k, p] : {std::tuple{8u, 2u, 0.5}, std::tuple{6u, 1u, 0.2}, std::tuple{12u, 3u, 0.1}}) {
    const McEstimate e = mc_estimate(McTarget::dense, params(n, k, 0, 0, p), 200000, 3);
    CHECK(compare(static_cast<double>(p_dense_exact(n, k, Real(p)).analytic), e, 3).pass);
  }
}

TEST_CASE("bad pair estimate stays under the bound") {
  // small n so the event is actually observed
  for (auto [n, k, p] : {std::tuple{8u, 2u, 0.5}, std::tuple{8u, 2u, 0.8}, std::tuple{10u, 2u, 0.7},
                         std::tuple{6u, 1u, 0.6}})
    for (unsigned h = 1; h < 2 * k; ++h) {
      const McEstimate e = mc_estimate(McTarget::badpair, params(n, k, h, 0, p), 200000, 5);
      const double bound = static_cast<double>(p_badpair_upper(n, k, h, Real(p)).analytic);
      CHECK_MESSAGE(compare(bound, e, 3, true).pass, n, ' ', k, ' ', h, ' ', p);
    }
  const McEstimate z = mc_estimate(McTarget::badpair, params(30, 2, 4, 0, 0.9), 50000, 1);
  CHECK(z.successes == 0);
}

TEST_CASE("doubling the trials does not move the estimate by more than 6 sigma") {
  const McParams q = params(8, 2, 1, 0.5, 0.5);
  for (McTarget t : {McTarget::order_stat, McTarget::dense, McTarget::badpair}) {
    const McEstimate a = mc_estimate(t, q, 50000, 12);
    const McEstimate b = mc_estimate(t, q, 100000, 12);
    CHECK(std::abs(a.estimate - b.estimate) <= 6 * a.std_error + 1e-12);
  }
}

TEST_CASE("compare") {
  McEstimate e;
  e.trials = 1000000;
  e.estimate = 0.3131;
  e.std_error = std::sqrt(0.3131 * 0.6869 / 1e6);
  CHECK(compare(0.3125, e, 3).pass);
  CHECK_FALSE(compare(0.33, e, 3).pass);
  CHECK(compare(0.312, e, 3, true).pass);
  CHECK_FALSE(compare(0.30, e, 3, true).pass);

  McEstimate zero;
  zero.trials = 1000;
  CHECK(compare(0.0, zero, 3).pass);
  CHECK(compare(1e-7, zero, 3).pass);
  CHECK_FALSE(compare(0.05, zero, 3).pass);
  CHECK_THROWS(compare(0.0, zero, 0));
}

TEST_CASE("serialization") {
  const McEstimate e = mc_estimate(McTarget::dense, params(8, 2, 0, 0, 0.5), 1000, 1);
  const McVerdict v = compare(0.0273, e, 3);
  CHECK(to_csv(e, &v).rfind("target,params,trials,seed,estimate,std_error", 0) == 0);
  CHECK(to_json(e, &v).find("\"compare\"") != std::string::npos);
  CHECK(params_string(McTarget::dense, e.params) == "n=8;k=2;p=0.5");
}
