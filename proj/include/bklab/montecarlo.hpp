#pragma once

#include <cstdint>
#include <string>

namespace bklab {

enum class McTarget { order_stat, dense, badpair, colorer_success };

std::string to_string(McTarget target);
McTarget parse_target(const std::string& name);

/// Parameters per target:
///   order_stat       n, k, t    P(l(A) <= t)
///   dense            n, k, p    P(l(A) - f(A) <= (1-p)/2)
///   badpair          n, k, h, p P(M(f,s) and neither edge dense), edges sharing h vertices
///   colorer_success  v, n, m, k, p  P(a random numeration of random(v,n,m) has no bad pair)
struct McParams {
  unsigned n = 0;
  unsigned k = 0;
  unsigned h = 0;
  double t = 0.0;
  double p = 0.0;
  unsigned v = 0;
  std::uint64_t m = 0;
};

struct McEstimate {
  McTarget target = McTarget::order_stat;
  McParams params;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t successes = 0;
  double estimate = 0.0;
  double std_error = 0.0;  ///< sqrt(p(1-p)/trials)
};

/// Per-trial randomness comes from (seed, target, trial index), so the result
/// does not depend on `jobs`.
McEstimate mc_estimate(McTarget target, const McParams& params, std::uint64_t trials,
                       std::uint64_t seed, unsigned jobs = 1);

struct McVerdict {
  bool pass = false;
  bool upper_bound = false;
  double analytic = 0.0;
  double estimate = 0.0;
  double sigmas = 0.0;
  double deviation = 0.0;  ///< |analytic - estimate|, or estimate - analytic for bounds
  double allowed = 0.0;    ///< sigmas * se (+1e-9 in two-sided mode)
};

/// Two-sided: |analytic - estimate| <= sigmas * se + 1e-9, where se is the larger of
/// the plug-in error and sqrt(a(1-a)/trials) at the analytic value a.
/// Upper bound: estimate <= analytic + sigmas * se.
McVerdict compare(double analytic, const McEstimate& mc, double sigmas, bool upper_bound = false);

std::string params_string(McTarget target, const McParams& params);
std::string to_json(const McEstimate& e, const McVerdict* verdict = nullptr);
std::string to_csv(const McEstimate& e, const McVerdict* verdict = nullptr);

}  // namespace bklab
