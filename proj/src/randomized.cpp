#include "bklab/randomized.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "bklab/analytics.hpp"
#include "bklab/error.hpp"
#include "bklab/parallel.hpp"
#include "bklab/rng.hpp"

namespace bklab {

namespace {

// Runs trials 0, 1, ... in batches (each batch possibly in parallel) and stops
// after the first accepted trial; records never depend on `jobs`.
template <class TrialFn>
TrialStats run_trials(std::uint64_t max_trials, std::uint64_t seed, unsigned jobs, TrialFn&& fn) {
  TrialStats stats;
  stats.seed = seed;
  const std::uint64_t batch = std::max<std::uint64_t>(16, 4ull * std::max(1u, jobs));
  for (std::uint64_t start = 0; start < max_trials; start += batch) {
    const std::uint64_t count = std::min(batch, max_trials - start);
    std::vector<TrialRecord> block(count);
    parallel_blocks(count, jobs, [&](std::size_t b, std::size_t e, std::size_t) {
      for (std::size_t i = b; i < e; ++i) block[i] = fn(start + i);
    });
    for (const auto& rec : block) {
      stats.records.push_back(rec);
      ++stats.trials_run;
      if (rec.accepted) {
        stats.success_trial = rec.trial;
        return stats;
      }
    }
  }
  return stats;
}

Coloring random_coloring(std::size_t v, std::uint64_t seed, std::uint64_t trial) {
  CounterRng rng(stream_key(seed, Stream::coloring, trial));
  Coloring c;
  c.colors.resize(v);
  for (std::size_t i = 0; i < v; i += 64) {
    const std::uint64_t bits = rng();
    for (std::size_t j = i; j < std::min(v, i + 64); ++j)
      c.colors[j] = ((bits >> (j - i)) & 1u) ? 2 : 1;
  }
  return c;
}

}  // namespace

std::string to_json(const TrialStats& stats) {
  nlohmann::ordered_json j;
  j["seed"] = stats.seed;
  j["trials_run"] = stats.trials_run;
  j["success_trial"] = stats.success_trial ? nlohmann::ordered_json(*stats.success_trial)
                                           : nlohmann::ordered_json(nullptr);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : stats.records)
    rows.push_back({{"trial", r.trial}, {"X", r.X}, {"Y", r.Y}, {"accepted", r.accepted}});
  j["trials"] = rows;
  return j.dump(2);
}

std::string to_csv(const TrialStats& stats) {
  std::ostringstream out;
  out << "trial,X,Y,accepted\n";
  for (const auto& r : stats.records)
    out << r.trial << ',' << r.X << ',' << r.Y << ',' << (r.accepted ? 1 : 0) << '\n';
  return out.str();
}

ColorerResult naive_random_colorer(const Hypergraph& h, unsigned k, std::uint64_t max_trials,
                                   std::uint64_t seed, unsigned jobs) {
  require_edges_at_least_2k(h, k);
  ColorerResult result;
  result.stats = run_trials(max_trials, seed, jobs, [&](std::uint64_t t) {
    const auto violated = verify_coloring(h, random_coloring(h.vertex_count(), seed, t), k);
    return TrialRecord{t, violated.size(), 0, violated.empty()};
  });
  if (result.stats.success_trial)
    result.coloring = random_coloring(h.vertex_count(), seed, *result.stats.success_trial);
  return result;
}

double union_bound_fail_prob(unsigned n, unsigned k, std::uint64_t m) {
  if (k < 1 || n < 2 * k) throw PreconditionError("union bound requires n >= 2k, k >= 1");
  if (m < 1) throw PreconditionError("union bound requires m >= 1");
  const Real value = Real(m) * 2 * binom_prefix_sum(n, k) / pow(Real(2), static_cast<int>(n));
  return value >= 1 ? 1.0 : value.convert_to<double>();
}

ColorerResult ordering_colorer(const Hypergraph& h, unsigned k, double p,
                               std::uint64_t max_trials, std::uint64_t seed,
                               const OrderingOptions& options) {
  require_edges_at_least_2k(h, k);
  const DensityParams density{k, p};
  ColorerResult result;
  result.stats = run_trials(max_trials, seed, options.jobs, [&](std::uint64_t t) {
    const auto [w, sigma] = sample_numeration(h.vertex_count(), seed, t);
    const auto pairs = find_bad_pairs(h, sigma, k);
    TrialRecord rec{t, count_bad_edge_pairs(pairs), dense_edges(h, w, density).size(), false};
    rec.accepted = rec.X == 0 && (!options.require_non_dense || rec.Y == 0);
    return rec;
  });
  if (result.stats.success_trial) {
    const auto sigma = sample_numeration(h.vertex_count(), seed, *result.stats.success_trial).second;
    result.coloring = coloring_from_numeration(h, sigma, k);
    if (!verify_coloring(h, *result.coloring, k).empty())
      throw Error("internal: accepted numeration produced an improper coloring");
  }
  return result;
}

PruneResult bk_epsilon_prune(const Hypergraph& h, unsigned k, double eps, double p,
                             std::uint64_t max_trials, std::uint64_t seed, unsigned jobs) {
  require_edges_at_least_2k(h, k);
  if (!(eps > 0 && eps <= 1)) throw PreconditionError("eps must lie in (0, 1]");
  const DensityParams density{k, p};
  const double budget = eps * static_cast<double>(h.edge_count());
  PruneResult result;
  result.stats = run_trials(max_trials, seed, jobs, [&](std::uint64_t t) {
    const auto [w, sigma] = sample_numeration(h.vertex_count(), seed, t);
    TrialRecord rec{t, count_bad_edge_pairs(find_bad_pairs(h, sigma, k)),
                    dense_edges(h, w, density).size(), false};
    const std::size_t xy = rec.X + rec.Y;
    rec.accepted = eps >= 1 || xy == 0 || static_cast<double>(xy) < budget;
    return rec;
  });
  if (!result.stats.success_trial) return result;

  const auto [w, sigma] = sample_numeration(h.vertex_count(), seed, *result.stats.success_trial);
  std::vector<char> removed(h.edge_count(), 0);
  for (EdgeIndex e : dense_edges(h, w, density)) removed[e] = 1;
  for (const auto& bp : find_bad_pairs(h, sigma, k)) {
    if (removed[bp.f] || removed[bp.s]) continue;
    removed[std::max(bp.f, bp.s)] = 1;
  }
  std::vector<EdgeIndex> keep;
  for (EdgeIndex e = 0; e < h.edge_count(); ++e)
    (removed[e] ? result.removed : keep).push_back(e);
  result.subhypergraph = h.spanning_subhypergraph(keep);
  result.coloring = coloring_from_numeration(*result.subhypergraph, sigma, k);
  if (!verify_coloring(*result.subhypergraph, *result.coloring, k).empty())
    throw Error("internal: pruned hypergraph coloring is improper");
  return result;
}

LllCheck degree_condition_check(unsigned n, unsigned k, std::uint64_t D,
                                std::optional<Real> p_bad, std::optional<Real> p_dense) {
  if (k < 1 || n <= 2 * k) throw PreconditionError("degree condition requires n > 2k");
  LllCheck c;
  c.n = n;
  c.k = k;
  c.D = D;
  c.hypotheses = {{"n>=30", n >= 30}, {"k>=2", k >= 2}, {"k<=sqrt(n/ln n)", k_condition(n, k)}};
  c.d_limit = degree_limit(n, k);
  c.p_bad = p_bad ? *p_bad : p_badpair_final_bound(n, k);
  c.p_dense = p_dense ? *p_dense : p_dense_degree_bound(n, k);
  const Real d1 = Real(D) + 1;
  c.sum = 4 * d1 * d1 * c.p_bad + 2 * d1 * c.p_dense;
  c.degree_ok = Real(D) <= c.d_limit;
  c.sum_ok = c.sum <= Real(1) / 4;
  c.satisfied = c.degree_ok && c.sum_ok;
  return c;
}

std::string to_json(const LllCheck& c) {
  nlohmann::ordered_json j;
  j["n"] = c.n;
  j["k"] = c.k;
  j["D"] = c.D;
  j["d_limit"] = to_decimal(c.d_limit);
  j["p_bad"] = to_decimal(c.p_bad);
  j["p_dense"] = to_decimal(c.p_dense);
  j["sum"] = to_decimal(c.sum);
  j["degree_ok"] = c.degree_ok;
  j["sum_ok"] = c.sum_ok;
  j["satisfied"] = c.satisfied;
  nlohmann::ordered_json hyps = nlohmann::ordered_json::object();
  for (const auto& [name, ok] : c.hypotheses) hyps[name] = ok;
  j["hypotheses"] = hyps;
  return j.dump(2);
}

LllCondition lll_condition(std::span<const double> probs,
                           const std::vector<std::vector<std::size_t>>& deps) {
  if (deps.size() != probs.size())
    throw PreconditionError("one dependency set per event is required");
  LllCondition out;
  out.sums.resize(probs.size());
  for (std::size_t i = 0; i < probs.size(); ++i) {
    std::vector<std::size_t> set = deps[i];
    set.push_back(i);
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    double s = 0.0;
    for (std::size_t j : set) {
      if (j >= probs.size()) throw PreconditionError("dependency index out of range");
      s += probs[j];
    }
    out.sums[i] = s;
    out.max_sum = std::max(out.max_sum, s);
  }
  out.satisfied = out.max_sum <= 0.25;
  return out;
}

}  // namespace bklab
