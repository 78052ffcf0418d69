#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bklab/hypergraph.hpp"
#include "bklab/ordering.hpp"
#include "bklab/real.hpp"

namespace bklab {

struct TrialRecord {
  std::uint64_t trial = 0;
  std::size_t X = 0;  ///< bad edge pairs (violated edges for the naive colorer)
  std::size_t Y = 0;  ///< dense edges
  bool accepted = false;
};

struct TrialStats {
  std::uint64_t seed = 0;
  std::uint64_t trials_run = 0;
  std::optional<std::uint64_t> success_trial;
  std::vector<TrialRecord> records;
};

std::string to_json(const TrialStats& stats);
/// One row per trial: trial,X,Y,accepted
std::string to_csv(const TrialStats& stats);

struct ColorerResult {
  std::optional<Coloring> coloring;
  TrialStats stats;
};

/// I.i.d. fair colorings until one has every edge with k vertices of each color.
ColorerResult naive_random_colorer(const Hypergraph& h, unsigned k, std::uint64_t max_trials,
                                   std::uint64_t seed, unsigned jobs = 1);

/// min(1, 2 m sum_{j<k} C(n,j) / 2^n)
double union_bound_fail_prob(unsigned n, unsigned k, std::uint64_t m);

struct OrderingOptions {
  bool require_non_dense = false;  ///< also reject trials with dense edges
  unsigned jobs = 1;
};

/// Random numerations until one has no bad pair; returns the induced coloring.
ColorerResult ordering_colorer(const Hypergraph& h, unsigned k, double p,
                               std::uint64_t max_trials, std::uint64_t seed,
                               const OrderingOptions& options = {});

struct PruneResult {
  std::optional<Hypergraph> subhypergraph;
  std::optional<Coloring> coloring;
  std::vector<EdgeIndex> removed;  ///< increasing
  TrialStats stats;
};

/// Accepts a numeration with X + Y < eps |E|, then deletes one edge of every
/// bad pair (the higher index) and every dense edge.
PruneResult bk_epsilon_prune(const Hypergraph& h, unsigned k, double eps, double p,
                             std::uint64_t max_trials, std::uint64_t seed, unsigned jobs = 1);

struct LllCheck {
  unsigned n = 0;
  unsigned k = 0;
  std::uint64_t D = 0;
  Real d_limit;
  Real p_bad;
  Real p_dense;
  Real sum;  ///< 4(D+1)^2 p_bad + 2(D+1) p_dense
  bool degree_ok = false;
  bool sum_ok = false;
  bool satisfied = false;
  std::vector<std::pair<std::string, bool>> hypotheses;
};

/// Bounded-degree condition. Without explicit probabilities, p_bad and p_dense
/// are the proof's per-event bounds at p = 2k ln n / n.
LllCheck degree_condition_check(unsigned n, unsigned k, std::uint64_t D,
                                std::optional<Real> p_bad = std::nullopt,
                                std::optional<Real> p_dense = std::nullopt);

std::string to_json(const LllCheck& check);

struct LllCondition {
  std::vector<double> sums;  ///< sum over S_i ∪ {i} of P(A_j), per event
  double max_sum = 0.0;
  bool satisfied = false;  ///< every sum <= 1/4
};

/// Generic form: events with probabilities `probs` and dependency sets `deps`.
LllCondition lll_condition(std::span<const double> probs,
                           const std::vector<std::vector<std::size_t>>& deps);

}  // namespace bklab
