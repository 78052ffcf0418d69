#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bklab/real.hpp"

namespace bklab {

// ---------------------------------------------------------------------------
// Order statistics of n i.i.d. uniforms

/// P(X_(n-k+1) <= t), the k-th largest of n uniforms, via the finite
/// integration-by-parts expansion of n C(n-1,k-1) ∫_0^t x^{n-k}(1-x)^{k-1} dx.
Real order_stat_cdf(unsigned n, unsigned k, const Real& t);
double order_stat_cdf(unsigned n, unsigned k, double t);
/// Same quantity by adaptive Gauss-Kronrod quadrature in double precision.
double order_stat_cdf_quadrature(unsigned n, unsigned k, double t);

/// ∫_lo^hi x^a (1-x)^b dx for 0 <= lo <= hi <= 1.
Real beta_window_integral(unsigned a, unsigned b, const Real& lo, const Real& hi);

// ---------------------------------------------------------------------------
// Probability reports

struct ProbComponent {
  std::string name;
  Real value;
};

struct ProbReport {
  Real analytic;
  std::vector<ProbComponent> components;
  std::string method;     ///< "closed-form" or "quadrature"
  bool is_bound = false;  ///< upper bound rather than a probability; may exceed 1

  const Real& component(const std::string& name) const;
};

/// Exact probability that an n-edge is dense: l(A) - f(A) <= (1-p)/2, as the
/// sum of P(l <= d) and P(l - f <= d, l > d) with d = (1-p)/2.
ProbReport p_dense_exact(unsigned n, unsigned k, const Real& p);

/// Upper bound on P(M(f,s)) for two n-edges sharing h vertices, both non-dense.
/// `analytic` is the triple sum over (t, i, j) with exact window integrals;
/// the components also carry the coarser closed forms down to the final
/// 3 e^30 C(n-1,k-1)^2 2^{2-2n} p bound. h >= 2k gives exactly 0.
ProbReport p_badpair_upper(unsigned n, unsigned k, unsigned h, const Real& p);

/// Per-edge density bound used by the bounded-degree argument:
/// e^13 C 2^{-n} nk/((n-k+1) n^{2k}) + e^26 (1-eps)^{-1} C 2^{-n} n^k (k-1)!/((2k-1)! n^{2k}).
Real p_dense_degree_bound(unsigned n, unsigned k);
/// 3 e^30 C(n-1,k-1)^2 2^{2-2n} (2k ln n / n).
Real p_badpair_final_bound(unsigned n, unsigned k);

// ---------------------------------------------------------------------------
// Factors

struct FactorSet {
  unsigned n = 0;
  unsigned k = 0;
  bool degenerate = false;  ///< n <= 3k: alpha undefined
  bool in_region = false;   ///< n >= 30, k >= 2, k <= sqrt(n / ln n)
  Real alpha, gamma, epsilon, beta, R, T;
  /// Named caps (alpha <= 0.15, ...) with their verdicts; empty when degenerate.
  std::vector<std::pair<std::string, bool>> caps;
  bool caps_hold() const;
};

FactorSet factor_audit(unsigned n, unsigned k);

// ---------------------------------------------------------------------------
// Hypothesis flags shared by bounds and audits

/// k <= sqrt(n / ln n)
bool k_condition(unsigned n, unsigned k);
/// 2 k^2 (n - k) <= (n - 2k)^2
bool beta_condition(unsigned n, unsigned k);

// ---------------------------------------------------------------------------
// Inequality audit

struct AuditEntry {
  std::string name;
  Real lhs;
  Real rhs;
  bool strict = true;  ///< lhs < rhs, else lhs <= rhs
  bool holds = false;
};

struct AuditReport {
  unsigned n = 0;
  unsigned k = 0;
  std::optional<unsigned> h;
  /// Largest integer strictly below the edge-count bound the argument assumes.
  Real m;
  Real p;
  std::vector<std::pair<std::string, bool>> region;
  std::vector<AuditEntry> entries;

  bool in_region() const;
  bool all_hold() const;
};

/// Replays the numeric inequalities of the random-numeration argument at (n, k),
/// and with h given (k < h < 2k) the intersection-restricted variant.
AuditReport inequality_audit(unsigned n, unsigned k, std::optional<unsigned> h = std::nullopt);

// ---------------------------------------------------------------------------
// Epsilon window

struct EpsilonWindow {
  Real lo;
  Real hi;
  std::optional<Real> remark_hi;
  Real I;
  Real J;
  bool feasible = false;  ///< I >= J
};

EpsilonWindow epsilon_window(unsigned n, unsigned k, const Real& r_const,
                             std::optional<Real> s_const = std::nullopt);

/// Smallest N in [n_from, n_to] with I >= J for every n in [N, n_to].
std::optional<unsigned> epsilon_crossover(unsigned k, const Real& r_const, unsigned n_from,
                                          unsigned n_to);

// ---------------------------------------------------------------------------
// Bound report

struct BoundEntry {
  std::string name;
  std::string quantity;  ///< m(n), m_k(n), m_{k,eps}(n), m_{k,h}(n), m*(n), m*_k(n)
  std::string kind;      ///< "lower" or "upper"
  Real value;
  double value_log2 = 0.0;
  bool shape_only = false;  ///< depends on an unspecified constant
  bool vacuous = false;     ///< lower bound below 1
  std::vector<std::pair<std::string, bool>> hypotheses;
  bool valid() const;
};

struct BoundReport {
  unsigned n = 0;
  unsigned k = 0;
  std::optional<unsigned> h;
  std::optional<double> eps;
  std::map<std::string, double> constants;
  std::vector<BoundEntry> entries;

  const BoundEntry& entry(const std::string& name) const;
};

/// Constants recognised in `user_constants` (all default to 1): c_shape, psi,
/// c_eps, c_ah, R, c1, c2, delta.
BoundReport bounds_report(unsigned n, unsigned k, std::optional<unsigned> h = std::nullopt,
                          std::optional<double> eps = std::nullopt,
                          const std::map<std::string, double>& user_constants = {});

/// Degree limit of the local-lemma argument:
/// (5/(3e^26)) (n/(k ln n))^{1/2} 2^{n-1}/C(n-1,k-1) - 1.
Real degree_limit(unsigned n, unsigned k);
/// 12/e^26 (n/(k ln n))^{1/2} 2^{n-1}/C(n-1,k-1).
Real numeration_bound(unsigned n, unsigned k);
/// 12/e^26 (n/(k ln n))^{1/2} 2^{n-1}/sqrt(2^{h-k}(h-k+1)C(n-1,k-1)C(n-1,2k-1-h)).
Real numeration_bound_ah(unsigned n, unsigned k, unsigned h);
/// 2^{n-1} / sum_{j<k} C(n,j)
Real naive_bound(unsigned n, unsigned k);

// ---------------------------------------------------------------------------
// Serialization (JSON keeps full precision as decimal strings)

std::string to_json(const BoundReport& r);
std::string to_csv(const BoundReport& r);
std::string to_text(const BoundReport& r);
std::string to_json(const AuditReport& r);
std::string to_json(const FactorSet& f);
std::string to_json(const ProbReport& r);

}  // namespace bklab
