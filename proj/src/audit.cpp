#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "bklab/analytics.hpp"
#include "bklab/error.hpp"

namespace bklab {

bool AuditReport::in_region() const {
  return std::all_of(region.begin(), region.end(), [](const auto& r) { return r.second; });
}

bool AuditReport::all_hold() const {
  return std::all_of(entries.begin(), entries.end(), [](const AuditEntry& e) { return e.holds; });
}

namespace {

class Recorder {
 public:
  explicit Recorder(std::vector<AuditEntry>& out) : out_(out) {}
  void lt(std::string name, const Real& lhs, const Real& rhs) { push(std::move(name), lhs, rhs, true); }
  void le(std::string name, const Real& lhs, const Real& rhs) { push(std::move(name), lhs, rhs, false); }

 private:
  void push(std::string name, const Real& lhs, const Real& rhs, bool strict) {
    // non-strict steps that are identities hold up to working precision
    static const Real tol("1e-40");
    const bool holds = strict ? lhs < rhs : lhs <= rhs + abs(rhs) * tol;
    out_.push_back({std::move(name), lhs, rhs, strict, holds});
  }
  std::vector<AuditEntry>& out_;
};

// largest integer strictly below x (x > 0)
Real below(const Real& x) {
  Real c = ceil(x);
  return c - 1 < 0 ? Real(0) : c - 1;
}

Real max_badpair(unsigned n, unsigned k, unsigned h_from, const Real& p) {
  Real best = 0;
  for (unsigned h = h_from; h < 2 * k && h <= n; ++h)
    best = std::max(best, p_badpair_upper(n, k, h, p).analytic);
  return best;
}

}  // namespace

AuditReport inequality_audit(unsigned n, unsigned k, std::optional<unsigned> h) {
  if (k < 1 || n < 2 * k + 1) throw PreconditionError("inequality_audit requires n > 2k");
  if (h && !(*h > k && *h < 2 * k))
    throw PreconditionError("inequality_audit requires k < h < 2k");

  AuditReport report;
  report.n = n;
  report.k = k;
  report.h = h;
  report.region = {{"n>=30", n >= 30}, {"k>=2", k >= 2}, {"k<=sqrt(n/ln n)", k_condition(n, k)}};
  if (h) report.region.push_back({"k>2", k > 2});

  const Real N = n;
  const Real K = k;
  const Real ln_n = log(N);
  const Real e13 = exp(Real(13)), e22 = exp(Real(22)), e26 = exp(Real(26)), e30 = exp(Real(30));
  const Real C = binom(n - 1, k - 1);
  const Real p = 2 * K * ln_n / N;
  const Real d = (1 - p) / 2;
  const Real root = sqrt(N / (K * ln_n));
  const Real eps = 2 * K / (N - 2 * K);
  const Real T = 1 / (1 - eps);
  const Real two_n = pow(Real(2), -static_cast<int>(n));
  // Steps that scale with |E| are replayed at the supremum B of the admissible
  // edge counts; "<= at B" is the same claim as "< for every m < B".
  const Real B = numeration_bound(n, k);
  const Real m = below(B);
  report.m = m;
  report.p = p;
  Recorder rec(report.entries);

  // --- density of a single edge
  const ProbReport dense = p_dense_exact(n, k, p);
  const Real lead = N * C * K * pow(d, n - k + 1) * pow(1 - d, k - 1) / (N - K + 1);
  rec.le("order_term_le_k_leading", dense.component("order_stat_term"), lead);
  const Real order_rhs = 6 / e26 * root * N * K / (N - K + 1) * pow(1 - p, n) *
                        pow((1 + p) / (1 - p), k - 1);
  rec.le("order_term_times_m", B * lead, order_rhs);
  const Real S1 = 6 / e26 * root * N * K / (N - K + 1) / pow(N, 2 * k) *
                  exp(2 * p * (K - 1) / (1 - p));
  rec.le("order_term_exp_form", order_rhs, S1);

  rec.lt("exp_factor_lt_e13", exp(2 * p * (K - 1) / (1 - p)), e13);
  const Real cap_n = 4 / (1 - 2 * sqrt(ln_n / N));
  const Real cap_30 = 4 / (1 - 2 * sqrt(log(Real(30)) / 30));
  rec.le("exp_factor_exponent", 2 * p * (K - 1) / (1 - p), 2 * p * K / (1 - p));
  rec.le("exp_factor_k_cap", 4 * K * K * ln_n / (N - 2 * K * ln_n), cap_n);
  rec.le("exp_factor_at_30", cap_n, cap_30);
  rec.lt("exp_factor_const", cap_30, Real(13));

  const Real s1_cap = 6 / e13 * root * N * K / (N - K + 1) / pow(N, 2 * k);
  rec.lt("order_term_cap", S1, s1_cap);
  rec.le("order_term_chain", s1_cap, 6 / (27 * e13) / sqrt(N * ln_n));
  rec.lt("order_term_final", 6 / (27 * e13) / sqrt(N * ln_n), 1 / (45 * e13));

  // gap term: geometric bound by the i = k-1 term
  const Real top = binom(n - k, k - 1) * factorial(k - 1) * factorial(k - 1) / factorial(2 * k - 1) *
                   pow(d, n - 2 * k + 1) * pow(1 - d, 2 * k - 1);
  const Real gap = dense.component("gap_term");
  rec.le("gap_term_geometric", gap, T * N * C * top);
  const Real gap_first = T * 6 / e26 * root * N * binom(n - k, k - 1) * factorial(k - 1) *
                          factorial(k - 1) / factorial(2 * k - 1) * pow(1 - p, n) *
                          pow((1 + p) / (1 - p), 2 * k - 1);
  rec.le("gap_term_times_m", B * T * N * C * top, gap_first);
  const Real gap_bound = T * 6 / e26 * root * N * pow(N - K, k - 1) * factorial(k - 1) /
                          factorial(2 * k - 1) / pow(N, 2 * k) *
                          exp(2 * p * (2 * K - 1) / (1 - p));
  rec.le("gap_term_exp_form", gap_first, gap_bound);
  rec.lt("gap_exp_factor_lt_e26", exp(2 * p * (2 * K - 1) / (1 - p)), e26);
  rec.lt("gap_term_mid", root * factorial(k - 1) / (factorial(2 * k - 1) * pow(N, k)),
         1 / sqrt(N * ln_n));
  rec.lt("gap_term_final", 6 / sqrt(N * ln_n), Real(3) / 5);
  rec.lt("m_times_dense", m * dense.analytic, 1 / (45 * e13) + Real(3) / 5 * T);

  // --- bad pairs, per intersection size
  const FactorSet f = factor_audit(n, k);
  for (unsigned hh = 1; hh < 2 * k && hh <= n; ++hh) {
    const ProbReport bp = p_badpair_upper(n, k, hh, p);
    const std::string tag = "_h" + std::to_string(hh);
    const std::vector<std::string> chain = {"window_sum", "flat_integral", "i_top_term", "ij_top_terms",
                                            "binomial_merge", "binomial_merge_all_t", "t0_geometric", "final_form"};
    for (size_t i = 0; i + 1 < chain.size(); ++i)
      rec.le(chain[i] + "_le_" + chain[i + 1] + tag, bp.component(chain[i]),
             bp.component(chain[i + 1]));
  }
  rec.le("window_integral_factor", pow((1 + p) / (1 - p), 2 * k) * pow(1 + p, 2 * k), e30);
  if (!f.degenerate) {
    // ratio of neighbouring terms of (23) in h, minimised over the admissible (h, t)
    Real min_ratio = -1;
    for (unsigned hh = 1; hh + 1 < 2 * k; ++hh)
      for (unsigned t = hh > k ? hh - k : 0; t <= std::min(k - 1, hh - 1); ++t) {
        if (k + t <= hh) continue;  // k - h + t >= 1
        const Real r = Real(n - hh) * (n - hh) * (hh - t) /
                       (2 * Real(hh + 1) * (k - hh + t) * (Real(n) - hh - k + t + 1));
        if (min_ratio < 0 || r < min_ratio) min_ratio = r;
      }
    if (min_ratio >= 0) rec.le("beta_ratio", f.beta, min_ratio);
    rec.lt("beta_gt_1", Real(1), f.beta);
    rec.lt("beta_lnn", Real(0), ln_n - 2 - 4 * sqrt(ln_n / N));
    Real min_gamma_ratio = -1;
    for (unsigned t = 0; t + 1 < k; ++t) {
      const Real r = Real(t + 1) * (N - t - 1) * (N - t - 1) /
                     (2 * Real(t + 2) * (k - 1 - t) * (N - t - k));
      if (min_gamma_ratio < 0 || r < min_gamma_ratio) min_gamma_ratio = r;
    }
    if (min_gamma_ratio >= 0) rec.le("gamma_ratio", 1 / f.gamma, min_gamma_ratio);

    // factor caps, with the n-forms used to reach them
    const Real s = sqrt(N * ln_n), s30 = sqrt(30 * log(Real(30)));
    rec.le("alpha_n_form", f.alpha, 1 / (s - 3));
    rec.le("alpha_n30", 1 / (s - 3), 1 / (s30 - 3));
    rec.le("alpha_cap", f.alpha, Real("0.15"));
    rec.le("gamma_n_form", f.gamma, 4 / (s - 1));
    rec.le("gamma_n30", 4 / (s - 1), 4 / (s30 - 1));
    rec.le("gamma_cap", f.gamma, Real("0.5"));
    rec.le("epsilon_n_form", f.epsilon, 2 / (s - 2));
    rec.le("epsilon_n30", 2 / (s - 2), 2 / (s30 - 2));
    rec.le("epsilon_cap", f.epsilon, Real("0.25"));
    rec.le("alpha_factor_cap", 1 / ((1 - f.alpha) * (1 - f.alpha)), Real("1.5"));
    rec.le("gamma_factor_cap", 1 / (1 - f.gamma), Real(2));
    rec.le("R_cap", f.R, Real(3));
    rec.le("T_cap", f.T, Real(4) / 3);
  }

  // --- completion
  const Real pair_term = 3 * e30 * C * C * pow(Real(2), 2 - static_cast<int>(2 * n)) * p;
  const Real worst_pair = max_badpair(n, k, 1, p);
  rec.le("pairs_times_m2", B * B * pair_term, 864 / e22);
  rec.le("dense_total_cap", 1 / (45 * e13) + Real(3) / 5 * T, 1 / (45 * e13) + Real(4) / 5);
  rec.lt("final_constants", 864 / e22 + 1 / (45 * e13) + Real(4) / 5, Real(1));
  rec.lt("final_actual", m * m * worst_pair + m * dense.analytic, Real(1));

  // --- B_{k,eps}: p = ln(n^{2k} ln n)/n
  {
    const Real lnln = log(ln_n);
    const Real pe = (2 * K * ln_n + lnln) / N;
    const Real de = (1 - pe) / 2;
    const Real sq = sqrt(N * ln_n);
    rec.le("eps_growth_e5", pow(1 + pe, 2 * k), exp(4 + 2 * lnln / sq));
    const Real s30 = sqrt(30 * log(Real(30)));
    rec.lt("eps_growth_const", exp(4 + 2 * log(log(Real(30))) / s30), exp(Real(5)));
    rec.lt("eps_ratio_e15", pow((1 + pe) / (1 - pe), k), exp(Real(15)));
    rec.le("eps_ratio_exp_form", pow((1 + pe) / (1 - pe), k), exp(2 * K * pe / (1 - pe)));
    const Real J = 2 * e30 / 9 * two_n / (N * ln_n);
    const Real eps_rhs = exp(Real(15)) / (pow(N, k) * ln_n) * two_n;
    const ProbReport de_rep = p_dense_exact(n, k, pe);
    (void)de;
    rec.lt("eps_order_term", de_rep.component("order_stat_term"), eps_rhs);
    rec.lt("eps_order_term_vs_J", eps_rhs, J);
    rec.lt("eps_gap_term_vs_J", de_rep.component("gap_term"), J);
    rec.le("eps_badpair", max_badpair(n, k, 1, pe),
           3 * exp(Real(35)) * C * C * pow(Real(2), 2 - static_cast<int>(2 * n)) * pe);
  }

  // --- property A_h
  if (h) {
    const unsigned H = *h;
    const Real C2 = binom(n - 1, 2 * k - 1 - H);
    const Real Bh = numeration_bound_ah(n, k, H);
    const Real mh = below(Bh);
    const Real dense_cap = p_dense_degree_bound(n, k);
    rec.lt("ah_dense_cap", dense.analytic, dense_cap);
    const Real half = pow(N, Real(H - k) / 2);
    rec.lt("ah_m_times_C", Bh * C * two_n, 6 / e26 * root * half);
    const Real ratio = factorial(2 * k - 1 - H) * factorial(n - 2 * k + H) /
                       (factorial(k - 1) * factorial(n - k));
    rec.le("ah_binom_ratio", C / (C2 * pow(Real(2), H - k) * (H - k + 1)), ratio);
    const Real base = Real(n - 2 * k + H) / (2 * k - H);
    rec.le("ah_ratio_n", ratio, pow(base, H - k));
    rec.lt("ah_ratio_pow", pow(base, H - k), pow(N, H - k));
    rec.lt("ah_m_times_dense", Bh * dense_cap, 1 / (45 * e13) + Real(3) / 5 * T);
    rec.le("ah_dense_const",
           6 / e13 / (N - sqrt(N / ln_n)) / sqrt(N * ln_n) + 6 * T / sqrt(N * ln_n),
           6 / e13 / 270 + 6 * T / 10);
    const Real pair_cap = 6 * e30 * pow(Real(2), 2 - static_cast<int>(2 * n)) * (H - k + 1) * C2 *
                          C * pow(Real(2), H - k) * K * ln_n / N;
    rec.le("ah_badpair", max_badpair(n, k, H, p), pair_cap);
    rec.le("ah_pairs_times_m2", Bh * Bh * pair_cap, 864 / e22);
    rec.lt("ah_final_actual", mh * mh * max_badpair(n, k, H, p) + mh * dense.analytic, Real(1));
  }

  // --- bounded degree
  {
    const Real d1 = degree_limit(n, k) + 1;
    const Real sum = 4 * d1 * d1 * p_badpair_final_bound(n, k) + 2 * d1 * p_dense_degree_bound(n, k);
    const Real consts = 200 / (3 * e22) + 1 / (162 * e13) + Real(2) / 9;
    rec.lt("degree_sum", sum, consts);
    rec.lt("degree_constants", consts, Real(1) / 4);
  }
  return report;
}

std::string to_json(const AuditReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["h"] = r.h ? nlohmann::ordered_json(*r.h) : nlohmann::ordered_json(nullptr);
  j["m"] = to_decimal(r.m);
  j["p"] = to_decimal(r.p);
  nlohmann::ordered_json region = nlohmann::ordered_json::object();
  for (const auto& [name, ok] : r.region) region[name] = ok;
  j["region"] = region;
  j["in_region"] = r.in_region();
  j["all_hold"] = r.all_hold();
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"name", e.name},
                       {"lhs", to_decimal(e.lhs)},
                       {"rhs", to_decimal(e.rhs)},
                       {"relation", e.strict ? "<" : "<="},
                       {"holds", e.holds}});
  j["entries"] = entries;
  return j.dump(2);
}

std::string to_json(const FactorSet& f) {
  nlohmann::ordered_json j;
  j["n"] = f.n;
  j["k"] = f.k;
  j["degenerate"] = f.degenerate;
  j["in_region"] = f.in_region;
  if (!f.degenerate) {
    j["alpha"] = to_decimal(f.alpha);
    j["gamma"] = to_decimal(f.gamma);
    j["epsilon"] = to_decimal(f.epsilon);
    j["beta"] = to_decimal(f.beta);
    j["R"] = to_decimal(f.R);
    j["T"] = to_decimal(f.T);
  }
  nlohmann::ordered_json caps = nlohmann::ordered_json::object();
  for (const auto& [name, ok] : f.caps) caps[name] = ok;
  j["caps"] = caps;
  j["caps_hold"] = f.caps_hold();
  return j.dump(2);
}

std::string to_json(const ProbReport& r) {
  nlohmann::ordered_json j;
  j["analytic"] = to_decimal(r.analytic);
  j["method"] = r.method;
  j["is_bound"] = r.is_bound;
  nlohmann::ordered_json comps = nlohmann::ordered_json::object();
  for (const auto& c : r.components) comps[c.name] = to_decimal(c.value);
  j["components"] = comps;
  return j.dump(2);
}

}  // namespace bklab
