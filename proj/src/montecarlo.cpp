#include "bklab/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "bklab/error.hpp"
#include "bklab/hypergraph.hpp"
#include "bklab/ordering.hpp"
#include "bklab/parallel.hpp"
#include "bklab/rng.hpp"

namespace bklab {

std::string to_string(McTarget target) {
  switch (target) {
    case McTarget::order_stat: return "order_stat";
    case McTarget::dense: return "dense";
    case McTarget::badpair: return "badpair";
    case McTarget::colorer_success: return "colorer_success";
  }
  return "?";
}

McTarget parse_target(const std::string& raw) {
  std::string name = raw;
  std::replace(name.begin(), name.end(), '-', '_');
  for (McTarget t : {McTarget::order_stat, McTarget::dense, McTarget::badpair,
                     McTarget::colorer_success})
    if (to_string(t) == name) return t;
  throw PreconditionError("unknown Monte Carlo target '" + raw + "'");
}

namespace {

struct Weighted {
  double x;
  unsigned id;
  bool operator<(const Weighted& o) const { return x < o.x || (x == o.x && id < o.id); }
};

// k-th smallest and k-th largest weight of `w` (reorders w).
std::pair<double, double> inner_order_stats(std::vector<double>& w, unsigned k) {
  std::nth_element(w.begin(), w.begin() + (k - 1), w.end());
  const double lo = w[k - 1];
  std::nth_element(w.begin() + k, w.end() - k, w.end());
  return {lo, w[w.size() - k]};
}

void check_params(McTarget target, const McParams& q) {
  auto need = [](bool ok, const char* what) {
    if (!ok) throw PreconditionError(std::string("incomplete Monte Carlo parameters: ") + what);
  };
  need(q.k >= 1, "k >= 1");
  switch (target) {
    case McTarget::order_stat:
      need(q.n >= q.k, "n >= k");
      need(q.t >= 0.0 && q.t <= 1.0, "t in [0, 1]");
      break;
    case McTarget::dense:
      need(q.n >= 2 * q.k, "n >= 2k");
      break;
    case McTarget::badpair:
      need(q.n >= 2 * q.k, "n >= 2k");
      need(q.h >= 1 && q.h <= q.n, "1 <= h <= n");
      break;
    case McTarget::colorer_success:
      need(q.n >= 2 * q.k, "n >= 2k");
      need(q.v >= q.n, "v >= n");
      need(q.m >= 1, "m >= 1");
      break;
  }
}

struct TrialKernel {
  McTarget target;
  McParams q;
  std::uint64_t seed;

  bool operator()(std::uint64_t trial, std::vector<double>& buf, std::vector<Weighted>& wbuf) const {
    switch (target) {
      case McTarget::order_stat: {
        CounterRng rng(stream_key(seed, Stream::mc_order_stat, trial));
        buf.resize(q.n);
        for (auto& x : buf) x = rng.uniform_open();
        // l(A): the k-th largest
        std::nth_element(buf.begin(), buf.end() - q.k, buf.end());
        return buf[q.n - q.k] <= q.t;
      }
      case McTarget::dense: {
        const double threshold = (1.0 - q.p) / 2.0;
        if (threshold <= 0.0) return false;
        CounterRng rng(stream_key(seed, Stream::mc_dense, trial));
        buf.resize(q.n);
        for (auto& x : buf) x = rng.uniform_open();
        const auto [f, l] = inner_order_stats(buf, q.k);
        return l - f <= threshold;
      }
      case McTarget::badpair: {
        if (q.h >= 2 * q.k) return false;
        // f = {0..n-1}, s = {0..h-1} ∪ {n..2n-h-1}
        const unsigned total = 2 * q.n - q.h;
        CounterRng rng(stream_key(seed, Stream::mc_badpair, trial));
        buf.resize(total);
        for (auto& x : buf) x = rng.uniform_open();
        const double threshold = (1.0 - q.p) / 2.0;
        wbuf.resize(q.n);
        for (unsigned i = 0; i < q.n; ++i) wbuf[i] = {buf[i], i};
        std::sort(wbuf.begin(), wbuf.end());
        const bool f_dense = threshold > 0.0 && wbuf[q.n - q.k].x - wbuf[q.k - 1].x <= threshold;
        std::vector<char> last_f(q.h, 0);
        for (unsigned r = q.n - q.k; r < q.n; ++r)
          if (wbuf[r].id < q.h) last_f[wbuf[r].id] = 1;
        for (unsigned i = 0; i < q.n; ++i) {
          const unsigned id = i < q.h ? i : q.n + (i - q.h);
          wbuf[i] = {buf[id], id};
        }
        std::sort(wbuf.begin(), wbuf.end());
        const bool s_dense = threshold > 0.0 && wbuf[q.n - q.k].x - wbuf[q.k - 1].x <= threshold;
        if (f_dense || s_dense) return false;
        for (unsigned r = 0; r < q.k; ++r) {
          const unsigned id = wbuf[r].id;
          if (id < q.h && last_f[id]) return true;
        }
        return false;
      }
      case McTarget::colorer_success: {
        const std::uint64_t key = stream_key(seed, Stream::mc_colorer, trial);
        const Hypergraph h = random_uniform(q.v, q.n, q.m, key);
        const auto sigma = sample_numeration(h.vertex_count(), key).second;
        return !has_bad_pair(h, sigma, q.k);
      }
    }
    return false;
  }
};

std::string fmt(double x) {
  std::ostringstream out;
  out << std::setprecision(17) << x;
  return out.str();
}

}  // namespace

McEstimate mc_estimate(McTarget target, const McParams& params, std::uint64_t trials,
                       std::uint64_t seed, unsigned jobs) {
  if (trials < 1) throw PreconditionError("trials must be at least 1");
  check_params(target, params);
  const TrialKernel kernel{target, params, seed};
  const unsigned blocks = std::max(1u, jobs);
  std::vector<std::uint64_t> counts(blocks, 0);
  parallel_blocks(trials, jobs, [&](std::size_t b, std::size_t e, std::size_t block) {
    std::vector<double> buf;
    std::vector<Weighted> wbuf;
    std::uint64_t c = 0;
    for (std::size_t t = b; t < e; ++t) c += kernel(t, buf, wbuf) ? 1 : 0;
    counts[block] = c;
  });
  McEstimate est;
  est.target = target;
  est.params = params;
  est.trials = trials;
  est.seed = seed;
  for (auto c : counts) est.successes += c;
  est.estimate = static_cast<double>(est.successes) / static_cast<double>(trials);
  est.std_error = std::sqrt(est.estimate * (1.0 - est.estimate) / static_cast<double>(trials));
  return est;
}

McVerdict compare(double analytic, const McEstimate& mc, double sigmas, bool upper_bound) {
  if (!(sigmas > 0)) throw PreconditionError("sigmas must be positive");
  McVerdict v;
  v.upper_bound = upper_bound;
  v.analytic = analytic;
  v.estimate = mc.estimate;
  v.sigmas = sigmas;
  if (upper_bound) {
    v.deviation = mc.estimate - analytic;
    v.allowed = sigmas * mc.std_error;
  } else {
    // the plug-in error is 0 when no trial (or every trial) hits; fall back to
    // the spread the analytic value itself implies
    const double a = std::clamp(analytic, 0.0, 1.0);
    const double null_se = mc.trials ? std::sqrt(a * (1 - a) / double(mc.trials)) : 0.0;
    v.deviation = std::abs(analytic - mc.estimate);
    v.allowed = sigmas * std::max(mc.std_error, null_se) + 1e-9;
  }
  v.pass = v.deviation <= v.allowed;
  return v;
}

std::string params_string(McTarget target, const McParams& q) {
  std::ostringstream out;
  switch (target) {
    case McTarget::order_stat: out << "n=" << q.n << ";k=" << q.k << ";t=" << fmt(q.t); break;
    case McTarget::dense: out << "n=" << q.n << ";k=" << q.k << ";p=" << fmt(q.p); break;
    case McTarget::badpair:
      out << "n=" << q.n << ";k=" << q.k << ";h=" << q.h << ";p=" << fmt(q.p);
      break;
    case McTarget::colorer_success:
      out << "v=" << q.v << ";n=" << q.n << ";m=" << q.m << ";k=" << q.k << ";p=" << fmt(q.p);
      break;
  }
  return out.str();
}

std::string to_json(const McEstimate& e, const McVerdict* verdict) {
  nlohmann::ordered_json j;
  j["target"] = to_string(e.target);
  j["params"] = params_string(e.target, e.params);
  j["trials"] = e.trials;
  j["seed"] = e.seed;
  j["successes"] = e.successes;
  j["estimate"] = e.estimate;
  j["std_error"] = e.std_error;
  if (verdict) {
    j["compare"] = {{"mode", verdict->upper_bound ? "upper_bound" : "two_sided"},
                    {"analytic", verdict->analytic},
                    {"sigmas", verdict->sigmas},
                    {"deviation", verdict->deviation},
                    {"allowed", verdict->allowed},
                    {"pass", verdict->pass}};
  }
  return j.dump(2);
}

std::string to_csv(const McEstimate& e, const McVerdict* verdict) {
  std::ostringstream out;
  out << "target,params,trials,seed,estimate,std_error";
  if (verdict) out << ",analytic,mode,pass";
  out << '\n'
      << to_string(e.target) << ',' << params_string(e.target, e.params) << ',' << e.trials << ','
      << e.seed << ',' << fmt(e.estimate) << ',' << fmt(e.std_error);
  if (verdict)
    out << ',' << fmt(verdict->analytic) << ',' << (verdict->upper_bound ? "upper_bound" : "two_sided")
        << ',' << (verdict->pass ? 1 : 0);
  out << '\n';
  return out.str();
}

}  // namespace bklab
