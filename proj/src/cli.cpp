#include "bklab/cli.hpp"

#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bklab/analytics.hpp"
#include "bklab/error.hpp"
#include "bklab/exact.hpp"
#include "bklab/hypergraph.hpp"
#include "bklab/montecarlo.hpp"
#include "bklab/ordering.hpp"
#include "bklab/parallel.hpp"
#include "bklab/randomized.hpp"

namespace bklab {

namespace {

using ojson = nlohmann::ordered_json;

enum class Format { text, json, csv };

struct Globals {
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string out_path;
  unsigned jobs = 1;
  std::string input;
};

/// Raised for a usage problem the parser cannot see (missing flag for a mode, ...).
struct UsageError : Error {
  using Error::Error;
};

Format format_of(const Globals& g) {
  if (g.format == "json") return Format::json;
  if (g.format == "csv") return Format::csv;
  return Format::text;
}

std::string read_all(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Hypergraph load_input(const Globals& g, std::istream& in) {
  if (g.input.empty() || g.input == "-") return parse_any(read_all(in));
  std::ifstream file(g.input);
  if (!file) throw ParseError("cannot open input file '" + g.input + "'");
  return parse_any(read_all(file));
}

std::string dec(const Real& x, int digits = 17) { return to_decimal(x, digits); }

std::string fmt(double x) {
  std::ostringstream out;
  out << std::setprecision(17) << x;
  return out.str();
}

/// n used by the p presets: the uniformity, else the smallest edge size.
std::size_t preset_n(const Hypergraph& h) {
  if (auto u = h.uniformity()) return *u;
  return h.edge_count() ? h.min_edge_size() : 0;
}

ojson edge_list(const std::vector<EdgeIndex>& edges) {
  ojson a = ojson::array();
  for (auto e : edges) a.push_back(e);
  return a;
}

// ---------------------------------------------------------------------------
// gen

struct GenArgs {
  std::string family;
  std::size_t v = 0, n = 0, m = 0, length = 0;
};

std::string run_gen(const GenArgs& a, const Globals& g, int& code) {
  Hypergraph h = [&] {
    if (a.family == "fano") return fano_plane();
    if (a.family == "complete") return complete_uniform(a.v, a.n);
    if (a.family == "random") return random_uniform(a.v, a.n, a.m, g.seed);
    if (a.family == "odd_cycle" || a.family == "odd-cycle") return odd_cycle(a.length);
    throw UsageError("unknown family '" + a.family + "'");
  }();
  code = 0;
  switch (format_of(g)) {
    case Format::json: return to_json(h) + "\n";
    case Format::csv: {
      std::ostringstream out;
      out << "edge,vertices\n";
      for (std::size_t e = 0; e < h.edge_count(); ++e) {
        out << e << ',';
        for (std::size_t i = 0; i < h.edge(e).size(); ++i) out << (i ? " " : "") << h.edge(e)[i];
        out << '\n';
      }
      return out.str();
    }
    case Format::text: return to_hg(h);
  }
  return {};
}

// ---------------------------------------------------------------------------
// check

struct CheckArgs {
  unsigned k = 1;
  std::optional<unsigned> h;
  std::string coloring;
  std::string sigma;
};

std::string run_check(const CheckArgs& a, const Globals& g, std::istream& in, int& code) {
  const Hypergraph h = load_input(g, in);
  const IntersectionProfile prof = intersection_profile(h);
  ojson j;
  j["vertex_count"] = h.vertex_count();
  j["edge_count"] = h.edge_count();
  j["uniformity"] = h.uniformity() ? ojson(*h.uniformity()) : ojson(nullptr);
  j["simple"] = prof.is_simple();
  j["max_intersection"] = prof.max_intersection;
  j["intersection_degree"] = prof.intersection_degree;
  if (a.h) j["property_A_h"] = prof.has_property_ah(*a.h);
  code = 0;
  if (!a.coloring.empty()) {
    const Coloring c = Coloring::parse(a.coloring);
    if (c.colors.size() != h.vertex_count())
      throw ParseError("coloring length does not match the vertex count");
    const auto bad = verify_coloring(h, c, a.k);
    j["k"] = a.k;
    j["violations"] = edge_list(bad);
    j["coloring_ok"] = bad.empty();
    if (!bad.empty()) code = 1;
  }
  if (!a.sigma.empty()) {
    const Numeration s = Numeration::parse(a.sigma);
    if (s.size() != h.vertex_count())
      throw ParseError("numeration length does not match the vertex count");
    const auto pairs = find_bad_pairs(h, s, a.k);
    ojson list = ojson::array();
    for (const auto& bp : pairs) list.push_back({bp.f, bp.s, bp.witness});
    j["k"] = a.k;
    j["bad_pairs"] = list;
    j["criterion_holds"] = pairs.empty();
    if (!pairs.empty()) code = 1;
  }
  switch (format_of(g)) {
    case Format::json: return j.dump(2) + "\n";
    case Format::csv:
    case Format::text: {
      std::ostringstream out;
      const char sep = format_of(g) == Format::csv ? ',' : ' ';
      if (format_of(g) == Format::csv) out << "key,value\n";
      for (const auto& [key, value] : j.items())
        out << key << sep << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
      return out.str();
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// decide

struct DecideArgs {
  unsigned k = 1;
  std::string method = "coloring";
};

std::string run_decide(const DecideArgs& a, const Globals& g, std::istream& in, int& code) {
  const Hypergraph h = load_input(g, in);
  ojson j;
  j["k"] = a.k;
  j["method"] = a.method;
  code = 0;
  if (a.method == "coloring") {
    const auto c = find_bk_coloring(h, a.k);
    j["verdict"] = c.has_value();
    j["witness"] = c ? ojson(c->to_string()) : ojson(nullptr);
  } else if (a.method == "numeration") {
    const auto s = find_good_numeration(h, a.k);
    j["verdict"] = s.has_value();
    j["witness"] = s ? ojson(s->to_string()) : ojson(nullptr);
  } else if (a.method == "chains") {
    j["verdict"] = decide_b_by_2chains(h);
  } else {
    throw UsageError("unknown method '" + a.method + "'");
  }
  switch (format_of(g)) {
    case Format::json: return j.dump(2) + "\n";
    case Format::csv: {
      std::ostringstream out;
      out << "k,method,verdict,witness\n"
          << a.k << ',' << a.method << ',' << j["verdict"].dump() << ','
          << (j.contains("witness") && j["witness"].is_string() ? j["witness"].get<std::string>() : "")
          << '\n';
      return out.str();
    }
    case Format::text: {
      std::ostringstream out;
      out << "B_" << a.k << ": " << (j["verdict"].get<bool>() ? "true" : "false") << '\n';
      if (j.contains("witness") && j["witness"].is_string())
        out << "witness " << j["witness"].get<std::string>() << '\n';
      return out.str();
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// color

struct ColorArgs {
  unsigned k = 1;
  std::string algorithm = "ordering";
  std::string p;
  double eps = 0.5;
  std::uint64_t max_trials = 1000;
  bool require_non_dense = false;
};

std::string run_color(const ColorArgs& a, const Globals& g, std::istream& in, int& code) {
  const Hypergraph h = load_input(g, in);
  const std::size_t n = preset_n(h);
  ojson j;
  j["algorithm"] = a.algorithm;
  j["k"] = a.k;
  j["seed"] = g.seed;
  TrialStats stats;
  std::optional<Coloring> coloring;
  std::optional<Hypergraph> sub;
  std::vector<EdgeIndex> removed;
  if (a.algorithm == "naive") {
    auto r = naive_random_colorer(h, a.k, a.max_trials, g.seed, g.jobs);
    stats = std::move(r.stats);
    coloring = std::move(r.coloring);
  } else if (a.algorithm == "ordering") {
    const double p = parse_p(a.p.empty() ? "paper-k" : a.p, n, a.k);
    j["p"] = p;
    auto r = ordering_colorer(h, a.k, p, a.max_trials, g.seed, {a.require_non_dense, g.jobs});
    stats = std::move(r.stats);
    coloring = std::move(r.coloring);
  } else if (a.algorithm == "prune") {
    const double p = parse_p(a.p.empty() ? "paper-eps" : a.p, n, a.k);
    j["p"] = p;
    j["eps"] = a.eps;
    auto r = bk_epsilon_prune(h, a.k, a.eps, p, a.max_trials, g.seed, g.jobs);
    stats = std::move(r.stats);
    coloring = std::move(r.coloring);
    sub = std::move(r.subhypergraph);
    removed = std::move(r.removed);
  } else {
    throw UsageError("unknown algorithm '" + a.algorithm + "'");
  }
  code = coloring ? 0 : 1;
  j["success"] = coloring.has_value();
  j["coloring"] = coloring ? ojson(coloring->to_string()) : ojson(nullptr);
  if (a.algorithm == "prune") {
    j["removed"] = edge_list(removed);
    j["kept_edges"] = sub ? ojson(sub->edge_count()) : ojson(nullptr);
  }
  j["stats"] = ojson::parse(to_json(stats));
  switch (format_of(g)) {
    case Format::json: return j.dump(2) + "\n";
    case Format::csv: return to_csv(stats);
    case Format::text: {
      std::ostringstream out;
      out << a.algorithm << " k=" << a.k << " trials=" << stats.trials_run;
      if (stats.success_trial) out << " success_trial=" << *stats.success_trial;
      out << '\n';
      if (coloring) out << "coloring " << coloring->to_string() << '\n';
      else out << "no coloring found\n";
      if (a.algorithm == "prune" && sub) {
        out << "removed";
        for (auto e : removed) out << ' ' << e;
        out << "\nkept " << sub->edge_count() << " of " << h.edge_count() << " edges\n";
      }
      return out.str();
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// search

struct SearchArgs {
  std::size_t n = 2, v_max = 3, m_max = 3;
  unsigned k = 1;
  std::uint64_t budget = 100'000'000;
};

std::string run_search(const SearchArgs& a, const Globals& g, int& code) {
  const SearchResult r = min_nonbk_search(a.n, a.k, a.v_max, a.m_max, {a.budget, g.jobs});
  code = r.min_edges ? 0 : 1;
  switch (format_of(g)) {
    case Format::json: return to_json(r) + "\n";
    case Format::csv: {
      std::ostringstream out;
      out << "n,k,v_max,m_max,min_edges,examined,normal_form,levels_completed,budget_exceeded\n"
          << r.n << ',' << r.k << ',' << r.exhausted.v_max << ',' << r.exhausted.m_max << ','
          << (r.min_edges ? std::to_string(*r.min_edges) : "") << ',' << r.exhausted.examined << ','
          << r.exhausted.normal_form << ',' << r.exhausted.levels_completed << ','
          << r.exhausted.budget_exceeded << '\n';
      return out.str();
    }
    case Format::text: {
      std::ostringstream out;
      if (r.min_edges)
        out << "min_edges " << *r.min_edges << "\n" << to_hg(*r.witness);
      else
        out << "none within v_max=" << a.v_max << " m_max=" << a.m_max << '\n';
      out << "examined " << r.exhausted.examined << " normal_form " << r.exhausted.normal_form
          << " levels_completed " << r.exhausted.levels_completed
          << (r.exhausted.budget_exceeded ? " budget_exceeded" : "") << '\n';
      return out.str();
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// bounds

struct BoundsArgs {
  unsigned n = 0, k = 1;
  std::optional<unsigned> h;
  std::optional<double> eps;
  std::vector<std::string> constants;
};

std::string run_bounds(const BoundsArgs& a, const Globals& g, int& code) {
  std::map<std::string, double> consts;
  for (const auto& c : a.constants) {
    const auto eq = c.find('=');
    if (eq == std::string::npos) throw UsageError("--const expects name=value");
    try {
      consts[c.substr(0, eq)] = std::stod(c.substr(eq + 1));
    } catch (const std::exception&) {
      throw UsageError("--const expects name=value");
    }
  }
  const BoundReport r = bounds_report(a.n, a.k, a.h, a.eps, consts);
  code = 0;
  switch (format_of(g)) {
    case Format::json: return to_json(r) + "\n";
    case Format::csv: return to_csv(r);
    case Format::text: return to_text(r);
  }
  return {};
}

// ---------------------------------------------------------------------------
// audit

struct AuditArgs {
  std::vector<unsigned> n_list;
  std::optional<unsigned> k;
  std::optional<unsigned> h;
  bool grid = false;
};

const std::vector<unsigned> kGrid = {30, 40, 60, 100, 200, 500, 1000, 2000};

std::string run_audit(const AuditArgs& a, const Globals& g, int& code) {
  std::vector<unsigned> ns = a.n_list;
  if (a.grid) ns = kGrid;
  if (ns.empty()) throw UsageError("audit needs --n or --grid");
  std::vector<std::pair<unsigned, unsigned>> points;
  for (unsigned n : ns) {
    if (a.k) {
      points.push_back({n, *a.k});
      continue;
    }
    for (unsigned k = 2; k_condition(n, k); ++k) points.push_back({n, k});
  }
  std::vector<FactorSet> factors(points.size());
  std::vector<AuditReport> audits(points.size());
  parallel_blocks(points.size(), g.jobs, [&](std::size_t b, std::size_t e, std::size_t) {
    for (std::size_t i = b; i < e; ++i) {
      factors[i] = factor_audit(points[i].first, points[i].second);
      audits[i] = inequality_audit(points[i].first, points[i].second, a.h);
    }
  });
  bool ok = true;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (audits[i].in_region() && (!audits[i].all_hold() || !factors[i].caps_hold())) ok = false;
  code = ok ? 0 : 1;

  switch (format_of(g)) {
    case Format::json: {
      ojson list = ojson::array();
      for (std::size_t i = 0; i < points.size(); ++i)
        list.push_back({{"factors", ojson::parse(to_json(factors[i]))},
                        {"audit", ojson::parse(to_json(audits[i]))}});
      return ojson{{"points", list}, {"all_hold", ok}}.dump(2) + "\n";
    }
    case Format::csv: {
      std::ostringstream out;
      out << "n,k,h,name,lhs,rhs,relation,holds\n";
      for (std::size_t i = 0; i < points.size(); ++i) {
        const std::string h = a.h ? std::to_string(*a.h) : "";
        for (const auto& [name, holds] : factors[i].caps)
          out << points[i].first << ',' << points[i].second << ',' << h << ",factor:" << name
              << ",,,cap," << holds << '\n';
        for (const auto& e : audits[i].entries)
          out << points[i].first << ',' << points[i].second << ',' << h << ',' << e.name << ','
              << dec(e.lhs) << ',' << dec(e.rhs) << ',' << (e.strict ? "<" : "<=") << ','
              << e.holds << '\n';
      }
      return out.str();
    }
    case Format::text: {
      std::ostringstream out;
      for (std::size_t i = 0; i < points.size(); ++i) {
        std::size_t held = 0;
        for (const auto& e : audits[i].entries) held += e.holds;
        out << "n=" << points[i].first << " k=" << points[i].second;
        if (a.h) out << " h=" << *a.h;
        out << " region=" << (audits[i].in_region() ? "yes" : "no") << " inequalities "
            << held << '/' << audits[i].entries.size() << " caps "
            << (factors[i].caps_hold() ? "ok" : "fail") << '\n';
        for (const auto& e : audits[i].entries)
          if (!e.holds)
            out << "  FAIL " << e.name << ": " << dec(e.lhs, 12) << (e.strict ? " < " : " <= ")
                << dec(e.rhs, 12) << '\n';
      }
      out << (ok ? "all hold\n" : "failures present\n");
      return out.str();
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// prob

struct ProbArgs {
  std::string quantity;
  unsigned n = 0, k = 1, h = 1;
  double t = 0.5;
  std::string p = "paper-k";
  double r_const = 1.0;
  std::optional<double> s_const;
  std::uint64_t m = 1;
  std::uint64_t D = 0;
  unsigned n_to = 0;
};

std::string flat_text(const ojson& j) {
  std::ostringstream out;
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      for (const auto& [k2, v2] : value.items())
        out << key << '.' << k2 << ' ' << (v2.is_string() ? v2.get<std::string>() : v2.dump())
            << '\n';
    } else {
      out << key << ' ' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
  }
  return out.str();
}

std::string flat_csv(const ojson& j) {
  std::ostringstream out;
  out << "key,value\n";
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      for (const auto& [k2, v2] : value.items())
        out << key << '.' << k2 << ',' << (v2.is_string() ? v2.get<std::string>() : v2.dump())
            << '\n';
    } else {
      out << key << ',' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
  }
  return out.str();
}

std::string run_prob(const ProbArgs& a, const Globals& g, int& code) {
  ojson j;
  j["quantity"] = a.quantity;
  j["n"] = a.n;
  j["k"] = a.k;
  code = 0;
  const auto& q = a.quantity;
  if (q == "order-stat") {
    j["t"] = a.t;
    j["closed_form"] = dec(order_stat_cdf(a.n, a.k, Real(a.t)));
    j["quadrature"] = fmt(order_stat_cdf_quadrature(a.n, a.k, a.t));
  } else if (q == "dense" || q == "badpair") {
    const double p = parse_p(a.p, a.n, a.k);
    j["p"] = fmt(p);
    ProbReport r;
    if (q == "dense") {
      r = p_dense_exact(a.n, a.k, Real(p));
    } else {
      j["h"] = a.h;
      r = p_badpair_upper(a.n, a.k, a.h, Real(p));
    }
    j["report"] = ojson::parse(to_json(r));
  } else if (q == "factors") {
    j["factors"] = ojson::parse(to_json(factor_audit(a.n, a.k)));
  } else if (q == "epsilon-window") {
    const EpsilonWindow w = epsilon_window(a.n, a.k, Real(a.r_const),
                                           a.s_const ? std::optional<Real>(Real(*a.s_const))
                                                     : std::nullopt);
    j["lo"] = dec(w.lo);
    j["hi"] = dec(w.hi);
    j["remark_hi"] = w.remark_hi ? ojson(dec(*w.remark_hi)) : ojson(nullptr);
    j["I"] = dec(w.I);
    j["J"] = dec(w.J);
    j["feasible"] = w.feasible;
  } else if (q == "crossover") {
    const unsigned to = a.n_to ? a.n_to : 100000;
    const auto n1 = epsilon_crossover(a.k, Real(a.r_const), std::max(a.n, 2 * a.k), to);
    j["n_to"] = to;
    j["crossover"] = n1 ? ojson(*n1) : ojson(nullptr);
    if (!n1) code = 1;
  } else if (q == "union-bound") {
    j["m"] = a.m;
    j["fail_prob"] = fmt(union_bound_fail_prob(a.n, a.k, a.m));
  } else if (q == "degree-check") {
    const LllCheck c = degree_condition_check(a.n, a.k, a.D);
    j["check"] = ojson::parse(to_json(c));
    if (!c.satisfied) code = 1;
  } else {
    throw UsageError("unknown quantity '" + q + "'");
  }
  switch (format_of(g)) {
    case Format::json: return j.dump(2) + "\n";
    case Format::csv: return flat_csv(j);
    case Format::text: return flat_text(j);
  }
  return {};
}

// ---------------------------------------------------------------------------
// mc

struct McArgs {
  std::string target;
  McParams params;
  std::string p = "paper-k";
  std::uint64_t trials = 100000;
  bool compare = false;
  double sigmas = 3.0;
};

std::string run_mc(McArgs a, const Globals& g, int& code) {
  const McTarget target = parse_target(a.target);
  if (target != McTarget::order_stat) a.params.p = parse_p(a.p, a.params.n, a.params.k);
  const McEstimate est = mc_estimate(target, a.params, a.trials, g.seed, g.jobs);
  std::optional<McVerdict> verdict;
  if (a.compare) {
    const auto& q = a.params;
    switch (target) {
      case McTarget::order_stat:
        verdict = compare(order_stat_cdf(q.n, q.k, q.t), est, a.sigmas);
        break;
      case McTarget::dense:
        verdict = compare(p_dense_exact(q.n, q.k, Real(q.p)).analytic.convert_to<double>(), est,
                          a.sigmas);
        break;
      case McTarget::badpair:
        if (q.h >= 2 * q.k)
          verdict = compare(0.0, est, a.sigmas);
        else
          verdict = compare(p_badpair_upper(q.n, q.k, q.h, Real(q.p)).analytic.convert_to<double>(),
                            est, a.sigmas, true);
        break;
      case McTarget::colorer_success:
        throw UsageError("colorer_success has no closed form to compare against");
    }
  }
  code = verdict && !verdict->pass ? 1 : 0;
  const McVerdict* v = verdict ? &*verdict : nullptr;
  switch (format_of(g)) {
    case Format::json: return to_json(est, v) + "\n";
    case Format::csv: return to_csv(est, v);
    case Format::text: {
      std::ostringstream out;
      out << to_string(target) << ' ' << params_string(target, est.params) << " trials="
          << est.trials << " seed=" << est.seed << '\n'
          << "estimate " << fmt(est.estimate) << " std_error " << fmt(est.std_error) << '\n';
      if (v)
        out << "compare " << (v->upper_bound ? "upper_bound" : "two_sided") << " analytic "
            << fmt(v->analytic) << " deviation " << fmt(v->deviation) << " allowed "
            << fmt(v->allowed) << ' ' << (v->pass ? "pass" : "fail") << '\n';
      return out.str();
    }
  }
  return {};
}

// CLI11 parses from argc/argv; keep the strings alive alongside the pointers.
struct Argv {
  explicit Argv(const std::vector<std::string>& args) : storage(args) {
    storage.insert(storage.begin(), "bklab");
    for (auto& s : storage) ptrs.push_back(s.data());
  }
  int argc() const { return static_cast<int>(ptrs.size()); }
  char** argv() { return ptrs.data(); }
  std::vector<std::string> storage;
  std::vector<char*> ptrs;
};

}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"Hypergraph 2-coloring laboratory for property B_k"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Seed for every random stream")->capture_default_str();
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", g.out_path, "Output file (default stdout)");
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--input", g.input, "Input .hg or JSON file (default stdin)");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a hypergraph");
  gen_cmd->add_option("--family", gen.family, "fano | complete | random | odd_cycle")->required();
  gen_cmd->add_option("--v", gen.v, "Vertex count");
  gen_cmd->add_option("--n", gen.n, "Edge size");
  gen_cmd->add_option("--m", gen.m, "Edge count (random)");
  gen_cmd->add_option("--length", gen.length, "Cycle length (odd_cycle)");

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Structural flags; verify a coloring or numeration");
  check_cmd->add_option("--k", check.k, "k for the coloring/numeration checks");
  check_cmd->add_option("--h", check.h, "Report property A_h");
  check_cmd->add_option("--coloring", check.coloring, "Coloring string over {1,2}");
  check_cmd->add_option("--sigma", check.sigma, "Numeration 'sigma: r1 r2 ...'");

  DecideArgs decide;
  auto* decide_cmd = app.add_subcommand("decide", "Exact property B_k verdict");
  decide_cmd->add_option("--k", decide.k, "k")->capture_default_str();
  decide_cmd->add_option("--method", decide.method, "coloring | numeration | chains")
      ->capture_default_str();

  ColorArgs color;
  auto* color_cmd = app.add_subcommand("color", "Randomized colorers");
  color_cmd->add_option("--k", color.k, "k")->required();
  color_cmd->add_option("--algorithm", color.algorithm, "ordering | naive | prune")
      ->capture_default_str();
  color_cmd->add_option("--p", color.p, "paper-k | paper-k1 | paper-eps | <real>");
  color_cmd->add_option("--eps", color.eps, "Pruning budget eps")->capture_default_str();
  color_cmd->add_option("--max-trials", color.max_trials, "Trial budget")->capture_default_str();
  color_cmd->add_flag("--require-non-dense", color.require_non_dense,
                      "Ordering colorer also rejects trials with dense edges");

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "Minimal non-B_k search at toy scale");
  search_cmd->add_option("--n", search.n, "Edge size")->required();
  search_cmd->add_option("--k", search.k, "k")->required();
  search_cmd->add_option("--v-max", search.v_max, "Vertex bound")->required();
  search_cmd->add_option("--m-max", search.m_max, "Edge-count bound")->required();
  search_cmd->add_option("--budget", search.budget, "Edge sets to enumerate")->capture_default_str();

  BoundsArgs bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate every bound at (n, k)");
  bounds_cmd->add_option("--n", bounds.n, "n")->required();
  bounds_cmd->add_option("--k", bounds.k, "k")->required();
  bounds_cmd->add_option("--h", bounds.h, "Intersection parameter h, k < h < 2k");
  bounds_cmd->add_option("--eps", bounds.eps, "eps for the B_{k,eps} bounds");
  bounds_cmd->add_option("--const", bounds.constants,
                         "name=value for c_shape, psi, c_eps, c_ah, R, c1, c2, delta");

  AuditArgs audit;
  auto* audit_cmd = app.add_subcommand("audit", "Factor caps and inequality replay");
  audit_cmd->add_option("--n", audit.n_list, "n (repeatable)");
  audit_cmd->add_option("--k", audit.k, "k (default: every admissible k >= 2)");
  audit_cmd->add_option("--h", audit.h, "Intersection parameter h, k < h < 2k");
  audit_cmd->add_flag("--grid", audit.grid, "n in {30,40,60,100,200,500,1000,2000}");

  ProbArgs prob;
  auto* prob_cmd = app.add_subcommand("prob", "Closed-form probabilities and conditions");
  prob_cmd
      ->add_option("--quantity", prob.quantity,
                   "order-stat | dense | badpair | factors | epsilon-window | crossover | "
                   "union-bound | degree-check")
      ->required();
  prob_cmd->add_option("--n", prob.n, "n")->required();
  prob_cmd->add_option("--k", prob.k, "k")->capture_default_str();
  prob_cmd->add_option("--h", prob.h, "Shared vertices (badpair)");
  prob_cmd->add_option("--t", prob.t, "Threshold (order-stat)");
  prob_cmd->add_option("--p", prob.p, "paper-k | paper-k1 | paper-eps | <real>")
      ->capture_default_str();
  prob_cmd->add_option("--R", prob.r_const, "Window constant R")->capture_default_str();
  prob_cmd->add_option("--S", prob.s_const, "Remark constant S");
  prob_cmd->add_option("--m", prob.m, "Edge count (union-bound)");
  prob_cmd->add_option("--D", prob.D, "Intersection degree (degree-check)");
  prob_cmd->add_option("--n-to", prob.n_to, "Upper end of the crossover sweep");

  McArgs mc;
  auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo estimators");
  mc_cmd->add_option("--target", mc.target, "order_stat | dense | badpair | colorer_success")
      ->required();
  mc_cmd->add_option("--n", mc.params.n, "n");
  mc_cmd->add_option("--k", mc.params.k, "k");
  mc_cmd->add_option("--h", mc.params.h, "Shared vertices (badpair)");
  mc_cmd->add_option("--t", mc.params.t, "Threshold (order_stat)");
  mc_cmd->add_option("--p", mc.p, "paper-k | paper-k1 | paper-eps | <real>")->capture_default_str();
  mc_cmd->add_option("--v", mc.params.v, "Vertex count (colorer_success)");
  mc_cmd->add_option("--m", mc.params.m, "Edge count (colorer_success)");
  mc_cmd->add_option("--trials", mc.trials, "Trials")->capture_default_str();
  mc_cmd->add_flag("--compare", mc.compare, "Compare with the closed form");
  mc_cmd->add_option("--sigmas", mc.sigmas, "Tolerance in standard errors")->capture_default_str();

  Argv argv(args);
  try {
    app.parse(argv.argc(), argv.argv());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  int code = 0;
  std::string text;
  try {
    if (*gen_cmd) text = run_gen(gen, g, code);
    else if (*check_cmd) text = run_check(check, g, in, code);
    else if (*decide_cmd) text = run_decide(decide, g, in, code);
    else if (*color_cmd) text = run_color(color, g, in, code);
    else if (*search_cmd) text = run_search(search, g, code);
    else if (*bounds_cmd) text = run_bounds(bounds, g, code);
    else if (*audit_cmd) text = run_audit(audit, g, code);
    else if (*prob_cmd) text = run_prob(prob, g, code);
    else if (*mc_cmd) text = run_mc(mc, g, code);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  if (g.out_path.empty() || g.out_path == "-") {
    out << text;
  } else {
    std::ofstream file(g.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << g.out_path << "'\n";
      return 2;
    }
    file << text;
  }
  return code;
}

}  // namespace bklab
