#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "bklab/analytics.hpp"
#include "bklab/error.hpp"

namespace bklab {

namespace {

Real two_pow(long e) { return pow(Real(2), e); }

Real root_term(unsigned n, unsigned k) { return sqrt(Real(n) / (Real(k) * log(Real(n)))); }

}  // namespace

Real naive_bound(unsigned n, unsigned k) { return two_pow(n - 1) / binom_prefix_sum(n, k); }

Real numeration_bound(unsigned n, unsigned k) {
  return 12 / exp(Real(26)) * root_term(n, k) * two_pow(n - 1) / binom(n - 1, k - 1);
}

Real degree_limit(unsigned n, unsigned k) {
  return 5 / (3 * exp(Real(26))) * root_term(n, k) * two_pow(n - 1) / binom(n - 1, k - 1) - 1;
}

Real numeration_bound_ah(unsigned n, unsigned k, unsigned h) {
  if (!(h > k && h < 2 * k)) throw PreconditionError("numeration_bound_ah requires k < h < 2k");
  const Real denom = sqrt(two_pow(h - k) * (h - k + 1) * binom(n - 1, k - 1) *
                          binom(n - 1, 2 * k - 1 - h));
  return 12 / exp(Real(26)) * root_term(n, k) * two_pow(n - 1) / denom;
}

bool BoundEntry::valid() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(), [](const auto& h) { return h.second; });
}

const BoundEntry& BoundReport::entry(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return e;
  throw PreconditionError("no bound named '" + name + "'");
}

BoundReport bounds_report(unsigned n, unsigned k, std::optional<unsigned> h,
                          std::optional<double> eps,
                          const std::map<std::string, double>& user_constants) {
  if (k < 1) throw PreconditionError("k must be at least 1");
  if (n < std::max(2 * k, 2u)) throw PreconditionError("bounds require n >= max(2k, 2)");
  if (h) {
    if (*h >= 2 * k)
      throw PreconditionError("quantity m_{k,h}(n) does not exist when h >= 2k");
    if (*h <= k) throw PreconditionError("h must satisfy k < h < 2k");
  }
  if (eps && !(*eps > 0 && *eps < 1)) throw PreconditionError("eps must lie in (0, 1)");

  BoundReport r;
  r.n = n;
  r.k = k;
  r.h = h;
  r.eps = eps;
  for (const char* name : {"c_shape", "psi", "c_eps", "c_ah", "R", "c1", "c2", "delta"})
    r.constants[name] = 1.0;
  for (const auto& [name, value] : user_constants) {
    if (!r.constants.count(name)) throw PreconditionError("unknown constant '" + name + "'");
    r.constants[name] = value;
  }
  auto constant = [&](const char* name) { return Real(r.constants.at(name)); };

  const Real N = n;
  const Real K = k;
  const Real ln_n = log(N);
  const Real C = binom(n - 1, k - 1);
  const Real sum = binom_prefix_sum(n, k);
  const Real e = exp(Real(1));
  const bool n30 = n >= 30, k2 = k >= 2, k_ok = k_condition(n, k);

  auto add = [&](std::string name, std::string quantity, std::string kind, Real value,
                 bool shape, std::vector<std::pair<std::string, bool>> hyps) {
    BoundEntry b;
    b.name = std::move(name);
    b.quantity = std::move(quantity);
    b.kind = std::move(kind);
    b.value = value;
    b.value_log2 = value > 0 ? log2_of(value).convert_to<double>() : -INFINITY;
    b.shape_only = shape;
    b.vacuous = b.kind == "lower" && value < 1;
    b.hypotheses = std::move(hyps);
    r.entries.push_back(std::move(b));
  };

  add("erdos_lower", "m(n)", "lower", two_pow(n - 1), false, {});
  add("erdos_upper", "m(n)", "upper", e * log(Real(2)) / 4 * N * N * two_pow(n), true, {});
  add("radhakrishnan_srinivasan", "m(n)", "lower", Real("0.1") * two_pow(n) * sqrt(N / ln_n),
      false, {});
  add("naive", "m_k(n)", "lower", naive_bound(n, k), false, {{"n>=2k", n >= 2 * k}});
  add("bk_upper_shape", "m_k(n)", "upper",
      e * log(Real(2)) / 4 * N * N * two_pow(n) / sum * constant("psi"), true, {});
  add("bk_lower_shape", "m_k(n)", "lower",
      constant("c_shape") * sqrt(N / ln_n) * exp(-K / 2) / sqrt(2 * K - 1) * two_pow(n - k) /
          binom(n, k - 1),
      true, {});
  add("bk_lower_quarter", "m_k(n)", "lower", Real("0.19") * pow(N, Real("0.25")) * two_pow(n - 1) / C,
      false, {});
  add("numeration_lower", "m_k(n)", "lower", numeration_bound(n, k), false,
      {{"n>=30", n30}, {"k>=2", k2}, {"k<=sqrt(n/ln n)", k_ok}});

  if (eps) {
    const Real E = Real(*eps);
    const EpsilonWindow w = epsilon_window(n, k, constant("R"));
    const bool in_window = E > w.lo && E < w.hi;
    add("eps_lower_shape", "m_{k,eps}(n)", "lower",
        constant("c_eps") * E * N / ln_n * two_pow(2 * n) / (sum * sum) * two_pow(-2 * long(k)) *
            exp(-K) / (2 * K - 1),
        true, {{"eps_in_window", in_window}});
    add("eps_lower_sqrt", "m_{k,eps}(n)", "lower",
        Real("0.0361") * E * sqrt(N) * two_pow(2 * n - 2) / (C * C), false,
        {{"n>=14", n >= 14}, {"k>=2", k2}, {"2k^2(n-k)<=(n-2k)^2", beta_condition(n, k)}});
    add("eps_numeration_lower", "m_{k,eps}(n)", "lower",
        1 / (3 * exp(Real(35))) * two_pow(2 * n - 2) / (C * C) * N /
            log(pow(N, 2 * k) * ln_n) * E / 2,
        false,
        {{"n>=30", n30},
         {"k>=2", k2},
         {"k<=sqrt(n/ln n)", k_ok},
         {"I>=J", w.feasible},
         {"eps_in_window", in_window}});
  }

  if (h) {
    const unsigned H = *h;
    const Real HH = H;
    const Real root_h = sqrt(two_pow(H - k) * (H - k + 1) * C * binom(n - 1, 2 * k - 1 - H));
    const bool strict_beta = 2LL * k * k * (long long)(n - k) <
                             (long long)(n - 2 * k) * (long long)(n - 2 * k);
    add("ah_lower_shape", "m_{k,h}(n)", "lower",
        constant("c_ah") * pow(3 * N / (2 * HH * ln_n), HH / 3) * two_pow(n - 1) /
            binom(n, k - 1),
        true, {{"h<2k", true}});
    add("ah_lower_quarter", "m_{k,h}(n)", "lower",
        Real("0.19") * pow(N, Real("0.25")) * two_pow(n - 1) / root_h, false,
        {{"k<h<2k", true}, {"2k^2(n-k)<(n-2k)^2", strict_beta}});
    add("ah_numeration_lower", "m_{k,h}(n)", "lower", numeration_bound_ah(n, k, H), false,
        {{"n>=30", n30}, {"k>2", k > 2}, {"k<h<2k", true}, {"k<=sqrt(n/ln n)", k_ok}});
  }

  add("erdos_lovasz_lower", "m*(n)", "lower", constant("c1") * two_pow(2 * n) / pow(N, 3), true,
      {});
  add("erdos_lovasz_upper", "m*(n)", "upper", constant("c2") * pow(N, 4) * two_pow(2 * n), true,
      {});
  add("kostochka_kumbhat", "m*(n)", "lower", two_pow(2 * n) * pow(N, -constant("delta")), true,
      {});
  {
    const Real C2 = binom(n - 2, k - 1);
    const long a = (long)n - k - 1, b = (long)n - 2 * k - 1;
    add("simple_lower_quarter", "m*_k(n)", "lower",
        Real("0.19") * Real("0.19") / (8 * e) * two_pow(2 * n - 2) /
            (pow(N - 1, Real("1.5")) * C2 * C2),
        false, {{"2k^2(n-k-1)<(n-2k-1)^2", 2 * (long)k * k * a < b * b}});
    add("simple_numeration_lower", "m*_k(n)", "lower",
        25 / (18 * exp(Real(52))) * two_pow(2 * (n - 1)) /
            (K * (N - 1) * log(N - 1) * C2 * C2),
        false, {{"n>=30", n30}, {"k>=2", k2}, {"k<=sqrt(n/ln n)", k_ok}});
  }
  add("degree_limit", "D", "threshold", degree_limit(n, k), false,
      {{"n>=30", n30}, {"k>=2", k2}, {"k<=sqrt(n/ln n)", k_ok}});
  return r;
}

namespace {

std::string flags_string(const BoundEntry& b) {
  std::string out;
  for (const auto& [name, ok] : b.hypotheses) {
    if (!out.empty()) out += ';';
    out += name + '=' + (ok ? "1" : "0");
  }
  return out;
}

std::string log2_string(double v) {
  if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
  std::ostringstream out;
  out << std::setprecision(12) << v;
  return out.str();
}

}  // namespace

std::string to_json(const BoundReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["h"] = r.h ? nlohmann::ordered_json(*r.h) : nlohmann::ordered_json(nullptr);
  j["eps"] = r.eps ? nlohmann::ordered_json(*r.eps) : nlohmann::ordered_json(nullptr);
  j["constants"] = r.constants;
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& b : r.entries) {
    nlohmann::ordered_json e;
    e["name"] = b.name;
    e["quantity"] = b.quantity;
    e["kind"] = b.kind;
    e["value"] = to_decimal(b.value);
    e["value_log2"] = log2_string(b.value_log2);
    e["shape_only"] = b.shape_only;
    e["vacuous"] = b.vacuous;
    e["valid"] = b.valid();
    nlohmann::ordered_json hyps = nlohmann::ordered_json::object();
    for (const auto& [name, ok] : b.hypotheses) hyps[name] = ok;
    e["hypotheses"] = hyps;
    list.push_back(e);
  }
  j["bounds"] = list;
  return j.dump(2);
}

std::string to_csv(const BoundReport& r) {
  std::ostringstream out;
  out << "name,quantity,kind,value,value_log2,shape_only,vacuous,valid,flags\n";
  for (const auto& b : r.entries)
    out << b.name << ',' << b.quantity << ',' << b.kind << ',' << to_decimal(b.value, 17) << ','
        << log2_string(b.value_log2) << ',' << b.shape_only << ',' << b.vacuous << ','
        << b.valid() << ',' << flags_string(b) << '\n';
  return out.str();
}

std::string to_text(const BoundReport& r) {
  std::ostringstream out;
  out << "n=" << r.n << " k=" << r.k;
  if (r.h) out << " h=" << *r.h;
  if (r.eps) out << " eps=" << *r.eps;
  out << '\n';
  for (const auto& b : r.entries) {
    out << std::left << std::setw(28) << b.name << std::setw(14) << b.quantity << std::setw(10)
        << b.kind << std::setw(26) << to_decimal(b.value, 12) << "log2=" << std::setw(20)
        << log2_string(b.value_log2);
    if (b.shape_only) out << " shape-only";
    if (b.vacuous) out << " vacuous";
    if (!b.valid()) out << " hypotheses-fail[" << flags_string(b) << ']';
    out << '\n';
  }
  return out.str();
}

}  // namespace bklab
