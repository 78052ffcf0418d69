#include "bklab/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "bklab/error.hpp"

namespace bklab {

// ---------------------------------------------------------------------------
// Real helpers

Real binom(unsigned n, unsigned r) {
  if (r > n) return Real(0);
  r = std::min(r, n - r);
  Real acc = 1;
  for (unsigned i = 1; i <= r; ++i) {
    acc *= n - r + i;
    acc /= i;
  }
  return acc;
}

Real factorial(unsigned n) {
  Real acc = 1;
  for (unsigned i = 2; i <= n; ++i) acc *= i;
  return acc;
}

Real binom_prefix_sum(unsigned n, unsigned k) {
  Real sum = 0;
  Real term = 1;
  for (unsigned j = 0; j < k && j <= n; ++j) {
    sum += term;
    term = term * (n - j) / (j + 1);
  }
  return sum;
}

Real log2_of(const Real& x) { return log(x) / log(Real(2)); }

std::string to_decimal(const Real& x, int digits) {
  if (boost::multiprecision::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (boost::multiprecision::isnan(x)) return "nan";
  std::ostringstream out;
  out << std::scientific << std::setprecision(digits - 1) << x;
  return out.str();
}

// ---------------------------------------------------------------------------
// Order statistics

Real order_stat_cdf(unsigned n, unsigned k, const Real& t) {
  if (k < 1 || k > n) throw PreconditionError("order_stat_cdf requires 1 <= k <= n");
  if (!(t >= 0 && t <= 1)) throw PreconditionError("order_stat_cdf requires t in [0, 1]");
  // n C(n-1,k-1) ∫_0^t x^{n-k}(1-x)^{k-1} dx, integrating by parts k-1 times:
  //   sum_{r=0}^{k-1} c_r t^{n-k+1+r} (1-t)^{k-1-r} / (n-k+1+r),
  //   c_0 = 1, c_r = c_{r-1} (k-r)/(n-k+r).
  const Real one_minus = 1 - t;
  Real coeff = 1;
  Real sum = 0;
  for (unsigned r = 0; r < k; ++r) {
    if (r > 0) coeff = coeff * (k - r) / (n - k + r);
    sum += coeff * pow(t, n - k + 1 + r) * pow(one_minus, k - 1 - r) / (n - k + 1 + r);
  }
  return n * binom(n - 1, k - 1) * sum;
}

double order_stat_cdf(unsigned n, unsigned k, double t) {
  return order_stat_cdf(n, k, Real(t)).convert_to<double>();
}

double order_stat_cdf_quadrature(unsigned n, unsigned k, double t) {
  if (k < 1 || k > n) throw PreconditionError("order_stat_cdf requires 1 <= k <= n");
  if (!(t >= 0.0 && t <= 1.0)) throw PreconditionError("order_stat_cdf requires t in [0, 1]");
  if (t == 0.0) return 0.0;
  const double scale = (n * binom(n - 1, k - 1)).convert_to<double>();
  auto density = [&](double x) {
    return scale * std::pow(x, static_cast<double>(n - k)) *
           std::pow(1.0 - x, static_cast<double>(k - 1));
  };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(density, 0.0, t, 15,
                                                                        1e-15);
}

namespace {

// For fixed N and x: upper binomial tails P(Bin(N, x) >= j), j = 0..N+1.
std::vector<Real> binomial_upper_tails(unsigned N, const Real& x) {
  std::vector<Real> pmf(N + 1);
  const Real y = 1 - x;
  std::vector<Real> pow_y(N + 1);
  pow_y[0] = 1;
  for (unsigned j = 1; j <= N; ++j) pow_y[j] = pow_y[j - 1] * y;
  Real coeff = 1;
  Real pow_x = 1;
  for (unsigned j = 0; j <= N; ++j) {
    pmf[j] = coeff * pow_x * pow_y[N - j];
    coeff = coeff * (N - j) / (j + 1);
    pow_x *= x;
  }
  std::vector<Real> tails(N + 2);
  tails[N + 1] = 0;
  for (unsigned j = N + 1; j-- > 0;) tails[j] = tails[j + 1] + pmf[j];
  return tails;
}

// All window integrals ∫_lo^hi x^a (1-x)^{N-1-a} dx for a = 0..N-1 share the
// same two tail vectors: the integral equals
//   (P(Bin(N,hi) >= a+1) - P(Bin(N,lo) >= a+1)) / ((a+1) C(N, a+1)).
class WindowIntegrals {
 public:
  WindowIntegrals(unsigned N, const Real& lo, const Real& hi)
      : N_(N), lo_tail_(binomial_upper_tails(N, lo)), hi_tail_(binomial_upper_tails(N, hi)) {
    binom_.resize(N + 1);
    binom_[0] = 1;
    for (unsigned j = 0; j < N; ++j) binom_[j + 1] = binom_[j] * (N - j) / (j + 1);
  }

  /// ∫_lo^hi x^a (1-x)^{N-1-a} dx
  Real operator()(unsigned a) const {
    if (a + 1 > N_) throw PreconditionError("window integral exponent out of range");
    return (hi_tail_[a + 1] - lo_tail_[a + 1]) / ((a + 1) * binom_[a + 1]);
  }

 private:
  unsigned N_;
  std::vector<Real> lo_tail_, hi_tail_, binom_;
};

}  // namespace

Real beta_window_integral(unsigned a, unsigned b, const Real& lo, const Real& hi) {
  if (!(lo >= 0 && lo <= hi && hi <= 1))
    throw PreconditionError("beta_window_integral requires 0 <= lo <= hi <= 1");
  return WindowIntegrals(a + b + 1, lo, hi)(a);
}

// ---------------------------------------------------------------------------
// Probability reports

const Real& ProbReport::component(const std::string& name) const {
  for (const auto& c : components)
    if (c.name == name) return c.value;
  throw PreconditionError("no component named '" + name + "'");
}

ProbReport p_dense_exact(unsigned n, unsigned k, const Real& p) {
  if (k < 1 || n < 2 * k) throw PreconditionError("p_dense_exact requires n >= 2k, k >= 1");
  ProbReport report;
  report.method = "closed-form";
  const Real d = (1 - p) / 2;
  if (d <= 0) {
    report.analytic = 0;
    report.components = {{"order_stat_term", Real(0)}, {"gap_term", Real(0)}};
    return report;
  }
  if (d >= 1) {
    report.analytic = 1;
    report.components = {{"order_stat_term", Real(1)}, {"gap_term", Real(0)}};
    return report;
  }
  const Real first = order_stat_cdf(n, k, d);
  // n C(n-1,k-1) sum_{i<k} C(n-k,i) (k-1)! i!/(i+k)! d^{n-k-i} (1-d)^{i+k}
  Real sum = 0;
  const Real fk1 = factorial(k - 1);
  for (unsigned i = 0; i < k; ++i)
    sum += binom(n - k, i) * fk1 * factorial(i) / factorial(i + k) * pow(d, n - k - i) *
           pow(1 - d, i + k);
  const Real second = n * binom(n - 1, k - 1) * sum;
  report.analytic = first + second;
  report.components = {{"order_stat_term", first}, {"gap_term", second}};
  return report;
}

ProbReport p_badpair_upper(unsigned n, unsigned k, unsigned h, const Real& p) {
  if (k < 1 || n < 2 * k) throw PreconditionError("p_badpair_upper requires n >= 2k, k >= 1");
  if (h < 1 || h > n) throw PreconditionError("p_badpair_upper requires 1 <= h <= n");
  ProbReport report;
  report.method = "closed-form";
  report.is_bound = true;
  const std::vector<std::string> names = {"window_sum", "flat_integral", "i_top_term", "ij_top_terms",
                                          "binomial_merge", "binomial_merge_all_t", "t0_geometric", "final_form"};
  if (h >= 2 * k || p <= 0) {
    report.analytic = 0;
    for (const auto& name : names) report.components.push_back({name, Real(0)});
    return report;
  }

  const Real e30 = exp(Real(30));
  const Real lo = std::max(Real(0), (1 - p) / 2);
  const Real hi = std::min(Real(1), (1 + p) / 2);
  const unsigned N = 2 * n - h;  // exponents of x and 1-x add to N - 1
  const WindowIntegrals window(N, lo, hi);
  const Real half_pow = pow(Real(2), -static_cast<int>(2 * n - h - 1));

  const unsigned t_lo = h > k ? h - k : 0;
  const unsigned t_hi = std::min(k - 1, h - 1);
  // C(n-h, j) for j = 0..k; both inner indices stay below k
  std::vector<Real> row(k + 1);
  row[0] = 1;
  for (unsigned j = 0; j < k; ++j) row[j + 1] = row[j] * Real(int(n - h) - int(j)) / (j + 1);
  for (auto& r : row)
    if (r < 0) r = 0;
  std::vector<Real> window_at(N);
  for (unsigned a = 0; a < N; ++a) window_at[a] = window(a);

  Real window_total = 0, flat = 0, i_top = 0, ij_top = 0;
  for (unsigned t = t_lo; t <= t_hi; ++t) {
    const Real ct = binom(h - 1, t);
    const unsigned i_max = k - h + t;  // >= 0 since t >= h - k
    const unsigned j_max = k - 1 - t;
    Real sum_i_j_integral = 0;
    Real sum_i = 0, sum_j = 0;
    for (unsigned i = 0; i <= i_max; ++i) {
      sum_i += row[i];
      if (row[i] == 0) continue;
      for (unsigned j = 0; j <= j_max; ++j) {
        const unsigned a = n - h - i + t + j;
        sum_i_j_integral += row[i] * row[j] * window_at[a];
      }
    }
    for (unsigned j = 0; j <= j_max; ++j) sum_j += row[j];
    window_total += ct * sum_i_j_integral;
    flat += ct * sum_i * sum_j;
    i_top += ct * row[i_max] * sum_j;
    ij_top += ct * row[j_max] * row[i_max];
  }
  window_total *= h;
  flat *= e30 * h * p * half_pow;
  report.analytic = window_total;
  report.components.push_back({"window_sum", window_total});
  report.components.push_back({"flat_integral", flat});

  const Real c = binom(n - 1, k - 1);
  const Real two_2n = pow(Real(2), static_cast<int>(2 * n));
  if (n > 3 * k) {
    const Real alpha = Real(k) / (n - 3 * k);
    const Real inv1 = 1 / (1 - alpha);
    report.components.push_back({"i_top_term", i_top * e30 * h * inv1 * p * half_pow});
    report.components.push_back({"ij_top_terms", ij_top * e30 * h * inv1 * inv1 * p * half_pow});
    auto merge_sum = [&](unsigned from) {
      Real s = 0;
      for (unsigned t = from; t <= t_hi; ++t)
        s += Real(t + 1) * binom(n - t - 1, k - 1 - t) * binom(n - t - 1, k - 1) *
             pow(Real(2), static_cast<int>(t + 2));
      return e30 * inv1 * inv1 * s * p / two_2n;
    };
    report.components.push_back({"binomial_merge", merge_sum(t_lo)});
    report.components.push_back({"binomial_merge_all_t", merge_sum(0)});
    if (n > 5 * k) {
      const Real gamma = Real(4 * k) / (n - k);
      report.components.push_back({"t0_geometric", e30 * inv1 * inv1 / (1 - gamma) * c * c * p *
                                               pow(Real(2), -static_cast<int>(2 * n - 2))});
    }
  }
  report.components.push_back(
      {"final_form", 3 * e30 * c * c * pow(Real(2), 2 - static_cast<int>(2 * n)) * p});
  return report;
}

Real p_dense_degree_bound(unsigned n, unsigned k) {
  if (k < 1 || n <= 2 * k) throw PreconditionError("density bound requires n > 2k");
  const Real c = binom(n - 1, k - 1);
  const Real two_n = pow(Real(2), -static_cast<int>(n));
  const Real n2k = pow(Real(n), 2 * k);
  const Real eps = Real(2 * k) / (n - 2 * k);
  return exp(Real(13)) * c * two_n * Real(n) * k / (n - k + 1) / n2k +
         exp(Real(26)) / (1 - eps) * c * two_n * pow(Real(n), k) * factorial(k - 1) /
             factorial(2 * k - 1) / n2k;
}

Real p_badpair_final_bound(unsigned n, unsigned k) {
  const Real c = binom(n - 1, k - 1);
  return 3 * exp(Real(30)) * c * c * pow(Real(2), 2 - static_cast<int>(2 * n)) * 2 * k *
         log(Real(n)) / n;
}

// ---------------------------------------------------------------------------
// Factors and hypotheses

bool k_condition(unsigned n, unsigned k) {
  return n >= 2 && Real(k) * k * log(Real(n)) <= n;
}

bool beta_condition(unsigned n, unsigned k) {
  const long long a = 2LL * k * k * (static_cast<long long>(n) - k);
  const long long b = (static_cast<long long>(n) - 2LL * k) * (static_cast<long long>(n) - 2LL * k);
  return a <= b;
}

bool FactorSet::caps_hold() const {
  return !degenerate &&
         std::all_of(caps.begin(), caps.end(), [](const auto& c) { return c.second; });
}

FactorSet factor_audit(unsigned n, unsigned k) {
  FactorSet f;
  f.n = n;
  f.k = k;
  f.in_region = n >= 30 && k >= 2 && k_condition(n, k);
  if (k < 1 || n <= 3 * k) {
    f.degenerate = true;
    return f;
  }
  f.alpha = Real(k) / (n - 3 * k);
  f.gamma = Real(4 * k) / (n - k);
  f.epsilon = Real(2 * k) / (n - 2 * k);
  f.beta = Real(n - 2 * k) * (n - 2 * k) / (Real(2) * k * k * (n - k));
  f.R = 1 / ((1 - f.alpha) * (1 - f.alpha) * (1 - f.gamma));
  f.T = 1 / (1 - f.epsilon);
  f.caps = {
      {"alpha<=0.15", f.alpha <= Real("0.15")},
      {"gamma<=0.5", f.gamma <= Real("0.5")},
      {"epsilon<=0.25", f.epsilon <= Real("0.25")},
      {"(1-alpha)^-2<=1.5", 1 / ((1 - f.alpha) * (1 - f.alpha)) <= Real("1.5")},
      {"(1-gamma)^-1<=2", 1 / (1 - f.gamma) <= 2},
      {"beta>1", f.beta > 1},
      {"R<=3", f.R <= 3},
      {"T<=4/3", f.T <= Real(4) / 3},
  };
  return f;
}

// ---------------------------------------------------------------------------
// Epsilon window

EpsilonWindow epsilon_window(unsigned n, unsigned k, const Real& r_const,
                             std::optional<Real> s_const) {
  if (k < 1 || n < 2 * k) throw PreconditionError("epsilon_window requires n >= 2k, k >= 1");
  const Real sum = binom_prefix_sum(n, k);
  const Real base = sum * pow(Real(2), 1 - static_cast<int>(n));
  const Real nn = n;
  EpsilonWindow w;
  w.lo = r_const * base / (nn * nn);
  w.hi = base;
  if (s_const) w.remark_hi = *s_const * base / sqrt(nn);
  w.I = r_const * sum * pow(Real(2), -static_cast<int>(n) - 1) / (nn * nn);
  w.J = 2 * exp(Real(30)) / 9 / (pow(Real(2), static_cast<int>(n)) * nn * log(nn));
  w.feasible = w.I >= w.J;
  return w;
}

std::optional<unsigned> epsilon_crossover(unsigned k, const Real& r_const, unsigned n_from,
                                          unsigned n_to) {
  // I/J = 9 R sum_{j<k} C(n,j) ln n / (4 e^30 n); the powers of two cancel.
  const Real scale = 9 * r_const / (4 * exp(Real(30)));
  std::optional<unsigned> first_good;
  for (unsigned n = std::max(n_from, 2 * k); n <= n_to; ++n) {
    const bool ok = scale * binom_prefix_sum(n, k) * log(Real(n)) / n >= 1;
    if (!ok)
      first_good.reset();
    else if (!first_good)
      first_good = n;
  }
  return first_good;
}

}  // namespace bklab
