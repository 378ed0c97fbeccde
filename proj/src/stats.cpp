#include "ufc/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "ufc/error.hpp"

namespace ufc {

ContingencyTable contingency(const BitVector& x, const BitVector& y) {
  if (x.size() != y.size()) {
    throw Error("contingency: length mismatch " + std::to_string(x.size()) + " vs " +
                std::to_string(y.size()));
  }
  ContingencyTable t;
  t.a = count_and(x, y);
  t.b = count_and_not(x, y);
  t.c = count_and_not(y, x);
  t.d = x.size() - t.a - t.b - t.c;
  return t;
}

std::optional<double> try_pearson_r(const ContingencyTable& t) noexcept {
  const double ab = static_cast<double>(t.a + t.b);
  const double cd = static_cast<double>(t.c + t.d);
  const double ac = static_cast<double>(t.a + t.c);
  const double bd = static_cast<double>(t.b + t.d);
  if (ab == 0.0 || cd == 0.0 || ac == 0.0 || bd == 0.0) return std::nullopt;
  const double num = static_cast<double>(t.a) * static_cast<double>(t.d) -
                     static_cast<double>(t.b) * static_cast<double>(t.c);
  const double r = num / std::sqrt(ab * ac * bd * cd);
  return std::clamp(r, -1.0, 1.0);
}

double pearson_r(const ContingencyTable& t) {
  const auto r = try_pearson_r(t);
  if (!r) throw UndefinedCorrelation("correlation undefined: a feature is constant");
  return *r;
}

double chi2_obs(const ContingencyTable& t) {
  const double r = pearson_r(t);
  return static_cast<double>(t.n()) * r * r;
}

double normal_cdf(double x) noexcept { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw Error("normal_quantile: probability must lie in (0, 1)");

  // Acklam's rational approximation (relative error ~1.15e-9), refined by one Halley step.
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
                                 1.383577518672690e+02,  -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
                                 6.680131188771972e+01,  -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
                                 -2.549732539343734e+00, 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
                                 3.754408661907416e+00};
  constexpr double p_low = 0.02425;

  double x;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log1p(-p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }

  const double e = normal_cdf(x) - p;
  const double u = e * std::sqrt(2.0 * M_PI) * std::exp(0.5 * x * x);
  return x - u / (1.0 + 0.5 * x * u);
}

double lambda_from_risk(double alpha, std::size_t n) {
  if (n == 0) throw Error("lambda_from_risk: n must be >= 1");
  if (!(alpha > 0.0 && alpha < 0.5)) throw Error("lambda_from_risk: alpha must lie in (0, 0.5)");
  return normal_quantile(1.0 - alpha) / std::sqrt(static_cast<double>(n));
}

bool expected_counts_ok(const ContingencyTable& t) noexcept {
  const double n = static_cast<double>(t.n());
  if (n == 0.0) return false;
  const double ab = static_cast<double>(t.a + t.b);
  const double cd = static_cast<double>(t.c + t.d);
  const double ac = static_cast<double>(t.a + t.c);
  const double bd = static_cast<double>(t.b + t.d);
  // e >= 5  <=>  row * col >= 5 n, kept in integers where the products are exact.
  const double bound = 5.0 * n;
  return ab * ac >= bound && ab * bd >= bound && cd * ac >= bound && cd * bd >= bound;
}

// ---------------------------------------------------------------------------
// Kendall

namespace {

int sign(double v) noexcept { return (v > 0.0) - (v < 0.0); }

// S = concordant - discordant.
long long kendall_s(std::span<const double> x, std::span<const double> y) {
  long long s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) s += sign(x[i] - x[j]) * sign(y[i] - y[j]);
  }
  return s;
}

struct TieSums {
  double pairs = 0.0;  // sum t(t-1)/2
  double v2 = 0.0;     // sum t(t-1)(t-2)
  double v5 = 0.0;     // sum t(t-1)(2t+5)
};

TieSums tie_sums(std::span<const double> v) {
  std::map<double, std::size_t> groups;
  for (double value : v) ++groups[value];
  TieSums s;
  for (const auto& [value, count] : groups) {
    const double t = static_cast<double>(count);
    s.pairs += t * (t - 1.0) / 2.0;
    s.v2 += t * (t - 1.0) * (t - 2.0);
    s.v5 += t * (t - 1.0) * (2.0 * t + 5.0);
  }
  return s;
}

void check_kendall_input(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw Error("kendall: sequences differ in length");
  if (x.size() < 3) throw Error("kendall: at least 3 observations required");
}

}  // namespace

KendallResult kendall_tau_test(std::span<const double> x, std::span<const double> y) {
  check_kendall_input(x, y);
  const double n = static_cast<double>(x.size());
  const double total_pairs = n * (n - 1.0) / 2.0;
  const TieSums tx = tie_sums(x);
  const TieSums ty = tie_sums(y);
  if (tx.pairs == total_pairs || ty.pairs == total_pairs) {
    throw Error("kendall: tau undefined for an all-tied sequence");
  }
  const double s = static_cast<double>(kendall_s(x, y));

  KendallResult out;
  out.tau = s / std::sqrt((total_pairs - tx.pairs) * (total_pairs - ty.pairs));
  out.tau = std::clamp(out.tau, -1.0, 1.0);

  const double m = n * (n - 1.0);
  const double var = (m * (2.0 * n + 5.0) - tx.v5 - ty.v5) / 18.0 + (2.0 * tx.pairs * ty.pairs) / m +
                     tx.v2 * ty.v2 / (9.0 * m * (n - 2.0));
  const double z = s / std::sqrt(var);
  out.p_value = std::min(1.0, std::erfc(std::fabs(z) / std::sqrt(2.0)));
  return out;
}

double kendall_exact_p(std::span<const double> x, std::span<const double> y) {
  check_kendall_input(x, y);
  const std::size_t n = x.size();
  const TieSums tx = tie_sums(x);
  const TieSums ty = tie_sums(y);
  const double total_pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  if (tx.pairs == total_pairs || ty.pairs == total_pairs) {
    throw Error("kendall: tau undefined for an all-tied sequence");
  }
  const long long observed = std::llabs(kendall_s(x, y));

  if (tx.pairs == 0.0 && ty.pairs == 0.0) {
    // Distribution of the inversion count of a uniform random permutation, built one element at a
    // time; S = pairs - 2 * inversions.
    const std::size_t max_inv = n * (n - 1) / 2;
    std::vector<long double> dist(max_inv + 1, 0.0L);
    dist[0] = 1.0L;
    std::size_t reach = 0;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<long double> next(max_inv + 1, 0.0L);
      for (std::size_t inv = 0; inv <= reach; ++inv) {
        const long double share = dist[inv] / static_cast<long double>(i + 1);
        for (std::size_t extra = 0; extra <= i; ++extra) next[inv + extra] += share;
      }
      reach += i;
      dist.swap(next);
    }
    long double p = 0.0L;
    for (std::size_t inv = 0; inv <= max_inv; ++inv) {
      const long long s = static_cast<long long>(max_inv) - 2 * static_cast<long long>(inv);
      if (std::llabs(s) >= observed) p += dist[inv];
    }
    return std::min(1.0, static_cast<double>(p));
  }

  if (n > 8) throw Error("kendall_exact_p: tied inputs are limited to length 8");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<double> permuted(n);
  std::size_t hits = 0;
  std::size_t total = 0;
  do {
    for (std::size_t i = 0; i < n; ++i) permuted[i] = y[perm[i]];
    if (std::llabs(kendall_s(x, permuted)) >= observed) ++hits;
    ++total;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<double>(hits) / static_cast<double>(total);
}

}  // namespace ufc
