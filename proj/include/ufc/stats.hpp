#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "ufc/bitvector.hpp"

namespace ufc {

/// 2x2 counts for an ordered feature pair (x, y):
///            y    !y
///    x       a    b
///   !x       c    d
struct ContingencyTable {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t c = 0;
  std::uint64_t d = 0;

  std::uint64_t n() const noexcept { return a + b + c + d; }
  friend bool operator==(const ContingencyTable&, const ContingencyTable&) = default;
};

ContingencyTable contingency(const BitVector& x, const BitVector& y);

/// Phi coefficient (a*d - b*c) / sqrt((a+b)(a+c)(b+d)(c+d)). Throws UndefinedCorrelation when a
/// marginal is zero.
double pearson_r(const ContingencyTable& t);
/// Same value, std::nullopt for a degenerate table.
std::optional<double> try_pearson_r(const ContingencyTable& t) noexcept;

/// Chi-square statistic of independence, computed as n * r^2.
double chi2_obs(const ContingencyTable& t);

/// Standard normal CDF.
double normal_cdf(double x) noexcept;
/// Inverse standard normal CDF on (0, 1).
double normal_quantile(double p);

/// Correlation threshold u_{1-alpha} / sqrt(n) of the one-sided independence test.
double lambda_from_risk(double alpha, std::size_t n);

/// Significance level with the band [0.05 / planned_tests, 0.05] suggested for it.
struct RiskConfig {
  double alpha = 0.001;
  std::size_t planned_tests = 1;

  double lambda(std::size_t n) const { return lambda_from_risk(alpha, n); }
  double band_low() const noexcept { return 0.05 / static_cast<double>(planned_tests); }
  double band_high() const noexcept { return 0.05; }
};

/// Every expected cell count under independence is >= 5.
bool expected_counts_ok(const ContingencyTable& t) noexcept;

struct KendallResult {
  double tau = 0.0;      ///< tau-b
  double p_value = 1.0;  ///< two-sided, normal approximation with tie correction
};

/// Kendall tau-b with a two-sided p-value. Requires equal lengths >= 3. Throws Error when either
/// sequence is entirely tied.
KendallResult kendall_tau_test(std::span<const double> x, std::span<const double> y);

/// Exact two-sided permutation p-value: fraction of orderings of y whose |tau-b| is at least the
/// observed one. Tie-free inputs use the inversion-count distribution; inputs with ties enumerate
/// permutations and are limited to length 8.
double kendall_exact_p(std::span<const double> x, std::span<const double> y);

}  // namespace ufc
