#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ufc/dataset.hpp"
#include "ufc/metrics.hpp"

namespace ufc {

/// One run's point in the (OI, C0) plane together with the parameters that produced it.
struct Solution {
  double lambda = 0.0;
  std::optional<double> alpha;
  std::size_t limit_iter = 0;
  std::size_t num_features = 0;
  double oi = 0.0;
  double c0 = 0.0;
  double c1 = 1.0;
  double rms = 0.0;
  std::string features_path;

  friend bool operator==(const Solution&, const Solution&) = default;
};

Solution make_solution(double lambda, std::size_t limit_iter, const MetricsReport& metrics);

/// from, from + step, ... up to `to` (inclusive within 1e-9 of a step).
std::vector<double> lambda_grid(double from, double to, double step);

/// One fixed-mode solution per (lambda, limit_iter), lambda-major. Each lambda is run once up to
/// max(iters); lower iteration counts are read off its trajectory.
std::vector<Solution> sweep(const Dataset& d, std::span<const double> lambdas,
                            std::span<const std::size_t> iters, bool pruning);

/// a has oi <= and c0 <= those of b, with at least one strict.
bool dominates(const Solution& a, const Solution& b) noexcept;

/// Non-dominated subset sorted by oi ascending (then c0). Points equal on both coordinates keep
/// their first occurrence.
std::vector<Solution> pareto_front(std::span<const Solution> sols);

struct ClosestPointOptions {
  /// Min-max scale both axes over the input before measuring distance.
  bool normalize = false;
};

/// Minimizes the distance to (0, 0); ties go to smaller c0, then smaller lambda, then fewer
/// iterations. Throws on empty input.
Solution closest_point(std::span<const Solution> sols, ClosestPointOptions opts = {});
double distance_to_origin(const Solution& s) noexcept;

}  // namespace ufc
