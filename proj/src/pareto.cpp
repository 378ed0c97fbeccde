#include "ufc/pareto.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ufc/error.hpp"
#include "ufc/ufc.hpp"

namespace ufc {

Solution make_solution(double lambda, std::size_t limit_iter, const MetricsReport& metrics) {
  Solution s;
  s.lambda = lambda;
  s.limit_iter = limit_iter;
  s.num_features = metrics.m;
  s.oi = metrics.oi;
  s.c0 = metrics.c0;
  s.c1 = metrics.c1;
  s.rms = metrics.rms;
  return s;
}

std::vector<double> lambda_grid(double from, double to, double step) {
  if (!(step > 0.0)) throw Error("lambda step must be positive");
  if (to < from) throw Error("lambda range is empty");
  const auto count = static_cast<std::size_t>(std::floor((to - from) / step + 1e-9)) + 1;
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    // Rounded to 12 decimals so that 0.002 * 97 prints as 0.194.
    out.push_back(std::round((from + static_cast<double>(i) * step) * 1e12) / 1e12);
  }
  return out;
}

std::vector<Solution> sweep(const Dataset& d, std::span<const double> lambdas,
                            std::span<const std::size_t> iters, bool pruning) {
  if (lambdas.empty() || iters.empty()) throw Error("sweep grids must be non-empty");
  const std::size_t max_iter = *std::max_element(iters.begin(), iters.end());
  std::vector<Solution> out;
  out.reserve(lambdas.size() * iters.size());
  for (double lambda : lambdas) {
    const RunResult run = ufc_run(d, UfcConfig::fixed(lambda, max_iter, pruning));
    for (std::size_t t : iters) {
      const std::size_t idx = std::min(t, run.trajectory.size() - 1);
      out.push_back(make_solution(lambda, t, run.trajectory[idx]));
    }
  }
  return out;
}

bool dominates(const Solution& a, const Solution& b) noexcept {
  return a.oi <= b.oi && a.c0 <= b.c0 && (a.oi < b.oi || a.c0 < b.c0);
}

std::vector<Solution> pareto_front(std::span<const Solution> sols) {
  std::vector<std::size_t> order(sols.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (sols[x].oi != sols[y].oi) return sols[x].oi < sols[y].oi;
    return sols[x].c0 < sols[y].c0;
  });

  // Sweep by increasing oi: a point survives iff its c0 is strictly below every c0 seen so far.
  std::vector<Solution> front;
  double best_c0 = std::numeric_limits<double>::infinity();
  for (std::size_t idx : order) {
    if (sols[idx].c0 < best_c0) {
      front.push_back(sols[idx]);
      best_c0 = sols[idx].c0;
    }
  }
  return front;
}

double distance_to_origin(const Solution& s) noexcept { return std::hypot(s.oi, s.c0); }

Solution closest_point(std::span<const Solution> sols, ClosestPointOptions opts) {
  if (sols.empty()) throw Error("closest_point: no solutions");
  double oi_lo = 0.0, oi_span = 1.0, c0_lo = 0.0, c0_span = 1.0;
  if (opts.normalize) {
    const auto [oi_min, oi_max] = std::minmax_element(
        sols.begin(), sols.end(), [](const Solution& a, const Solution& b) { return a.oi < b.oi; });
    const auto [c0_min, c0_max] = std::minmax_element(
        sols.begin(), sols.end(), [](const Solution& a, const Solution& b) { return a.c0 < b.c0; });
    oi_lo = oi_min->oi;
    c0_lo = c0_min->c0;
    oi_span = oi_max->oi - oi_lo > 0.0 ? oi_max->oi - oi_lo : 1.0;
    c0_span = c0_max->c0 - c0_lo > 0.0 ? c0_max->c0 - c0_lo : 1.0;
  }
  const auto dist = [&](const Solution& s) {
    return std::hypot((s.oi - oi_lo) / oi_span, (s.c0 - c0_lo) / c0_span);
  };

  const Solution* best = &sols.front();
  double best_dist = dist(*best);
  for (const auto& s : sols.subspan(1)) {
    const double dd = dist(s);
    const bool better =
        dd < best_dist ||
        (dd == best_dist &&
         (s.c0 < best->c0 ||
          (s.c0 == best->c0 && (s.lambda < best->lambda ||
                                (s.lambda == best->lambda && s.limit_iter < best->limit_iter)))));
    if (better) {
      best = &s;
      best_dist = dd;
    }
  }
  return *best;
}

}  // namespace ufc
