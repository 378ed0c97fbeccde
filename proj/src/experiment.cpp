#include "ufc/experiment.hpp"

#include <limits>

#include "ufc/error.hpp"

namespace ufc {

namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t replicate_seed(std::uint64_t seed, std::size_t level, std::size_t replicate) noexcept {
  return splitmix64(splitmix64(splitmix64(seed) ^ level) ^ replicate);
}

std::vector<NoiseRow> noise_experiment(const Dataset& d, const NoiseConfig& cfg) {
  if (cfg.replicates < 1) throw Error("noise experiment needs at least one replicate");
  if (cfg.percents.empty()) throw Error("noise experiment needs at least one noise level");
  for (double pct : cfg.percents) {
    if (!(pct >= 0.0 && pct <= 100.0)) throw Error("noise percent must lie in [0, 100]");
  }

  const RunResult clean = ufc_run(d, cfg.ufc);
  std::vector<NoiseRow> rows;
  for (std::size_t level = 0; level < cfg.percents.size(); ++level) {
    const double pct = cfg.percents[level];
    std::vector<RunResult> runs;
    runs.reserve(cfg.replicates);
    for (std::size_t r = 0; r < cfg.replicates; ++r) {
      const Dataset noised = inject_noise(d, pct / 100.0, replicate_seed(cfg.seed, level, r));
      runs.push_back(ufc_run(noised, cfg.ufc));
    }

    double between = std::numeric_limits<double>::quiet_NaN();
    if (runs.size() > 1) {
      double sum = 0.0;
      std::size_t pairs = 0;
      for (std::size_t a = 0; a < runs.size(); ++a) {
        for (std::size_t b = a + 1; b < runs.size(); ++b) {
          sum += static_cast<double>(count_common(runs[a].features, runs[b].features));
          ++pairs;
        }
      }
      between = sum / static_cast<double>(pairs);
    }

    for (std::size_t r = 0; r < runs.size(); ++r) {
      const MetricsReport& final_metrics = runs[r].trajectory.back();
      rows.push_back({pct, r, final_metrics.oi, final_metrics.c0, runs[r].features.size(),
                      count_common(runs[r].features, clean.features), between});
    }
  }
  return rows;
}

}  // namespace ufc
