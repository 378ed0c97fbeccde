#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ufc/dataset.hpp"
#include "ufc/ufc.hpp"

namespace ufc {

/// Noise-stability protocol: for each noise level, `replicates` independently noised copies of
/// the dataset are run through uFC and compared with the run on the clean data.
struct NoiseConfig {
  std::vector<double> percents{0, 5, 10, 15, 20, 25, 30};  ///< noise levels in percent
  std::size_t replicates = 10;
  std::uint64_t seed = 0;
  UfcConfig ufc = UfcConfig::risk(0.001, 100, false);
};

struct NoiseRow {
  double pct = 0.0;  ///< percent, as configured
  std::size_t replicate = 0;
  double oi = 0.0;
  double c0 = 0.0;
  std::size_t num_features = 0;
  std::size_t common_with_zero_noise = 0;
  /// Mean pairwise common count over all replicate pairs at this level; NaN with one replicate.
  double common_between_runs = 0.0;
};

/// Seed of replicate `replicate` at level index `level`, derived from the base seed.
std::uint64_t replicate_seed(std::uint64_t seed, std::size_t level, std::size_t replicate) noexcept;

std::vector<NoiseRow> noise_experiment(const Dataset& d, const NoiseConfig& cfg);

}  // namespace ufc
