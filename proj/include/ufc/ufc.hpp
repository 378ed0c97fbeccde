#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ufc/dataset.hpp"
#include "ufc/expr.hpp"
#include "ufc/metrics.hpp"

namespace ufc {

/// Unordered pair of current-feature indices (i < j) and its correlation.
struct CandidatePair {
  std::size_t i = 0;
  std::size_t j = 0;
  double r = 0.0;
  friend bool operator==(const CandidatePair&, const CandidatePair&) = default;
};

/// Pairs with defined r strictly above `threshold`, optionally restricted to tables passing the
/// expected-count rule. Sorted by r descending, then (i, j) ascending.
std::vector<CandidatePair> search_correlated_pairs(const FeatureSet& fs, double threshold, bool pruning);

/// Canonical forms of fi & fj, !fi & fj and fi & !fj.
std::array<FeatureExpr, 3> construct_new_features(const FeatureExpr& fi, const FeatureExpr& fj);

/// Drops zero-support members and members listed in `parents`; survivors keep their order.
/// Throws when nothing survives.
FeatureSet prune_obsolete_features(const FeatureSet& fs, const std::vector<FeatureExpr>& parents);

struct FixedMode {
  double lambda = 0.2;
  std::size_t limit_iter = 2;
};

struct RiskMode {
  double alpha = 0.001;
  std::size_t hard_cap = 100;
};

struct UfcConfig {
  std::variant<FixedMode, RiskMode> mode = FixedMode{};
  /// Expected-count candidate pruning; unset means on in risk mode, off in fixed mode.
  std::optional<bool> candidate_pruning;

  static UfcConfig fixed(double lambda, std::size_t limit_iter, std::optional<bool> pruning = std::nullopt) {
    return UfcConfig{FixedMode{lambda, limit_iter}, pruning};
  }
  static UfcConfig risk(double alpha, std::size_t hard_cap = 100, std::optional<bool> pruning = std::nullopt) {
    return UfcConfig{RiskMode{alpha, hard_cap}, pruning};
  }

  bool is_risk() const noexcept { return std::holds_alternative<RiskMode>(mode); }
  bool pruning() const noexcept { return candidate_pruning.value_or(is_risk()); }
  /// Throws Error on out-of-range parameters.
  void validate() const;
};

enum class StopReason { fixpoint, iter_limit, rms_minimum, hard_cap, no_new_features, max_features };
std::string_view to_string(StopReason reason) noexcept;

struct CombinedPair {
  std::string left;
  std::string right;
  double r = 0.0;
};

/// What one construction iteration did.
struct IterationLog {
  std::size_t iteration = 0;
  std::vector<CombinedPair> combined;
  std::vector<std::string> constructed;  ///< children kept in the new set
  std::vector<std::string> pruned;       ///< removed parents and zero-support features
};

struct RunResult {
  FeatureSet features;
  /// Entry 0 describes the primitives, entry t the set after iteration t.
  std::vector<MetricsReport> trajectory;
  std::vector<IterationLog> log;
  StopReason stop_reason = StopReason::fixpoint;
  double lambda = 0.0;
  bool pruning = false;
  /// Risk mode: metrics of the iteration that raised RMS and was discarded.
  std::optional<MetricsReport> rejected;

  std::size_t iterations() const noexcept { return trajectory.size() - 1; }
};

struct IterationStep {
  FeatureSet next;
  IterationLog log;
};

/// One pass of pair search, greedy combination and pruning over `current`.
IterationStep ufc_iteration(const FeatureSet& current, double lambda, bool pruning);

RunResult ufc_run(const Dataset& d, const UfcConfig& cfg);

/// Number of features present in both sets (canonical equality).
std::size_t count_common(const FeatureSet& a, const FeatureSet& b);

}  // namespace ufc
