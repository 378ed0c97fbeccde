#include "ufc/ufc.hpp"

#include <algorithm>
#include <unordered_set>

#include "ufc/error.hpp"
#include "ufc/stats.hpp"

namespace ufc {

std::vector<CandidatePair> search_correlated_pairs(const FeatureSet& fs, double threshold, bool pruning) {
  std::vector<CandidatePair> out;
  const auto& ext = fs.extensions();
  for (std::size_t i = 0; i < ext.size(); ++i) {
    for (std::size_t j = i + 1; j < ext.size(); ++j) {
      const ContingencyTable t = contingency(ext[i], ext[j]);
      const auto r = try_pearson_r(t);
      if (!r || !(*r > threshold)) continue;
      if (pruning && !expected_counts_ok(t)) continue;
      out.push_back({i, j, *r});
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const CandidatePair& x, const CandidatePair& y) { return x.r > y.r; });
  return out;
}

std::array<FeatureExpr, 3> construct_new_features(const FeatureExpr& fi, const FeatureExpr& fj) {
  const FeatureExpr a = canonicalize(fi);
  const FeatureExpr b = canonicalize(fj);
  return {canonicalize(FeatureExpr::conjunction(a, b)),
          canonicalize(FeatureExpr::conjunction(FeatureExpr::negation(a), b)),
          canonicalize(FeatureExpr::conjunction(a, FeatureExpr::negation(b)))};
}

FeatureSet prune_obsolete_features(const FeatureSet& fs, const std::vector<FeatureExpr>& parents) {
  std::unordered_set<std::string> removed;
  for (const auto& p : parents) removed.insert(canonical_string(p));
  FeatureSet out = fs.empty_like();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs.extension(i).none() || removed.count(fs.feature(i).text()) > 0) continue;
    out.add(fs.feature(i), fs.extension(i));
  }
  if (out.empty()) throw Error("pruning removed every feature");
  return out;
}

void UfcConfig::validate() const {
  if (const auto* f = std::get_if<FixedMode>(&mode)) {
    if (!(f->lambda > 0.0 && f->lambda < 1.0)) throw Error("lambda must lie in (0, 1)");
    if (f->limit_iter < 1) throw Error("limit_iter must be >= 1");
  } else {
    const auto& r = std::get<RiskMode>(mode);
    if (!(r.alpha > 0.0 && r.alpha < 0.5)) throw Error("risk alpha must lie in (0, 0.5)");
    if (r.hard_cap < 1) throw Error("hard_cap must be >= 1");
  }
}

std::string_view to_string(StopReason reason) noexcept {
  switch (reason) {
    case StopReason::fixpoint: return "fixpoint";
    case StopReason::iter_limit: return "iter_limit";
    case StopReason::rms_minimum: return "rms_minimum";
    case StopReason::hard_cap: return "hard_cap";
    case StopReason::no_new_features: return "no_new_features";
    case StopReason::max_features: return "max_features";
  }
  return "unknown";
}

IterationStep ufc_iteration(const FeatureSet& current, double lambda, bool pruning) {
  IterationStep step{current, {}};
  std::vector<bool> used(current.size(), false);
  std::vector<FeatureExpr> parents;

  // Popping the best pair and discarding every pair that shares a member with it is the same as
  // walking the sorted list and skipping pairs with an already-used member.
  for (const auto& pair : search_correlated_pairs(current, lambda, pruning)) {
    if (used[pair.i] || used[pair.j]) continue;
    used[pair.i] = used[pair.j] = true;
    const FeatureExpr& fi = current.feature(pair.i);
    const FeatureExpr& fj = current.feature(pair.j);
    const Extension& ei = current.extension(pair.i);
    const Extension& ej = current.extension(pair.j);
    parents.push_back(fi);
    parents.push_back(fj);
    step.log.combined.push_back({fi.text(), fj.text(), pair.r});

    const auto children = construct_new_features(fi, fj);
    Extension both = ei & ej;
    Extension only_j = ej;
    only_j.and_not(ei);
    Extension only_i = ei;
    only_i.and_not(ej);
    step.next.try_add(children[0], std::move(both));
    step.next.try_add(children[1], std::move(only_j));
    step.next.try_add(children[2], std::move(only_i));
  }

  FeatureSet pruned = prune_obsolete_features(step.next, parents);
  std::unordered_set<std::string> kept;
  for (const auto& f : pruned.features()) kept.insert(f.text());
  for (const auto& f : step.next.features()) {
    if (kept.count(f.text()) == 0) step.log.pruned.push_back(f.text());
  }
  for (std::size_t i = current.size(); i < step.next.size(); ++i) {
    const auto& text = step.next.feature(i).text();
    if (kept.count(text) > 0) step.log.constructed.push_back(text);
  }
  step.next = std::move(pruned);
  return step;
}

RunResult ufc_run(const Dataset& d, const UfcConfig& cfg) {
  cfg.validate();
  FeatureSet current = FeatureSet::primitives(d);
  if (current.unique_individuals() <= current.primitive_count()) {
    throw Error("degenerate dataset: " + std::to_string(current.unique_individuals()) +
                " unique individuals for " + std::to_string(current.primitive_count()) + " primitives");
  }

  const bool risk = cfg.is_risk();
  const double lambda = risk ? lambda_from_risk(std::get<RiskMode>(cfg.mode).alpha, d.n())
                             : std::get<FixedMode>(cfg.mode).lambda;
  const std::size_t limit = risk ? std::get<RiskMode>(cfg.mode).hard_cap : std::get<FixedMode>(cfg.mode).limit_iter;

  RunResult result{current, {compute_metrics(current)}, {}, StopReason::fixpoint, lambda, cfg.pruning(), std::nullopt};
  for (std::size_t iter = 1;; ++iter) {
    IterationStep step = ufc_iteration(current, lambda, result.pruning);
    step.log.iteration = iter;
    if (step.next == current) {
      result.stop_reason = StopReason::fixpoint;
      break;
    }
    MetricsReport metrics = compute_metrics(step.next);
    if (risk && metrics.rms > result.trajectory.back().rms) {
      result.rejected = metrics;
      result.stop_reason = StopReason::rms_minimum;
      break;
    }
    current = std::move(step.next);
    result.trajectory.push_back(metrics);
    result.log.push_back(std::move(step.log));
    if (iter >= limit) {
      result.stop_reason = risk ? StopReason::hard_cap : StopReason::iter_limit;
      break;
    }
  }
  result.features = std::move(current);
  return result;
}

std::size_t count_common(const FeatureSet& a, const FeatureSet& b) {
  std::size_t common = 0;
  for (const auto& f : a.features()) {
    if (b.contains_text(f.text())) ++common;
  }
  return common;
}

}  // namespace ufc
