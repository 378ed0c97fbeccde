#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ufc/dataset.hpp"
#include "ufc/expr.hpp"
#include "ufc/metrics.hpp"
#include "ufc/ufc.hpp"

namespace ufc {

struct UfringeConfig {
  std::size_t max_features = 300;
  std::size_t min_leaf = 5;
  std::size_t max_depth = 10;
};

/// Node of an unsupervised clustering tree. Internal nodes split on a current feature: the
/// `true_child` holds the individuals where it holds, `false_child` the rest.
struct TreeNode {
  BitVector members;
  std::size_t depth = 0;
  /// Mean squared distance of members to their centroid: sum over features of p (1 - p).
  double variance = 0.0;
  std::optional<std::size_t> split;  ///< feature index, unset for leaves
  std::size_t true_child = 0;
  std::size_t false_child = 0;

  bool is_leaf() const noexcept { return !split.has_value(); }
};

struct ClusteringTree {
  std::vector<TreeNode> nodes;              ///< nodes[0] is the root
  std::vector<FeatureExpr> split_features;  ///< the feature set the tree was grown over

  const TreeNode& root() const { return nodes.front(); }
  std::size_t leaf_count() const;
  std::size_t depth() const;
};

/// Size-weighted variance |S| * variance(S) of the individuals in `members`.
double weighted_variance(const FeatureSet& fs, const BitVector& members);

/// Greedy top-down tree: each node takes the feature whose split minimizes the summed weighted
/// variance of the two children, provided the sum drops below the node's own, both children have
/// at least `min_leaf` members and the node is shallower than `max_depth`. Ties go to the lowest
/// feature index.
ClusteringTree build_clustering_tree(const FeatureSet& fs, const UfringeConfig& cfg);

/// For every root-to-leaf path with at least two edges, the conjunction of its last two edge
/// literals (a split feature on the true branch, its negation on the false branch). Canonical,
/// duplicate-free, in depth-first order with true branches first.
std::vector<FeatureExpr> extract_fringe_features(const ClusteringTree& tree);

struct UfringeResult {
  FeatureSet features;
  std::vector<MetricsReport> trajectory;    ///< entry 0 = primitives
  std::vector<std::size_t> added;           ///< features appended per iteration
  StopReason stop_reason = StopReason::no_new_features;

  std::size_t iterations() const noexcept { return added.size(); }
};

/// Grows the feature set from the primitives until a tree yields no new feature or the budget
/// is reached (checked after appending a whole tree's yield). Features are never removed.
UfringeResult ufringe_run(const Dataset& d, const UfringeConfig& cfg);

}  // namespace ufc
