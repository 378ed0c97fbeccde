#include "ufc/ufringe.hpp"

#include <algorithm>
#include <unordered_set>

#include "ufc/error.hpp"

namespace ufc {

std::size_t ClusteringTree::leaf_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes.begin(), nodes.end(), [](const TreeNode& n) { return n.is_leaf(); }));
}

std::size_t ClusteringTree::depth() const {
  std::size_t out = 0;
  for (const auto& n : nodes) out = std::max(out, n.depth);
  return out;
}

double weighted_variance(const FeatureSet& fs, const BitVector& members) {
  const std::size_t size = members.count();
  if (size == 0) return 0.0;
  double total = 0.0;
  for (const auto& ext : fs.extensions()) {
    const auto ones = static_cast<double>(count_and(members, ext));
    total += ones * (static_cast<double>(size) - ones);
  }
  return total / static_cast<double>(size);
}

ClusteringTree build_clustering_tree(const FeatureSet& fs, const UfringeConfig& cfg) {
  if (fs.empty()) throw Error("clustering tree needs a non-empty feature set");
  const std::size_t min_leaf = std::max<std::size_t>(cfg.min_leaf, 1);

  ClusteringTree tree;
  tree.split_features = fs.features();
  {
    TreeNode root;
    root.members = BitVector::ones(fs.n());
    root.variance = weighted_variance(fs, root.members) / static_cast<double>(fs.n());
    tree.nodes.push_back(std::move(root));
  }

  // Nodes are appended as they are created; index order is breadth-first per parent.
  for (std::size_t idx = 0; idx < tree.nodes.size(); ++idx) {
    if (tree.nodes[idx].depth >= cfg.max_depth) continue;
    const BitVector members = tree.nodes[idx].members;
    const std::size_t size = members.count();
    if (size < 2 * min_leaf) continue;
    const double parent_cost = weighted_variance(fs, members);
    if (parent_cost <= 0.0) continue;

    std::optional<std::size_t> best;
    double best_cost = parent_cost;
    const double tolerance = 1e-12 * std::max(1.0, parent_cost);
    for (std::size_t f = 0; f < fs.size(); ++f) {
      BitVector left = members & fs.extension(f);
      const std::size_t left_size = left.count();
      if (left_size < min_leaf || size - left_size < min_leaf) continue;
      BitVector right = members;
      right.and_not(fs.extension(f));
      const double cost = weighted_variance(fs, left) + weighted_variance(fs, right);
      if (cost < best_cost - tolerance) {
        best_cost = cost;
        best = f;
      }
    }
    if (!best) continue;

    TreeNode on_true;
    on_true.members = members & fs.extension(*best);
    on_true.depth = tree.nodes[idx].depth + 1;
    on_true.variance = weighted_variance(fs, on_true.members) / static_cast<double>(on_true.members.count());
    TreeNode on_false;
    on_false.members = members;
    on_false.members.and_not(fs.extension(*best));
    on_false.depth = on_true.depth;
    on_false.variance = weighted_variance(fs, on_false.members) / static_cast<double>(on_false.members.count());

    tree.nodes[idx].split = *best;
    tree.nodes[idx].true_child = tree.nodes.size();
    tree.nodes.push_back(std::move(on_true));
    tree.nodes[idx].false_child = tree.nodes.size();
    tree.nodes.push_back(std::move(on_false));
  }
  return tree;
}

std::vector<FeatureExpr> extract_fringe_features(const ClusteringTree& tree) {
  std::vector<FeatureExpr> out;
  std::unordered_set<std::string> seen;
  std::vector<FeatureExpr> path;

  const auto walk = [&](const auto& self, std::size_t idx) -> void {
    const TreeNode& node = tree.nodes[idx];
    if (node.is_leaf()) {
      if (path.size() >= 2) {
        FeatureExpr f = canonicalize(FeatureExpr::conjunction(path[path.size() - 2], path.back()));
        if (seen.insert(f.text()).second) out.push_back(std::move(f));
      }
      return;
    }
    const FeatureExpr& split = tree.split_features.at(*node.split);
    path.push_back(split);
    self(self, node.true_child);
    path.back() = FeatureExpr::negation(split);
    self(self, node.false_child);
    path.pop_back();
  };
  if (!tree.nodes.empty()) walk(walk, 0);
  return out;
}

UfringeResult ufringe_run(const Dataset& d, const UfringeConfig& cfg) {
  if (cfg.max_features <= d.k()) throw Error("max_features must exceed the primitive count");
  UfringeResult result{FeatureSet::primitives(d), {}, {}, StopReason::no_new_features};
  if (result.features.unique_individuals() <= result.features.primitive_count()) {
    throw Error("degenerate dataset: unique individuals do not exceed the primitive count");
  }
  result.trajectory.push_back(compute_metrics(result.features));

  while (true) {
    const ClusteringTree tree = build_clustering_tree(result.features, cfg);
    std::size_t added = 0;
    for (const auto& f : extract_fringe_features(tree)) {
      if (result.features.contains_text(f.text())) continue;
      result.features.add(f, evaluate(f, d));
      ++added;
    }
    if (added == 0) {
      result.stop_reason = StopReason::no_new_features;
      break;
    }
    result.added.push_back(added);
    result.trajectory.push_back(compute_metrics(result.features));
    if (result.features.size() >= cfg.max_features) {
      result.stop_reason = StopReason::max_features;
      break;
    }
  }
  return result;
}

}  // namespace ufc
