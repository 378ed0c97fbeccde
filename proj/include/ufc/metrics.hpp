#pragma once

#include <cstddef>
#include <string>
#include <unordered_set>
#include <vector>

#include "ufc/dataset.hpp"
#include "ufc/expr.hpp"

namespace ufc {

/// Ordered set of canonical feature expressions with their extensions over one dataset.
/// Carries the dataset facts the complexity measures need (n, |P|, unique(I)).
class FeatureSet {
 public:
  FeatureSet(std::size_t n, std::size_t primitive_count, std::size_t unique_individuals);

  /// F = P.
  static FeatureSet primitives(const Dataset& d);
  /// Evaluates and canonicalizes `features` over `d`; duplicates (canonical equality) are an error.
  static FeatureSet from_expressions(const std::vector<FeatureExpr>& features, const Dataset& d);
  /// Empty set sharing this set's dataset facts.
  FeatureSet empty_like() const { return FeatureSet(n_, primitive_count_, unique_individuals_); }

  /// Appends a feature; it is canonicalized first. Throws on duplicate or wrong length.
  void add(const FeatureExpr& feature, Extension extension);
  /// Like add, but returns false instead of throwing on a duplicate.
  bool try_add(const FeatureExpr& feature, Extension extension);

  bool contains(const FeatureExpr& feature) const;
  bool contains_text(const std::string& canonical_text) const { return index_.count(canonical_text) > 0; }

  std::size_t size() const noexcept { return features_.size(); }
  bool empty() const noexcept { return features_.empty(); }
  std::size_t n() const noexcept { return n_; }
  std::size_t primitive_count() const noexcept { return primitive_count_; }
  std::size_t unique_individuals() const noexcept { return unique_individuals_; }

  const FeatureExpr& feature(std::size_t i) const { return features_.at(i); }
  const Extension& extension(std::size_t i) const { return extensions_.at(i); }
  const std::vector<FeatureExpr>& features() const noexcept { return features_; }
  const std::vector<Extension>& extensions() const noexcept { return extensions_; }
  std::vector<std::string> texts() const;

  friend bool operator==(const FeatureSet& a, const FeatureSet& b) { return a.features_ == b.features_; }

 private:
  std::size_t n_;
  std::size_t primitive_count_;
  std::size_t unique_individuals_;
  std::vector<FeatureExpr> features_;
  std::vector<Extension> extensions_;
  std::unordered_set<std::string> index_;
};

struct OverlapResult {
  double oi = 0.0;
  bool null_added = false;
  std::size_t m = 0;  ///< feature count used in the denominator, null feature included
};

/// OI(F) = (sum p(f_i) - 1) / (m - 1). When some individual has every feature false, a virtual
/// "null" feature covering exactly those individuals joins the sum and the count.
OverlapResult overlap(const FeatureSet& fs);
double overlapping_index(const FeatureSet& fs);

/// C0 = (|F| - |P|) / (unique(I) - |P|). Throws when unique(I) <= |P|.
double complexity_c0(const FeatureSet& fs);
double complexity_c0(std::size_t features, std::size_t primitives, std::size_t unique_individuals);

/// C1: mean literal count per feature.
double avg_length_c1(const FeatureSet& fs);

double rms(double oi, double c0) noexcept;

struct MetricsReport {
  double oi = 0.0;
  double c0 = 0.0;
  double c1 = 1.0;
  double rms = 0.0;
  std::size_t m = 0;
  bool null_added = false;

  friend bool operator==(const MetricsReport&, const MetricsReport&) = default;
};

MetricsReport compute_metrics(const FeatureSet& fs);

}  // namespace ufc
