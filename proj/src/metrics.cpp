#include "ufc/metrics.hpp"

#include <cmath>

#include "ufc/error.hpp"

namespace ufc {

FeatureSet::FeatureSet(std::size_t n, std::size_t primitive_count, std::size_t unique_individuals)
    : n_(n), primitive_count_(primitive_count), unique_individuals_(unique_individuals) {}

FeatureSet FeatureSet::primitives(const Dataset& d) {
  FeatureSet fs(d.n(), d.k(), unique_count(d));
  for (std::size_t j = 0; j < d.k(); ++j) fs.add(FeatureExpr::primitive(d.names()[j]), d.column(j));
  return fs;
}

FeatureSet FeatureSet::from_expressions(const std::vector<FeatureExpr>& features, const Dataset& d) {
  FeatureSet fs(d.n(), d.k(), unique_count(d));
  for (const auto& f : features) {
    FeatureExpr canon = canonicalize(f);
    Extension ext = evaluate(canon, d);
    fs.add(canon, std::move(ext));
  }
  return fs;
}

bool FeatureSet::try_add(const FeatureExpr& feature, Extension extension) {
  if (extension.size() != n_) {
    throw Error("feature '" + feature.text() + "' has extension of length " +
                std::to_string(extension.size()) + ", expected " + std::to_string(n_));
  }
  FeatureExpr canon = canonicalize(feature);
  if (!index_.insert(canon.text()).second) return false;
  features_.push_back(std::move(canon));
  extensions_.push_back(std::move(extension));
  return true;
}

void FeatureSet::add(const FeatureExpr& feature, Extension extension) {
  if (!try_add(feature, std::move(extension))) {
    throw Error("duplicate feature '" + canonical_string(feature) + "'");
  }
}

bool FeatureSet::contains(const FeatureExpr& feature) const { return contains_text(canonical_string(feature)); }

std::vector<std::string> FeatureSet::texts() const {
  std::vector<std::string> out;
  out.reserve(features_.size());
  for (const auto& f : features_) out.push_back(f.text());
  return out;
}

OverlapResult overlap(const FeatureSet& fs) {
  OverlapResult out;
  BitVector covered(fs.n());
  std::size_t support_sum = 0;
  for (const auto& ext : fs.extensions()) {
    support_sum += ext.count();
    covered |= ext;
  }
  out.m = fs.size();
  const std::size_t uncovered = fs.n() - covered.count();
  if (uncovered > 0) {
    out.null_added = true;
    support_sum += uncovered;
    ++out.m;
  }
  if (out.m < 2) throw Error("overlapping index undefined for a single feature");
  const double total_p = static_cast<double>(support_sum) / static_cast<double>(fs.n());
  out.oi = (total_p - 1.0) / static_cast<double>(out.m - 1);
  return out;
}

double overlapping_index(const FeatureSet& fs) { return overlap(fs).oi; }

double complexity_c0(std::size_t features, std::size_t primitives, std::size_t unique_individuals) {
  if (unique_individuals <= primitives) {
    throw Error("complexity undefined: " + std::to_string(unique_individuals) +
                " unique individuals for " + std::to_string(primitives) + " primitives");
  }
  return (static_cast<double>(features) - static_cast<double>(primitives)) /
         static_cast<double>(unique_individuals - primitives);
}

double complexity_c0(const FeatureSet& fs) {
  return complexity_c0(fs.size(), fs.primitive_count(), fs.unique_individuals());
}

double avg_length_c1(const FeatureSet& fs) {
  if (fs.empty()) throw Error("average feature length undefined for an empty feature set");
  std::size_t total = 0;
  for (const auto& f : fs.features()) total += literal_count(f);
  return static_cast<double>(total) / static_cast<double>(fs.size());
}

double rms(double oi, double c0) noexcept { return std::sqrt((oi * oi + c0 * c0) / 2.0); }

MetricsReport compute_metrics(const FeatureSet& fs) {
  MetricsReport r;
  const OverlapResult ov = overlap(fs);
  r.oi = ov.oi;
  r.null_added = ov.null_added;
  r.c0 = complexity_c0(fs);
  r.c1 = avg_length_c1(fs);
  r.rms = rms(r.oi, r.c0);
  r.m = fs.size();
  return r;
}

}  // namespace ufc
