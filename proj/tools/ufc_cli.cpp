// ufc: command-line front end for unsupervised feature construction.
//
//   ufc construct data.csv --lambda 0.194 --max-iter 2 --out run/hungarian
//   ufc construct data.csv --risk 0.001 --out run/hungarian
//   ufc sweep data.csv --lambda-from 0.002 --lambda-to 0.5 --lambda-step 0.002 --iters-max 30
//   ufc pareto sweep.csv --front front.csv --closest closest.json
//   ufc metrics data.csv --features run/hungarian.features.txt
//   ufc transform data.csv --features run/hungarian.features.txt --out converted.csv
//   ufc noise data.csv --pcts 0,5,10,15,20,25,30 --replicates 10 --seed 0
//
// Exit codes: 0 success, 1 runtime error, 2 command-line misuse.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ufc/dataset.hpp"
#include "ufc/error.hpp"
#include "ufc/experiment.hpp"
#include "ufc/expr.hpp"
#include "ufc/io.hpp"
#include "ufc/metrics.hpp"
#include "ufc/pareto.hpp"
#include "ufc/stats.hpp"
#include "ufc/ufc.hpp"
#include "ufc/ufringe.hpp"

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ufc::Error("cannot write '" + path + "'");
  out << content;
  if (!out) throw ufc::Error("write failed for '" + path + "'");
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
  } else {
    write_file(path, content);
  }
}

void check_output_path(const std::string& path) {
  if (path.empty() || path == "-") return;
  const auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty() && !std::filesystem::is_directory(parent)) {
    throw UsageError("output directory '" + parent.string() + "' does not exist");
  }
}

std::optional<bool> parse_on_off(const std::string& value) {
  if (value.empty()) return std::nullopt;
  if (value == "on") return true;
  if (value == "off") return false;
  throw UsageError("--prune expects 'on' or 'off'");
}

struct ConstructArgs {
  std::string dataset;
  std::optional<double> lambda;
  std::optional<std::size_t> max_iter;
  std::optional<double> risk;
  std::size_t hard_cap = 100;
  std::string prune;
  std::string algorithm = "ufc";
  std::size_t max_features = 300;
  std::size_t min_leaf = 5;
  std::size_t max_depth = 10;
  std::string out;
};

int run_construct(const ConstructArgs& a) {
  check_output_path(a.out + ".features.txt");
  if (a.algorithm == "ufringe") {
    if (a.lambda || a.max_iter || a.risk || !a.prune.empty()) {
      throw UsageError("--lambda/--max-iter/--risk/--prune apply to --algorithm ufc only");
    }
    const ufc::UfringeConfig cfg{a.max_features, a.min_leaf, a.max_depth};
    const ufc::Dataset d = ufc::load_dataset_file(a.dataset);
    const ufc::UfringeResult run = ufc::ufringe_run(d, cfg);
    std::ostringstream features;
    ufc::write_feature_file(features, run.features.features());
    write_file(a.out + ".features.txt", features.str());
    write_file(a.out + ".run.json", ufc::to_json(run, cfg).dump(2) + "\n");
    std::cout << ufc::to_json(run.trajectory.back()).dump() << "\n";
    return 0;
  }

  const bool fixed = a.lambda.has_value() || a.max_iter.has_value();
  if (fixed && a.risk) throw UsageError("--risk cannot be combined with --lambda/--max-iter");
  if (!fixed && !a.risk) throw UsageError("give either --lambda X --max-iter N or --risk A");
  if (fixed && !(a.lambda && a.max_iter)) throw UsageError("--lambda and --max-iter go together");
  const std::optional<bool> pruning = parse_on_off(a.prune);
  const ufc::UfcConfig cfg = fixed ? ufc::UfcConfig::fixed(*a.lambda, *a.max_iter, pruning)
                                   : ufc::UfcConfig::risk(*a.risk, a.hard_cap, pruning);
  try {
    cfg.validate();
  } catch (const ufc::Error& e) {
    throw UsageError(e.what());
  }

  const ufc::Dataset d = ufc::load_dataset_file(a.dataset);
  const ufc::RunResult run = ufc::ufc_run(d, cfg);
  nlohmann::json doc = ufc::to_json(run, cfg);
  if (a.risk) {
    const ufc::RiskConfig risk{*a.risk, d.k() * (d.k() - 1) / 2};
    doc["risk_band"] = {risk.band_low(), risk.band_high()};
    std::cerr << "risk " << *a.risk << "; suggested band [" << risk.band_low() << ", "
              << risk.band_high() << "] for " << risk.planned_tests << " pair tests\n";
  }
  std::ostringstream features;
  ufc::write_feature_file(features, run.features.features());
  write_file(a.out + ".features.txt", features.str());
  write_file(a.out + ".run.json", doc.dump(2) + "\n");
  std::cout << ufc::to_json(run.trajectory.back()).dump() << "\n";
  return 0;
}

struct SweepArgs {
  std::string dataset;
  double lambda_from = 0.002;
  double lambda_to = 0.5;
  double lambda_step = 0.002;
  std::size_t iters_min = 1;
  std::size_t iters_max = 30;
  std::string prune = "off";
  std::string out;
};

int run_sweep(const SweepArgs& a) {
  check_output_path(a.out);
  const bool pruning = parse_on_off(a.prune).value_or(false);
  if (a.iters_min < 1 || a.iters_max < a.iters_min) throw UsageError("need 1 <= --iters-min <= --iters-max");
  std::vector<double> lambdas;
  try {
    lambdas = ufc::lambda_grid(a.lambda_from, a.lambda_to, a.lambda_step);
  } catch (const ufc::Error& e) {
    throw UsageError(e.what());
  }
  for (double l : lambdas) {
    if (!(l > 0.0 && l < 1.0)) throw UsageError("lambda grid must lie in (0, 1)");
  }
  std::vector<std::size_t> iters;
  for (std::size_t t = a.iters_min; t <= a.iters_max; ++t) iters.push_back(t);

  const ufc::Dataset d = ufc::load_dataset_file(a.dataset);
  const auto sols = ufc::sweep(d, lambdas, iters, pruning);
  std::ostringstream out;
  ufc::write_sweep_csv(out, sols);
  emit(a.out, out.str());
  return 0;
}

struct ParetoArgs {
  std::string in;
  std::string front;
  std::string closest;
  bool normalize = false;
  std::string dataset;
  std::string features_out;
  std::string prune = "off";
};

int run_pareto(const ParetoArgs& a) {
  check_output_path(a.front);
  check_output_path(a.closest);
  check_output_path(a.features_out);
  if (a.features_out.empty() != a.dataset.empty()) {
    throw UsageError("--dataset and --features-out go together");
  }
  const bool pruning = parse_on_off(a.prune).value_or(false);

  std::ifstream in(a.in);
  if (!in) throw ufc::Error("cannot open '" + a.in + "'");
  const auto sols = ufc::read_sweep_csv(in);
  const auto front = ufc::pareto_front(sols);
  ufc::Solution best = ufc::closest_point(sols, {a.normalize});

  if (!a.dataset.empty()) {
    const ufc::Dataset d = ufc::load_dataset_file(a.dataset);
    const auto run = ufc::ufc_run(d, ufc::UfcConfig::fixed(best.lambda, best.limit_iter, pruning));
    std::ostringstream features;
    ufc::write_feature_file(features, run.features.features());
    write_file(a.features_out, features.str());
    best.features_path = a.features_out;
  }

  std::ostringstream front_csv;
  ufc::write_sweep_csv(front_csv, front);
  if (!a.front.empty()) write_file(a.front, front_csv.str());

  nlohmann::json doc = ufc::to_json(best);
  doc["front_size"] = front.size();
  doc["solutions"] = sols.size();
  doc["normalized"] = a.normalize;
  emit(a.closest, doc.dump(2) + "\n");
  return 0;
}

struct FeatureArgs {
  std::string dataset;
  std::string features;
  std::string out;
};

int run_metrics(const FeatureArgs& a) {
  check_output_path(a.out);
  const ufc::Dataset d = ufc::load_dataset_file(a.dataset);
  const auto fs = ufc::FeatureSet::from_expressions(ufc::read_feature_file(a.features), d);
  emit(a.out, ufc::to_json(ufc::compute_metrics(fs)).dump(2) + "\n");
  return 0;
}

int run_transform(const FeatureArgs& a) {
  check_output_path(a.out);
  const ufc::Dataset d = ufc::load_dataset_file(a.dataset);
  const auto exprs = ufc::read_feature_file(a.features);
  std::vector<std::string> names;
  std::vector<ufc::BitVector> columns;
  for (std::size_t i = 0; i < exprs.size(); ++i) {
    names.push_back("f" + std::to_string(i + 1));
    columns.push_back(ufc::evaluate(exprs[i], d));
  }
  const ufc::Dataset converted(std::move(names), std::move(columns));
  std::ostringstream out;
  ufc::write_dataset(out, converted);
  emit(a.out, out.str());
  return 0;
}

struct NoiseArgs {
  std::string dataset;
  std::vector<double> pcts{0, 5, 10, 15, 20, 25, 30};
  std::size_t replicates = 10;
  std::uint64_t seed = 0;
  double risk = 0.001;
  std::size_t hard_cap = 100;
  std::string prune = "off";
  std::string out;
};

int run_noise(const NoiseArgs& a) {
  check_output_path(a.out);
  ufc::NoiseConfig cfg;
  cfg.percents = a.pcts;
  cfg.replicates = a.replicates;
  cfg.seed = a.seed;
  cfg.ufc = ufc::UfcConfig::risk(a.risk, a.hard_cap, parse_on_off(a.prune).value_or(false));
  try {
    cfg.ufc.validate();
  } catch (const ufc::Error& e) {
    throw UsageError(e.what());
  }
  if (a.replicates < 1) throw UsageError("--replicates must be >= 1");
  for (double p : a.pcts) {
    if (!(p >= 0.0 && p <= 100.0)) throw UsageError("--pcts values are percents in [0, 100]");
  }
  const ufc::Dataset d = ufc::load_dataset_file(a.dataset);
  std::ostringstream out;
  ufc::write_noise_csv(out, ufc::noise_experiment(d, cfg));
  emit(a.out, out.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unsupervised construction of conjunctive Boolean features"};
  app.require_subcommand(1);

  ConstructArgs construct;
  auto* c = app.add_subcommand("construct", "Build a feature set with uFC or uFRINGE");
  c->add_option("dataset", construct.dataset, "0/1 CSV dataset")->required()->check(CLI::ExistingFile);
  c->add_option("--lambda", construct.lambda, "Correlation threshold (fixed mode)");
  c->add_option("--max-iter", construct.max_iter, "Iteration limit (fixed mode)");
  c->add_option("--risk", construct.risk, "Significance level (risk-based mode)");
  c->add_option("--hard-cap", construct.hard_cap, "Iteration cap in risk mode")->capture_default_str();
  c->add_option("--prune", construct.prune, "Expected-count candidate pruning: on|off");
  c->add_option("--algorithm", construct.algorithm, "ufc or ufringe")
      ->check(CLI::IsMember({"ufc", "ufringe"}))
      ->capture_default_str();
  c->add_option("--max-features", construct.max_features, "uFRINGE feature budget")->capture_default_str();
  c->add_option("--min-leaf", construct.min_leaf, "uFRINGE minimum leaf size")->capture_default_str();
  c->add_option("--max-depth", construct.max_depth, "uFRINGE maximum tree depth")->capture_default_str();
  c->add_option("--out", construct.out, "Output prefix")->required();

  SweepArgs sweep;
  auto* s = app.add_subcommand("sweep", "Grid of fixed-mode runs over lambda x limit_iter");
  s->add_option("dataset", sweep.dataset)->required()->check(CLI::ExistingFile);
  s->add_option("--lambda-from", sweep.lambda_from)->capture_default_str();
  s->add_option("--lambda-to", sweep.lambda_to)->capture_default_str();
  s->add_option("--lambda-step", sweep.lambda_step)->capture_default_str();
  s->add_option("--iters-min", sweep.iters_min)->capture_default_str();
  s->add_option("--iters-max", sweep.iters_max)->capture_default_str();
  s->add_option("--prune", sweep.prune, "on|off")->capture_default_str();
  s->add_option("--out", sweep.out, "CSV output (default stdout)");

  ParetoArgs pareto;
  auto* p = app.add_subcommand("pareto", "Pareto front and closest point of a sweep CSV");
  p->add_option("sweep", pareto.in, "CSV written by 'ufc sweep'")->required()->check(CLI::ExistingFile);
  p->add_option("--front", pareto.front, "Front CSV output");
  p->add_option("--closest", pareto.closest, "Closest-point JSON output (default stdout)");
  p->add_flag("--normalize", pareto.normalize, "Min-max scale OI and C0 before measuring distance");
  p->add_option("--dataset", pareto.dataset, "Re-run the closest point on this dataset")->check(CLI::ExistingFile);
  p->add_option("--features-out", pareto.features_out, "Feature file for the closest point");
  p->add_option("--prune", pareto.prune, "Pruning used by the sweep: on|off")->capture_default_str();

  FeatureArgs metrics;
  auto* m = app.add_subcommand("metrics", "OI, C0, C1 and RMS of a feature set");
  m->add_option("dataset", metrics.dataset)->required()->check(CLI::ExistingFile);
  m->add_option("--features", metrics.features)->required()->check(CLI::ExistingFile);
  m->add_option("--out", metrics.out, "JSON output (default stdout)");

  FeatureArgs transform;
  auto* t = app.add_subcommand("transform", "Re-express a dataset with a feature set");
  t->add_option("dataset", transform.dataset)->required()->check(CLI::ExistingFile);
  t->add_option("--features", transform.features)->required()->check(CLI::ExistingFile);
  t->add_option("--out", transform.out, "CSV output (default stdout)");

  NoiseArgs noise;
  auto* n = app.add_subcommand("noise", "Noise-stability experiment");
  n->add_option("dataset", noise.dataset)->required()->check(CLI::ExistingFile);
  n->add_option("--pcts", noise.pcts, "Noise levels in percent")->delimiter(',')->capture_default_str();
  n->add_option("--replicates", noise.replicates)->capture_default_str();
  n->add_option("--seed", noise.seed)->capture_default_str();
  n->add_option("--risk", noise.risk)->capture_default_str();
  n->add_option("--hard-cap", noise.hard_cap)->capture_default_str();
  n->add_option("--prune", noise.prune, "on|off")->capture_default_str();
  n->add_option("--out", noise.out, "CSV output (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (c->parsed()) return run_construct(construct);
    if (s->parsed()) return run_sweep(sweep);
    if (p->parsed()) return run_pareto(pareto);
    if (m->parsed()) return run_metrics(metrics);
    if (t->parsed()) return run_transform(transform);
    if (n->parsed()) return run_noise(noise);
  } catch (const UsageError& e) {
    std::cerr << "ufc: " << e.what() << "\n";
    return 2;
  } catch (const ufc::Error& e) {
    std::cerr << "ufc: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "ufc: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
