#include "ufc/io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>

#include "ufc/error.hpp"

namespace ufc {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

nlohmann::json to_json(const MetricsReport& r) {
  return {{"oi", r.oi}, {"c0", r.c0}, {"c1", r.c1}, {"rms", r.rms}, {"m", r.m}, {"null_added", r.null_added}};
}

std::string to_csv_record(const MetricsReport& r) {
  return format_number(r.oi) + "," + format_number(r.c0) + "," + format_number(r.c1) + "," +
         format_number(r.rms) + "," + std::to_string(r.m) + "," + (r.null_added ? "true" : "false");
}

nlohmann::json to_json(const RunResult& run, const UfcConfig& cfg) {
  nlohmann::json j;
  j["algorithm"] = "ufc";
  if (const auto* f = std::get_if<FixedMode>(&cfg.mode)) {
    j["mode"] = "fixed";
    j["limit_iter"] = f->limit_iter;
  } else {
    const auto& r = std::get<RiskMode>(cfg.mode);
    j["mode"] = "risk";
    j["alpha"] = r.alpha;
    j["hard_cap"] = r.hard_cap;
  }
  j["lambda"] = run.lambda;
  j["pruning"] = run.pruning;
  j["stop_reason"] = std::string(to_string(run.stop_reason));
  j["iterations"] = run.iterations();

  nlohmann::json trajectory = nlohmann::json::array();
  for (std::size_t t = 0; t < run.trajectory.size(); ++t) {
    nlohmann::json entry = to_json(run.trajectory[t]);
    entry["iteration"] = t;
    if (t > 0) {
      const IterationLog& log = run.log[t - 1];
      nlohmann::json combined = nlohmann::json::array();
      for (const auto& pair : log.combined) combined.push_back({{"left", pair.left}, {"right", pair.right}, {"r", pair.r}});
      entry["combined"] = std::move(combined);
      entry["constructed"] = log.constructed;
      entry["pruned"] = log.pruned;
    }
    trajectory.push_back(std::move(entry));
  }
  j["trajectory"] = std::move(trajectory);
  j["rejected"] = run.rejected ? to_json(*run.rejected) : nlohmann::json(nullptr);
  j["features"] = run.features.texts();
  return j;
}

nlohmann::json to_json(const UfringeResult& run, const UfringeConfig& cfg) {
  nlohmann::json j;
  j["algorithm"] = "ufringe";
  j["max_features"] = cfg.max_features;
  j["min_leaf"] = cfg.min_leaf;
  j["max_depth"] = cfg.max_depth;
  j["stop_reason"] = std::string(to_string(run.stop_reason));
  j["iterations"] = run.iterations();
  nlohmann::json trajectory = nlohmann::json::array();
  for (std::size_t t = 0; t < run.trajectory.size(); ++t) {
    nlohmann::json entry = to_json(run.trajectory[t]);
    entry["iteration"] = t;
    if (t > 0) entry["added"] = run.added[t - 1];
    trajectory.push_back(std::move(entry));
  }
  j["trajectory"] = std::move(trajectory);
  j["features"] = run.features.texts();
  return j;
}

nlohmann::json to_json(const Solution& s) {
  nlohmann::json j;
  j["lambda"] = s.lambda;
  j["alpha"] = s.alpha ? nlohmann::json(*s.alpha) : nlohmann::json(nullptr);
  j["limit_iter"] = s.limit_iter;
  j["num_features"] = s.num_features;
  j["oi"] = s.oi;
  j["c0"] = s.c0;
  j["c1"] = s.c1;
  j["rms"] = s.rms;
  j["distance"] = distance_to_origin(s);
  j["features_path"] = s.features_path.empty() ? nlohmann::json(nullptr) : nlohmann::json(s.features_path);
  return j;
}

void write_sweep_csv(std::ostream& out, const std::vector<Solution>& sols) {
  out << kSweepCsvHeader << '\n';
  for (const auto& s : sols) {
    out << format_number(s.lambda) << ',' << s.limit_iter << ',' << s.num_features << ','
        << format_number(s.oi) << ',' << format_number(s.c0) << ',' << format_number(s.c1) << ','
        << format_number(s.rms) << '\n';
  }
}

namespace {

double parse_double(const std::string& text, std::size_t line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw Error("sweep csv line " + std::to_string(line) + ": bad number '" + text + "'");
  }
}

std::size_t parse_count(const std::string& text, std::size_t line) {
  std::size_t v = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw Error("sweep csv line " + std::to_string(line) + ": bad count '" + text + "'");
  }
  return v;
}

}  // namespace

std::vector<Solution> read_sweep_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw Error("sweep csv is empty");
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kSweepCsvHeader) throw Error("sweep csv header must be '" + std::string(kSweepCsvHeader) + "'");

  std::vector<Solution> out;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::size_t start = 0;
    for (std::size_t comma; (comma = line.find(',', start)) != std::string::npos; start = comma + 1) {
      cells.push_back(line.substr(start, comma - start));
    }
    cells.push_back(line.substr(start));
    if (cells.size() != 7) throw Error("sweep csv line " + std::to_string(line_no) + ": expected 7 cells");
    Solution s;
    s.lambda = parse_double(cells[0], line_no);
    s.limit_iter = parse_count(cells[1], line_no);
    s.num_features = parse_count(cells[2], line_no);
    s.oi = parse_double(cells[3], line_no);
    s.c0 = parse_double(cells[4], line_no);
    s.c1 = parse_double(cells[5], line_no);
    s.rms = parse_double(cells[6], line_no);
    out.push_back(s);
  }
  return out;
}

void write_noise_csv(std::ostream& out, const std::vector<NoiseRow>& rows) {
  out << kNoiseCsvHeader << '\n';
  for (const auto& r : rows) {
    out << format_number(r.pct) << ',' << r.replicate << ',' << format_number(r.oi) << ','
        << format_number(r.c0) << ',' << r.num_features << ',' << r.common_with_zero_noise << ','
        << format_number(r.common_between_runs) << '\n';
  }
}

}  // namespace ufc
