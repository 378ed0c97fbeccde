#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "ufc/experiment.hpp"
#include "ufc/metrics.hpp"
#include "ufc/pareto.hpp"
#include "ufc/ufc.hpp"
#include "ufc/ufringe.hpp"

namespace ufc {

/// Shortest representation that reads back to the same double; "nan" for NaN.
std::string format_number(double v);

inline constexpr const char* kMetricsCsvHeader = "oi,c0,c1,rms,m,null_added";
inline constexpr const char* kSweepCsvHeader = "lambda,limit_iter,num_features,oi,c0,c1,rms";
inline constexpr const char* kNoiseCsvHeader =
    "pct,replicate,oi,c0,num_features,common_with_zero_noise,common_between_runs";

nlohmann::json to_json(const MetricsReport& r);
std::string to_csv_record(const MetricsReport& r);

nlohmann::json to_json(const RunResult& run, const UfcConfig& cfg);
nlohmann::json to_json(const UfringeResult& run, const UfringeConfig& cfg);
nlohmann::json to_json(const Solution& s);

void write_sweep_csv(std::ostream& out, const std::vector<Solution>& sols);
/// Reads a file written by write_sweep_csv; the header must match exactly.
std::vector<Solution> read_sweep_csv(std::istream& in);

void write_noise_csv(std::ostream& out, const std::vector<NoiseRow>& rows);

}  // namespace ufc
