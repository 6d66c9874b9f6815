#pragma once

// JSON report types emitted by the CLI. Sizes and discrepancies are always
// recomputed from the returned vertex sets, never copied from module
// bookkeeping.

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "twins/discrepancy.hpp"
#include "twins/forest.hpp"
#include "twins/generators.hpp"
#include "twins/graph.hpp"
#include "twins/sparse.hpp"

namespace twins {

struct RunReport {
  std::string algorithm;
  int n = 0;
  long long e = 0;
  TwinPair result;
  long long size = 0;  // recomputed at emission
  long long disc = 0;  // recomputed at emission
  std::optional<double> bound;
  std::optional<bool> bound_satisfied;
  nlohmann::json trace = nlohmann::json::object();
  double wall_time_ms = 0.0;
};

RunReport make_run_report(const std::string& algorithm, const Graph& g, const TwinPair& result,
                          std::optional<double> bound, nlohmann::json trace, double wall_time_ms);

nlohmann::json to_json(const RunReport& r);
RunReport run_report_from_json(const nlohmann::json& j);

struct BenchReport {
  GenSpec family;
  int samples = 0;
  double perfect_twin_fraction = 0.0;
  std::map<int, long long> size_histogram;  // valid twin size -> sample count
  uint64_t seed = 0;
};

nlohmann::json to_json(const BenchReport& r);
BenchReport bench_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GenSpec& s);
GenSpec gen_spec_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TwinPair& p);
nlohmann::json to_json(const AlmostTwinsTrace& t);
nlohmann::json to_json(const SparseTrace& t);
nlohmann::json to_json(const MoveRecord& m);
nlohmann::json to_json(const TraceStep& s);
nlohmann::json to_json(const GoodTwinsTrace& t);
GoodTwinsTrace good_twins_trace_from_json(const nlohmann::json& j);
nlohmann::json to_json(const AssemblyTrace& t);

}  // namespace twins
