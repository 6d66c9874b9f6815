#pragma once

// Command-line front end and the statistical bench harness.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "twins/report.hpp"

namespace twins {

/// Bench harness: for each sample, attempts perfect twins via the criteria
/// constructors and then local search; cross-checks with the exact oracle
/// when n <= 14. Deterministic per seed (per-sample sub-seeds are drawn from
/// one SplitMix64 stream).
BenchReport bench_gnp(int n, double p, int samples, uint64_t seed);

/// Dispatches `twins {check|exact|approx|sparse|criteria|forest|gen|bench}`.
/// Returns the process exit code: 0 success, 1 algorithm failure,
/// 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::istream& in);

}  // namespace twins
