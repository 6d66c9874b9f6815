#pragma once

// Exhaustive ground truth on small instances: exact t(G), minimum
// discrepancy at half size, and balanced integer halving. Deliberately
// simple enumeration so the results can be trusted as oracles.

#include <optional>
#include <utility>
#include <vector>

#include "twins/graph.hpp"

namespace twins {

struct OracleResult {
  int t = 0;                     // largest k admitting twins of size k
  TwinPair witness;              // a pair achieving t
  long long nodes_examined = 0;  // (A, B) pairs evaluated
};

/// Exact t(G) by descending-k enumeration of disjoint subset pairs.
/// Subsets are visited in colexicographic order and pairs are deduplicated
/// by requiring min(A) < min(B), so the witness is deterministic.
/// Refuses graphs with more than cap vertices.
OracleResult exact_t(const Graph& g, int cap = 14);

/// Independent verification route: ascending k, no early exit across k.
/// Used to cross-check exact_t on small graphs.
int exact_t_ascending(const Graph& g, int cap = 10);

struct MinDiscResult {
  long long disc = 0;
  TwinPair pair;  // an achieving half/half partition
};

/// Minimum |e(A) - e(B)| over all partitions into halves of size floor(n/2).
/// For odd n every choice of omitted vertex is tried. Requires n <= 16.
MinDiscResult min_disc_at_half(const Graph& g);

/// Splits x into two index sets whose sizes differ by at most 1 and whose
/// value sums differ by at most 1, when such a split exists (subset-sum DP
/// over (size, sum) states). Returns nullopt when no such split exists.
std::optional<std::pair<std::vector<int>, std::vector<int>>> balanced_halving(
    const std::vector<int>& x);

}  // namespace twins
