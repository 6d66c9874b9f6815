#pragma once

// Sparse-graph pipeline: strip high-degree vertices, greedily reserve a
// matching plus independent vertices, find almost-twins in the untouched
// region and balance them from the reserve.

#include <string>
#include <utility>
#include <vector>

#include "twins/graph.hpp"

namespace twins {

struct SparseTrace {
  double f = 0.0;            // sqrt(e) * lg2(n) / n
  double x_threshold = 0.0;  // 2e / (n f)
  int l = 0;                 // 2 * ceil(lg2 n)^2
  VertexSet high_set;        // vertices of degree >= x_threshold
  std::vector<std::pair<Vertex, Vertex>> matching;
  VertexSet singles;
  VertexSet untouched;       // S: no edges into the reserve
  long long gamma = 0;       // discrepancy balanced away
  double bound = 0.0;        // n/2 * (1 - 20 f)
  std::string status;        // which candidate was returned
  bool reserve_exhausted = false;  // gamma exceeded the reserve
  bool not_twins = false;    // set only by the flagged local-search fallback
};

/// Requires g.e >= 4 and g.n >= 16. Always answers: the balanced pipeline
/// result, the halves of an independent remainder, or the halves of a greedy
/// maximal independent set, whichever valid zero-discrepancy pair is
/// largest. Falls back to local search (flagged not_twins when its
/// discrepancy is nonzero) only if none of those exists.
std::pair<TwinPair, SparseTrace> sparse_twins(const Graph& g);

}  // namespace twins
