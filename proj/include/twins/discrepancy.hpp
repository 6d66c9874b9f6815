#pragma once

// Constructive low-discrepancy partitions: the equal-degree-sum block
// extractor, the alternating block combiner, and both almost-twins branches
// (extraction and half-size local search).

#include <optional>
#include <utility>
#include <vector>

#include "twins/graph.hpp"

namespace twins {

struct BlockPair {
  VertexSet a, b;      // disjoint, equal size
  long long eps = 0;   // |d(host, a) - d(host, b)| in the stated host
};

enum class AlmostTwinsBranch { extraction, local_search };
const char* to_string(AlmostTwinsBranch b);

struct AlmostTwinsTrace {
  int k = 0;                       // block-size bound, ceil(lg2 n)
  std::vector<BlockPair> blocks;   // eps taken in g minus leftover, sorted desc
  VertexSet leftover;              // vertices outside every block
  AlmostTwinsBranch branch = AlmostTwinsBranch::extraction;
  double bound = 0.0;              // branch-specific theoretical bound
  long long achieved_disc = 0;
};

/// Searches for two disjoint equal-size index sets with equal value sums.
/// Enumerates k-subsets of the first min(|x|, 2k) indices in colexicographic
/// order, stops at the first subset-sum collision and strips the shared
/// indices. The returned pair is ordered lexicographically.
/// Guaranteed to succeed when |x| >= 2k, k >= lg2 n and n >= 16.
std::optional<std::pair<std::vector<int>, std::vector<int>>> equal_sum_pair(
    const std::vector<int>& x, int k);

/// Merges blocks into one partition: blocks sorted by eps descending, the
/// larger-degree side of odd-ranked blocks goes to `a`, of even-ranked blocks
/// to `b`. When the blocks partition the host's vertex set this bounds
/// |e(a) - e(b)| by max eps. Throws if blocks overlap.
std::pair<VertexSet, VertexSet> combine_blocks(const Graph& host,
                                               std::vector<BlockPair> blocks);

/// Block extraction branch: repeatedly extracts equal-degree-sum blocks with
/// k = ceil(lg2 n), then keeps extracting from the tail (full window) while
/// any equal-sum pair remains, recomputes eps against g minus the leftover,
/// and combines. For n >= 16: disc <= 2 k^2 and size >= (n - 2 lg2 n) / 2.
std::pair<TwinPair, AlmostTwinsTrace> almost_twins_extraction(const Graph& g);

/// Half-size local search branch: on g (or g minus vertex 0 when n is odd),
/// starts from the sorted-alternating assignment and applies best
/// improving swaps until none remains. disc <= floor((Delta - delta + 1)/2).
std::pair<TwinPair, AlmostTwinsTrace> almost_twins_local_search(const Graph& g);

struct AlmostTwinsBest {
  TwinPair pair;                 // result of the branch with smaller disc
  AlmostTwinsBranch chosen = AlmostTwinsBranch::extraction;
  AlmostTwinsTrace extraction;
  AlmostTwinsTrace local_search;
};

/// Runs both branches and returns whichever achieves the smaller
/// discrepancy (ties go to local search, which has the larger size).
AlmostTwinsBest almost_twins_best(const Graph& g);

/// Shared start point: vertices sorted by degree descending (index
/// tie-break) assigned alternately to the two sides. Requires even count.
std::pair<VertexSet, VertexSet> alternating_partition(const Graph& g,
                                                      const VertexSet& verts);

int ceil_lg2(int n);

}  // namespace twins
