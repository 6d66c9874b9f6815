#pragma once

// Four sufficient criteria for perfect twins (t(G) = n/2) and a constructor
// for each. All constructors return a full partition with equal induced
// edge counts, re-verified by recount before returning.

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "twins/graph.hpp"

namespace twins {

struct CriterionReport {
  std::set<int> satisfied;  // subset of {1, 2, 3, 4}
  std::string reason;       // set when the report is vacuous (odd n)

  // evidence
  int min_degree = 0;
  int max_degree = 0;
  std::vector<int> missing_degrees;                  // gaps in [delta, Delta]
  std::vector<std::pair<int, int>> class_sizes;      // degree -> |V_degree|
  int odd_class_count = 0;
  int consecutive_pair_count = 0;                    // size of the pair matching
  std::vector<std::pair<Vertex, Vertex>> consecutive_pairs;  // (v, v'), d(v')=d(v)+1
};

/// Evaluates all four predicates on the degree profile. Criterion 4 counts
/// vertex-disjoint consecutive pairs via a left-to-right class sweep with
/// carry, which is a maximum matching for the path-of-classes structure.
CriterionReport detect_criteria(const Graph& g);

/// 1) degree set is a consecutive interval: repair the alternating start by
/// swapping a lighter-side vertex of degree d with a heavier-side vertex of
/// degree d+1; every swap moves the edge gap by exactly one.
TwinPair perfect_twins_consecutive(const Graph& g);

/// 2) every degree class even: split each class half/half.
TwinPair perfect_twins_even_classes(const Graph& g);

/// 3) n >= 90 and more than n/2 odd classes: split classes evenly, then use
/// balanced_halving on the one-per-odd-class leftover; parity forces
/// equality of the degree sums.
TwinPair perfect_twins_odd_classes(const Graph& g);

/// 4) at least Delta - delta disjoint consecutive pairs: alternate the rest
/// by degree, then spend pairs to cancel the degree-sum gap.
TwinPair perfect_twins_consecutive_pairs(const Graph& g);

struct PerfectTwinsResult {
  bool found = false;
  TwinPair pair;
  std::string method;  // "criterion-2", ..., or "opportunistic"
  CriterionReport report;
};

/// Tries the criteria constructors in preference order 2, 1, 4, 3, then
/// falls back to local search and accepts its result if it happens to reach
/// a perfect partition ("opportunistic").
PerfectTwinsResult find_perfect_twins(const Graph& g);

}  // namespace twins
