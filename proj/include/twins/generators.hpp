#pragma once

// Deterministic seeded graph generators for the test families.

#include <cstdint>

#include "twins/graph.hpp"

namespace twins {

// Fixed portable 64-bit generator (SplitMix64). All seeded generators in this
// library draw from this stream so that identical arguments reproduce
// identical graphs everywhere.
struct SplitMix64 {
  uint64_t state;
  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1), 53 mantissa bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform value in [0, bound). bound must be positive.
  uint64_t next_below(uint64_t bound) { return next() % bound; }
};

enum class Family { gnp, star, forest, odd_cliques, criterion };

struct GenSpec {
  Family family = Family::gnp;
  int n = 0;
  double p = 0.0;
  int m = 0;          // clique count for odd_cliques
  int criterion = 0;  // 1..4 for Family::criterion
  uint64_t seed = 0;
};

const char* to_string(Family f);
Family family_from_string(const std::string& name);

/// Erdos-Renyi G(n, p): each vertex pair (u, v), u < v in row order, is kept
/// independently with probability p.
Graph gen_gnp(int n, double p, uint64_t seed);

/// Star: vertex 0 adjacent to 1..n-1. Requires n >= 1.
Graph gen_star(int n);

/// Disjoint cliques of odd orders a_1 = 1, a_j = smallest odd integer
/// exceeding 2 * sum_{i<j} a_i^2. Throws when the total vertex count would
/// exceed vertex_cap.
Graph gen_odd_cliques(int m, long long vertex_cap = 1'000'000);

/// Random forest: vertex i >= 1 starts a new component with probability 0.2,
/// otherwise attaches to a uniformly random earlier vertex.
Graph gen_forest(int n, uint64_t seed);

/// Graph guaranteed to satisfy the numbered perfect-twin criterion (1..4).
/// Retries with incremented seeds (cap 1000) until the detector accepts.
/// Requires n even; criterion 3 additionally requires n >= 90.
Graph gen_criterion_graph(int criterion, int n, uint64_t seed);

Graph generate(const GenSpec& spec);

}  // namespace twins
