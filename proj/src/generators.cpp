#include "twins/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "twins/exact_criteria.hpp"

namespace twins {

const char* to_string(Family f) {
  switch (f) {
    case Family::gnp: return "gnp";
    case Family::star: return "star";
    case Family::forest: return "forest";
    case Family::odd_cliques: return "odd_cliques";
    case Family::criterion: return "criterion";
  }
  return "?";
}

Family family_from_string(const std::string& name) {
  if (name == "gnp") return Family::gnp;
  if (name == "star") return Family::star;
  if (name == "forest") return Family::forest;
  if (name == "odd_cliques") return Family::odd_cliques;
  if (name == "criterion") return Family::criterion;
  throw std::invalid_argument("unknown family: " + name);
}

Graph gen_gnp(int n, double p, uint64_t seed) {
  if (n < 0) throw std::invalid_argument("gen_gnp: negative n");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("gen_gnp: p outside [0, 1]");
  SplitMix64 rng(seed);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.next_unit() < p) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph gen_star(int n) {
  if (n < 1) throw std::invalid_argument("gen_star: n must be >= 1");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph(n, std::move(edges));
}

Graph gen_odd_cliques(int m, long long vertex_cap) {
  if (m < 1) throw std::invalid_argument("gen_odd_cliques: m must be >= 1");
  std::vector<long long> sizes;
  long long square_sum = 0, total = 0;
  for (int j = 0; j < m; ++j) {
    long long a = j == 0 ? 1 : 2 * square_sum + 1;
    if (a % 2 == 0) ++a;  // smallest odd strictly above 2 * square_sum
    sizes.push_back(a);
    square_sum += a * a;
    total += a;
    if (total > vertex_cap)
      throw std::invalid_argument("gen_odd_cliques: vertex count " + std::to_string(total) +
                                  " exceeds cap " + std::to_string(vertex_cap));
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  int base = 0;
  for (long long a : sizes) {
    for (int i = 0; i < a; ++i)
      for (int j = i + 1; j < a; ++j) edges.emplace_back(base + i, base + j);
    base += static_cast<int>(a);
  }
  return Graph(base, std::move(edges));
}

Graph gen_forest(int n, uint64_t seed) {
  if (n < 0) throw std::invalid_argument("gen_forest: negative n");
  SplitMix64 rng(seed);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 1; i < n; ++i) {
    if (rng.next_unit() < 0.2) continue;  // start a new component
    int parent = static_cast<int>(rng.next_below(static_cast<uint64_t>(i)));
    edges.emplace_back(parent, i);
  }
  return Graph(n, std::move(edges));
}

namespace {

// Threshold-style graph with n-1 distinct degrees (vertex i dominates all
// earlier vertices when i is odd), perturbed by a few seeded edge toggles
// and relabeled by a seeded permutation. Candidate for criterion 3.
Graph distinct_degree_candidate(int n, SplitMix64& rng) {
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (int i = 1; i < n; ++i)
    if (i % 2 == 1)
      for (int j = 0; j < i; ++j) adj[i][j] = adj[j][i] = 1;
  int toggles = static_cast<int>(rng.next_below(4));
  for (int t = 0; t < toggles && n >= 2; ++t) {
    int u = static_cast<int>(rng.next_below(n));
    int v = static_cast<int>(rng.next_below(n));
    if (u == v) continue;
    adj[u][v] ^= 1;
    adj[v][u] ^= 1;
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i)
    std::swap(perm[i], perm[rng.next_below(static_cast<uint64_t>(i + 1))]);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (adj[u][v]) edges.emplace_back(perm[u], perm[v]);
  return Graph(n, std::move(edges));
}

Graph criterion_candidate(int criterion, int n, uint64_t seed) {
  SplitMix64 rng(seed);
  switch (criterion) {
    case 1:
    case 4: {
      double p = 0.3 + 0.4 * rng.next_unit();
      return gen_gnp(n, p, rng.next());
    }
    case 2: {
      // Two disjoint copies of one graph: every degree class doubles.
      double p = 0.3 + 0.4 * rng.next_unit();
      Graph half = gen_gnp(n / 2, p, rng.next());
      std::vector<std::pair<Vertex, Vertex>> edges;
      for (auto [u, v] : half.edges()) {
        edges.emplace_back(u, v);
        edges.emplace_back(u + n / 2, v + n / 2);
      }
      return Graph(n, std::move(edges));
    }
    case 3:
      return distinct_degree_candidate(n, rng);
    default:
      throw std::invalid_argument("criterion must be in 1..4");
  }
}

}  // namespace

Graph gen_criterion_graph(int criterion, int n, uint64_t seed) {
  if (criterion < 1 || criterion > 4)
    throw std::invalid_argument("criterion must be in 1..4");
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("gen_criterion_graph: n must be even and >= 2");
  if (criterion == 3 && n < 90)
    throw std::invalid_argument("gen_criterion_graph: criterion 3 requires n >= 90");
  constexpr int kRetryCap = 1000;
  for (int attempt = 0; attempt < kRetryCap; ++attempt) {
    Graph g = criterion_candidate(criterion, n, seed + static_cast<uint64_t>(attempt));
    if (detect_criteria(g).satisfied.count(criterion)) return g;
  }
  throw std::runtime_error("gen_criterion_graph: retry budget exhausted for criterion " +
                           std::to_string(criterion));
}

Graph generate(const GenSpec& spec) {
  switch (spec.family) {
    case Family::gnp: return gen_gnp(spec.n, spec.p, spec.seed);
    case Family::star: return gen_star(spec.n);
    case Family::forest: return gen_forest(spec.n, spec.seed);
    case Family::odd_cliques: return gen_odd_cliques(spec.m);
    case Family::criterion: return gen_criterion_graph(spec.criterion, spec.n, spec.seed);
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace twins
