#pragma once

// Core graph types: immutable simple undirected graph, induced/cross edge
// counting, degree profiles, and the twin-pair validity checker.

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace twins {

using Vertex = int;
using VertexSet = std::vector<Vertex>;  // canonically sorted, duplicate-free

/// Sort + dedupe a vertex list into canonical form.
VertexSet canonical(VertexSet s);

class Graph {
 public:
  Graph() = default;

  /// Builds a simple graph on vertices 0..n-1. Rejects self-loops,
  /// duplicate edges and out-of-range endpoints.
  Graph(int n, std::vector<std::pair<Vertex, Vertex>> edge_list);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int degree(Vertex v) const;
  const std::vector<Vertex>& neighbors(Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const;

  /// Edges as (u, v) pairs with u < v, lexicographically sorted.
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

  /// Same vertex set, with every edge incident to `s` removed.
  Graph minus(const VertexSet& s) const;

  /// Same vertex set, keeping only edges with both endpoints in `s`.
  Graph restricted_to(const VertexSet& s) const;

 private:
  int n_ = 0;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

/// Induced subgraph on `s`, relabeled to 0..|s|-1.
/// Second element maps new ids back to the original ids (sorted `s`).
std::pair<Graph, VertexSet> induced_subgraph(const Graph& g, const VertexSet& s);

struct TwinPair {
  VertexSet a, b;
  long long edges_a = 0;
  long long edges_b = 0;
  long long disc = 0;  // |edges_a - edges_b|
  int size() const { return static_cast<int>(a.size()); }
};

/// Canonicalizes both sides and fills in the cached counts from `g`.
TwinPair make_twin_pair(const Graph& g, VertexSet a, VertexSet b);

enum class TwinViolation { overlap, size_mismatch, edge_count_mismatch, out_of_range };
const char* to_string(TwinViolation v);

struct TwinCheck {
  bool valid = false;
  std::vector<TwinViolation> violations;
};

struct DegreeProfile {
  std::map<int, VertexSet> classes;  // degree -> sorted vertices of that degree
  int min_degree = 0;                // delta; 0 when the graph is empty
  int max_degree = 0;                // Delta
};

struct parse_error : std::runtime_error {
  int line;
  parse_error(int line_no, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

/// Edge-list format: '#' comment lines and blank lines are skipped;
/// first data line is "n m", followed by exactly m lines "u v".
Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);

/// Writes the edge-list format accepted by parse_graph.
std::string format_graph(const Graph& g);

/// Number of edges with both endpoints in s. Throws on out-of-range vertices.
long long induced_edge_count(const Graph& g, const VertexSet& s);

/// Number of edges between s and t. Throws if s and t intersect.
long long cross_edge_count(const Graph& g, const VertexSet& s, const VertexSet& t);

/// Sum of degrees of s taken in the stated host graph g.
long long degree_sum(const Graph& g, const VertexSet& s);

/// Twin predicate: a, b disjoint, equal size, equal induced edge counts.
/// Every failed clause is reported; nothing throws.
TwinCheck check_twins(const Graph& g, const VertexSet& a, const VertexSet& b);

DegreeProfile degree_profile(const Graph& g);

}  // namespace twins
