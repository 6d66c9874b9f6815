#pragma once

// Shared test corpus helpers: exhaustive unlabeled free trees (via canonical
// forms over all increasing attachment sequences) and grid graphs.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "twins/graph.hpp"

namespace twins::test_support {

inline Graph grid(int rows, int cols) {
  std::vector<std::pair<Vertex, Vertex>> e;
  auto id = [&](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) e.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) e.emplace_back(id(r, c), id(r + 1, c));
    }
  return Graph(rows * cols, e);
}

namespace detail {

inline std::string ahu(const std::vector<std::vector<int>>& adj, int v, int parent) {
  std::vector<std::string> kids;
  for (int w : adj[v])
    if (w != parent) kids.push_back(ahu(adj, w, v));
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  out += ")";
  return out;
}

inline std::string canonical_tree_form(const std::vector<std::vector<int>>& adj) {
  int n = static_cast<int>(adj.size());
  if (n == 1) return "()";
  // centroid(s) by repeated leaf stripping
  std::vector<int> deg(n);
  std::vector<int> frontier;
  int remaining = n;
  for (int v = 0; v < n; ++v) {
    deg[v] = static_cast<int>(adj[v].size());
    if (deg[v] <= 1) frontier.push_back(v);
  }
  std::vector<char> removed(n, 0);
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : frontier) {
      removed[v] = 1;
      --remaining;
      for (int w : adj[v])
        if (!removed[w] && --deg[w] == 1) next.push_back(w);
    }
    frontier = std::move(next);
  }
  std::vector<int> centers;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) centers.push_back(v);
  if (centers.size() == 1) return ahu(adj, centers[0], -1);
  std::string s1 = ahu(adj, centers[0], centers[1]);
  std::string s2 = ahu(adj, centers[1], centers[0]);
  if (s2 < s1) std::swap(s1, s2);
  return "[" + s1 + s2 + "]";
}

}  // namespace detail

/// All free trees on n vertices, one labeled representative per isomorphism
/// class. Enumerates every attachment sequence parent[i] < i and dedupes by
/// canonical form. Known counts: 1, 1, 1, 2, 3, 6, 11, 23, 47, 106 for
/// n = 1..10.
inline std::vector<Graph> all_free_trees(int n) {
  std::vector<Graph> out;
  if (n < 1) return out;
  if (n == 1) {
    out.emplace_back(1, std::vector<std::pair<Vertex, Vertex>>{});
    return out;
  }
  std::set<std::string> seen;
  std::vector<int> parent(n, 0);  // parent[i] for i >= 1
  while (true) {
    std::vector<std::vector<int>> adj(n);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 1; i < n; ++i) {
      adj[i].push_back(parent[i]);
      adj[parent[i]].push_back(i);
      edges.emplace_back(parent[i], i);
    }
    if (seen.insert(detail::canonical_tree_form(adj)).second) out.emplace_back(n, edges);
    int pos = 1;
    while (pos < n && parent[pos] == pos - 1) parent[pos++] = 0;
    if (pos == n) break;
    ++parent[pos];
  }
  return out;
}

}  // namespace twins::test_support
