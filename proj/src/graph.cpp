#include "twins/graph.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace twins {

VertexSet canonical(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

Graph::Graph(int n, std::vector<std::pair<Vertex, Vertex>> edge_list) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (auto& [u, v] : edge_list) {
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " +
                                  std::to_string(v));
    if (u > v) std::swap(u, v);
  }
  std::sort(edge_list.begin(), edge_list.end());
  for (size_t i = 1; i < edge_list.size(); ++i)
    if (edge_list[i] == edge_list[i - 1])
      throw std::invalid_argument("duplicate edge " + std::to_string(edge_list[i].first) + " " +
                                  std::to_string(edge_list[i].second));
  edges_ = std::move(edge_list);
  adj_.assign(n_, {});
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

int Graph::degree(Vertex v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range: " + std::to_string(v));
  return static_cast<int>(adj_[v].size());
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range: " + std::to_string(v));
  return adj_[v];
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw std::invalid_argument("vertex out of range");
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph Graph::minus(const VertexSet& s) const {
  std::vector<char> drop(n_, 0);
  for (Vertex v : s) {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range in minus()");
    drop[v] = 1;
  }
  std::vector<std::pair<Vertex, Vertex>> kept;
  for (auto [u, v] : edges_)
    if (!drop[u] && !drop[v]) kept.emplace_back(u, v);
  return Graph(n_, std::move(kept));
}

Graph Graph::restricted_to(const VertexSet& s) const {
  std::vector<char> in(n_, 0);
  for (Vertex v : s) {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range in restricted_to()");
    in[v] = 1;
  }
  std::vector<std::pair<Vertex, Vertex>> kept;
  for (auto [u, v] : edges_)
    if (in[u] && in[v]) kept.emplace_back(u, v);
  return Graph(n_, std::move(kept));
}

std::pair<Graph, VertexSet> induced_subgraph(const Graph& g, const VertexSet& s) {
  VertexSet verts = canonical(s);
  std::vector<int> newid(g.vertex_count(), -1);
  for (size_t i = 0; i < verts.size(); ++i) {
    if (verts[i] < 0 || verts[i] >= g.vertex_count())
      throw std::invalid_argument("vertex out of range in induced_subgraph()");
    newid[verts[i]] = static_cast<int>(i);
  }
  std::vector<std::pair<Vertex, Vertex>> kept;
  for (auto [u, v] : g.edges())
    if (newid[u] >= 0 && newid[v] >= 0) kept.emplace_back(newid[u], newid[v]);
  return {Graph(static_cast<int>(verts.size()), std::move(kept)), verts};
}

TwinPair make_twin_pair(const Graph& g, VertexSet a, VertexSet b) {
  TwinPair p;
  p.a = canonical(std::move(a));
  p.b = canonical(std::move(b));
  p.edges_a = induced_edge_count(g, p.a);
  p.edges_b = induced_edge_count(g, p.b);
  p.disc = p.edges_a >= p.edges_b ? p.edges_a - p.edges_b : p.edges_b - p.edges_a;
  return p;
}

const char* to_string(TwinViolation v) {
  switch (v) {
    case TwinViolation::overlap: return "overlap";
    case TwinViolation::size_mismatch: return "size-mismatch";
    case TwinViolation::edge_count_mismatch: return "edge-count-mismatch";
    case TwinViolation::out_of_range: return "out-of-range";
  }
  return "?";
}

namespace {

// Pulls the next non-comment, non-blank line; returns false at EOF.
bool next_data_line(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t i = line.find_first_not_of(" \t");
    if (i == std::string::npos) continue;
    if (line[i] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  if (!next_data_line(in, line, line_no)) throw parse_error(line_no, "missing header line \"n m\"");
  long long n = 0, m = 0;
  {
    std::istringstream ss(line);
    std::string extra;
    if (!(ss >> n >> m) || (ss >> extra))
      throw parse_error(line_no, "malformed header, expected \"n m\"");
    if (n < 0 || m < 0) throw parse_error(line_no, "negative counts in header");
  }
  std::vector<std::pair<Vertex, Vertex>> edge_list;
  edge_list.reserve(static_cast<size_t>(m));
  std::vector<std::vector<Vertex>> seen(static_cast<size_t>(n));
  for (long long i = 0; i < m; ++i) {
    if (!next_data_line(in, line, line_no))
      throw parse_error(line_no, "edge count mismatch: expected " + std::to_string(m) +
                                     " edges, got " + std::to_string(i));
    std::istringstream ss(line);
    long long u = 0, v = 0;
    std::string extra;
    if (!(ss >> u >> v) || (ss >> extra))
      throw parse_error(line_no, "malformed edge line, expected \"u v\"");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw parse_error(line_no, "endpoint out of range: " + std::to_string(u) + " " +
                                     std::to_string(v));
    if (u == v) throw parse_error(line_no, "self-loop at vertex " + std::to_string(u));
    Vertex a = static_cast<Vertex>(std::min(u, v));
    Vertex b = static_cast<Vertex>(std::max(u, v));
    auto& row = seen[static_cast<size_t>(a)];
    if (std::find(row.begin(), row.end(), b) != row.end())
      throw parse_error(line_no, "duplicate edge " + std::to_string(a) + " " + std::to_string(b));
    row.push_back(b);
    edge_list.emplace_back(a, b);
  }
  if (next_data_line(in, line, line_no))
    throw parse_error(line_no, "edge count mismatch: extra data after " + std::to_string(m) +
                                   " edges");
  return Graph(static_cast<int>(n), std::move(edge_list));
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

namespace {

std::vector<char> membership(const Graph& g, const VertexSet& s, const char* who) {
  std::vector<char> in(g.vertex_count(), 0);
  for (Vertex v : s) {
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument(std::string(who) + ": vertex out of range: " + std::to_string(v));
    in[v] = 1;
  }
  return in;
}

}  // namespace

long long induced_edge_count(const Graph& g, const VertexSet& s) {
  auto in = membership(g, s, "induced_edge_count");
  long long count = 0;
  for (auto [u, v] : g.edges())
    if (in[u] && in[v]) ++count;
  return count;
}

long long cross_edge_count(const Graph& g, const VertexSet& s, const VertexSet& t) {
  auto in_s = membership(g, s, "cross_edge_count");
  auto in_t = membership(g, t, "cross_edge_count");
  for (int v = 0; v < g.vertex_count(); ++v)
    if (in_s[v] && in_t[v])
      throw std::invalid_argument("cross_edge_count: sets share vertex " + std::to_string(v));
  long long count = 0;
  for (auto [u, v] : g.edges())
    if ((in_s[u] && in_t[v]) || (in_s[v] && in_t[u])) ++count;
  return count;
}

long long degree_sum(const Graph& g, const VertexSet& s) {
  long long sum = 0;
  for (Vertex v : s) sum += g.degree(v);
  return sum;
}

TwinCheck check_twins(const Graph& g, const VertexSet& a, const VertexSet& b) {
  TwinCheck res;
  VertexSet ca = canonical(a), cb = canonical(b);
  bool in_range = true;
  for (const auto* side : {&ca, &cb})
    for (Vertex v : *side)
      if (v < 0 || v >= g.vertex_count()) in_range = false;
  if (!in_range) res.violations.push_back(TwinViolation::out_of_range);
  VertexSet shared;
  std::set_intersection(ca.begin(), ca.end(), cb.begin(), cb.end(), std::back_inserter(shared));
  if (!shared.empty()) res.violations.push_back(TwinViolation::overlap);
  if (ca.size() != cb.size()) res.violations.push_back(TwinViolation::size_mismatch);
  if (in_range) {
    if (induced_edge_count(g, ca) != induced_edge_count(g, cb))
      res.violations.push_back(TwinViolation::edge_count_mismatch);
  }
  res.valid = res.violations.empty();
  return res;
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  for (int v = 0; v < g.vertex_count(); ++v) p.classes[g.degree(v)].push_back(v);
  if (!p.classes.empty()) {
    p.min_degree = p.classes.begin()->first;
    p.max_degree = p.classes.rbegin()->first;
  }
  return p;
}

}  // namespace twins
