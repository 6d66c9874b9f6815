#include "twins/forest.hpp"

#include <algorithm>
#include <numeric>

namespace twins {

bool is_acyclic(const Graph& g) {
  std::vector<int> root(g.vertex_count());
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  for (auto [u, v] : g.edges()) {
    int ru = find(u), rv = find(v);
    if (ru == rv) return false;
    root[ru] = rv;
  }
  return true;
}

namespace {

constexpr char kNone = 0, kA = 'A', kB = 'B';

// Working state of the recursion: a partial coloring of the alive subgraph.
struct State {
  const Graph& g;
  std::vector<char> alive;
  std::vector<char> color;

  State(const Graph& graph, std::vector<char> alive_mask)
      : g(graph), alive(std::move(alive_mask)), color(graph.vertex_count(), kNone) {}

  int alive_degree(Vertex v) const {
    int d = 0;
    for (Vertex w : g.neighbors(v)) d += alive[w];
    return d;
  }
  bool host_leaf(Vertex v) const { return alive_degree(v) == 1; }

  VertexSet uncolored_neighbors(Vertex v) const {  // L(v)
    VertexSet out;
    for (Vertex w : g.neighbors(v))
      if (alive[w] && color[w] == kNone) out.push_back(w);
    return out;
  }
  int colored_degree(Vertex v) const {
    int d = 0;
    for (Vertex w : g.neighbors(v)) d += alive[w] && color[w] != kNone;
    return d;
  }
  int colored_neighbors_on(Vertex v, char side) const {
    int d = 0;
    for (Vertex w : g.neighbors(v)) d += alive[w] && color[w] == side;
    return d;
  }
  VertexSet side(char c) const {
    VertexSet out;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (alive[v] && color[v] == c) out.push_back(v);
    return out;
  }
  long long side_edges(char c) const {
    long long count = 0;
    for (auto [u, v] : g.edges()) count += color[u] == c && color[v] == c;
    return count;
  }
  bool twins_now() const {
    return side(kA).size() == side(kB).size() && side_edges(kA) == side_edges(kB);
  }
  VertexSet owners() const {  // colored vertices with uncolored neighbors
    VertexSet out;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (alive[v] && color[v] != kNone && !uncolored_neighbors(v).empty()) out.push_back(v);
    return out;
  }
};

void apply_colors(State& st, LevelTrace& lt, std::vector<std::pair<Vertex, char>> uncolor,
                  std::vector<std::pair<Vertex, char>> color) {
  TraceStep step;
  step.kind = TraceStep::Kind::color_group;
  step.uncolor = uncolor;
  step.color = color;
  for (auto [v, side] : uncolor) {
    if (!st.alive[v] || st.color[v] != side)
      throw std::logic_error("good_twins: uncoloring a vertex that is not on that side");
    st.color[v] = kNone;
  }
  for (auto [v, side] : color) {
    if (!st.alive[v] || st.color[v] != kNone)
      throw std::logic_error("good_twins: coloring a vertex that is not uncolored");
    st.color[v] = side;
  }
  if (!st.twins_now())
    throw std::logic_error("good_twins: coloring step broke the twin property");
  lt.steps.push_back(std::move(step));
}

// Checked (x,y)-move inside the recursion: x on side A, y on side B.
void apply_move(State& st, LevelTrace& lt, Vertex x, Vertex y) {
  if (st.color[x] != kA || st.color[y] != kB)
    throw std::logic_error("good_twins: move endpoints are not on opposite sides");
  VertexSet lx = st.uncolored_neighbors(x);
  VertexSet ly = st.uncolored_neighbors(y);
  VertexSet shared;
  std::set_intersection(lx.begin(), lx.end(), ly.begin(), ly.end(), std::back_inserter(shared));
  if (!shared.empty()) throw std::logic_error("good_twins: move with overlapping L sets");
  for (const auto* ls : {&lx, &ly})
    for (Vertex v : *ls)
      if (!st.host_leaf(v))
        throw std::logic_error("good_twins: move would transfer a non-leaf");
  size_t take = std::min(lx.size(), ly.size());
  size_t owners_before = st.owners().size();
  TraceStep step;
  step.kind = TraceStep::Kind::move;
  step.move.x = x;
  step.move.y = y;
  step.move.to_y_side.assign(lx.begin(), lx.begin() + take);  // L'(x)
  step.move.to_x_side.assign(ly.begin(), ly.begin() + take);  // L'(y)
  for (Vertex v : step.move.to_y_side) st.color[v] = kB;
  for (Vertex v : step.move.to_x_side) st.color[v] = kA;
  if (!st.twins_now()) throw std::logic_error("good_twins: move broke the twin property");
  if (take > 0 && !(st.uncolored_neighbors(x).empty() || st.uncolored_neighbors(y).empty()))
    throw std::logic_error("good_twins: move saturated neither endpoint");
  if (st.owners().size() > owners_before)
    throw std::logic_error("good_twins: move increased the owner count");
  lt.steps.push_back(std::move(step));
}

void apply_swap(State& st, LevelTrace& lt) {
  for (int v = 0; v < st.g.vertex_count(); ++v) {
    if (st.color[v] == kA)
      st.color[v] = kB;
    else if (st.color[v] == kB)
      st.color[v] = kA;
  }
  TraceStep step;
  step.kind = TraceStep::Kind::swap_sides;
  lt.steps.push_back(std::move(step));
}

Vertex lowest(const VertexSet& s, const char* what) {
  if (s.empty()) throw std::logic_error(std::string("good_twins: expected nonempty ") + what);
  return s.front();
}

std::vector<std::string> good_violations(const State& st) {
  GoodTwinColoring c;
  c.a = st.side(kA);
  c.b = st.side(kB);
  return is_good(st.g, c, st.alive);
}

void apply_case(State& st, Vertex u, LevelTrace& lt) {
  VertexSet own = st.owners();
  VertexSet prior;  // S of the smaller graph: owners other than u
  for (Vertex v : own)
    if (v != u) prior.push_back(v);
  char cu = st.color[u];

  if (prior.empty()) {
    if (cu == kNone) {
      if (st.colored_degree(u) != 0)
        throw std::logic_error("good_twins case 1: uncolored u has a colored neighbor");
      Vertex x = lowest(st.uncolored_neighbors(u), "L(u) in case 1");
      lt.case_label = "1-uncolored";
      apply_colors(st, lt, {}, {{u, kA}, {x, kB}});
    } else {
      lt.case_label = "1-colored";
    }
    return;
  }

  if (prior.size() == 1) {
    Vertex w = prior[0];
    if (cu == kB) {
      lt.case_label = "2.1";
      apply_move(st, lt, w, u);
      return;
    }
    if (cu == kNone) {
      if (st.colored_degree(u) > 1 ||
          (st.colored_degree(u) == 1 && !st.g.has_edge(u, w)))
        throw std::logic_error("good_twins case 2.2: u has an unexpected colored neighbor");
      lt.case_label = "2.2";
      Vertex x = lowest(st.uncolored_neighbors(u), "L(u) in case 2.2");
      apply_colors(st, lt, {}, {{u, kB}, {x, kA}});
      apply_move(st, lt, w, u);
      return;
    }
    // Case 2.3: u in A. u is a leaf of the colored graph by construction.
    bool w_nonleaf = st.colored_degree(w) >= 2;
    size_t lw = st.uncolored_neighbors(w).size();
    size_t lu = st.uncolored_neighbors(u).size();
    if (w_nonleaf && lw > lu) {
      lt.case_label = "2.3-noop";
      return;
    }
    Vertex ww = w, uu = u;
    if (!w_nonleaf && lw > lu) {
      std::swap(ww, uu);  // both are colored-graph leaves; roles are symmetric
      lt.role_swap = true;
    }
    lt.case_label = "2.3";
    Vertex x = lowest(st.uncolored_neighbors(ww), "L(w) in case 2.3");
    Vertex y = lowest(st.uncolored_neighbors(uu), "L(u) in case 2.3");
    apply_colors(st, lt, {{uu, kA}}, {{uu, kB}, {x, kA}, {y, kA}});
    apply_move(st, lt, ww, uu);
    return;
  }

  if (prior.size() != 2) throw std::logic_error("good_twins: more than two prior owners");
  Vertex v = -1, w = -1;
  for (Vertex s : prior)
    (st.colored_degree(s) == 1 ? v : w) = s;
  if (v < 0 || w < 0)
    throw std::logic_error("good_twins case 3: S is not one leaf plus one non-leaf");
  size_t lv = st.uncolored_neighbors(v).size();
  size_t lw = st.uncolored_neighbors(w).size();
  size_t lu = st.uncolored_neighbors(u).size();

  if (cu == kB) {
    if (lu >= lv) {
      lt.case_label = "3.1.a";
      apply_move(st, lt, v, u);
      apply_move(st, lt, w, u);
    } else {
      lt.case_label = "3.1.b";
      apply_colors(st, lt, {{u, kB}, {v, kA}}, {{u, kA}, {v, kB}});
      apply_move(st, lt, u, v);
      apply_move(st, lt, w, v);
    }
    return;
  }

  if (cu == kNone) {
    bool adj_v = st.g.has_edge(u, v);
    bool adj_w = st.g.has_edge(u, w);
    if (adj_v && adj_w)
      throw std::logic_error("good_twins case 3: u adjacent to both members of S");
    if (adj_v) {
      if (lv <= lu) {
        lt.case_label = "3.3.a";
        Vertex x = lowest(st.uncolored_neighbors(u), "L(u) in case 3.3.a");
        apply_colors(st, lt, {}, {{u, kB}, {x, kA}});
        apply_move(st, lt, v, u);
        apply_move(st, lt, w, u);
      } else {
        lt.case_label = "3.3.b";
        Vertex x = lowest(st.uncolored_neighbors(u), "L(u) in case 3.3.b");
        apply_colors(st, lt, {{v, kA}}, {{v, kB}, {u, kA}, {x, kA}});
        apply_move(st, lt, u, v);
        apply_move(st, lt, w, v);
      }
      return;
    }
    // Case 3.2: u is a child of w or was isolated. When u was isolated the
    // coloring of u removes nothing from L(w), so the branch threshold
    // shifts by one; otherwise w ends up unsaturated with two A-neighbors.
    Vertex x = lowest(st.uncolored_neighbors(u), "L(u) in case 3.2");
    if (lw + (adj_w ? 0 : 1) > lu + lv) {
      lt.case_label = "3.2.b";
      apply_colors(st, lt, {}, {{u, kB}, {x, kA}});
      apply_move(st, lt, w, u);
      return;
    }
    apply_colors(st, lt, {}, {{u, kB}, {x, kA}});
    if (lw < lu) {
      lt.case_label = "3.2.a<";
      apply_move(st, lt, w, u);
      apply_move(st, lt, v, u);
    } else {
      lt.case_label = "3.2.a>=";
      // When L(u) held only x, the second compensating vertex comes from L(v).
      VertexSet lu_rest = st.uncolored_neighbors(u);
      Vertex y = lu_rest.empty() ? lowest(st.uncolored_neighbors(v), "L(v) in case 3.2.a")
                                 : lu_rest.front();
      Vertex z = lowest(st.uncolored_neighbors(w), "L(w) in case 3.2.a");
      apply_colors(st, lt, {{v, kA}}, {{v, kB}, {y, kA}, {z, kA}});
      apply_move(st, lt, w, u);
      apply_move(st, lt, w, v);
    }
    return;
  }

  // Case 3.4: u in A. Both u and v are colored-graph leaves.
  Vertex uu = u, vv = v;
  if (lu < lv) {
    std::swap(uu, vv);
    lt.role_swap = true;
  }
  lt.case_label = "3.4";
  Vertex x = lowest(st.uncolored_neighbors(uu), "L(u) in case 3.4");
  Vertex y = lowest(st.uncolored_neighbors(vv), "L(v) in case 3.4");
  apply_colors(st, lt, {{uu, kA}}, {{uu, kB}, {x, kA}, {y, kA}});
  apply_move(st, lt, vv, uu);
  apply_move(st, lt, w, uu);
}

std::pair<GoodTwinColoring, GoodTwinsTrace> good_twins_masked(const Graph& f,
                                                              std::vector<char> alive_init) {
  int n = f.vertex_count();
  struct Frame {
    Vertex u;
    VertexSet leaves;
  };
  std::vector<Frame> frames;
  {
    std::vector<char> alive = alive_init;
    auto deg = [&](Vertex v) {
      int d = 0;
      for (Vertex w : f.neighbors(v)) d += alive[w];
      return d;
    };
    long long edges_left = 0;
    for (auto [u, v] : f.edges()) edges_left += alive[u] && alive[v];
    while (edges_left > 0) {
      Vertex u = -1;
      for (int cand = 0; cand < n && u < 0; ++cand) {
        if (!alive[cand]) continue;
        int leaves = 0, nonleaves = 0;
        for (Vertex w : f.neighbors(cand)) {
          if (!alive[w]) continue;
          (deg(w) == 1 ? leaves : nonleaves)++;
        }
        if (leaves >= 1 && nonleaves <= 1) u = cand;
      }
      if (u < 0) throw std::logic_error("good_twins: no peel candidate in a forest with edges");
      Frame fr;
      fr.u = u;
      for (Vertex w : f.neighbors(u))
        if (alive[w] && deg(w) == 1) fr.leaves.push_back(w);
      for (Vertex w : fr.leaves) alive[w] = 0;
      edges_left -= static_cast<long long>(fr.leaves.size());
      frames.push_back(std::move(fr));
    }
    State st(f, std::move(alive));
    GoodTwinsTrace trace;
    for (auto it = frames.rbegin(); it != frames.rend(); ++it) {
      LevelTrace lt;
      lt.u = it->u;
      lt.removed_leaves = it->leaves;
      for (Vertex w : it->leaves) st.alive[w] = 1;
      apply_case(st, it->u, lt);
      VertexSet own = st.owners();
      bool any_a = false, any_b = false;
      for (Vertex v : own) (st.color[v] == kA ? any_a : any_b) = true;
      if (any_a && any_b)
        throw std::logic_error("good_twins: owners on both sides after case " + lt.case_label);
      if (any_b) apply_swap(st, lt);
      auto bad = good_violations(st);
      if (!bad.empty())
        throw std::logic_error("good_twins: case " + lt.case_label +
                               " postcondition failed: " + bad.front());
      trace.levels.push_back(std::move(lt));
    }
    GoodTwinColoring result;
    result.a = st.side(kA);
    result.b = st.side(kB);
    result.exceptional = st.owners();
    return {std::move(result), std::move(trace)};
  }
}

}  // namespace

std::vector<std::string> is_good(const Graph& f, const GoodTwinColoring& coloring,
                                 const std::vector<char>& alive) {
  std::vector<std::string> out;
  int n = f.vertex_count();
  std::vector<char> live = alive.empty() ? std::vector<char>(n, 1) : alive;
  std::vector<char> color(n, kNone);
  for (Vertex v : coloring.a) {
    if (v < 0 || v >= n || !live[v]) return {"side A contains a vertex outside the host"};
    color[v] = kA;
  }
  for (Vertex v : coloring.b) {
    if (v < 0 || v >= n || !live[v]) return {"side B contains a vertex outside the host"};
    if (color[v] != kNone) return {"sides overlap at vertex " + std::to_string(v)};
    color[v] = kB;
  }
  auto alive_degree = [&](Vertex v) {
    int d = 0;
    for (Vertex w : f.neighbors(v)) d += live[w];
    return d;
  };
  auto colored_degree = [&](Vertex v) {
    int d = 0;
    for (Vertex w : f.neighbors(v)) d += live[w] && color[w] != kNone;
    return d;
  };
  auto uncolored_count = [&](Vertex v) {
    int d = 0;
    for (Vertex w : f.neighbors(v)) d += live[w] && color[w] == kNone;
    return d;
  };

  for (int v = 0; v < n; ++v)
    if (live[v] && color[v] == kNone && alive_degree(v) > 1)
      out.push_back("uncolored vertex " + std::to_string(v) + " has degree above 1");
  for (int v = 0; v < n; ++v)
    if (live[v] && color[v] != kNone && colored_degree(v) == 0)
      out.push_back("colored vertex " + std::to_string(v) + " is isolated in the colored graph");

  VertexSet owners;
  for (int v = 0; v < n; ++v)
    if (live[v] && color[v] != kNone && uncolored_count(v) > 0) owners.push_back(v);
  if (owners.size() > 2)
    out.push_back("more than two colored vertices have uncolored neighbors");
  for (Vertex v : owners)
    if (color[v] != kA)
      out.push_back("exceptional vertex " + std::to_string(v) + " is not on side A");
  int leaf_count = 0, nonleaf_count = 0;
  Vertex leaf = -1, nonleaf = -1;
  for (Vertex v : owners) {
    if (colored_degree(v) == 1) {
      ++leaf_count;
      leaf = v;
    } else if (colored_degree(v) >= 2) {
      ++nonleaf_count;
      nonleaf = v;
    }
  }
  if (leaf_count > 1) out.push_back("S contains two leaves of the colored graph");
  if (nonleaf_count > 1) out.push_back("S contains two non-leaves of the colored graph");
  if (nonleaf >= 0) {
    int a_nbrs = 0;
    for (Vertex w : f.neighbors(nonleaf)) a_nbrs += live[w] && color[w] == kA;
    if (a_nbrs > 1)
      out.push_back("non-leaf " + std::to_string(nonleaf) + " in S has two neighbors in A");
  }
  if (leaf >= 0 && nonleaf >= 0 && uncolored_count(leaf) >= uncolored_count(nonleaf))
    out.push_back("leaf member of S has at least as many uncolored neighbors as the non-leaf");

  VertexSet a, b;
  for (int v = 0; v < n; ++v) {
    if (color[v] == kA) a.push_back(v);
    if (color[v] == kB) b.push_back(v);
  }
  TwinCheck tc = check_twins(f, a, b);
  for (TwinViolation v : tc.violations)
    out.push_back(std::string("twin check failed: ") + to_string(v));
  return out;
}

MoveRecord xy_move(const Graph& host, VertexSet& a, VertexSet& b, Vertex x, Vertex y) {
  a = canonical(std::move(a));
  b = canonical(std::move(b));
  if (!std::binary_search(a.begin(), a.end(), x))
    throw std::invalid_argument("xy_move: x is not on the first side");
  if (!std::binary_search(b.begin(), b.end(), y))
    throw std::invalid_argument("xy_move: y is not on the second side");
  auto uncolored = [&](Vertex v) {
    VertexSet out;
    for (Vertex w : host.neighbors(v))
      if (!std::binary_search(a.begin(), a.end(), w) &&
          !std::binary_search(b.begin(), b.end(), w))
        out.push_back(w);
    return out;
  };
  VertexSet lx = uncolored(x), ly = uncolored(y);
  VertexSet shared;
  std::set_intersection(lx.begin(), lx.end(), ly.begin(), ly.end(), std::back_inserter(shared));
  if (!shared.empty()) throw std::invalid_argument("xy_move: L(x) and L(y) intersect");
  size_t take = std::min(lx.size(), ly.size());
  MoveRecord rec;
  rec.x = x;
  rec.y = y;
  rec.to_y_side.assign(lx.begin(), lx.begin() + take);
  rec.to_x_side.assign(ly.begin(), ly.begin() + take);
  a.insert(a.end(), rec.to_x_side.begin(), rec.to_x_side.end());
  b.insert(b.end(), rec.to_y_side.begin(), rec.to_y_side.end());
  a = canonical(std::move(a));
  b = canonical(std::move(b));
  return rec;
}

std::pair<GoodTwinColoring, GoodTwinsTrace> good_twins(const Graph& f) {
  if (!is_acyclic(f)) throw std::invalid_argument("good_twins: input contains a cycle");
  return good_twins_masked(f, std::vector<char>(f.vertex_count(), 1));
}

namespace {

long long count_side(const std::vector<char>& color, char side) {
  long long c = 0;
  for (char v : color) c += v == side;
  return c;
}

// Places pool vertices (each safe for either side) on the smaller side
// first; trims the last placement if the sides would end up unequal.
void distribute_free(std::vector<char>& color, VertexSet pool, VertexSet& dropped) {
  std::sort(pool.begin(), pool.end());
  long long sa = count_side(color, kA), sb = count_side(color, kB);
  for (Vertex v : pool) {
    if (sa <= sb) {
      color[v] = kA;
      ++sa;
    } else {
      color[v] = kB;
      ++sb;
    }
  }
  if (sa != sb && !pool.empty()) {
    Vertex last = pool.back();
    dropped.push_back(last);
    color[last] = kNone;
  }
}

}  // namespace

std::pair<TwinPair, AssemblyTrace> forest_twins(const Graph& f) {
  if (!is_acyclic(f)) throw std::invalid_argument("forest_twins: input contains a cycle");
  int n = f.vertex_count();
  AssemblyTrace tr;

  std::vector<char> alive(n, 1);
  for (auto [u, v] : f.edges())
    if (f.degree(u) == 1 && f.degree(v) == 1) {
      tr.isolated_edges.emplace_back(u, v);
      alive[u] = alive[v] = 0;
    }

  auto [coloring, gtrace] = good_twins_masked(f, alive);
  tr.good_trace = std::move(gtrace);

  State st(f, alive);
  for (Vertex v : coloring.a) st.color[v] = kA;
  for (Vertex v : coloring.b) st.color[v] = kB;

  Vertex leaf_c = -1, nonleaf_c = -1;
  for (Vertex v : coloring.exceptional)
    (st.colored_degree(v) == 1 ? leaf_c : nonleaf_c) = v;
  for (int v = 0; v < n; ++v)
    if (alive[v] && st.color[v] == kNone && st.alive_degree(v) == 0) tr.s1.push_back(v);
  if (leaf_c >= 0) tr.s2 = st.uncolored_neighbors(leaf_c);
  if (nonleaf_c >= 0) tr.s3 = st.uncolored_neighbors(nonleaf_c);
  {
    long long uncolored_alive = 0;
    for (int v = 0; v < n; ++v) uncolored_alive += alive[v] && st.color[v] == kNone;
    if (uncolored_alive !=
        static_cast<long long>(tr.s1.size() + tr.s2.size() + tr.s3.size()))
      throw std::logic_error("forest_twins: uncolored vertices escape the s1/s2/s3 groups");
  }

  auto require_twins = [&](const char* where) {
    if (!st.twins_now())
      throw std::logic_error(std::string("forest_twins: sides are not twins after ") + where);
  };
  // Mid-composite states may be size-unbalanced; only the edge counts must
  // already agree there.
  auto require_equal_edges = [&](const char* where) {
    if (st.side_edges(kA) != st.side_edges(kB))
      throw std::logic_error(std::string("forest_twins: edge counts diverged at ") + where);
  };

  if (tr.s2.empty() && tr.s3.empty()) {
    tr.case_taken = "case1";
    distribute_free(st.color, tr.s1, tr.dropped);
  } else if (tr.s2.empty() || tr.s3.empty()) {
    Vertex c = tr.s2.empty() ? nonleaf_c : leaf_c;
    VertexSet children = tr.s2.empty() ? tr.s3 : tr.s2;
    VertexSet pool = tr.s1;
    if (st.colored_neighbors_on(c, kA) == 0) {
      tr.case_taken = "case2-no-a-neighbor";
      st.color[c] = kNone;
      tr.dropped.push_back(c);
      pool.insert(pool.end(), children.begin(), children.end());
      require_equal_edges("uncoloring the center");
      distribute_free(st.color, pool, tr.dropped);
    } else {
      // The center keeps exactly one neighbor in A; rebalance via a host
      // leaf of B, preferring one not hanging off the center itself.
      Vertex host_leaf_b = -1, center_leaf_b = -1;
      for (int v = 0; v < n; ++v) {
        if (!alive[v] || st.color[v] != kB || st.alive_degree(v) != 1) continue;
        Vertex nbr = -1;
        for (Vertex w : f.neighbors(v))
          if (alive[w]) nbr = w;
        if (nbr == c) {
          if (center_leaf_b < 0) center_leaf_b = v;
        } else if (host_leaf_b < 0) {
          host_leaf_b = v;
        }
      }
      size_t p1 = tr.s1.size(), pu = children.size();
      if (host_leaf_b >= 0) {
        tr.case_taken = "case2-recolor-b-leaf";
        st.color[c] = kNone;
        tr.dropped.push_back(c);
        st.color[host_leaf_b] = kA;
        pool.insert(pool.end(), children.begin(), children.end());
        require_equal_edges("recoloring the B leaf");
        distribute_free(st.color, pool, tr.dropped);
      } else if (pu <= p1 + 2 && center_leaf_b >= 0) {
        // The center keeps its color, so its children may only join B.
        tr.case_taken = "case2-keep-center";
        st.color[center_leaf_b] = kNone;
        tr.dropped.push_back(center_leaf_b);
        require_equal_edges("uncoloring the center-adjacent B leaf");
        size_t p = p1 + pu;
        size_t beta = std::min(p1 + 1, (p + 1) / 2);  // B placements; A gets beta - 1
        VertexSet s1_sorted = tr.s1;
        std::sort(s1_sorted.begin(), s1_sorted.end());
        VertexSet kids_sorted = children;
        std::sort(kids_sorted.begin(), kids_sorted.end());
        size_t b_from_kids = std::min(beta, pu);
        size_t b_from_s1 = beta - b_from_kids;
        for (size_t i = 0; i < b_from_kids; ++i) st.color[kids_sorted[i]] = kB;
        for (size_t i = 0; i < b_from_s1; ++i) st.color[s1_sorted[i]] = kB;
        for (size_t i = 0; i + 1 < beta; ++i) st.color[s1_sorted[b_from_s1 + i]] = kA;
        for (size_t i = b_from_kids; i < pu; ++i) tr.dropped.push_back(kids_sorted[i]);
        for (size_t i = b_from_s1 + beta - 1; i < p1; ++i) tr.dropped.push_back(s1_sorted[i]);
      } else {
        // Remaining repairs need c uncolored; pick them by availability.
        st.color[c] = kNone;
        tr.dropped.push_back(c);
        pool.insert(pool.end(), children.begin(), children.end());
        Vertex recolorable = -1, blob_leaf = -1;
        for (int v = 0; v < n; ++v) {
          if (!alive[v] || st.color[v] != kB) continue;
          if (st.colored_neighbors_on(v, kB) != 1) continue;
          if (blob_leaf < 0) blob_leaf = v;
          if (st.colored_neighbors_on(v, kA) == 0 && recolorable < 0) recolorable = v;
        }
        if (recolorable >= 0) {
          tr.case_taken = "case2-recolor-blob-leaf";
          st.color[recolorable] = kA;
          require_equal_edges("recoloring the B blob leaf");
          distribute_free(st.color, pool, tr.dropped);
        } else if (blob_leaf >= 0) {
          tr.case_taken = "case2-drop-blob-leaf";
          st.color[blob_leaf] = kNone;
          tr.dropped.push_back(blob_leaf);
          require_twins("dropping the B blob leaf");
          distribute_free(st.color, pool, tr.dropped);
        } else {
          throw std::logic_error("forest_twins: case 2 has no rebalancing leaf in B");
        }
      }
    }
  } else {
    // Case 3: both groups present.
    VertexSet pool = tr.s1;
    bool w_has_a = st.colored_neighbors_on(nonleaf_c, kA) > 0;
    st.color[nonleaf_c] = kNone;
    tr.dropped.push_back(nonleaf_c);
    VertexSet s3_rest = tr.s3;
    if (w_has_a) {
      tr.case_taken = "case3-a-neighbor";
      Vertex x = tr.s2.front();
      st.color[x] = kA;
      require_twins("uncoloring w and promoting an s2 vertex");
      size_t m2 = tr.s2.size() - 1;
      for (size_t i = 1; i < tr.s2.size(); ++i) st.color[tr.s2[i]] = kB;
      for (size_t i = 0; i < m2; ++i) st.color[s3_rest[i]] = kA;
      s3_rest.erase(s3_rest.begin(), s3_rest.begin() + m2);
    } else {
      tr.case_taken = "case3-no-a-neighbor";
      Vertex y = tr.s3.front();
      st.color[y] = kA;
      require_twins("uncoloring w and promoting an s3 vertex");
      size_t m2 = tr.s2.size();
      for (Vertex v : tr.s2) st.color[v] = kB;
      s3_rest.erase(s3_rest.begin());  // y
      for (size_t i = 0; i < m2; ++i) st.color[s3_rest[i]] = kA;
      s3_rest.erase(s3_rest.begin(), s3_rest.begin() + m2);
    }
    require_twins("balancing the s2/s3 groups");
    pool.insert(pool.end(), s3_rest.begin(), s3_rest.end());
    distribute_free(st.color, pool, tr.dropped);
  }
  require_twins("the assembly case");

  VertexSet a = st.side(kA), b = st.side(kB);
  for (auto [u, v] : tr.isolated_edges) {
    a.push_back(u);
    b.push_back(v);
  }
  TwinPair pair = make_twin_pair(f, std::move(a), std::move(b));
  if (!check_twins(f, pair.a, pair.b).valid)
    throw std::logic_error("forest_twins: final pair fails the twin check");
  if (tr.dropped.size() > 2)
    throw std::logic_error("forest_twins: dropped more than two vertices");
  if (pair.size() < (n + 1) / 2 - 1)
    throw std::logic_error("forest_twins: size bound ceil(n/2) - 1 violated");
  return {std::move(pair), std::move(tr)};
}

}  // namespace twins
