#pragma once

// Good twins in forests: the leaf-removal recursion with (x,y)-moves and
// full case analysis, plus the assembly that turns good twins into twins of
// size at least ceil(n/2) - 1 in any forest.

#include <string>
#include <utility>
#include <vector>

#include "twins/graph.hpp"

namespace twins {

// Partial 2-coloring of a forest. Vertices outside both sides are
// "uncolored"; `exceptional` caches the colored vertices that still have
// uncolored neighbors (the set S of the good-twins conditions).
struct GoodTwinColoring {
  VertexSet a;            // red side
  VertexSet b;            // blue side
  VertexSet exceptional;  // S, subset of a, at most two vertices
};

struct MoveRecord {
  Vertex x = -1, y = -1;
  VertexSet to_x_side;  // L'(y): former uncolored neighbors of y joining x's side
  VertexSet to_y_side;  // L'(x)
};

// One twin-preserving trace step: a group of (re)colorings, a move, or a
// side swap. Replays must find (a, b) twins after applying each step.
struct TraceStep {
  enum class Kind { color_group, move, swap_sides };
  Kind kind = Kind::color_group;
  std::vector<std::pair<Vertex, char>> uncolor;  // (vertex, side it leaves)
  std::vector<std::pair<Vertex, char>> color;    // (vertex, side it joins)
  MoveRecord move;
};

struct LevelTrace {
  Vertex u = -1;
  VertexSet removed_leaves;  // re-added (uncolored) at the start of this level
  std::string case_label;
  bool role_swap = false;  // wlog swap inside case 2.3 / 3.4
  std::vector<TraceStep> steps;
};

struct GoodTwinsTrace {
  std::vector<LevelTrace> levels;  // in application order (deepest level first)
};

/// The six good-twins conditions plus the twin predicate, each reported as a
/// named violation; empty means the coloring is good. `alive` restricts the
/// host to a subgraph (empty = all vertices alive).
std::vector<std::string> is_good(const Graph& f, const GoodTwinColoring& coloring,
                                 const std::vector<char>& alive = {});

/// The (x,y)-move: transfers min(|L(x)|, |L(y)|) uncolored neighbors of each
/// of x, y to the opposite side (lowest indices first). Requires
/// L(x) and L(y) disjoint. Mutates a/b and returns the record.
MoveRecord xy_move(const Graph& host, VertexSet& a, VertexSet& b, Vertex x, Vertex y);

/// Good twins of an acyclic graph via the leaf-removal recursion
/// (implemented iteratively). Throws on cyclic input; any case postcondition
/// failure raises an internal-invariant error naming the case.
std::pair<GoodTwinColoring, GoodTwinsTrace> good_twins(const Graph& f);

struct AssemblyTrace {
  std::vector<std::pair<Vertex, Vertex>> isolated_edges;
  VertexSet s1;  // isolated vertices of the pruned host
  VertexSet s2;  // uncolored leaves at the leaf member of S
  VertexSet s3;  // uncolored leaves at the non-leaf member of S
  std::string case_taken;
  VertexSet dropped;  // at most 2 vertices left uncolored
  GoodTwinsTrace good_trace;
};

/// Twins of size >= ceil(n/2) - 1 in any forest: removes isolated-edge
/// components, runs good_twins, distributes the uncolored groups per case,
/// then returns one endpoint of each isolated edge to each side.
std::pair<TwinPair, AssemblyTrace> forest_twins(const Graph& f);

/// True when g has no cycle.
bool is_acyclic(const Graph& g);

}  // namespace twins
