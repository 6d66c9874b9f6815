#include <doctest.h>

#include "twins/generators.hpp"
#include "twins/graph.hpp"

using namespace twins;

namespace {

Graph path(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph complete(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph cycle(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

}  // namespace

TEST_CASE("parse_graph reads the edge-list format") {
  Graph g = parse_graph("4 3\n0 1\n1 2\n2 3");
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(2, 3));
  CHECK(!g.has_edge(0, 2));
}

TEST_CASE("parse_graph skips comments and blank lines") {
  Graph g = parse_graph("# a path\n\n4 3\n0 1\n# middle\n1 2\n2 3\n\n");
  CHECK(g.edge_count() == 3);
}

TEST_CASE("parse_graph rejects malformed input with line numbers") {
  CHECK_THROWS_WITH_AS(parse_graph("2 1\n0 0"), doctest::Contains("self-loop"), parse_error);
  CHECK_THROWS_WITH_AS(parse_graph("3 1\n0 5"), doctest::Contains("out of range"), parse_error);
  CHECK_THROWS_WITH_AS(parse_graph("3 2\n0 1\n1 0"), doctest::Contains("duplicate"), parse_error);
  CHECK_THROWS_WITH_AS(parse_graph("3 2\n0 1"), doctest::Contains("edge count mismatch"),
                       parse_error);
  CHECK_THROWS_WITH_AS(parse_graph("3 1\n0 1\n1 2"), doctest::Contains("edge count mismatch"),
                       parse_error);
  CHECK_THROWS_AS(parse_graph(""), parse_error);
  try {
    parse_graph("# c\n2 1\n0 0");
    CHECK(false);
  } catch (const parse_error& e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("format_graph round-trips through parse_graph") {
  Graph g = gen_gnp(12, 0.4, 9);
  Graph h = parse_graph(format_graph(g));
  CHECK(h.vertex_count() == g.vertex_count());
  CHECK(h.edges() == g.edges());
}

TEST_CASE("induced_edge_count on the named examples") {
  Graph p4 = path(4);
  CHECK(induced_edge_count(p4, {0, 1}) == 1);
  CHECK(induced_edge_count(p4, {0, 2}) == 0);
  CHECK(induced_edge_count(complete(4), {0, 1, 2}) == 3);
  CHECK(induced_edge_count(p4, {0, 1, 2, 3}) == 3);  // e(V) = e
  CHECK_THROWS_AS(induced_edge_count(p4, {0, 9}), std::invalid_argument);
}

TEST_CASE("cross_edge_count on the named examples") {
  Graph p4 = path(4);
  CHECK(cross_edge_count(p4, {0, 1}, {2, 3}) == 1);
  CHECK(cross_edge_count(p4, {0, 1}, {}) == 0);
  CHECK(cross_edge_count(complete(4), {0}, {1, 2, 3}) == 3);
  CHECK_THROWS_AS(cross_edge_count(p4, {0, 1}, {1, 2}), std::invalid_argument);
}

TEST_CASE("check_twins reports each failed clause") {
  Graph p4 = path(4);
  CHECK(check_twins(p4, {0, 1}, {2, 3}).valid);
  CHECK(check_twins(p4, {2, 3}, {0, 1}).valid);  // symmetry

  TwinCheck overlap = check_twins(p4, {0, 1}, {1, 2});
  CHECK(!overlap.valid);
  REQUIRE(overlap.violations.size() == 1);
  CHECK(overlap.violations[0] == TwinViolation::overlap);

  Graph star = gen_star(6);
  TwinCheck mism = check_twins(star, {0, 1, 2}, {3, 4, 5});
  CHECK(!mism.valid);
  REQUIRE(mism.violations.size() == 1);
  CHECK(mism.violations[0] == TwinViolation::edge_count_mismatch);
  CHECK(induced_edge_count(star, {0, 1, 2}) == 2);
  CHECK(induced_edge_count(star, {3, 4, 5}) == 0);

  TwinCheck size = check_twins(p4, {0}, {1, 2});
  CHECK(!size.valid);
  CHECK(size.violations[0] == TwinViolation::size_mismatch);

  TwinCheck range = check_twins(p4, {0, 7}, {1, 2});
  CHECK(!range.valid);
  CHECK(range.violations[0] == TwinViolation::out_of_range);
}

TEST_CASE("degree_profile on the named examples") {
  DegreeProfile star = degree_profile(gen_star(6));
  CHECK(star.min_degree == 1);
  CHECK(star.max_degree == 5);
  CHECK(star.classes.at(1) == VertexSet{1, 2, 3, 4, 5});
  CHECK(star.classes.at(5) == VertexSet{0});

  DegreeProfile c6 = degree_profile(cycle(6));
  CHECK(c6.min_degree == 2);
  CHECK(c6.max_degree == 2);
  CHECK(c6.classes.at(2).size() == 6);

  DegreeProfile empty3 = degree_profile(Graph(3, {}));
  CHECK(empty3.classes.at(0) == VertexSet{0, 1, 2});
  CHECK(empty3.min_degree == 0);
  CHECK(empty3.max_degree == 0);
}

TEST_CASE("handshake identity d(s) = 2 e(s) + e(s, rest) by enumeration") {
  for (uint64_t seed : {1, 2, 3}) {
    Graph g = gen_gnp(10, 0.4, seed);
    for (uint32_t mask = 0; mask < (1u << 10); ++mask) {
      VertexSet s, rest;
      for (int v = 0; v < 10; ++v) ((mask >> v) & 1 ? s : rest).push_back(v);
      CHECK(degree_sum(g, s) == 2 * induced_edge_count(g, s) + cross_edge_count(g, s, rest));
    }
  }
}

TEST_CASE("graph constructor validates simple-graph invariants") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  Graph g(3, {{2, 0}});
  CHECK(g.has_edge(0, 2));
  long long degsum = 0;
  for (int v = 0; v < 3; ++v) degsum += g.degree(v);
  CHECK(degsum == 2 * g.edge_count());
}

TEST_CASE("minus and restricted_to keep vertex ids") {
  Graph p5 = path(5);
  Graph m = p5.minus({2});
  CHECK(m.vertex_count() == 5);
  CHECK(m.edge_count() == 2);
  CHECK(m.has_edge(0, 1));
  CHECK(!m.has_edge(1, 2));
  Graph r = p5.restricted_to({0, 1, 2});
  CHECK(r.edge_count() == 2);
  CHECK(r.has_edge(1, 2));
  auto [sub, back] = induced_subgraph(p5, {1, 2, 4});
  CHECK(sub.vertex_count() == 3);
  CHECK(sub.edge_count() == 1);
  CHECK(back == VertexSet{1, 2, 4});
}
