#include <doctest.h>

#include "support/corpus.hpp"
#include "twins/forest.hpp"
#include "twins/generators.hpp"
#include "twins/graph.hpp"
#include "twins/oracle.hpp"

using namespace twins;
using test_support::all_free_trees;

namespace {

Graph path(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph star_k13() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}}); }

}  // namespace

TEST_CASE("free tree enumeration matches the known counts") {
  const int counts[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  for (int n = 1; n <= 10; ++n) CHECK(all_free_trees(n).size() == static_cast<size_t>(counts[n - 1]));
}

TEST_CASE("xy_move on the pendant toy: twins before and after") {
  // x = 0 with two pendant leaves, y = 1 with one, vertex 5 isolated
  Graph toy(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}});
  VertexSet a{0}, b{1};
  MoveRecord rec = xy_move(toy, a, b, 0, 1);
  CHECK(rec.to_x_side == VertexSet{4});  // L'(y)
  CHECK(rec.to_y_side == VertexSet{2});  // L'(x)
  CHECK(a == VertexSet{0, 4});
  CHECK(b == VertexSet{1, 2});
  CHECK(check_twins(toy, a, b).valid);

  // |L(y)| = 0: the move is a no-op
  VertexSet a2{0}, b2{2};
  MoveRecord noop = xy_move(toy, a2, b2, 0, 2);
  CHECK(noop.to_x_side.empty());
  CHECK(noop.to_y_side.empty());
  CHECK(a2 == VertexSet{0});

  // overlapping L sets are a contract violation
  Graph shared(3, {{0, 2}, {1, 2}});
  VertexSet sa{0}, sb{1};
  CHECK_THROWS_AS(xy_move(shared, sa, sb, 0, 1), std::invalid_argument);
}

TEST_CASE("good_twins on the named examples") {
  auto [star, star_trace] = good_twins(star_k13());
  CHECK(star.a == VertexSet{0});
  CHECK(star.b == VertexSet{1});
  CHECK(star.exceptional == VertexSet{0});
  CHECK(is_good(star_k13(), star).empty());

  auto [p4, p4_trace] = good_twins(path(4));
  CHECK(p4.a.size() == 2);
  CHECK(p4.b.size() == 2);
  CHECK(p4.exceptional.empty());  // fully colored: perfect twins
  CHECK(is_good(path(4), p4).empty());

  auto [edgeless, el_trace] = good_twins(Graph(5, {}));
  CHECK(edgeless.a.empty());
  CHECK(edgeless.b.empty());
  CHECK(el_trace.levels.empty());

  Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK_THROWS_AS(good_twins(c4), std::invalid_argument);
}

TEST_CASE("is_good names the violated condition") {
  auto bad_degree = is_good(path(4), GoodTwinColoring{{0}, {3}, {}});
  REQUIRE(!bad_degree.empty());
  CHECK(bad_degree.front().find("degree above 1") != std::string::npos);

  auto bad_count = is_good(star_k13(), GoodTwinColoring{{0, 1}, {2, 3}, {}});
  bool found = false;
  for (const auto& v : bad_count)
    if (v.find("edge-count-mismatch") != std::string::npos) found = true;
  CHECK(found);

  auto ok = is_good(path(4), GoodTwinColoring{{0, 2}, {1, 3}, {}});
  CHECK(ok.empty());
}

TEST_CASE("good_twins output is good on the exhaustive small-tree corpus") {
  for (int n = 1; n <= 9; ++n) {
    for (const Graph& t : all_free_trees(n)) {
      auto [coloring, trace] = good_twins(t);
      CHECK(is_good(t, coloring).empty());
      // every edge keeps at least one colored endpoint
      std::vector<char> colored(t.vertex_count(), 0);
      for (Vertex v : coloring.a) colored[v] = 1;
      for (Vertex v : coloring.b) colored[v] = 1;
      for (auto [u, v] : t.edges()) CHECK((colored[u] || colored[v]));
    }
  }
}

TEST_CASE("good_twins output is good on seeded random forests") {
  for (uint64_t seed = 0; seed < 120; ++seed) {
    Graph f = gen_forest(2 + static_cast<int>(seed % 15), seed);
    auto [coloring, trace] = good_twins(f);
    CHECK(is_good(f, coloring).empty());
  }
}

TEST_CASE("forest_twins on the named examples") {
  Graph three_edges(6, {{0, 1}, {2, 3}, {4, 5}});
  auto [perfect, t1] = forest_twins(three_edges);
  CHECK(perfect.size() == 3);
  CHECK(perfect.disc == 0);
  CHECK(t1.isolated_edges.size() == 3);
  CHECK(perfect.edges_a == 0);

  Graph k14(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  auto [star_pair, t2] = forest_twins(k14);
  CHECK(star_pair.size() == 2);  // ceil(5/2) - 1
  CHECK(star_pair.disc == 0);
  CHECK(check_twins(k14, star_pair.a, star_pair.b).valid);

  auto [p6_pair, t3] = forest_twins(path(6));
  CHECK(p6_pair.size() >= 2);
  CHECK(check_twins(path(6), p6_pair.a, p6_pair.b).valid);
  CHECK(exact_t(path(6)).t == 3);

  Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  CHECK_THROWS_AS(forest_twins(c5), std::invalid_argument);
}

TEST_CASE("forest_twins clears ceil(n/2) - 1 on the exhaustive tree corpus") {
  for (int n = 1; n <= 9; ++n) {
    for (const Graph& t : all_free_trees(n)) {
      auto [pair, trace] = forest_twins(t);
      CHECK(check_twins(t, pair.a, pair.b).valid);
      CHECK(pair.size() >= (n + 1) / 2 - 1);
      CHECK(trace.dropped.size() <= 2);
    }
  }
}

TEST_CASE("forest_twins on seeded random forests up to n = 16") {
  for (uint64_t seed = 0; seed < 150; ++seed) {
    int n = 1 + static_cast<int>(seed % 16);
    Graph f = gen_forest(n, seed * 31 + 1);
    auto [pair, trace] = forest_twins(f);
    CHECK(check_twins(f, pair.a, pair.b).valid);
    CHECK(pair.size() >= (n + 1) / 2 - 1);
    CHECK(trace.dropped.size() <= 2);
    // group invariant: a nonempty s3 outnumbers s2
    if (!trace.s3.empty()) CHECK(trace.s3.size() > trace.s2.size());
  }
}

TEST_CASE("star tightness: even stars reach exactly n/2 - 1") {
  for (int n : {4, 6, 8, 10, 12}) {
    Graph star = gen_star(n);
    auto [pair, trace] = forest_twins(star);
    CHECK(pair.size() == n / 2 - 1);
    if (n <= 12) CHECK(exact_t(star).t == n / 2 - 1);
  }
}
