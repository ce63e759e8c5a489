#include <algorithm>
#include <random>

#include "copnum/gp_family.hpp"
#include "copnum/graph.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace copnum;
using namespace testing_support;

TEST_CASE("edge lists build simple symmetric graphs") {
  const Graph tri = make_graph(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(tri.vertex_count() == 3);
  CHECK(tri.edge_count() == 3);
  CHECK(tri.is_regular(2));

  const Graph dup = make_graph(3, {{0, 1}, {1, 0}, {0, 1}, {1, 2}});
  CHECK(dup.edge_count() == 2);
  CHECK(dup.degree(0) == 1);

  for (Vertex v = 0; v < tri.vertex_count(); ++v)
    for (Vertex w : tri.neighbors(v)) CHECK(tri.adjacent(w, v));

  const std::vector<Edge> loop{{0, 0}};
  CHECK_THROWS_AS(Graph::from_edge_list(2, loop), GraphError);
  const std::vector<Edge> far{{0, 2}};
  CHECK_THROWS_AS(Graph::from_edge_list(2, far), GraphError);
}

TEST_CASE("the Petersen graph is cubic with girth 5") {
  const Graph p = petersen_by_hand();
  CHECK(p.is_regular(3));
  CHECK(p.edge_count() == 15);
  CHECK(girth(p) == 5);
}

TEST_CASE("girth") {
  CHECK(girth(cycle_graph(3)) == 3);
  CHECK(girth(build_gp(GpParams::make(5, 2))) == 5);
  CHECK(girth(build_gp(GpParams::make(26, 10))) == 8);
  CHECK_FALSE(girth(path_graph(4)).has_value());
  CHECK_FALSE(girth(Graph::from_edge_list(1, std::vector<Edge>{})).has_value());
  CHECK(girth(cycle_graph(11)) == 11);
}

TEST_CASE("girth agrees with the edge-deletion oracle on random graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + trial % 14;
    const Graph g = random_connected_graph(rng, n, 0.05 + 0.02 * (trial % 10));
    CHECK(girth(g) == girth_by_edge_deletion(g));
    bool shared = false;
    for (auto [u, v] : g.edges())
      for (Vertex w : g.neighbors(u)) shared |= w != v && g.adjacent(w, v);
    CHECK((girth(g) == 3) == shared);
  }
}

TEST_CASE("bfs distances") {
  CHECK(bfs_distances(cycle_graph(3), 0) == std::vector<int>{0, 1, 1});
  const GpParams p = GpParams::make(5, 2);
  const Graph g = build_gp(p);
  CHECK(bfs_distances(g, outer_vertex(p, 0))[inner_vertex(p, 3)] == 2);
  const Graph two = Graph::from_edge_list(2, std::vector<Edge>{});
  CHECK(bfs_distances(two, 0) == std::vector<int>{0, kUnreachable});
  CHECK_THROWS_AS(bfs_distances(two, 2), GraphError);
}

TEST_CASE("distance-3 spheres in cubic girth-8 graphs have 12 vertices") {
  for (auto [n, k] : {std::pair{24, 5}, {26, 10}, {30, 8}, {40, 17}}) {
    const Graph g = build_gp(GpParams::make(n, k));
    REQUIRE(girth(g) == 8);
    for (Vertex c = 0; c < g.vertex_count(); ++c) {
      const auto d = bfs_distances(g, c);
      CHECK(std::count(d.begin(), d.end(), 3) == 12);
    }
  }
}

TEST_CASE("pitfalls") {
  CHECK(has_pitfall(cycle_graph(3)));
  CHECK(has_pitfall(path_graph(2)));
  CHECK_FALSE(has_pitfall(cycle_graph(5)));
  CHECK_FALSE(has_pitfall(petersen_by_hand()));
  for (int n = 5; n <= 20; ++n)
    for (int k = 1; 2 * k < n; ++k) CHECK_FALSE(has_pitfall(build_gp(GpParams::make(n, k))));
  // A pendant vertex is always dominated by its neighbor.
  CHECK(has_pitfall(make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 1}, {2, 5}})));
}

TEST_CASE("dismantlability") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) CHECK(dismantlable(random_connected_graph(rng, 1 + t % 12, 0.0)));
  CHECK_FALSE(dismantlable(cycle_graph(4)));
  CHECK(dismantlable(complete_graph(4)));
  CHECK_FALSE(dismantlable(build_gp(GpParams::make(5, 2))));
  CHECK(dismantlable(Graph::from_edge_list(1, std::vector<Edge>{})));
  // Every dismantlable graph on two or more vertices starts with a pitfall.
  for (int t = 0; t < 200; ++t) {
    const Graph g = random_connected_graph(rng, 2 + t % 10, 0.3);
    if (dismantlable(g)) CHECK(has_pitfall(g));
  }
  // C4 with a dominating apex is dismantlable even though C4 alone is not.
  CHECK(dismantlable(make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {4, 2}, {4, 3}})));
}

TEST_CASE("graph files") {
  const Graph tri = parse_graph_file("p 3 3\n0 1\n1 2\n2 0\n");
  CHECK(tri == cycle_graph(3));
  CHECK(parse_graph_file("# comment\n\np 2 1\n# another\n0 1\n") == path_graph(2));

  CHECK_THROWS_WITH_AS(parse_graph_file("p 4 1\n5 9\n"), doctest::Contains("index overflow"), GraphError);
  CHECK_THROWS_WITH_AS(parse_graph_file("q 4 1\n0 1\n"), doctest::Contains("malformed header"), GraphError);
  CHECK_THROWS_WITH_AS(parse_graph_file(""), doctest::Contains("malformed header"), GraphError);
  CHECK_THROWS_WITH_AS(parse_graph_file("p 3 2\n0 1\n"), doctest::Contains("declares 2 edges"), GraphError);
  CHECK_THROWS_WITH_AS(parse_graph_file("p 3 1\n0 x\n"), doctest::Contains("line 2"), GraphError);
  CHECK_THROWS_AS(parse_graph_file("p 3 1\n1 1\n"), GraphError);

  const Graph g = build_gp(GpParams::make(7, 2));
  CHECK(parse_graph_file(render_graph_file(g)) == g);
}

TEST_CASE("dot export lists each edge once, smaller index first") {
  const std::string dot = render_dot(make_graph(3, {{2, 1}, {0, 1}}));
  CHECK(dot == "graph {\n  0 -- 1;\n  1 -- 2;\n}\n");
}
