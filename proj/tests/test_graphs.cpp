#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "oracles.hpp"
#include "phase_amp/errors.hpp"
#include "phase_amp/graphs.hpp"

using namespace phase_amp;

TEST_CASE("builders have the expected edge counts") {
  CHECK(make_line(10).edge_count() == 9);
  CHECK(make_grid(4, 4).edge_count() == 24);
  CHECK(make_grid(3, 3).edge_count() == 12);
  const auto sr = make_star_ring(16);
  CHECK(sr.edge_count() == 30);
  auto deg = sr.degrees();
  CHECK(deg[0] == 15);
  for (int v = 1; v < 16; ++v) CHECK(deg[static_cast<std::size_t>(v)] == 3);
}

TEST_CASE("edges are canonical and validated") {
  Graph g(3, {{2, 0}, {1, 0}});
  CHECK(g.edges()[0] == Edge{0, 1});
  CHECK(g.edges()[1] == Edge{0, 2});
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), InvalidArgument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), InvalidArgument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InvalidArgument);
  CHECK_THROWS_AS(Graph(0, {}), InvalidArgument);
  CHECK_THROWS_AS(make_line(1), InvalidArgument);
  CHECK_THROWS_AS(make_star_ring(3), InvalidArgument);
}

TEST_CASE("cut and cover values") {
  const auto g = make_line(4);
  CHECK(cut_value(g, 0b0101) == 3);
  CHECK(cut_value(g, 0b0000) == 0);
  CHECK(cut_value(g, 0b1111) == 0);
  CHECK(covered_edges(g, 0b0010) == 2);
  CHECK(covered_edges(g, 0b0000) == 0);
  CHECK(objective_value(g, ObjectiveKind::kCoveredEdges, 0b1010) == 3);
}

TEST_CASE("cut values agree with the adjacency oracle") {
  const auto g = make_grid(3, 3);
  const auto edges = oracle::grid_edges(3, 3);
  for (Assignment x = 0; x < g.assignment_count(); ++x) REQUIRE(cut_value(g, x) == oracle::cut(9, edges, x));
}

TEST_CASE("brute-force optima on the benchmark graphs") {
  auto grid4 = brute_force_optima(make_grid(4, 4), ObjectiveKind::kMaxCut);
  CHECK(grid4.best_value == 24);
  CHECK(grid4.maximizers.size() == 2);
  auto grid3 = brute_force_optima(make_grid(3, 3), ObjectiveKind::kMaxCut);
  CHECK(grid3.best_value == 12);
  CHECK(grid3.maximizers.size() == 2);
  auto sr = brute_force_optima(make_star_ring(16), ObjectiveKind::kMaxCut);
  CHECK(sr.best_value == 22);
  CHECK(sr.maximizers.size() == 30);
  auto line4 = brute_force_optima(make_line(4), ObjectiveKind::kMaxCut);
  CHECK(line4.best_value == 3);
  CHECK(line4.maximizers == std::vector<Assignment>{0b0101, 0b1010});
  auto cover = brute_force_optima(make_line(3), ObjectiveKind::kCoveredEdges);
  CHECK(cover.best_value == 2);
  CHECK_THROWS_AS(brute_force_optima(make_line(29), ObjectiveKind::kMaxCut), ResourceLimit);
}

TEST_CASE("graph text round trip and specs") {
  const auto g = make_star_ring(6);
  CHECK(parse_graph_text(to_graph_text(g)) == g);
  CHECK_THROWS_AS(parse_graph_text("graph 3 2\n0 1\n"), InvalidArgument);
  CHECK_THROWS_AS(parse_graph_text("graph 3 1\n0 1\n1 2\n"), InvalidArgument);
  CHECK_THROWS_AS(parse_graph_text("grahp 3 0"), InvalidArgument);
  CHECK(graph_from_spec("grid:2x3") == make_grid(2, 3));
  CHECK(graph_from_spec("line:5") == make_line(5));
  CHECK(graph_from_spec("starring:7") == make_star_ring(7));
  CHECK_THROWS_AS(graph_from_spec("grid:3"), InvalidArgument);
  CHECK_THROWS_AS(graph_from_spec("line:x"), InvalidArgument);
  CHECK_THROWS_AS(graph_from_spec("/no/such/file"), InvalidArgument);

  const auto path = std::filesystem::temp_directory_path() / "phase_amp_graph_test.txt";
  std::ofstream(path) << to_graph_text(g);
  CHECK(graph_from_spec(path.string()) == g);
  std::filesystem::remove(path);
}

TEST_CASE("objective names") {
  CHECK(parse_objective("maxcut") == ObjectiveKind::kMaxCut);
  CHECK(parse_objective("vertex-cover") == ObjectiveKind::kCoveredEdges);
  CHECK(to_string(ObjectiveKind::kCoveredEdges) == "cover");
  CHECK_THROWS_AS(parse_objective("tsp"), InvalidArgument);
}
