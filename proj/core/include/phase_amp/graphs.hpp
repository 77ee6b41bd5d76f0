#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace phase_amp {

// Bit i of an assignment is vertex i (vertex 0 is the least significant bit).
// For MaxCut a set bit places the vertex in set 1; for vertex cover it puts the
// vertex in the cover.
using Assignment = std::uint64_t;

struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class ObjectiveKind { kMaxCut, kCoveredEdges };

std::string_view to_string(ObjectiveKind kind);
// Accepts "maxcut" and "cover" (also "covered-edges", "vertex-cover").
ObjectiveKind parse_objective(std::string_view text);

// Simple undirected graph. Edges are stored canonicalized (u < v) and sorted.
// Immutable after construction.
class Graph {
 public:
  static constexpr int kMaxVertices = 63;

  // Throws InvalidArgument on self-loops, duplicates, or out-of-range endpoints.
  Graph(int n_vertices, std::vector<Edge> edges);

  int vertex_count() const { return n_vertices_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  std::vector<int> degrees() const;

  // Number of assignments, 2^n.
  std::uint64_t assignment_count() const { return std::uint64_t{1} << n_vertices_; }
  Assignment full_mask() const { return assignment_count() - 1; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_vertices_;
  std::vector<Edge> edges_;
};

Graph make_line(int q);
// Row-major: vertex (r, c) has index r * cols + c.
Graph make_grid(int rows, int cols);
// Vertex 0 is the center; vertices 1..q-1 form the ring.
Graph make_star_ring(int q);

int cut_value(const Graph& g, Assignment x);
int covered_edges(const Graph& g, Assignment x);
int objective_value(const Graph& g, ObjectiveKind kind, Assignment x);

// Largest graph accepted by exhaustive enumeration.
inline constexpr int kMaxEnumerationVertices = 28;

struct Optima {
  int best_value = 0;
  std::vector<Assignment> maximizers;  // ascending
};

// Exhaustive search over all 2^n assignments. Throws ResourceLimit above
// kMaxEnumerationVertices.
Optima brute_force_optima(const Graph& g, ObjectiveKind kind);

// Text format:
//   graph <n_vertices> <n_edges>
//   u v
//   ...
std::string to_graph_text(const Graph& g);
Graph parse_graph_text(std::string_view text);
Graph load_graph_file(const std::filesystem::path& path);

// "line:Q", "grid:RxC", "starring:Q", or a path to a graph file.
Graph graph_from_spec(std::string_view spec);

}  // namespace phase_amp
