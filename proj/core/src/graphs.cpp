#include "phase_amp/graphs.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "parallel_chunks.hpp"
#include "phase_amp/errors.hpp"

namespace phase_amp {

std::string_view to_string(ObjectiveKind kind) {
  switch (kind) {
    case ObjectiveKind::kMaxCut:
      return "maxcut";
    case ObjectiveKind::kCoveredEdges:
      return "cover";
  }
  return "unknown";
}

ObjectiveKind parse_objective(std::string_view text) {
  if (text == "maxcut") return ObjectiveKind::kMaxCut;
  if (text == "cover" || text == "covered-edges" || text == "vertex-cover") {
    return ObjectiveKind::kCoveredEdges;
  }
  throw InvalidArgument("unknown objective '" + std::string(text) + "' (expected maxcut or cover)");
}

Graph::Graph(int n_vertices, std::vector<Edge> edges) : n_vertices_(n_vertices) {
  if (n_vertices < 1 || n_vertices > kMaxVertices) {
    throw InvalidArgument("vertex count must be in [1, " + std::to_string(kMaxVertices) +
                          "], got " + std::to_string(n_vertices));
  }
  for (auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n_vertices || e.v >= n_vertices) {
      throw InvalidArgument("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                            ") has an endpoint outside [0, " + std::to_string(n_vertices) + ")");
    }
    if (e.u == e.v) throw InvalidArgument("self-loop on vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw InvalidArgument("duplicate edge (" + std::to_string(dup->u) + ", " +
                          std::to_string(dup->v) + ")");
  }
  edges_ = std::move(edges);
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(n_vertices_), 0);
  for (const auto& e : edges_) {
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
  }
  return deg;
}

Graph make_line(int q) {
  if (q < 2) throw InvalidArgument("line needs at least 2 vertices, got " + std::to_string(q));
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < q; ++i) edges.push_back({i, i + 1});
  return Graph(q, std::move(edges));
}

Graph make_grid(int rows, int cols) {
  if (rows < 1 || cols < 1 || rows * cols < 2) {
    throw InvalidArgument("grid must have rows, cols >= 1 and at least 2 vertices, got " +
                          std::to_string(rows) + "x" + std::to_string(cols));
  }
  std::vector<Edge> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int v = r * cols + c;
      if (c + 1 < cols) edges.push_back({v, v + 1});
      if (r + 1 < rows) edges.push_back({v, v + cols});
    }
  }
  return Graph(rows * cols, std::move(edges));
}

Graph make_star_ring(int q) {
  if (q < 4) {
    throw InvalidArgument("star-ring needs at least 4 vertices (ring of 3), got " +
                          std::to_string(q));
  }
  std::vector<Edge> edges;
  for (int i = 1; i < q; ++i) edges.push_back({0, i});
  for (int i = 1; i < q; ++i) edges.push_back({i, i + 1 < q ? i + 1 : 1});
  return Graph(q, std::move(edges));
}

int cut_value(const Graph& g, Assignment x) {
  int cut = 0;
  for (const auto& e : g.edges()) cut += static_cast<int>(((x >> e.u) ^ (x >> e.v)) & 1U);
  return cut;
}

int covered_edges(const Graph& g, Assignment x) {
  int covered = 0;
  for (const auto& e : g.edges()) covered += static_cast<int>(((x >> e.u) | (x >> e.v)) & 1U);
  return covered;
}

int objective_value(const Graph& g, ObjectiveKind kind, Assignment x) {
  return kind == ObjectiveKind::kMaxCut ? cut_value(g, x) : covered_edges(g, x);
}

Optima brute_force_optima(const Graph& g, ObjectiveKind kind) {
  if (g.vertex_count() > kMaxEnumerationVertices) {
    throw ResourceLimit("exhaustive enumeration is capped at " +
                        std::to_string(kMaxEnumerationVertices) + " vertices, graph has " +
                        std::to_string(g.vertex_count()));
  }
  auto partials = detail::map_chunks<Optima>(
      0, g.assignment_count(), [&](std::uint64_t lo, std::uint64_t hi) {
        Optima local{-1, {}};
        for (Assignment x = lo; x < hi; ++x) {
          const int value = objective_value(g, kind, x);
          if (value > local.best_value) {
            local.best_value = value;
            local.maximizers.clear();
          }
          if (value == local.best_value) local.maximizers.push_back(x);
        }
        return local;
      });
  Optima result{-1, {}};
  for (auto& part : partials) {
    if (part.best_value > result.best_value) {
      result = std::move(part);
    } else if (part.best_value == result.best_value) {
      result.maximizers.insert(result.maximizers.end(), part.maximizers.begin(),
                               part.maximizers.end());
    }
  }
  return result;
}

std::string to_graph_text(const Graph& g) {
  std::ostringstream out;
  out << "graph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

namespace {

int read_int(std::istringstream& in, const char* what) {
  long long value = 0;
  if (!(in >> value)) throw InvalidArgument(std::string("graph text: expected ") + what);
  if (value < -(1LL << 30) || value > (1LL << 30)) {
    throw InvalidArgument(std::string("graph text: ") + what + " out of range");
  }
  return static_cast<int>(value);
}

std::optional<int> parse_positive(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || value < 0) return std::nullopt;
  return value;
}

}  // namespace

Graph parse_graph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string header;
  if (!(in >> header) || header != "graph") {
    throw InvalidArgument("graph text must start with 'graph <n_vertices> <n_edges>'");
  }
  const int n = read_int(in, "vertex count");
  const int m = read_int(in, "edge count");
  if (m < 0) throw InvalidArgument("graph text: negative edge count");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const int u = read_int(in, "edge endpoint");
    const int v = read_int(in, "edge endpoint");
    edges.push_back({u, v});
  }
  std::string trailing;
  if (in >> trailing) throw InvalidArgument("graph text: more edges than the header declares");
  return Graph(n, std::move(edges));
}

Graph load_graph_file(const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) throw InvalidArgument("cannot open graph file " + path.string());
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_graph_text(buffer.str());
}

Graph graph_from_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon != std::string_view::npos) {
    const auto kind = spec.substr(0, colon);
    const auto arg = spec.substr(colon + 1);
    if (kind == "line" || kind == "starring") {
      auto q = parse_positive(arg);
      if (!q) throw InvalidArgument("bad size in graph spec '" + std::string(spec) + "'");
      return kind == "line" ? make_line(*q) : make_star_ring(*q);
    }
    if (kind == "grid") {
      const auto x = arg.find('x');
      if (x == std::string_view::npos) {
        throw InvalidArgument("grid spec must be grid:RxC, got '" + std::string(spec) + "'");
      }
      auto rows = parse_positive(arg.substr(0, x));
      auto cols = parse_positive(arg.substr(x + 1));
      if (!rows || !cols) throw InvalidArgument("bad size in graph spec '" + std::string(spec) + "'");
      return make_grid(*rows, *cols);
    }
  }
  const std::filesystem::path path{std::string(spec)};
  if (std::filesystem::exists(path)) return load_graph_file(path);
  throw InvalidArgument("graph spec '" + std::string(spec) +
                        "' is neither line:Q, grid:RxC, starring:Q nor an existing file");
}

}  // namespace phase_amp
