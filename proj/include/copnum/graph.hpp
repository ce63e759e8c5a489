#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace copnum {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Immutable undirected simple graph in compressed adjacency form.
// Neighbor lists are sorted ascending; safe to share across threads.
class Graph {
 public:
  Graph() = default;

  // Duplicate edges collapse. Throws GraphError on self-loops or indices >= n.
  static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);

  std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return adjacency_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(Vertex u, Vertex v) const;

  std::size_t min_degree() const;
  std::size_t max_degree() const;
  bool is_regular(std::size_t d) const;

  // Each edge once, smaller endpoint first, sorted.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
};

inline constexpr int kUnreachable = -1;

// Hop distances from source; kUnreachable for other components.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

bool is_connected(const Graph& g);

// Length of a shortest cycle, nullopt for forests.
std::optional<int> girth(const Graph& g);

// True iff some vertex u has a neighbor w with N[u] a subset of N[w].
bool has_pitfall(const Graph& g);

// True iff repeatedly deleting pitfall vertices leaves a single vertex.
bool dismantlable(const Graph& g);

// Text format: "p <V> <E>" header, then E lines "<u> <v>", '#' comments.
Graph parse_graph_file(std::string_view text);
Graph load_graph_file(const std::string& path);
std::string render_graph_file(const Graph& g);
std::string render_dot(const Graph& g);

}  // namespace copnum
