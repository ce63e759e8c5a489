#include "copnum/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace copnum {

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges) {
  std::vector<std::vector<Vertex>> lists(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an index out of range for " + std::to_string(n) + " vertices");
    }
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    lists[u].push_back(v);
    lists[v].push_back(u);
  }

  Graph g;
  g.offsets_.reserve(n + 1);
  g.offsets_.push_back(0);
  for (auto& list : lists) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    g.adjacency_.insert(g.adjacency_.end(), list.begin(), list.end());
    g.offsets_.push_back(g.adjacency_.size());
  }
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::size_t Graph::min_degree() const {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (Vertex v = 0; v < vertex_count(); ++v) best = std::min(best, degree(v));
  return vertex_count() == 0 ? 0 : best;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (Vertex v = 0; v < vertex_count(); ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::is_regular(std::size_t d) const {
  for (Vertex v = 0; v < vertex_count(); ++v) {
    if (degree(v) != d) return false;
  }
  return true;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  if (source >= g.vertex_count()) {
    throw GraphError("BFS source " + std::to_string(source) + " out of range");
  }
  std::vector<int> dist(g.vertex_count(), kUnreachable);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return false;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kUnreachable; });
}

std::optional<int> girth(const Graph& g) {
  const std::size_t n = g.vertex_count();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n);
  std::vector<Vertex> parent(n);
  std::vector<Vertex> queue;
  queue.reserve(n);

  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnreachable);
    queue.clear();
    queue.push_back(s);
    dist[s] = 0;
    parent[s] = s;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      // Any cycle found from here on has length at least 2*dist[u]+1.
      if (2 * dist[u] + 1 >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == kUnreachable) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

namespace {

// N[u] subset of N[w] for adjacent u, w, restricted to vertices still alive.
bool dominated_by(const Graph& g, Vertex u, Vertex w, const std::vector<char>& alive) {
  for (Vertex x : g.neighbors(u)) {
    if (!alive[x] || x == w) continue;
    if (!g.adjacent(w, x)) return false;
  }
  return true;
}

std::optional<Vertex> find_pitfall(const Graph& g, const std::vector<char>& alive) {
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (!alive[u]) continue;
    for (Vertex w : g.neighbors(u)) {
      if (alive[w] && dominated_by(g, u, w, alive)) return u;
    }
  }
  return std::nullopt;
}

}  // namespace

bool has_pitfall(const Graph& g) {
  std::vector<char> alive(g.vertex_count(), 1);
  return find_pitfall(g, alive).has_value();
}

bool dismantlable(const Graph& g) {
  std::size_t remaining = g.vertex_count();
  if (remaining == 0) return false;
  std::vector<char> alive(remaining, 1);
  while (remaining > 1) {
    auto corner = find_pitfall(g, alive);
    if (!corner) return false;
    alive[*corner] = 0;
    --remaining;
  }
  return true;
}

}  // namespace copnum
