#include <algorithm>
#include <set>
#include <stdexcept>

#include "copnum/structure.hpp"

namespace copnum {

Cycle canonical_cycle(const Cycle& c) {
  if (c.empty()) return c;
  const std::size_t len = c.size();
  const std::size_t start = static_cast<std::size_t>(std::min_element(c.begin(), c.end()) - c.begin());
  Cycle fwd(len), bwd(len);
  for (std::size_t i = 0; i < len; ++i) {
    fwd[i] = c[(start + i) % len];
    bwd[i] = c[(start + len - i) % len];
  }
  return std::min(fwd, bwd);
}

std::vector<Cycle> cycles_of_length_through(const Graph& g, Vertex v, int length) {
  if (length < kMinCycleLength || length > kMaxCycleLength) {
    throw std::invalid_argument("cycle length must lie in [" + std::to_string(kMinCycleLength) + ", " +
                                std::to_string(kMaxCycleLength) + "]");
  }
  if (v >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
  const auto dist = bfs_distances(g, v);
  std::set<Cycle> found;
  Cycle path{v};
  std::vector<char> on_path(g.vertex_count(), 0);
  on_path[v] = 1;

  auto dfs = [&](auto&& self) -> void {
    const Vertex tail = path.back();
    const int edges_left = length - static_cast<int>(path.size());
    if (edges_left == 0) {
      if (g.adjacent(tail, v)) found.insert(canonical_cycle(path));
      return;
    }
    for (Vertex w : g.neighbors(tail)) {
      // w still needs a walk of edges_left edges back to v.
      if (on_path[w] || dist[w] == kUnreachable || dist[w] > edges_left) continue;
      on_path[w] = 1;
      path.push_back(w);
      self(self);
      path.pop_back();
      on_path[w] = 0;
    }
  };
  dfs(dfs);
  return {found.begin(), found.end()};
}

namespace {

// The two neighbors of `center` along the cycle, smaller first.
std::pair<Vertex, Vertex> flank(const Cycle& c, Vertex center) {
  const std::size_t len = c.size();
  const std::size_t i = static_cast<std::size_t>(std::find(c.begin(), c.end(), center) - c.begin());
  Vertex a = c[(i + 1) % len];
  Vertex b = c[(i + len - 1) % len];
  return {std::min(a, b), std::max(a, b)};
}

std::set<Edge> edge_set(const Cycle& c) {
  std::set<Edge> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    Vertex a = c[i], b = c[(i + 1) % c.size()];
    out.insert({std::min(a, b), std::max(a, b)});
  }
  return out;
}

}  // namespace

std::vector<CyclePair> two_trap_pairs_at(const Graph& g, Vertex center) {
  std::vector<CyclePair> out;
  const auto cycles = cycles_of_length_through(g, center, 8);
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const auto fi = flank(cycles[i], center);
    std::vector<Vertex> si(cycles[i].begin(), cycles[i].end());
    std::sort(si.begin(), si.end());
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      if (flank(cycles[j], center) != fi) continue;
      std::vector<Vertex> sj(cycles[j].begin(), cycles[j].end());
      std::sort(sj.begin(), sj.end());
      std::vector<Vertex> common;
      std::set_intersection(si.begin(), si.end(), sj.begin(), sj.end(), std::back_inserter(common));
      // Both cycles hold the flanking path, so exactly three shared vertices
      // leaves the two path edges as the only shared edges.
      if (common.size() != 3) continue;
      out.push_back({cycles[i], cycles[j], center, {fi.first, center, fi.second}});
    }
  }
  return out;
}

std::vector<CyclePair> two_trap_pairs(const Graph& g) {
  std::vector<CyclePair> out;
  for (Vertex center = 0; center < g.vertex_count(); ++center) {
    auto at = two_trap_pairs_at(g, center);
    out.insert(out.end(), at.begin(), at.end());
  }
  return out;
}

bool admits_two_trap(const Graph& g) {
  for (Vertex center = 0; center < g.vertex_count(); ++center) {
    if (!two_trap_pairs_at(g, center).empty()) return true;
  }
  return false;
}

std::string cycle_pair_defect(const Graph& g, const CyclePair& p) {
  for (const Cycle* c : {&p.cycle_a, &p.cycle_b}) {
    if (c->size() != 8) return "cycle length is not 8";
    std::set<Vertex> distinct(c->begin(), c->end());
    if (distinct.size() != 8) return "cycle repeats a vertex";
    for (std::size_t i = 0; i < 8; ++i) {
      Vertex a = (*c)[i], b = (*c)[(i + 1) % 8];
      if (a >= g.vertex_count() || b >= g.vertex_count() || !g.adjacent(a, b)) return "cycle uses a non-edge";
    }
  }
  if (p.shared_path.size() != 3) return "shared path does not have 3 vertices";
  if (p.shared_path[1] != p.center) return "center is not the middle of the shared path";

  const auto ea = edge_set(p.cycle_a), eb = edge_set(p.cycle_b);
  std::vector<Edge> common_edges;
  std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(common_edges));
  std::set<Edge> path_edges;
  for (int i = 0; i < 2; ++i) {
    Vertex a = p.shared_path[i], b = p.shared_path[i + 1];
    path_edges.insert({std::min(a, b), std::max(a, b)});
  }
  if (std::set<Edge>(common_edges.begin(), common_edges.end()) != path_edges) {
    return "edge intersection is not the shared path";
  }

  std::set<Vertex> va(p.cycle_a.begin(), p.cycle_a.end());
  std::set<Vertex> common_vertices;
  for (Vertex x : p.cycle_b) {
    if (va.count(x)) common_vertices.insert(x);
  }
  if (common_vertices != std::set<Vertex>(p.shared_path.begin(), p.shared_path.end())) {
    return "vertex intersection is not the shared path";
  }
  return {};
}

}  // namespace copnum
