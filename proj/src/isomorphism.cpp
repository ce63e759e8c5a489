#include <algorithm>
#include <map>

#include "copnum/gp_family.hpp"

namespace copnum {

namespace {

using Mask = std::uint64_t;

struct Prepared {
  std::vector<Mask> adj;
  // Per-vertex invariant: sorted degree of each vertex, bucketed by distance.
  std::vector<std::vector<int>> signature;
};

Prepared prepare(const Graph& g) {
  const std::size_t n = g.vertex_count();
  Prepared p;
  p.adj.assign(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) p.adj[v] |= Mask{1} << w;
  }
  p.signature.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    auto dist = bfs_distances(g, v);
    std::map<int, std::vector<int>> by_distance;
    for (Vertex w = 0; w < n; ++w) by_distance[dist[w]].push_back(static_cast<int>(g.degree(w)));
    auto& sig = p.signature[v];
    for (auto& [d, degrees] : by_distance) {
      std::sort(degrees.begin(), degrees.end());
      sig.push_back(d);
      sig.push_back(static_cast<int>(degrees.size()));
      sig.insert(sig.end(), degrees.begin(), degrees.end());
    }
  }
  return p;
}

class Matcher {
 public:
  Matcher(const Graph& g1, const Graph& g2) : g1_(g1), a_(prepare(g1)), b_(prepare(g2)) {
    const std::size_t n = g1.vertex_count();
    // Visit order: BFS within each component so most vertices have a mapped neighbor.
    std::vector<char> seen(n, 0);
    for (Vertex s = 0; s < n; ++s) {
      if (seen[s]) continue;
      std::size_t head = order_.size();
      order_.push_back(s);
      seen[s] = 1;
      for (; head < order_.size(); ++head) {
        for (Vertex w : g1.neighbors(order_[head])) {
          if (!seen[w]) {
            seen[w] = 1;
            order_.push_back(w);
          }
        }
      }
    }
    image_.assign(n, kUnmapped);
    used_.assign(n, 0);
  }

  bool run() { return extend(0); }

 private:
  static constexpr Vertex kUnmapped = ~Vertex{0};

  bool consistent(Vertex v, Vertex target) const {
    if (a_.signature[v] != b_.signature[target]) return false;
    for (std::size_t i = 0; i < order_.size(); ++i) {
      Vertex x = order_[i];
      if (image_[x] == kUnmapped) break;
      bool e1 = (a_.adj[v] >> x) & 1U;
      bool e2 = (b_.adj[target] >> image_[x]) & 1U;
      if (e1 != e2) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    Vertex anchor = kUnmapped;
    for (Vertex w : g1_.neighbors(v)) {
      if (image_[w] != kUnmapped) {
        anchor = w;
        break;
      }
    }
    const std::size_t n = order_.size();
    for (Vertex t = 0; t < n; ++t) {
      if (used_[t]) continue;
      if (anchor != kUnmapped && !((b_.adj[image_[anchor]] >> t) & 1U)) continue;
      if (!consistent(v, t)) continue;
      image_[v] = t;
      used_[t] = 1;
      if (extend(depth + 1)) return true;
      image_[v] = kUnmapped;
      used_[t] = 0;
    }
    return false;
  }

  const Graph& g1_;
  Prepared a_;
  Prepared b_;
  std::vector<Vertex> order_;
  std::vector<Vertex> image_;
  std::vector<char> used_;
};

}  // namespace

bool brute_force_isomorphic(const Graph& g1, const Graph& g2) {
  if (g1.vertex_count() > kIsomorphismVertexCap || g2.vertex_count() > kIsomorphismVertexCap) {
    throw GraphError("brute-force isomorphism is capped at " + std::to_string(kIsomorphismVertexCap) +
                     " vertices");
  }
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return false;
  Matcher matcher(g1, g2);
  return matcher.run();
}

}  // namespace copnum
