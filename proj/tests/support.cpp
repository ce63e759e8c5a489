#include "support.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace testing_support {

Graph make_graph(std::size_t n, std::vector<copnum::Edge> edges) { return Graph::from_edge_list(n, edges); }

Graph cycle_graph(std::size_t n) {
  std::vector<copnum::Edge> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return make_graph(n, e);
}

Graph path_graph(std::size_t n) {
  std::vector<copnum::Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return make_graph(n, e);
}

Graph complete_graph(std::size_t n) {
  std::vector<copnum::Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return make_graph(n, e);
}

Graph star_graph(std::size_t leaves) {
  std::vector<copnum::Edge> e;
  for (Vertex i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return make_graph(leaves + 1, e);
}

Graph petersen_by_hand() {
  return make_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                         {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                         {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

namespace {

// Adjacency as row bitmasks; n <= 8 here.
using Masks = std::vector<std::uint8_t>;

std::uint64_t encode(const Masks& adj, const std::vector<int>& perm) {
  // perm[new] = old; upper triangle bits in row-major order.
  const std::size_t n = adj.size();
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) code = (code << 1) | ((adj[perm[i]] >> perm[j]) & 1u);
  return code;
}

// Smallest code over the labelings that list vertices by nondecreasing degree.
std::uint64_t canonical_code(const Masks& adj) {
  const std::size_t n = adj.size();
  std::vector<int> deg(n);
  for (std::size_t v = 0; v < n; ++v) deg[v] = __builtin_popcount(adj[v]);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) { return deg[a] < deg[b] || (deg[a] == deg[b] && a < b); });
  // Permute within runs of equal degree.
  std::vector<std::pair<std::size_t, std::size_t>> runs;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && deg[perm[j]] == deg[perm[i]]) ++j;
    runs.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = UINT64_MAX;
  auto rec = [&](auto&& self, std::size_t r) -> void {
    if (r == runs.size()) {
      best = std::min(best, encode(adj, perm));
      return;
    }
    auto [b, e] = runs[r];
    std::sort(perm.begin() + b, perm.begin() + e);
    do {
      self(self, r + 1);
    } while (std::next_permutation(perm.begin() + b, perm.begin() + e));
  };
  rec(rec, 0);
  return best;
}

bool connected(const Masks& adj) {
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::size_t v = 0; v < adj.size(); ++v)
      if (frontier >> v & 1u) next |= adj[v];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (1u << adj.size()) - 1;
}

Graph to_graph(const Masks& adj) {
  std::vector<copnum::Edge> e;
  for (Vertex i = 0; i < adj.size(); ++i)
    for (Vertex j = i + 1; j < adj.size(); ++j)
      if (adj[i] >> j & 1u) e.emplace_back(i, j);
  return Graph::from_edge_list(adj.size(), e);
}

}  // namespace

std::vector<Graph> connected_graphs_up_to(std::size_t max_n) {
  // Every connected graph has a vertex whose deletion leaves it connected, so
  // growing connected graphs one vertex at a time reaches every class.
  std::vector<Graph> out;
  std::vector<Masks> level{Masks{0}};
  out.push_back(to_graph(level.front()));
  for (std::size_t n = 2; n <= max_n; ++n) {
    std::set<std::uint64_t> seen;
    std::vector<Masks> next;
    for (const Masks& base : level) {
      for (std::uint32_t nb = 1; nb < (1u << (n - 1)); ++nb) {
        Masks adj = base;
        adj.push_back(static_cast<std::uint8_t>(nb));
        for (std::size_t v = 0; v + 1 < n; ++v)
          if (nb >> v & 1u) adj[v] |= static_cast<std::uint8_t>(1u << (n - 1));
        if (!connected(adj)) continue;
        if (seen.insert(canonical_code(adj)).second) next.push_back(adj);
      }
    }
    for (const Masks& m : next) out.push_back(to_graph(m));
    level = std::move(next);
  }
  return out;
}

Graph random_connected_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::vector<copnum::Edge> e;
  std::bernoulli_distribution extra(p);
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<Vertex> parent(0, v - 1);
    e.emplace_back(parent(rng), v);
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (extra(rng)) e.emplace_back(u, v);
  // Shuffle labels so the tree is not always rooted at 0.
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& [u, v] : e) u = perm[u], v = perm[v];
  return Graph::from_edge_list(n, e);
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<copnum::Edge> e;
  for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
  return Graph::from_edge_list(g.vertex_count(), e);
}

std::optional<int> girth_by_edge_deletion(const Graph& g) {
  std::optional<int> best;
  for (auto [a, b] : g.edges()) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<Vertex> q;
    dist[a] = 0;
    q.push(a);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex w : g.neighbors(u)) {
        if ((u == a && w == b) || dist[w] >= 0) continue;
        dist[w] = dist[u] + 1;
        q.push(w);
      }
    }
    if (dist[b] > 0 && (!best || dist[b] + 1 < *best)) best = dist[b] + 1;
  }
  return best;
}

}  // namespace testing_support

#include <fstream>
#include <sstream>

#ifndef COPNUM_TEST_DATA
#define COPNUM_TEST_DATA "tests/data"
#endif

namespace testing_support {

std::string data_path(const std::string& name) { return std::string(COPNUM_TEST_DATA) + "/" + name; }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string f;
  while (std::getline(ss, f, sep)) out.push_back(f);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

namespace {

std::vector<std::vector<std::string>> read_records(const std::string& name) {
  std::ifstream in(data_path(name));
  if (!in) throw std::runtime_error("missing test data " + data_path(name));
  std::vector<std::vector<std::string>> out;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    out.push_back(split(line, ','));
  }
  return out;
}

}  // namespace

std::vector<GoldenAppendixRow> load_appendix_golden() {
  std::vector<GoldenAppendixRow> rows;
  for (const auto& f : read_records("appendix_golden.csv")) {
    GoldenAppendixRow r{std::stoi(f.at(0)), std::stoi(f.at(1)), f.at(2), std::nullopt, std::stoi(f.at(4)),
                        std::stoi(f.at(5))};
    if (!f.at(3).empty()) r.iso_min_k = std::stoi(f[3]);
    rows.push_back(r);
  }
  return rows;
}

std::vector<GoldenTable2Row> load_table2_golden() {
  std::vector<GoldenTable2Row> rows;
  for (const auto& f : read_records("table2_golden.csv"))
    rows.push_back({std::stoi(f.at(0)), std::stoi(f.at(1)), std::stoi(f.at(2))});
  return rows;
}

}  // namespace testing_support
