#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "copnum/graph.hpp"

namespace testing_support {

using copnum::Graph;
using copnum::Vertex;

Graph make_graph(std::size_t n, std::vector<copnum::Edge> edges);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
// The Petersen graph from its outer pentagon, spokes and inner pentagram, written out by hand.
Graph petersen_by_hand();

// One representative per isomorphism class of connected graphs on 1..max_n vertices.
std::vector<Graph> connected_graphs_up_to(std::size_t max_n);

// Random spanning tree plus independent extra edges with probability p.
Graph random_connected_graph(std::mt19937_64& rng, std::size_t n, double p);

Graph relabel(const Graph& g, const std::vector<Vertex>& perm);

// Shortest cycle through each edge by deleting the edge and measuring the detour.
std::optional<int> girth_by_edge_deletion(const Graph& g);

}  // namespace testing_support

namespace testing_support {

struct GoldenAppendixRow {
  int n = 0;
  int k = 0;
  std::string relation;
  std::optional<int> iso_min_k;
  int girth = 0;
  int cop_number = 0;
};

struct GoldenTable2Row {
  int n = 0;
  int k = 0;
  int girth = 0;
  auto operator<=>(const GoldenTable2Row&) const = default;
};

std::string data_path(const std::string& name);
std::vector<GoldenAppendixRow> load_appendix_golden();
std::vector<GoldenTable2Row> load_table2_golden();
std::vector<std::string> split(const std::string& s, char sep);

}  // namespace testing_support
