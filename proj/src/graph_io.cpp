#include <charconv>
#include <fstream>
#include <sstream>

#include "copnum/graph.hpp"

namespace copnum {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

std::uint64_t parse_index(std::string_view field, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw GraphError("line " + std::to_string(line_no) + ": expected a nonnegative integer, got '" +
                     std::string(field) + "'");
  }
  return value;
}

}  // namespace

Graph parse_graph_file(std::string_view text) {
  std::optional<std::uint64_t> vertex_count;
  std::uint64_t expected_edges = 0;
  std::vector<Edge> edges;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto fields = split_fields(line);
    if (fields.empty() || fields.front().front() == '#') continue;

    if (!vertex_count) {
      if (fields.size() != 3 || fields[0] != "p") {
        throw GraphError("line " + std::to_string(line_no) + ": malformed header, expected 'p <V> <E>'");
      }
      vertex_count = parse_index(fields[1], line_no);
      expected_edges = parse_index(fields[2], line_no);
      continue;
    }

    if (fields.size() != 2) {
      throw GraphError("line " + std::to_string(line_no) + ": expected '<u> <v>'");
    }
    std::uint64_t u = parse_index(fields[0], line_no);
    std::uint64_t v = parse_index(fields[1], line_no);
    if (u >= *vertex_count || v >= *vertex_count) {
      throw GraphError("line " + std::to_string(line_no) + ": index overflow, vertex " +
                       std::to_string(std::max(u, v)) + " >= " + std::to_string(*vertex_count));
    }
    if (u == v) throw GraphError("line " + std::to_string(line_no) + ": self-loop");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }

  if (!vertex_count) throw GraphError("malformed header: no 'p <V> <E>' line");
  if (edges.size() != expected_edges) {
    throw GraphError("header declares " + std::to_string(expected_edges) + " edges, file has " +
                     std::to_string(edges.size()));
  }
  return Graph::from_edge_list(*vertex_count, edges);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphError("cannot open graph file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph_file(buffer.str());
}

std::string render_graph_file(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string render_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) out << "  " << v << ";\n";
  }
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace copnum
