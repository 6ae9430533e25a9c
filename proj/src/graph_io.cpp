#include "rigidity/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string_view>
#include <vector>

namespace rigidity {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::uint64_t parse_id(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  if (value > 0xFFFFFFFEull) throw ParseError(line_no, "vertex id too large");
  return value;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::optional<std::uint64_t> declared;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::uint64_t max_id_plus_one = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.front() == "n") {
      if (tokens.size() != 2) throw ParseError(line_no, "header must be 'n <count>'");
      if (declared) throw ParseError(line_no, "duplicate vertex-count header");
      declared = parse_id(tokens[1], line_no);
      continue;
    }
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected two vertex ids, got " + std::to_string(tokens.size()) +
                                    " fields");
    }
    auto a = parse_id(tokens[0], line_no);
    auto b = parse_id(tokens[1], line_no);
    if (a == b) throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
    Edge e(static_cast<Vertex>(a), static_cast<Vertex>(b));
    if (!seen.insert(e).second) {
      throw ParseError(line_no, "duplicate edge " + std::to_string(e.u) + " " +
                                    std::to_string(e.v));
    }
    edges.push_back(e);
    max_id_plus_one = std::max(max_id_plus_one, static_cast<std::uint64_t>(e.v) + 1);
  }
  std::uint64_t n = declared.value_or(max_id_plus_one);
  if (n < max_id_plus_one) {
    throw ParseError(line_no, "header declares " + std::to_string(n) +
                                  " vertices but ids reach " + std::to_string(max_id_plus_one - 1));
  }
  return Graph(static_cast<std::size_t>(n), std::move(edges));
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n " << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_dot(std::ostream& out, const Graph& g, const std::string& name) {
  out << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
}

}  // namespace rigidity
