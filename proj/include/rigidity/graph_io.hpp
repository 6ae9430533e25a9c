#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "rigidity/graph.hpp"

namespace rigidity {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Edge-list text: one "i j" pair per line, '#' starts a comment line, and an
/// optional "n <count>" header fixes the vertex count (otherwise max id + 1).
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_dot(std::ostream& out, const Graph& g, const std::string& name = "G");

}  // namespace rigidity
