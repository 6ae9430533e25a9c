#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace rigidity {

using Vertex = std::uint32_t;

/// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  constexpr bool contains(Vertex w) const { return u == w || v == w; }
  constexpr Vertex other(Vertex w) const { return w == u ? v : u; }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph on vertices 0..vertex_count-1.
///
/// Edges are kept in lexicographic order, which is also the canonical row
/// order of every rigidity matrix built from the graph. Values are immutable;
/// the editing helpers return new graphs over the same vertex id space, so a
/// vertex that loses all its edges stays behind as an isolated vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);
  /// Throws std::invalid_argument on self-loops, duplicates or ids out of range.
  Graph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const;

  /// Throws std::out_of_range for an invalid id.
  std::size_t degree(Vertex v) const;
  std::size_t max_degree() const;

  bool has_edge(Vertex a, Vertex b) const;
  bool has_edge(Edge e) const { return has_edge(e.u, e.v); }
  std::optional<std::size_t> edge_index(Edge e) const;

  /// Throws std::invalid_argument if an edge is absent.
  Graph without_edges(std::span<const Edge> removed) const;
  /// Throws std::invalid_argument if an edge is already present.
  Graph with_edges(std::span<const Edge> added) const;
  /// Drops every edge incident to v; v stays as an isolated vertex.
  Graph isolate_vertex(Vertex v) const;
  /// Keeps only the edges with both endpoints flagged in `keep`.
  Graph induced(const std::vector<bool>& keep) const;
  std::vector<Edge> incident_edges(Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  void check_vertex(Vertex v) const;

  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

struct Components {
  std::vector<std::size_t> label;  // per vertex
  std::size_t count = 0;
};

Components connected_components(const Graph& g);
bool is_connected(const Graph& g);
/// Components carrying at least one edge.
std::size_t nontrivial_component_count(const Graph& g);

/// Sum over vertices of (degree - 2). Requires a connected graph.
long long degree_sum_defect(const Graph& g);

struct CutReport {
  std::vector<Edge> bridges;
  std::vector<std::pair<Edge, Edge>> two_edge_cuts;
  std::size_t component_count = 0;
  std::size_t nontrivial_component_count = 0;
};

/// Bridges plus every pair of non-bridge edges whose joint removal adds a
/// component. Pairs are listed with first < second, in lexicographic order.
CutReport cut_analysis(const Graph& g);

/// Bridges only, in lexicographic order (linear time).
std::vector<Edge> find_bridges(const Graph& g);

}  // namespace rigidity
