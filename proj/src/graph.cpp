#include "rigidity/graph.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace rigidity {

Graph::Graph(std::size_t vertex_count)
    : vertex_count_(vertex_count), adjacency_(vertex_count) {}

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)), adjacency_(vertex_count) {
  for (const Edge& e : edges_) {
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.v >= vertex_count_) {
      throw std::invalid_argument("edge endpoint " + std::to_string(e.v) +
                                  " out of range for " + std::to_string(vertex_count_) +
                                  " vertices");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw std::invalid_argument("duplicate edge " + std::to_string(dup->u) + " " +
                                std::to_string(dup->v));
  }
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

void Graph::check_vertex(Vertex v) const {
  if (v >= vertex_count_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for " +
                            std::to_string(vertex_count_) + " vertices");
  }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adjacency_[v];
}

std::size_t Graph::degree(Vertex v) const {
  check_vertex(v);
  return adjacency_[v].size();
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& list : adjacency_) best = std::max(best, list.size());
  return best;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a >= vertex_count_ || b >= vertex_count_) return false;
  const auto& list = adjacency_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

std::optional<std::size_t> Graph::edge_index(Edge e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

Graph Graph::without_edges(std::span<const Edge> removed) const {
  std::vector<Edge> drop(removed.begin(), removed.end());
  std::sort(drop.begin(), drop.end());
  for (const Edge& e : drop) {
    if (!has_edge(e)) {
      throw std::invalid_argument("cannot remove absent edge " + std::to_string(e.u) + " " +
                                  std::to_string(e.v));
    }
  }
  std::vector<Edge> kept;
  kept.reserve(edges_.size());
  std::set_difference(edges_.begin(), edges_.end(), drop.begin(), drop.end(),
                      std::back_inserter(kept));
  return Graph(vertex_count_, std::move(kept));
}

Graph Graph::with_edges(std::span<const Edge> added) const {
  std::vector<Edge> all = edges_;
  for (const Edge& e : added) {
    if (has_edge(e)) {
      throw std::invalid_argument("edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                                  " already present");
    }
    all.push_back(e);
  }
  return Graph(vertex_count_, std::move(all));
}

Graph Graph::isolate_vertex(Vertex v) const {
  check_vertex(v);
  std::vector<Edge> kept;
  kept.reserve(edges_.size());
  for (const Edge& e : edges_) {
    if (!e.contains(v)) kept.push_back(e);
  }
  return Graph(vertex_count_, std::move(kept));
}

Graph Graph::induced(const std::vector<bool>& keep) const {
  if (keep.size() != vertex_count_) throw std::invalid_argument("mask size mismatch");
  std::vector<Edge> kept;
  for (const Edge& e : edges_) {
    if (keep[e.u] && keep[e.v]) kept.push_back(e);
  }
  return Graph(vertex_count_, std::move(kept));
}

std::vector<Edge> Graph::incident_edges(Vertex v) const {
  std::vector<Edge> out;
  for (Vertex w : neighbors(v)) out.emplace_back(v, w);
  std::sort(out.begin(), out.end());
  return out;
}

Components connected_components(const Graph& g) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  Components result;
  result.label.assign(g.vertex_count(), unset);
  std::vector<Vertex> stack;
  for (Vertex start = 0; start < g.vertex_count(); ++start) {
    if (result.label[start] != unset) continue;
    result.label[start] = result.count;
    stack.push_back(start);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x)) {
        if (result.label[y] == unset) {
          result.label[y] = result.count;
          stack.push_back(y);
        }
      }
    }
    ++result.count;
  }
  return result;
}

bool is_connected(const Graph& g) { return connected_components(g).count <= 1; }

std::size_t nontrivial_component_count(const Graph& g) {
  auto comps = connected_components(g);
  std::vector<bool> has_edge(comps.count, false);
  for (const Edge& e : g.edges()) has_edge[comps.label[e.u]] = true;
  return static_cast<std::size_t>(std::count(has_edge.begin(), has_edge.end(), true));
}

long long degree_sum_defect(const Graph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("degree_sum_defect: empty graph");
  if (!is_connected(g)) throw std::invalid_argument("degree_sum_defect: graph is disconnected");
  long long total = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    total += static_cast<long long>(g.degree(v)) - 2;
  }
  return total;
}

namespace {

// Iterative lowpoint search; `skip` marks an edge index treated as absent.
std::vector<Edge> bridges_skipping(const Graph& g, std::optional<std::size_t> skip) {
  const std::size_t n = g.vertex_count();
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> order(n, unset), low(n, 0);
  std::vector<Edge> bridges;
  std::size_t clock = 0;

  struct Frame {
    Vertex vertex;
    std::size_t parent_edge;
    std::size_t next;
  };
  std::vector<Frame> stack;

  for (Vertex root = 0; root < n; ++root) {
    if (order[root] != unset) continue;
    order[root] = low[root] = clock++;
    stack.push_back({root, unset, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nbrs = g.neighbors(f.vertex);
      if (f.next < nbrs.size()) {
        Vertex w = nbrs[f.next++];
        std::size_t idx = *g.edge_index(Edge(f.vertex, w));
        if (idx == f.parent_edge || (skip && idx == *skip)) continue;
        if (order[w] == unset) {
          order[w] = low[w] = clock++;
          stack.push_back({w, idx, 0});
        } else {
          low[f.vertex] = std::min(low[f.vertex], order[w]);
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Vertex parent = stack.back().vertex;
          low[parent] = std::min(low[parent], low[done.vertex]);
          if (low[done.vertex] > order[parent]) bridges.emplace_back(parent, done.vertex);
        }
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

}  // namespace

std::vector<Edge> find_bridges(const Graph& g) { return bridges_skipping(g, std::nullopt); }

CutReport cut_analysis(const Graph& g) {
  CutReport report;
  report.bridges = find_bridges(g);
  report.component_count = connected_components(g).count;
  report.nontrivial_component_count = nontrivial_component_count(g);

  // A non-bridge pair {e, f} disconnects iff f is a bridge of g - e.
  auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (std::binary_search(report.bridges.begin(), report.bridges.end(), edges[i])) continue;
    for (const Edge& f : bridges_skipping(g, i)) {
      if (f <= edges[i]) continue;
      if (std::binary_search(report.bridges.begin(), report.bridges.end(), f)) continue;
      report.two_edge_cuts.emplace_back(edges[i], f);
    }
  }
  return report;
}

}  // namespace rigidity
