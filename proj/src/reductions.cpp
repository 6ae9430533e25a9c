#include "rigidity/reductions.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "rigidity/pebble.hpp"
#include "rigidity/rigidity_matrix.hpp"

namespace rigidity {

namespace {

constexpr std::array<std::pair<ReductionKind, std::string_view>, 8> kKindNames{{
    {ReductionKind::delete_low_degree_vertex, "delete-low-degree-vertex"},
    {ReductionKind::delete_vertex_general, "delete-vertex-general"},
    {ReductionKind::remove_bridge, "remove-bridge"},
    {ReductionKind::remove_two_cut, "remove-two-cut"},
    {ReductionKind::disconnect_split, "disconnect-split"},
    {ReductionKind::inverse_one_extension, "inverse-one-extension"},
    {ReductionKind::inverse_one_extension_deg4, "inverse-one-extension-deg4"},
    {ReductionKind::peel_closure, "peel-closure"},
}};

std::string edge_text(Edge e) { return "(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")"; }

void require_vertex(const Graph& g, Vertex v, const char* who) {
  if (v >= g.vertex_count()) {
    throw std::invalid_argument(std::string(who) + ": vertex " + std::to_string(v) +
                                " out of range");
  }
}

void require_edge(const Graph& g, Edge e, const char* who) {
  if (!g.has_edge(e)) throw ReductionError(std::string(who) + ": edge " + edge_text(e) + " absent");
}

std::size_t component_count_without(const Graph& g, std::span<const Edge> removed) {
  return connected_components(g.without_edges(removed)).count;
}

std::pair<Graph, ReductionStep> inverse_extension(const Graph& g, Vertex s, Vertex i, Vertex j,
                                                  std::size_t degree, const char* who) {
  require_vertex(g, s, who);
  if (g.degree(s) != degree) {
    throw ReductionError(std::string(who) + ": vertex " + std::to_string(s) + " has degree " +
                         std::to_string(g.degree(s)) + ", expected " + std::to_string(degree));
  }
  if (i == j || !g.has_edge(s, i) || !g.has_edge(s, j)) {
    throw ReductionError(std::string(who) + ": " + std::to_string(i) + " and " + std::to_string(j) +
                         " must be distinct neighbours of " + std::to_string(s));
  }
  if (g.has_edge(i, j)) {
    throw ReductionError(std::string(who) + ": edge " + edge_text(Edge(i, j)) + " already present");
  }
  ReductionStep step;
  step.kind = degree == 3 ? ReductionKind::inverse_one_extension
                          : ReductionKind::inverse_one_extension_deg4;
  step.removed_vertices = {s};
  step.removed_edges = g.incident_edges(s);
  step.added_edges = {Edge(i, j)};
  step.relation = degree == 3 ? StressRelation::le() : StressRelation::le_plus(1);
  Graph next = apply_step(g, step);
  return {std::move(next), std::move(step)};
}

}  // namespace

std::string_view to_string(ReductionKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<ReductionKind> parse_reduction_kind(std::string_view name) {
  for (const auto& [k, text] : kKindNames) {
    if (text == name) return k;
  }
  return std::nullopt;
}

std::string StressRelation::describe() const {
  switch (kind) {
    case Kind::equal: return "equal";
    case Kind::le: return "le";
    case Kind::le_plus: return "le_plus(" + std::to_string(offset) + ")";
  }
  return "unknown";
}

StressRelation compose(const StressRelation& first, const StressRelation& second) {
  using K = StressRelation::Kind;
  const int offset = first.offset + second.offset;
  if (offset > 0) return StressRelation::le_plus(offset);
  if (first.kind == K::equal && second.kind == K::equal) return StressRelation::equal();
  return StressRelation::le();
}

Graph apply_step(const Graph& g, const ReductionStep& step) {
  Graph next = g.without_edges(step.removed_edges).with_edges(step.added_edges);
  for (Vertex v : step.removed_vertices) {
    require_vertex(next, v, "apply_step");
    if (next.degree(v) != 0) {
      throw std::invalid_argument("apply_step: removed vertex " + std::to_string(v) +
                                  " still has edges");
    }
  }
  return next;
}

void ReductionTrace::append(ReductionStep step, Graph next) {
  accumulated = steps.empty() ? step.relation : compose(accumulated, step.relation);
  steps.push_back(std::move(step));
  final_graph = std::move(next);
}

std::pair<Graph, ReductionStep> delete_vertex(const Graph& g, Vertex v) {
  require_vertex(g, v, "delete_vertex");
  const auto degree = static_cast<int>(g.degree(v));
  ReductionStep step;
  step.kind = degree <= 2 ? ReductionKind::delete_low_degree_vertex
                          : ReductionKind::delete_vertex_general;
  step.removed_vertices = {v};
  step.removed_edges = g.incident_edges(v);
  step.relation = degree <= 2 ? StressRelation::equal() : StressRelation::le_plus(degree - 2);
  return {g.isolate_vertex(v), std::move(step)};
}

std::pair<Graph, ReductionStep> remove_bridge(const Graph& g, Edge e) {
  require_edge(g, e, "remove_bridge");
  const std::array<Edge, 1> cut{e};
  if (component_count_without(g, cut) != connected_components(g).count + 1) {
    throw ReductionError("remove_bridge: " + edge_text(e) + " is not a bridge");
  }
  ReductionStep step;
  step.kind = ReductionKind::remove_bridge;
  step.removed_edges = {e};
  step.relation = StressRelation::equal();
  return {g.without_edges(cut), std::move(step)};
}

std::pair<Graph, ReductionStep> remove_two_cut(const Graph& g, Edge e1, Edge e2) {
  require_edge(g, e1, "remove_two_cut");
  require_edge(g, e2, "remove_two_cut");
  if (e1 == e2) throw ReductionError("remove_two_cut: the two edges coincide");
  const std::size_t base = connected_components(g).count;
  const std::array<Edge, 1> first{e1}, second{e2};
  if (component_count_without(g, first) != base || component_count_without(g, second) != base) {
    throw ReductionError("remove_two_cut: " + edge_text(e1) + " or " + edge_text(e2) +
                         " is a bridge on its own");
  }
  const std::array<Edge, 2> both{std::min(e1, e2), std::max(e1, e2)};
  if (component_count_without(g, both) != base + 1) {
    throw ReductionError("remove_two_cut: removing " + edge_text(e1) + " and " + edge_text(e2) +
                         " does not disconnect");
  }
  ReductionStep step;
  step.kind = ReductionKind::remove_two_cut;
  step.removed_edges = {both.begin(), both.end()};
  step.relation = StressRelation::equal();
  return {g.without_edges(both), std::move(step)};
}

Graph split_auxiliary_graph(const Graph& g, std::span<const Edge> cut,
                            const std::vector<bool>& first_side) {
  if (first_side.size() != g.vertex_count()) {
    throw std::invalid_argument("split_auxiliary_graph: side mask has the wrong size");
  }
  std::vector<Vertex> v3, v4;
  for (const Edge& e : cut) {
    for (Vertex w : {e.u, e.v}) (first_side[w] ? v3 : v4).push_back(w);
  }
  std::vector<Edge> edges(cut.begin(), cut.end());
  for (auto* side : {&v3, &v4}) {
    std::sort(side->begin(), side->end());
    side->erase(std::unique(side->begin(), side->end()), side->end());
    for (std::size_t a = 0; a < side->size(); ++a)
      for (std::size_t b = a + 1; b < side->size(); ++b) edges.emplace_back((*side)[a], (*side)[b]);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(g.vertex_count(), std::move(edges));
}

SplitResult disconnect_split(const Graph& g, std::span<const Edge> cut_in, std::uint64_t seed) {
  if (cut_in.empty()) throw ReductionError("disconnect_split: empty cut");
  std::vector<Edge> cut(cut_in.begin(), cut_in.end());
  std::sort(cut.begin(), cut.end());
  if (std::adjacent_find(cut.begin(), cut.end()) != cut.end()) {
    throw ReductionError("disconnect_split: repeated cut edge");
  }
  for (const Edge& e : cut) require_edge(g, e, "disconnect_split");

  const Components before = connected_components(g);
  const std::size_t home = before.label[cut.front().u];
  for (const Edge& e : cut) {
    if (before.label[e.u] != home) {
      throw ReductionError("disconnect_split: cut edges lie in different components");
    }
  }
  Graph rest = g.without_edges(cut);
  const Components after = connected_components(rest);
  if (after.count != before.count + 1) {
    throw ReductionError("disconnect_split: the cut does not split its component into two parts");
  }
  const std::size_t first_label = after.label[cut_in.front().u];
  std::vector<bool> first_side(g.vertex_count(), false), second_side(g.vertex_count(), false);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (before.label[v] != home) continue;
    (after.label[v] == first_label ? first_side : second_side)[v] = true;
  }
  for (const Edge& e : cut) {
    if (first_side[e.u] == first_side[e.v]) {
      throw ReductionError("disconnect_split: cut edge " + edge_text(e) +
                           " does not cross between the two parts");
    }
  }

  Graph aux = split_auxiliary_graph(g, cut, first_side);
  const auto rank = certified_rank(aux, 3, seed);
  if (!rank.agree()) {
    throw OracleMismatch("disconnect_split: rank oracles disagree on the auxiliary graph");
  }
  if (rank.rank != aux.edge_count()) {
    std::ostringstream msg;
    msg << "disconnect_split: auxiliary graph has " << aux.edge_count() - rank.rank
        << " stresses; edges:";
    for (const Edge& e : aux.edges()) msg << ' ' << edge_text(e);
    throw ReductionError(msg.str());
  }

  SplitResult result{g.induced(first_side), g.induced(second_side), {}};
  result.step.kind = ReductionKind::disconnect_split;
  result.step.removed_edges = std::move(cut);
  result.step.relation = StressRelation::equal();
  return result;
}

std::pair<Graph, ReductionStep> inverse_one_extension(const Graph& g, Vertex s, Vertex i, Vertex j) {
  return inverse_extension(g, s, i, j, 3, "inverse_one_extension");
}

std::pair<Graph, ReductionStep> inverse_one_extension_deg4(const Graph& g, Vertex s, Vertex i,
                                                           Vertex j) {
  return inverse_extension(g, s, i, j, 4, "inverse_one_extension_deg4");
}

std::pair<Graph, ReductionTrace> peel_closure(const Graph& g, Vertex start) {
  require_vertex(g, start, "peel_closure");
  if (g.degree(start) != 2) {
    throw ReductionError("peel_closure: start vertex " + std::to_string(start) + " has degree " +
                         std::to_string(g.degree(start)));
  }
  ReductionTrace trace{g, {}, g, StressRelation::equal()};
  Graph cur = g;
  std::vector<bool> removed(g.vertex_count(), false), boundary(g.vertex_count(), false);
  std::vector<Vertex> round{start};
  while (!round.empty()) {
    for (Vertex v : round) {
      removed[v] = true;
      for (Vertex w : cur.neighbors(v)) boundary[w] = true;
      auto [next, step] = delete_vertex(cur, v);
      trace.append(std::move(step), next);
      cur = std::move(next);
    }
    round.clear();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (boundary[v] && !removed[v] && cur.degree(v) > 0 && cur.degree(v) <= 2) round.push_back(v);
    }
  }
  return {std::move(cur), std::move(trace)};
}

}  // namespace rigidity
