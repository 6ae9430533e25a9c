#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rigidity/graph.hpp"
#include "rigidity/scalar.hpp"

namespace rigidity {

enum class ReductionKind {
  delete_low_degree_vertex,
  delete_vertex_general,
  remove_bridge,
  remove_two_cut,
  disconnect_split,
  inverse_one_extension,
  inverse_one_extension_deg4,
  peel_closure,
};

std::string_view to_string(ReductionKind kind);
std::optional<ReductionKind> parse_reduction_kind(std::string_view name);

/// Relation between the stress counts before and after a step:
/// equal: s(pre) = s(post); le: s(pre) <= s(post); le_plus(k): s(pre) <= s(post) + k.
struct StressRelation {
  enum class Kind { equal, le, le_plus };
  Kind kind = Kind::equal;
  int offset = 0;

  static StressRelation equal() { return {Kind::equal, 0}; }
  static StressRelation le() { return {Kind::le, 0}; }
  static StressRelation le_plus(int k) { return {Kind::le_plus, k}; }

  bool holds(long long s_pre, long long s_post) const {
    return kind == Kind::equal ? s_pre == s_post : s_pre <= s_post + offset;
  }
  std::string describe() const;

  friend bool operator==(const StressRelation&, const StressRelation&) = default;
};

/// Relation of s(first pre) to s(second post) when two steps are chained.
StressRelation compose(const StressRelation& first, const StressRelation& second);

struct ReductionStep {
  ReductionKind kind{};
  std::string rule;  // which case of the induction produced the step, if any
  std::vector<Vertex> removed_vertices;
  std::vector<Edge> removed_edges;
  std::vector<Edge> added_edges;
  StressRelation relation;
  // Filled in when the step is checked against actual ranks.
  std::optional<long long> stress_before;
  std::optional<long long> stress_after;
};

/// Applies the step's edge edits. Removed vertices stay as isolated ids.
/// Throws std::invalid_argument if the edits do not fit the graph or a
/// removed vertex keeps an edge.
Graph apply_step(const Graph& g, const ReductionStep& step);

struct ReductionTrace {
  Graph initial_graph;
  std::vector<ReductionStep> steps;
  Graph final_graph;
  /// s(initial) related to s(final).
  StressRelation accumulated;

  void append(ReductionStep step, Graph next);
};

class ReductionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Removes v's edges. Degree <= 2 gives an equal relation; otherwise
/// s(pre) <= s(post) + (deg - 2) (and s(post) <= s(pre)).
std::pair<Graph, ReductionStep> delete_vertex(const Graph& g, Vertex v);

/// Throws ReductionError unless e is a bridge.
std::pair<Graph, ReductionStep> remove_bridge(const Graph& g, Edge e);

/// Throws ReductionError unless neither edge alone disconnects and both
/// together add exactly one component.
std::pair<Graph, ReductionStep> remove_two_cut(const Graph& g, Edge e1, Edge e2);

struct SplitResult {
  Graph first;   // side holding the lower endpoint of the first cut edge
  Graph second;
  ReductionStep step;  // post graph = g minus the cut; relation equal
};

/// Auxiliary graph K(V3) ∪ K(V4) ∪ cut, with V3/V4 the cut endpoints on each side.
Graph split_auxiliary_graph(const Graph& g, std::span<const Edge> cut,
                            const std::vector<bool>& first_side);

/// Removes a cut that splits one component into exactly two connected parts,
/// provided the auxiliary graph has no stress (checked through generic rank).
/// Then s(g) = s(first) + s(second) over the split component.
SplitResult disconnect_split(const Graph& g, std::span<const Edge> cut, std::uint64_t seed = 0);

/// Degree-3 vertex s with neighbours {i, j, k} and (i, j) absent: drop s's
/// edges, add (i, j). s(pre) <= s(post).
std::pair<Graph, ReductionStep> inverse_one_extension(const Graph& g, Vertex s, Vertex i, Vertex j);

/// Degree-4 variant: s(pre) <= s(post) + 1.
std::pair<Graph, ReductionStep> inverse_one_extension_deg4(const Graph& g, Vertex s, Vertex i,
                                                           Vertex j);

/// Deletes the degree-2 start vertex, then repeatedly every vertex of residual
/// degree <= 2 adjacent to the removed region, one round at a time. Each
/// deletion is a delete_low_degree_vertex step, so s is unchanged.
std::pair<Graph, ReductionTrace> peel_closure(const Graph& g, Vertex start);

struct StressCertificate {
  ReductionTrace trace;
  int max_degree = 4;
  Rational z_bound;  // z(initial)
  long long initial_stress = 0;
  long long final_stress = 0;
  /// Sum of the le_plus offsets along the trace.
  long long offset = 0;
  /// Per-step potential values, z_values[i] for the graph before step i and
  /// z_values.back() for the final graph.
  std::vector<Rational> z_values;
};

/// Replays the case analysis behind the degree-4 / degree-5 stress bounds.
///
/// Cases in order: pendant deletion; peel from a degree-2 vertex; bridge;
/// two-edge cut; (degree 4) inverse one-extension at a degree-3 vertex or
/// (degree 5) deletion of a degree-3 vertex then inverse one-extension at a
/// degree-4 vertex; finally the clique patterns, split off with the
/// disconnecting rule or closed as base cases. The lowest qualifying vertex or
/// edge is used each time. Every step's relation is checked against certified
/// stress counts, every step must lower the potential by at least its offset,
/// and the final graph must satisfy s <= z. Throws
/// std::invalid_argument when the hypotheses fail and ReductionError when the
/// certificate cannot be completed.
StressCertificate certify_stress_bound(const Graph& g, int max_degree, std::uint64_t seed = 0);

}  // namespace rigidity
