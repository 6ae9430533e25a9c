#include <algorithm>
#include <array>
#include <optional>

#include "rigidity/bounds.hpp"
#include "rigidity/pebble.hpp"
#include "rigidity/reductions.hpp"

namespace rigidity {

namespace {

constexpr int kStressTrials = 2;

std::string vertex_text(Vertex v) { return std::to_string(v); }

class CertifyDriver {
 public:
  CertifyDriver(const Graph& g, int cap, std::uint64_t seed)
      : cap_(cap), seed_(seed), cur_(g), closed_(g.vertex_count(), false) {
    cert_.max_degree = cap;
    cert_.trace = ReductionTrace{g, {}, g, StressRelation::equal()};
    cert_.z_bound = lemma_potential(g, cap);
    cert_.z_values.push_back(cert_.z_bound);
    stress_ = stress_of(g);
    cert_.initial_stress = stress_;
  }

  StressCertificate run() {
    while (select_component()) {
      if (cap_ == 4 ? step_degree4() : step_degree5()) continue;
      throw ReductionError("certify: no case applies to the component of vertex " +
                           vertex_text(members_.front()));
    }
    finish();
    return std::move(cert_);
  }

 private:
  long long stress_of(const Graph& g) const {
    return static_cast<long long>(certified_stress(g, kStressTrials, seed_));
  }

  // Picks the lowest-id component with edges that is not yet closed as a base case.
  bool select_component() {
    const Components comps = connected_components(cur_);
    std::vector<Vertex> root(comps.count, static_cast<Vertex>(cur_.vertex_count()));
    for (Vertex v = 0; v < cur_.vertex_count(); ++v) {
      root[comps.label[v]] = std::min(root[comps.label[v]], v);
    }
    members_.clear();
    in_component_.assign(cur_.vertex_count(), false);
    for (Vertex v = 0; v < cur_.vertex_count(); ++v) {
      const Vertex r = root[comps.label[v]];
      if (cur_.degree(v) == 0 || closed_[r]) continue;
      for (Vertex w = 0; w < cur_.vertex_count(); ++w) {
        if (comps.label[w] == comps.label[v]) {
          members_.push_back(w);
          in_component_[w] = true;
        }
      }
      root_ = r;
      return true;
    }
    return false;
  }

  std::optional<Vertex> lowest_of_degree(std::size_t degree) const {
    for (Vertex v : members_) {
      if (cur_.degree(v) == degree) return v;
    }
    return std::nullopt;
  }

  void commit(ReductionStep step, Graph next, std::string rule) {
    step.rule = std::move(rule);
    if (apply_step(cur_, step) != next) {
      throw ReductionError("certify: step " + step.rule + " does not reproduce its post graph");
    }
    const long long after = stress_of(next);
    step.stress_before = stress_;
    step.stress_after = after;
    if (!step.relation.holds(stress_, after)) {
      throw ReductionError("certify: step " + step.rule + " breaks its relation " +
                           step.relation.describe() + " (" + std::to_string(stress_) + " -> " +
                           std::to_string(after) + ")");
    }
    const Rational z_next = lemma_potential(next, cap_);
    if (cert_.z_values.back() - z_next < step.relation.offset) {
      throw ReductionError("certify: step " + step.rule + " lowers the potential from " +
                           to_string(cert_.z_values.back()) + " to " + to_string(z_next) +
                           ", less than its offset");
    }
    if (auto why = lemma_hypothesis_violation(next, cap_)) {
      throw ReductionError("certify: step " + step.rule + " leaves the lemma hypotheses: " + *why);
    }
    cert_.offset += step.relation.offset;
    cert_.z_values.push_back(z_next);
    cert_.trace.append(std::move(step), next);
    cur_ = std::move(next);
    stress_ = after;
  }

  // Closes the current component after checking s <= z on it directly.
  void close_base_case(const char* name) {
    const Graph piece = cur_.induced(in_component_);
    const long long s = stress_of(piece);
    const Rational z = lemma_potential(piece, cap_);
    if (Rational(static_cast<long>(s)) > z) {
      throw ReductionError(std::string("certify: base case ") + name + " has s = " +
                           std::to_string(s) + " above z = " + to_string(z));
    }
    closed_[root_] = true;
  }

  bool pendant() {
    auto v = lowest_of_degree(1);
    if (!v) return false;
    auto [next, step] = delete_vertex(cur_, *v);
    commit(std::move(step), std::move(next), "pendant");
    return true;
  }

  // The whole peel is one step: the potential only drops over the full closure.
  bool peel() {
    auto v = lowest_of_degree(2);
    if (!v) return false;
    auto [next, trace] = peel_closure(cur_, *v);
    ReductionStep step;
    step.kind = ReductionKind::peel_closure;
    for (const auto& inner : trace.steps) {
      step.removed_vertices.insert(step.removed_vertices.end(), inner.removed_vertices.begin(),
                                   inner.removed_vertices.end());
      step.removed_edges.insert(step.removed_edges.end(), inner.removed_edges.begin(),
                                inner.removed_edges.end());
    }
    std::sort(step.removed_edges.begin(), step.removed_edges.end());
    step.relation = trace.accumulated;
    commit(std::move(step), std::move(next), "peel");
    return true;
  }

  bool small_cut() {
    const CutReport cuts = cut_analysis(cur_);
    for (const Edge& e : cuts.bridges) {
      if (!in_component_[e.u]) continue;
      auto [next, step] = remove_bridge(cur_, e);
      commit(std::move(step), std::move(next), "bridge");
      return true;
    }
    for (const auto& [e1, e2] : cuts.two_edge_cuts) {
      if (!in_component_[e1.u]) continue;
      auto [next, step] = remove_two_cut(cur_, e1, e2);
      commit(std::move(step), std::move(next), "two-edge-cut");
      return true;
    }
    return false;
  }

  // First neighbour pair of v, in lexicographic order, with no edge between.
  std::optional<std::pair<Vertex, Vertex>> missing_pair(Vertex v) const {
    const auto nb = cur_.neighbors(v);
    for (std::size_t a = 0; a < nb.size(); ++a)
      for (std::size_t b = a + 1; b < nb.size(); ++b)
        if (!cur_.has_edge(nb[a], nb[b])) return std::pair{nb[a], nb[b]};
    return std::nullopt;
  }

  bool inverse_extension(std::size_t degree) {
    for (Vertex v : members_) {
      if (cur_.degree(v) != degree) continue;
      auto pair = missing_pair(v);
      if (!pair) continue;
      auto [next, step] = degree == 3 ? inverse_one_extension(cur_, v, pair->first, pair->second)
                                      : inverse_one_extension_deg4(cur_, v, pair->first, pair->second);
      commit(std::move(step), std::move(next),
             degree == 3 ? "inverse-one-extension" : "inverse-one-extension-deg4");
      return true;
    }
    return false;
  }

  // The one edge from clique member w to a vertex outside the clique.
  Vertex external_neighbor(Vertex w, std::span<const Vertex> clique) const {
    for (Vertex x : cur_.neighbors(w)) {
      if (std::find(clique.begin(), clique.end(), x) == clique.end()) return x;
    }
    throw ReductionError("certify: clique vertex " + vertex_text(w) + " has no outside neighbour");
  }

  void split(std::span<const Edge> cut, std::string rule) {
    auto result = disconnect_split(cur_, cut, seed_);
    commit(std::move(result.step), cur_.without_edges(cut), std::move(rule));
  }

  bool step_degree4() {
    if (pendant() || peel() || small_cut() || inverse_extension(3)) return true;
    auto s = lowest_of_degree(3);
    if (!s) return false;
    const auto nb = cur_.neighbors(*s);
    const std::array<Vertex, 4> clique{*s, nb[0], nb[1], nb[2]};
    const auto inner = {nb[0], nb[1], nb[2]};
    if (std::all_of(inner.begin(), inner.end(), [&](Vertex w) { return cur_.degree(w) == 3; })) {
      close_base_case("K4");
      return true;
    }
    if (!std::all_of(inner.begin(), inner.end(), [&](Vertex w) { return cur_.degree(w) == 4; })) {
      throw ReductionError("certify: mixed degrees around the clique at vertex " + vertex_text(*s));
    }
    std::vector<Edge> cut;
    std::vector<Vertex> outside;
    for (Vertex w : inner) {
      outside.push_back(external_neighbor(w, clique));
      cut.emplace_back(w, outside.back());
    }
    const bool all_equal = outside[0] == outside[1] && outside[1] == outside[2];
    if (all_equal && cur_.degree(outside[0]) == 3) {
      close_base_case("K5 minus an edge");
      return true;
    }
    if (all_equal) throw ReductionError("certify: three cut edges meet a degree-4 vertex");
    const bool two_equal =
        outside[0] == outside[1] || outside[1] == outside[2] || outside[0] == outside[2];
    split(cut, two_equal ? "clique-split-shared-end" : "clique-split-distinct-ends");
    return true;
  }

  bool step_degree5() {
    if (pendant() || peel() || small_cut()) return true;
    if (auto v = lowest_of_degree(3)) {
      auto [next, step] = delete_vertex(cur_, *v);
      commit(std::move(step), std::move(next), "delete-degree3");
      return true;
    }
    if (inverse_extension(4)) return true;
    auto s = lowest_of_degree(4);
    if (!s) return false;
    const auto nb = cur_.neighbors(*s);
    const std::array<Vertex, 5> clique{*s, nb[0], nb[1], nb[2], nb[3]};
    std::vector<Vertex> high;
    for (Vertex w : nb) {
      if (cur_.degree(w) == 5) high.push_back(w);
    }
    if (high.empty()) {
      close_base_case("K5");
      return true;
    }
    std::vector<Edge> cut;
    std::vector<Vertex> outside;
    for (Vertex w : high) {
      outside.push_back(external_neighbor(w, clique));
      cut.emplace_back(w, outside.back());
    }
    if (high.size() == 3) {
      split(cut, "clique-split-three-edge");
      return true;
    }
    if (high.size() != 4) {
      throw ReductionError("certify: " + std::to_string(high.size()) +
                           " degree-5 vertices around the clique at vertex " + vertex_text(*s));
    }
    const bool all_equal = std::all_of(outside.begin(), outside.end(),
                                       [&](Vertex x) { return x == outside[0]; });
    if (all_equal && cur_.degree(outside[0]) == 4) {
      close_base_case("K6 minus an edge");
      return true;
    }
    if (all_equal) throw ReductionError("certify: four cut edges meet a degree-5 vertex");
    four_edge_split(cut, outside);
    return true;
  }

  // Removes all four cut edges at once with s(pre) <= s(post) + 1: dropping one
  // cut edge costs at most one stress, and the remaining three edges form a cut
  // the disconnecting rule accepts. The dropped edge leaves the other three
  // outside ends not all equal.
  void four_edge_split(std::vector<Edge> cut, const std::vector<Vertex>& outside) {
    std::size_t drop = cut.size() - 1;
    for (std::size_t d = 0; d < cut.size(); ++d) {
      std::vector<Vertex> rest;
      for (std::size_t k = 0; k < cut.size(); ++k)
        if (k != d) rest.push_back(outside[k]);
      if (!(rest[0] == rest[1] && rest[1] == rest[2])) {
        drop = d;
        break;
      }
    }
    const Edge dropped = cut[drop];
    const Graph reduced = cur_.without_edges(std::span(&dropped, 1));
    std::vector<Edge> sub_cut;
    for (std::size_t k = 0; k < cut.size(); ++k)
      if (k != drop) sub_cut.push_back(cut[k]);
    disconnect_split(reduced, sub_cut, seed_);

    ReductionStep step;
    step.kind = ReductionKind::disconnect_split;
    std::sort(cut.begin(), cut.end());
    step.removed_edges = cut;
    step.relation = StressRelation::le_plus(1);
    commit(std::move(step), cur_.without_edges(cut), "clique-split-four-edge");
  }

  void finish() {
    const long long final_stress = stress_;
    cert_.final_stress = final_stress;
    const Rational& z_final = cert_.z_values.back();
    if (Rational(static_cast<long>(final_stress)) > z_final) {
      throw ReductionError("certify: final graph has s = " + std::to_string(final_stress) +
                           " above z = " + to_string(z_final));
    }
    if (cert_.initial_stress > final_stress + cert_.offset) {
      throw ReductionError("certify: accumulated relation fails on the actual stress counts");
    }
    if (Rational(static_cast<long>(final_stress + cert_.offset)) > cert_.z_bound) {
      throw ReductionError("certify: s(final) + offset exceeds z(initial)");
    }
  }

  int cap_;
  std::uint64_t seed_;
  Graph cur_;
  long long stress_ = 0;
  std::vector<bool> closed_;  // by component root (lowest vertex id)
  std::vector<Vertex> members_;
  std::vector<bool> in_component_;
  Vertex root_ = 0;
  StressCertificate cert_;
};

}  // namespace

StressCertificate certify_stress_bound(const Graph& g, int max_degree, std::uint64_t seed) {
  if (max_degree != 4 && max_degree != 5) {
    throw std::invalid_argument("certify_stress_bound: degree cap must be 4 or 5");
  }
  if (auto why = lemma_hypothesis_violation(g, max_degree)) {
    throw std::invalid_argument("certify_stress_bound: " + *why);
  }
  return CertifyDriver(g, max_degree, seed).run();
}

}  // namespace rigidity
