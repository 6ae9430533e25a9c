#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rigidity/graph.hpp"
#include "rigidity/scalar.hpp"

namespace rigidity {

/// Degree census potential without any hypothesis check:
///   max_degree 4: (n3 + 2 n4 + 2c) / 5
///   max_degree 5: 5 (n3 + 2 n4 + 3 n5 + 2c) / 18
/// where n_i counts vertices of degree i and c counts components with an edge.
Rational lemma_potential(const Graph& g, int max_degree);

/// Describes why g falls outside the lemma (a vertex above the cap, or a
/// component with edges whose vertices all sit at the cap); nullopt if it fits.
std::optional<std::string> lemma_hypothesis_violation(const Graph& g, int max_degree);

/// Potentials with the hypotheses enforced (std::invalid_argument otherwise).
Rational z4(const Graph& g);
Rational z5(const Graph& g);

enum class BoundCheck { theorem1, theorem2, lemma4, lemma5, cubic, rank_only };
std::string_view to_string(BoundCheck check);

struct BoundReport {
  std::string graph_id;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::size_t rank = 0;    // pebble rank (authoritative)
  std::size_t stress = 0;  // edge_count - rank
  Rational z_value;        // lemma potential of the graph the bound is argued on
  Rational theorem_bound;  // lower bound on rank being checked
  bool satisfied = false;  // rank >= theorem_bound
  bool oracle_agreement = false;
  std::optional<double> runtime_ms;

  BoundCheck check = BoundCheck::rank_only;
  std::size_t linear_rank = 0;
  /// rank - theorem_bound; equals z - stress for lemma checks.
  Rational gap() const;
};

struct VerifyOptions {
  int trials = 3;
  std::uint64_t seed = 0;
  bool timing = false;
};

/// Connected 4-regular graph: r >= 8|V|/5 - 1. z_value is the potential of g
/// minus its first edge, the graph the lemma is applied to.
BoundReport verify_theorem1(const Graph& g, std::string graph_id = {}, VerifyOptions opts = {});
/// Connected 5-regular graph: r >= 5|V|/3 - 1.
BoundReport verify_theorem2(const Graph& g, std::string graph_id = {}, VerifyOptions opts = {});
/// s <= z under the lemma hypotheses (max_degree 4 or 5), phrased as
/// rank >= |E| - z so the report reads like the theorem checks.
BoundReport verify_lemma_bound(const Graph& g, int max_degree, std::string graph_id = {},
                               VerifyOptions opts = {});
/// Connected 3-regular graph: r = |E| when |V| >= 6, r = 5 for K4.
BoundReport verify_cubic(const Graph& g, std::string graph_id = {}, VerifyOptions opts = {});
/// Picks the check from the regularity degree (3, 4 or 5); anything else gets a
/// rank-only report with bound 0.
BoundReport verify_auto(const Graph& g, std::string graph_id = {}, VerifyOptions opts = {});

enum class Family { k5chain, k6chain, random_regular, complete };
std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view name);

struct FamilySpec {
  Family family = Family::random_regular;
  std::size_t degree = 4;    // random_regular only
  std::size_t min_size = 6;  // vertices (random_regular, complete) or copies (chains)
  std::size_t max_size = 6;
};

/// Member `index` of a family batch. Chains and complete graphs walk the size
/// range in order; random regular item i uses seed + i and draws its vertex
/// count from the feasible sizes in range.
Graph generate_family_member(const FamilySpec& spec, std::size_t index, std::uint64_t seed,
                             std::string* graph_id = nullptr);

struct BatchEntry {
  std::size_t index = 0;
  std::string graph_id;
  std::optional<BoundReport> report;
  std::string error;  // set when generation or verification failed
};

/// Runs verify_auto on `count` family members in parallel; results are in index order.
std::vector<BatchEntry> batch_verify(const FamilySpec& spec, std::size_t count, std::uint64_t seed,
                                     VerifyOptions opts = {});
/// Same computation on one thread, kept as the reference for the parallel version.
std::vector<BatchEntry> batch_verify_serial(const FamilySpec& spec, std::size_t count,
                                            std::uint64_t seed, VerifyOptions opts = {});

struct BatchSummary {
  std::size_t total = 0;
  std::size_t satisfied = 0;
  std::size_t violated = 0;
  std::size_t errors = 0;
  std::size_t oracle_mismatches = 0;
  std::size_t tight = 0;  // gap == 0
  std::optional<Rational> min_gap;
  std::optional<Rational> max_gap;
  bool all_pass() const { return violated == 0 && errors == 0 && oracle_mismatches == 0; }
};

BatchSummary summarize(const std::vector<BatchEntry>& entries);

struct OracleSweepResult {
  std::size_t graphs = 0;
  /// Seeds (per item) and graphs where pebble and linear-algebra ranks differ.
  std::vector<std::pair<std::uint64_t, Graph>> mismatches;
};

/// Pebble rank against generic rank on `count` G(n, p) graphs with
/// n in [2, max_vertices] and p drawn from a spread of densities.
OracleSweepResult oracle_agreement_sweep(std::size_t count, std::size_t max_vertices,
                                         std::uint64_t seed, int trials = 3);

}  // namespace rigidity
