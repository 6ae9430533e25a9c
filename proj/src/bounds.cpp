#include "rigidity/bounds.hpp"

#include <array>
#include <chrono>
#include <random>
#include <stdexcept>

#include "rigidity/generators.hpp"
#include "rigidity/pebble.hpp"
#include "rigidity/realization.hpp"
#include "rigidity/rigidity_matrix.hpp"

namespace rigidity {

namespace {

void check_cap(int max_degree) {
  if (max_degree != 4 && max_degree != 5) {
    throw std::invalid_argument("degree cap must be 4 or 5, got " + std::to_string(max_degree));
  }
}

std::optional<std::size_t> regular_degree(const Graph& g) {
  if (g.vertex_count() == 0) return std::nullopt;
  const std::size_t d = g.degree(0);
  for (Vertex v = 1; v < g.vertex_count(); ++v) {
    if (g.degree(v) != d) return std::nullopt;
  }
  return d;
}

void require_regular(const Graph& g, std::size_t d, const char* who) {
  if (regular_degree(g) != d) {
    throw std::invalid_argument(std::string(who) + ": graph is not " + std::to_string(d) +
                                "-regular");
  }
  if (!is_connected(g)) throw std::invalid_argument(std::string(who) + ": graph is disconnected");
}

using Clock = std::chrono::steady_clock;

BoundReport base_report(const Graph& g, std::string graph_id, const VerifyOptions& opts) {
  BoundReport r;
  r.graph_id = std::move(graph_id);
  r.vertex_count = g.vertex_count();
  r.edge_count = g.edge_count();
  const auto rank = certified_rank(g, opts.trials, opts.seed);
  r.rank = rank.rank;
  r.linear_rank = rank.linear_rank;
  r.oracle_agreement = rank.agree();
  r.stress = r.edge_count - r.rank;
  return r;
}

void finish_timing(BoundReport& r, const VerifyOptions& opts, Clock::time_point start) {
  if (opts.timing) {
    r.runtime_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  }
}

BoundReport verify_regular_theorem(const Graph& g, std::string graph_id, VerifyOptions opts,
                                   std::size_t degree) {
  const auto start = Clock::now();
  const bool four = degree == 4;
  require_regular(g, degree, four ? "verify_theorem1" : "verify_theorem2");
  BoundReport r = base_report(g, std::move(graph_id), opts);
  r.check = four ? BoundCheck::theorem1 : BoundCheck::theorem2;
  const Rational n(static_cast<long>(g.vertex_count()));
  r.theorem_bound = four ? Rational(8, 5) * n - 1 : Rational(5, 3) * n - 1;
  r.satisfied = Rational(static_cast<long>(r.rank)) >= r.theorem_bound;
  if (g.edge_count() > 0) {
    const Edge first = g.edges().front();
    r.z_value = lemma_potential(g.without_edges(std::span(&first, 1)), four ? 4 : 5);
  }
  finish_timing(r, opts, start);
  return r;
}

}  // namespace

Rational lemma_potential(const Graph& g, int max_degree) {
  check_cap(max_degree);
  long n3 = 0, n4 = 0, n5 = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    switch (g.degree(v)) {
      case 3: ++n3; break;
      case 4: ++n4; break;
      case 5: ++n5; break;
      default: break;
    }
  }
  const long c = static_cast<long>(nontrivial_component_count(g));
  Rational z = max_degree == 4 ? Rational(n3 + 2 * n4 + 2 * c, 5)
                               : Rational(5 * (n3 + 2 * n4 + 3 * n5 + 2 * c), 18);
  z.canonicalize();
  return z;
}

std::optional<std::string> lemma_hypothesis_violation(const Graph& g, int max_degree) {
  check_cap(max_degree);
  const auto cap = static_cast<std::size_t>(max_degree);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > cap) {
      return "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) +
             " above the cap " + std::to_string(cap);
    }
  }
  auto comps = connected_components(g);
  std::vector<bool> has_edge(comps.count, false), has_low(comps.count, false);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto label = comps.label[v];
    if (g.degree(v) > 0) has_edge[label] = true;
    if (g.degree(v) < cap) has_low[label] = true;
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto label = comps.label[v];
    if (has_edge[label] && !has_low[label]) {
      return "the component of vertex " + std::to_string(v) + " has every degree equal to " +
             std::to_string(cap);
    }
  }
  return std::nullopt;
}

Rational z4(const Graph& g) {
  if (auto why = lemma_hypothesis_violation(g, 4)) throw std::invalid_argument("z4: " + *why);
  return lemma_potential(g, 4);
}

Rational z5(const Graph& g) {
  if (auto why = lemma_hypothesis_violation(g, 5)) throw std::invalid_argument("z5: " + *why);
  return lemma_potential(g, 5);
}

std::string_view to_string(BoundCheck check) {
  switch (check) {
    case BoundCheck::theorem1: return "theorem1";
    case BoundCheck::theorem2: return "theorem2";
    case BoundCheck::lemma4: return "lemma4";
    case BoundCheck::lemma5: return "lemma5";
    case BoundCheck::cubic: return "cubic";
    case BoundCheck::rank_only: return "rank_only";
  }
  return "unknown";
}

Rational BoundReport::gap() const {
  Rational gap = Rational(static_cast<long>(rank)) - theorem_bound;
  gap.canonicalize();
  return gap;
}

BoundReport verify_theorem1(const Graph& g, std::string graph_id, VerifyOptions opts) {
  return verify_regular_theorem(g, std::move(graph_id), opts, 4);
}

BoundReport verify_theorem2(const Graph& g, std::string graph_id, VerifyOptions opts) {
  return verify_regular_theorem(g, std::move(graph_id), opts, 5);
}

BoundReport verify_lemma_bound(const Graph& g, int max_degree, std::string graph_id,
                               VerifyOptions opts) {
  const auto start = Clock::now();
  check_cap(max_degree);
  if (auto why = lemma_hypothesis_violation(g, max_degree)) {
    throw std::invalid_argument("verify_lemma_bound: " + *why);
  }
  BoundReport r = base_report(g, std::move(graph_id), opts);
  r.check = max_degree == 4 ? BoundCheck::lemma4 : BoundCheck::lemma5;
  r.z_value = lemma_potential(g, max_degree);
  r.theorem_bound = Rational(static_cast<long>(r.edge_count)) - r.z_value;
  r.satisfied = Rational(static_cast<long>(r.rank)) >= r.theorem_bound;
  finish_timing(r, opts, start);
  return r;
}

BoundReport verify_cubic(const Graph& g, std::string graph_id, VerifyOptions opts) {
  const auto start = Clock::now();
  require_regular(g, 3, "verify_cubic");
  BoundReport r = base_report(g, std::move(graph_id), opts);
  r.check = BoundCheck::cubic;
  r.theorem_bound = g.vertex_count() == 4 ? 5 : static_cast<long>(g.edge_count());
  r.satisfied = Rational(static_cast<long>(r.rank)) >= r.theorem_bound;
  finish_timing(r, opts, start);
  return r;
}

BoundReport verify_auto(const Graph& g, std::string graph_id, VerifyOptions opts) {
  const auto degree = regular_degree(g);
  if (degree && is_connected(g)) {
    if (*degree == 4) return verify_theorem1(g, std::move(graph_id), opts);
    if (*degree == 5) return verify_theorem2(g, std::move(graph_id), opts);
    if (*degree == 3) return verify_cubic(g, std::move(graph_id), opts);
  }
  const auto start = Clock::now();
  BoundReport r = base_report(g, std::move(graph_id), opts);
  r.check = BoundCheck::rank_only;
  r.satisfied = true;
  finish_timing(r, opts, start);
  return r;
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::k5chain: return "k5chain";
    case Family::k6chain: return "k6chain";
    case Family::random_regular: return "random-regular";
    case Family::complete: return "complete";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::k5chain, Family::k6chain, Family::random_regular, Family::complete}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

Graph generate_family_member(const FamilySpec& spec, std::size_t index, std::uint64_t seed,
                             std::string* graph_id) {
  if (spec.min_size > spec.max_size) throw GeneratorError("empty size range");
  const std::size_t width = spec.max_size - spec.min_size + 1;
  const std::size_t walk = spec.min_size + index % width;
  std::string id;
  Graph g;
  switch (spec.family) {
    case Family::k5chain:
    case Family::k6chain: {
      const std::size_t clique = spec.family == Family::k5chain ? 5 : 6;
      id = std::string(to_string(spec.family)) + "-k" + std::to_string(walk);
      g = clique_chain(clique, walk);
      break;
    }
    case Family::complete:
      id = "complete-" + std::to_string(walk);
      g = complete_graph(walk);
      break;
    case Family::random_regular: {
      const std::uint64_t item_seed = seed + index;
      std::vector<std::size_t> sizes;
      for (std::size_t n = spec.min_size; n <= spec.max_size; ++n) {
        if ((n * spec.degree) % 2 == 0 && spec.degree < n) sizes.push_back(n);
      }
      if (sizes.empty()) {
        throw GeneratorError("no feasible vertex count for degree " + std::to_string(spec.degree) +
                             " in [" + std::to_string(spec.min_size) + ", " +
                             std::to_string(spec.max_size) + "]");
      }
      std::mt19937_64 rng(derive_seed(item_seed, 0x51));
      std::uniform_int_distribution<std::size_t> pick(0, sizes.size() - 1);
      const std::size_t n = sizes[pick(rng)];
      id = "rr-d" + std::to_string(spec.degree) + "-n" + std::to_string(n) + "-s" +
           std::to_string(item_seed);
      g = random_regular(n, spec.degree, item_seed);
      break;
    }
  }
  if (graph_id) *graph_id = std::move(id);
  return g;
}

namespace {

BatchEntry run_entry(const FamilySpec& spec, std::size_t index, std::uint64_t seed,
                     const VerifyOptions& opts) {
  BatchEntry entry;
  entry.index = index;
  try {
    Graph g = generate_family_member(spec, index, seed, &entry.graph_id);
    entry.report = verify_auto(g, entry.graph_id, opts);
  } catch (const std::exception& e) {
    entry.error = e.what();
  }
  return entry;
}

}  // namespace

std::vector<BatchEntry> batch_verify(const FamilySpec& spec, std::size_t count, std::uint64_t seed,
                                     VerifyOptions opts) {
  std::vector<BatchEntry> entries(count);
  const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    entries[static_cast<std::size_t>(i)] = run_entry(spec, static_cast<std::size_t>(i), seed, opts);
  }
  return entries;
}

std::vector<BatchEntry> batch_verify_serial(const FamilySpec& spec, std::size_t count,
                                            std::uint64_t seed, VerifyOptions opts) {
  std::vector<BatchEntry> entries;
  entries.reserve(count);
  for (std::size_t i = 0; i < count; ++i) entries.push_back(run_entry(spec, i, seed, opts));
  return entries;
}

BatchSummary summarize(const std::vector<BatchEntry>& entries) {
  BatchSummary s;
  for (const auto& e : entries) {
    ++s.total;
    if (!e.report) {
      ++s.errors;
      continue;
    }
    const auto& r = *e.report;
    if (!r.oracle_agreement) ++s.oracle_mismatches;
    r.satisfied ? ++s.satisfied : ++s.violated;
    const Rational gap = r.gap();
    if (sgn(gap) == 0) ++s.tight;
    if (!s.min_gap || gap < *s.min_gap) s.min_gap = gap;
    if (!s.max_gap || gap > *s.max_gap) s.max_gap = gap;
  }
  return s;
}

OracleSweepResult oracle_agreement_sweep(std::size_t count, std::size_t max_vertices,
                                         std::uint64_t seed, int trials) {
  if (max_vertices < 2) throw std::invalid_argument("oracle sweep needs at least 2 vertices");
  static constexpr std::array<double, 6> kDensities{0.1, 0.25, 0.4, 0.55, 0.7, 0.9};
  OracleSweepResult result;
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t item_seed = derive_seed(seed, i);
    std::mt19937_64 rng(item_seed);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, max_vertices)(rng);
    const double p = kDensities[i % kDensities.size()];
    Graph g = random_gnp(n, p, item_seed);
    ++result.graphs;
    if (!certified_rank(g, trials, item_seed).agree()) result.mismatches.emplace_back(item_seed, g);
  }
  return result;
}

}  // namespace rigidity
