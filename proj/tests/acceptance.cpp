// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "properties.hpp"
#include "rigidity/bounds.hpp"
#include "rigidity/generators.hpp"
#include "rigidity/pebble.hpp"
#include "rigidity/realization.hpp"
#include "rigidity/reductions.hpp"
#include "rigidity/rigidity_matrix.hpp"

using namespace rigidity;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

// Every graph the criteria touch, for the oracle-agreement pass.
std::vector<std::pair<std::string, Graph>> corpus;

void remember(std::string id, const Graph& g) { corpus.emplace_back(std::move(id), g); }

Graph without_first_edge(const Graph& g) {
  const Edge e = g.edges().front();
  return g.without_edges(std::span(&e, 1));
}

std::string str(const Rational& q) { return q.get_str(); }

Outcome complete_graphs() {
  Outcome out;
  const auto k5 = verify_theorem1(complete_graph(5), "K5");
  const auto k6 = verify_theorem2(complete_graph(6), "K6");
  remember("K5", complete_graph(5));
  remember("K6", complete_graph(6));
  if (k5.rank != 7 || k5.linear_rank != 7) out.fail("r(K5) != 7");
  if (k6.rank != 9 || k6.linear_rank != 9) out.fail("r(K6) != 9");
  if (k5.theorem_bound != 7 || k5.gap() != 0) out.fail("K5 not tight: bound " + str(k5.theorem_bound));
  if (k6.theorem_bound != 9 || k6.gap() != 0) out.fail("K6 not tight: bound " + str(k6.theorem_bound));
  if (out.ok) out.detail = "r(K5)=7=8*5/5-1, r(K6)=9=5*6/3-1";
  return out;
}

Outcome clique_chains() {
  Outcome out;
  for (std::size_t k = 2; k <= 6; ++k) {
    const Graph g = clique_chain(5, k);
    remember("k5chain-" + std::to_string(k), g);
    const auto r = certified_rank(g);
    if (r.rank != 8 * k || r.linear_rank != 8 * k)
      out.fail("clique_chain(5," + std::to_string(k) + "): pebble " + std::to_string(r.rank) + ", linear " +
               std::to_string(r.linear_rank));
  }
  for (std::size_t k = 2; k <= 5; ++k) {
    const Graph g = clique_chain(6, k);
    remember("k6chain-" + std::to_string(k), g);
    const auto r = certified_rank(g);
    if (r.rank != 10 * k || r.linear_rank != 10 * k)
      out.fail("clique_chain(6," + std::to_string(k) + "): pebble " + std::to_string(r.rank) + ", linear " +
               std::to_string(r.linear_rank));
  }
  if (out.ok) out.detail = "r = 8k (k=2..6) and 10k (k=2..5)";
  return out;
}

// Criterion 3/4 graphs, reused by the certificate criterion.
std::vector<Graph> regular4, regular5;

Outcome regular_sweep(std::size_t degree, std::size_t max_n, std::vector<Graph>& keep) {
  Outcome out;
  const FamilySpec spec{Family::random_regular, degree, 6, max_n};
  std::size_t tight = 0, min_n = max_n, max_seen = 0;
  for (std::size_t seed = 0; seed < 200; ++seed) {
    std::string id;
    const Graph g = generate_family_member(spec, 0, seed, &id);
    keep.push_back(g);
    remember(id, g);
    min_n = std::min(min_n, g.vertex_count());
    max_seen = std::max(max_seen, g.vertex_count());
    const auto r = degree == 4 ? verify_theorem1(g, id) : verify_theorem2(g, id);
    if (!r.satisfied) out.fail(id + ": rank " + std::to_string(r.rank) + " < " + str(r.theorem_bound));
    if (!r.oracle_agreement) out.fail(id + ": oracle mismatch");
    tight += r.gap() == 0;
  }
  if (out.ok) {
    out.detail = "200 graphs, n in [" + std::to_string(min_n) + "," + std::to_string(max_seen) +
                 "], 0 failures, " + std::to_string(tight) + " tight";
  }
  return out;
}

Outcome cubic() {
  Outcome out;
  const FamilySpec spec{Family::random_regular, 3, 6, 40};
  for (std::size_t seed = 0; seed < 100; ++seed) {
    std::string id;
    const Graph g = generate_family_member(spec, 0, seed, &id);
    remember(id, g);
    const auto r = verify_cubic(g, id);
    if (r.rank != g.edge_count()) out.fail(id + ": rank " + std::to_string(r.rank) + " != |E|");
  }
  const auto k4 = verify_cubic(complete_graph(4), "K4");
  remember("K4", complete_graph(4));
  if (k4.rank != 5) out.fail("r(K4) = " + std::to_string(k4.rank));
  if (out.ok) out.detail = "100 cubic graphs with r=|E|, r(K4)=5";
  return out;
}

// Runs after the others so the corpus is complete.
Outcome oracle_agreement() {
  Outcome out;
  const auto sweep = oracle_agreement_sweep(500, 15, 0);
  if (sweep.graphs != 500) out.fail("sweep covered " + std::to_string(sweep.graphs) + " graphs");
  for (const auto& [seed, g] : sweep.mismatches) out.fail("random graph at item seed " + std::to_string(seed));
  for (const auto& [id, g] : corpus) {
    const std::size_t pebble = pebble_rank(g);
    const std::size_t linear = generic_rank(g, 3, 0);
    if (pebble != linear) out.fail(id + ": pebble " + std::to_string(pebble) + ", linear " + std::to_string(linear));
  }
  if (out.ok) out.detail = "500 random + " + std::to_string(corpus.size()) + " acceptance graphs agree";
  return out;
}

Outcome base_cases() {
  Outcome out;
  const Graph k5e = without_first_edge(complete_graph(5));
  const Graph k6e = without_first_edge(complete_graph(6));
  remember("K5-e", k5e);
  remember("K6-e", k6e);
  const auto s4 = certified_stress(k5e, 3), s5 = certified_stress(k6e, 3);
  if (s4 != 2 || z4(k5e) != 2) out.fail("K5-e: s=" + std::to_string(s4) + ", z4=" + str(z4(k5e)));
  if (s5 != 5 || z5(k6e) != 5) out.fail("K6-e: s=" + std::to_string(s5) + ", z5=" + str(z5(k6e)));
  if (out.ok) out.detail = "s(K5-e)=2=z4, s(K6-e)=5=z5";
  return out;
}

Outcome reduction_properties() {
  using namespace testing_support;
  Outcome out;
  const std::pair<const char*, Trial (*)(std::mt19937_64&)> props[] = {
      {"low-degree deletion", &low_degree_deletion_trial},
      {"bridge removal", &bridge_removal_trial},
      {"two-cut removal", &two_cut_removal_trial},
      {"disconnect split", &disconnect_split_trial},
      {"inverse one-extension", &inverse_extension_trial},
      {"inverse one-extension deg4", &inverse_extension_deg4_trial},
  };
  std::uint64_t seed = 1000;
  for (const auto& [name, trial] : props) {
    const auto run = run_property(trial, 200, seed++);
    if (run.applicable < 200) out.fail(std::string(name) + ": only " + std::to_string(run.applicable) + " trials");
    if (run.failures > 0) out.fail(std::string(name) + ": " + run.first_failure);
  }
  if (out.ok) out.detail = "6 properties x 200 trials";
  return out;
}

Outcome restriction() {
  Outcome out;
  std::size_t graphs = 0, checks = 0;
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const Graph& g : testing_support::nonisomorphic_graphs(n)) {
      const auto r = sample_field_realization(g, derive_seed(n, graphs));
      ++graphs;
      std::vector<Vertex> subset;
      for (unsigned mask = 1; mask < (1u << n); ++mask) {
        subset.clear();
        for (Vertex v = 0; v < n; ++v)
          if (mask >> v & 1) subset.push_back(v);
        ++checks;
        if (!restriction_containment(g, r, std::span<const Vertex>(subset))) {
          std::ostringstream why;
          why << "fails on a " << n << "-vertex graph with " << g.edge_count() << " edges, subset mask " << mask;
          out.fail(why.str());
        }
      }
    }
  }
  if (out.ok) out.detail = std::to_string(graphs) + " graphs, " + std::to_string(checks) + " subsets";
  return out;
}

Outcome certificates() {
  Outcome out;
  std::size_t steps = 0;
  auto run = [&](const std::vector<Graph>& graphs, int cap) {
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const Graph g = without_first_edge(graphs[i]);
      try {
        const auto cert = certify_stress_bound(g, cap, i);
        steps += cert.trace.steps.size();
        if (Rational(static_cast<long>(cert.final_stress)) > cert.z_values.back())
          out.fail("cap " + std::to_string(cap) + " seed " + std::to_string(i) + ": final s > z");
      } catch (const std::exception& e) {
        out.fail("cap " + std::to_string(cap) + " seed " + std::to_string(i) + ": " + e.what());
      }
    }
  };
  run(regular4, 4);
  run(regular5, 5);
  if (out.ok) out.detail = "400 certificates, " + std::to_string(steps) + " checked steps";
  return out;
}

Outcome h1() {
  Outcome out;
  const auto chain = h1_dimension(clique_chain(5, 3)), k5 = h1_dimension(complete_graph(5));
  if (chain != 6) out.fail("h1(clique_chain(5,3)) = " + std::to_string(chain));
  if (k5 != 3) out.fail("h1(K5) = " + std::to_string(k5));
  if (out.ok) out.detail = "h1 = 6 and 3";
  return out;
}

struct Criterion {
  int number;
  const char* name;
  std::optional<double> limit_s;
  std::function<Outcome()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "complete graphs K5, K6", 1.0, complete_graphs},
      {2, "clique chains", 5.0, clique_chains},
      {3, "4-regular sweep", 60.0, [] { return regular_sweep(4, 40, regular4); }},
      {4, "5-regular sweep", 60.0, [] { return regular_sweep(5, 36, regular5); }},
      {5, "cubic graphs", std::nullopt, cubic},
      {7, "lemma base cases", std::nullopt, base_cases},
      {8, "reduction properties", std::nullopt, reduction_properties},
      {9, "restriction containment", 120.0, restriction},
      {10, "stress certificates", std::nullopt, certificates},
      {11, "H1 dimensions", std::nullopt, h1},
      {6, "oracle agreement", std::nullopt, oracle_agreement},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.body();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s && secs > *c.limit_s) {
      out.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(*c.limit_s) + " s");
    }
    failures += !out.ok;
    std::printf("%s criterion %d (%s): %s [%.2f s]\n", out.ok ? "PASS" : "FAIL", c.number, c.name,
                out.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%s: %d of %zu criteria failed\n", failures ? "FAIL" : "PASS", failures, criteria.size());
  return failures ? 1 : 0;
}
