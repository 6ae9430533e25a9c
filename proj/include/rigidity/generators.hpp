#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>

#include "rigidity/graph.hpp"

namespace rigidity {

class GeneratorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Graph complete_graph(std::size_t n);

/// k copies of K_n minus one edge, wired in a cycle.
///
/// Copy t occupies vertices t*n .. t*n+n-1 and misses the edge between its
/// first two vertices a_t = t*n and b_t = t*n+1. The connecting edges are
/// b_t -- a_{(t+1) mod k}, which restores degree n-1 everywhere.
/// clique_size must be 5 or 6 and k >= 2.
Graph clique_chain(std::size_t clique_size, std::size_t k);

/// Simple connected d-regular graph from the pairing model with full
/// rejection. Deterministic in seed. Throws GeneratorError when n*d is odd,
/// d >= n, or no acceptable pairing turns up within max_attempts.
Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed,
                     std::size_t max_attempts = 200000);

/// G(n, p) random graph; deterministic in seed.
Graph random_gnp(std::size_t n, double p, std::uint64_t seed);

/// Vertex-disjoint union; the second graph's ids are shifted by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace rigidity
