#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "rigidity/graph.hpp"

namespace testing_support {

using rigidity::Edge;
using rigidity::Graph;
using rigidity::Vertex;

/// Component count by union-find, independent of the library's search.
std::size_t count_components(std::size_t n, std::span<const Edge> edges);

/// Every vertex subset of size >= 2 spans at most 2k - 3 of the edges.
/// Exhaustive over subsets, so n should stay small (<= 16).
bool is_sparse_23(std::size_t n, std::span<const Edge> edges);

/// Rigidity matroid rank: greedy over lexicographic edges with is_sparse_23
/// as the independence test.
std::size_t sparsity_rank(const Graph& g);

/// Exact rank over Q with plain Gauss-Jordan on a rational realization.
std::size_t rational_gauss_rank(const Graph& g, std::uint64_t seed);

std::vector<Edge> bridges_by_removal(const Graph& g);
std::vector<std::pair<Edge, Edge>> two_cuts_by_removal(const Graph& g);

/// G(n, p) overlaid on a random spanning tree, so the result is connected.
Graph random_connected(std::size_t n, double p, std::mt19937_64& rng);

/// Vertex-disjoint union plus the given crossing edges (second graph shifted).
Graph join(const Graph& a, const Graph& b, std::span<const std::pair<Vertex, Vertex>> crossing);

}  // namespace testing_support
