#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rigidity/graph.hpp"

namespace rigidity {

struct PebbleState {
  std::vector<int> pebbles;  // free pebbles per vertex, each in [0, 2]
  /// Accepted edges oriented tail -> head; the tail's pebble covers the edge.
  std::vector<std::pair<Vertex, Vertex>> oriented_edges;
};

/// (2,3) pebble game. An edge is accepted when four pebbles can be gathered
/// on its endpoints, which happens exactly when the accepted set stays
/// (2,3)-sparse: every k >= 2 vertices span at most 2k - 3 accepted edges.
class PebbleGame {
 public:
  explicit PebbleGame(std::size_t vertex_count);

  bool try_insert(Edge e);
  std::size_t accepted_count() const { return accepted_; }
  PebbleState state() const;

 private:
  bool gather(Vertex root, Vertex blocked);

  std::vector<int> pebbles_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<Vertex> parent_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t epoch_ = 0;
  std::size_t accepted_ = 0;
};

/// Edges accepted by the pebble game in canonical (lexicographic) order.
std::vector<Edge> pebble_basis(const Graph& g);
/// Rank of the 2D generic rigidity matroid.
std::size_t pebble_rank(const Graph& g);
/// Whether f (a subset of g's edges) is independent. Throws if f ⊄ E(g).
bool pebble_independent(const Graph& g, std::span<const Edge> f);

class OracleMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CertifiedRank {
  std::size_t rank = 0;         // pebble value, authoritative
  std::size_t linear_rank = 0;  // randomized linear-algebra value
  bool agree() const { return rank == linear_rank; }
};

/// Both rank oracles side by side; never resolves a disagreement.
CertifiedRank certified_rank(const Graph& g, int trials = 3, std::uint64_t seed = 0);

/// |E| - rank after requiring the two oracles to agree; throws OracleMismatch otherwise.
std::size_t certified_stress(const Graph& g, int trials = 1, std::uint64_t seed = 0);

}  // namespace rigidity
