#include "rigidity/pebble.hpp"

#include <algorithm>
#include <string>

#include "rigidity/rigidity_matrix.hpp"

namespace rigidity {

PebbleGame::PebbleGame(std::size_t vertex_count)
    : pebbles_(vertex_count, 2), out_(vertex_count), parent_(vertex_count), mark_(vertex_count, 0) {}

// Depth-first search along covered edges for a free pebble that is not on
// root or blocked; on success the path is reversed and the pebble moves to root.
bool PebbleGame::gather(Vertex root, Vertex blocked) {
  ++epoch_;
  mark_[root] = epoch_;
  mark_[blocked] = epoch_;
  std::vector<Vertex> stack{root};
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : out_[x]) {
      if (mark_[y] == epoch_) continue;
      mark_[y] = epoch_;
      parent_[y] = x;
      if (pebbles_[y] > 0) {
        for (Vertex head = y; head != root;) {
          Vertex tail = parent_[head];
          auto& list = out_[tail];
          list.erase(std::find(list.begin(), list.end(), head));
          out_[head].push_back(tail);
          head = tail;
        }
        --pebbles_[y];
        ++pebbles_[root];
        return true;
      }
      stack.push_back(y);
    }
  }
  return false;
}

bool PebbleGame::try_insert(Edge e) {
  if (e.u == e.v || e.v >= pebbles_.size()) throw std::invalid_argument("pebble game: bad edge");
  while (pebbles_[e.u] < 2 && gather(e.u, e.v)) {
  }
  while (pebbles_[e.v] < 2 && gather(e.v, e.u)) {
  }
  if (pebbles_[e.u] + pebbles_[e.v] < 4) return false;
  --pebbles_[e.u];
  out_[e.u].push_back(e.v);
  ++accepted_;
  return true;
}

PebbleState PebbleGame::state() const {
  PebbleState s;
  s.pebbles = pebbles_;
  for (Vertex tail = 0; tail < out_.size(); ++tail) {
    for (Vertex head : out_[tail]) s.oriented_edges.emplace_back(tail, head);
  }
  std::sort(s.oriented_edges.begin(), s.oriented_edges.end());
  return s;
}

std::vector<Edge> pebble_basis(const Graph& g) {
  PebbleGame game(g.vertex_count());
  std::vector<Edge> accepted;
  for (const Edge& e : g.edges()) {
    if (game.try_insert(e)) accepted.push_back(e);
  }
  return accepted;
}

std::size_t pebble_rank(const Graph& g) {
  PebbleGame game(g.vertex_count());
  for (const Edge& e : g.edges()) game.try_insert(e);
  return game.accepted_count();
}

bool pebble_independent(const Graph& g, std::span<const Edge> f) {
  for (const Edge& e : f) {
    if (!g.has_edge(e)) {
      throw std::invalid_argument("pebble_independent: edge " + std::to_string(e.u) + " " +
                                  std::to_string(e.v) + " not in graph");
    }
  }
  PebbleGame game(g.vertex_count());
  return std::all_of(f.begin(), f.end(), [&](const Edge& e) { return game.try_insert(e); });
}

CertifiedRank certified_rank(const Graph& g, int trials, std::uint64_t seed) {
  return CertifiedRank{pebble_rank(g), generic_rank(g, trials, seed)};
}

std::size_t certified_stress(const Graph& g, int trials, std::uint64_t seed) {
  auto rank = certified_rank(g, trials, seed);
  if (!rank.agree()) {
    throw OracleMismatch("rank oracles disagree: pebble " + std::to_string(rank.rank) +
                         ", linear algebra " + std::to_string(rank.linear_rank) + " on a graph with " +
                         std::to_string(g.vertex_count()) + " vertices and " +
                         std::to_string(g.edge_count()) + " edges");
  }
  return stress_count(g, rank.rank);
}

}  // namespace rigidity
