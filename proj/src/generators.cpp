#include "rigidity/generators.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace rigidity {

Graph complete_graph(std::size_t n) {
  if (n == 0) throw GeneratorError("complete_graph: n must be positive");
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, std::move(edges));
}

Graph clique_chain(std::size_t clique_size, std::size_t k) {
  if (clique_size != 5 && clique_size != 6) {
    throw GeneratorError("clique_chain: clique size must be 5 or 6");
  }
  if (k < 2) throw GeneratorError("clique_chain: need at least two copies");
  const std::size_t n = clique_size;
  std::vector<Edge> edges;
  for (std::size_t t = 0; t < k; ++t) {
    const auto base = static_cast<Vertex>(t * n);
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = i + 1; j < n; ++j) {
        if (i == 0 && j == 1) continue;
        edges.emplace_back(base + i, base + j);
      }
    }
    const auto next = static_cast<Vertex>(((t + 1) % k) * n);
    edges.emplace_back(base + 1, next);
  }
  return Graph(k * n, std::move(edges));
}

Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed,
                     std::size_t max_attempts) {
  if ((n * d) % 2 != 0) {
    throw GeneratorError("random_regular: n*d must be even (n=" + std::to_string(n) +
                         ", d=" + std::to_string(d) + ")");
  }
  if (d >= n) {
    throw GeneratorError("random_regular: degree " + std::to_string(d) +
                         " must be below vertex count " + std::to_string(n));
  }
  std::mt19937_64 rng(seed);
  std::vector<Vertex> points;
  points.reserve(n * d);
  for (Vertex v = 0; v < n; ++v) points.insert(points.end(), d, v);

  std::vector<Edge> edges;
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    std::shuffle(points.begin(), points.end(), rng);
    edges.clear();
    bool simple = true;
    for (std::size_t i = 0; i < points.size(); i += 2) {
      if (points[i] == points[i + 1]) {
        simple = false;
        break;
      }
      edges.emplace_back(points[i], points[i + 1]);
    }
    if (!simple) continue;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
    Graph g(n, edges);
    if (is_connected(g)) return g;
  }
  throw GeneratorError("random_regular: no simple connected pairing after " +
                       std::to_string(max_attempts) + " attempts");
}

Graph random_gnp(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.emplace_back(i, j);
    }
  }
  return Graph(n, std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges(a.edges().begin(), a.edges().end());
  const auto shift = static_cast<Vertex>(a.vertex_count());
  for (const Edge& e : b.edges()) edges.emplace_back(e.u + shift, e.v + shift);
  return Graph(a.vertex_count() + b.vertex_count(), std::move(edges));
}

}  // namespace rigidity
