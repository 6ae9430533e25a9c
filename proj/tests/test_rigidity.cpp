#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "rigidity/generators.hpp"
#include "rigidity/realization.hpp"
#include "rigidity/rigidity_matrix.hpp"

using namespace rigidity;

namespace {

RationalRealization points(std::initializer_list<std::pair<long, long>> xy) {
  RationalRealization r;
  for (auto [x, y] : xy) r.points.push_back({Rational(x), Rational(y)});
  return r;
}

template <class Scalar>
bool annihilates(const RigidityMatrix<Scalar>& m, const std::vector<Scalar>& w) {
  const auto dense = m.dense();
  for (std::size_t c = 0; c < dense.cols(); ++c) {
    Scalar sum(0);
    for (std::size_t e = 0; e < dense.rows(); ++e) sum = sum + w[e] * dense(e, c);
    if (!linalg::is_zero(sum)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("rigidity matrix rows") {
  SUBCASE("single edge") {
    const auto m = build_rigidity_matrix(Graph(2, {{0, 1}}), points({{0, 0}, {1, 0}}));
    const auto d = m.dense();
    REQUIRE(d.rows() == 1);
    REQUIRE(d.cols() == 4);
    CHECK(d(0, 0) == -1);
    CHECK(d(0, 1) == 0);
    CHECK(d(0, 2) == 1);
    CHECK(d(0, 3) == 0);
    CHECK(matrix_rank(m) == 1);
  }
  SUBCASE("triangle rows carry four nonzeros each") {
    Graph k3 = complete_graph(3);
    const auto m = build_rigidity_matrix(k3, sample_rational_realization(k3, 1));
    const auto d = m.dense();
    for (std::size_t e = 0; e < 3; ++e) {
      int nonzero = 0;
      for (std::size_t c = 0; c < 6; ++c) nonzero += sgn(d(e, c)) != 0;
      CHECK(nonzero == 4);
    }
    CHECK(m.row_index(Edge(1, 2)) == 2);
  }
  SUBCASE("odd and even positions of every row sum to zero") {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 20; ++t) {
      Graph g = random_gnp(2 + rng() % 8, 0.5, rng());
      const auto d = build_rigidity_matrix(g, sample_rational_realization(g, rng())).dense();
      for (std::size_t e = 0; e < d.rows(); ++e) {
        Rational odd = 0, even = 0;
        for (std::size_t c = 0; c < d.cols(); ++c) (c % 2 ? odd : even) += d(e, c);
        CHECK(sgn(odd) == 0);
        CHECK(sgn(even) == 0);
      }
    }
  }
  CHECK_THROWS_AS(build_rigidity_matrix(complete_graph(3), points({{0, 0}, {1, 0}})),
                  std::invalid_argument);
}

TEST_CASE("ranks of complete graphs") {
  Graph k5 = complete_graph(5), k6 = complete_graph(6);
  CHECK(matrix_rank(build_rigidity_matrix(k5, sample_rational_realization(k5, 0))) == 7);
  CHECK(matrix_rank(build_rigidity_matrix(k6, sample_rational_realization(k6, 0))) == 9);
  CHECK(matrix_rank(build_rigidity_matrix(k5, sample_field_realization(k5, 0))) == 7);
  for (std::size_t n = 2; n <= 12; ++n) CHECK(generic_rank(complete_graph(n)) == 2 * n - 3);
  CHECK(generic_rank(complete_graph(4)) == 5);
  CHECK(generic_rank(Graph(3)) == 0);
}

TEST_CASE("generic rank on the example families") {
  CHECK(generic_rank(clique_chain(5, 3)) == 24);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = random_regular(6 + 2 * (seed % 6), 3, seed);
    CHECK(generic_rank(g) == g.edge_count());
  }
  CHECK_THROWS_AS(generic_rank(complete_graph(3), 0), std::invalid_argument);
}

TEST_CASE("generic rank is bounded and dominates special positions") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 3 + rng() % 9;
    Graph g = random_gnp(n, (1 + rng() % 9) / 10.0, rng());
    const auto r = generic_rank(g, 3, rng());
    CHECK(r <= std::min(g.edge_count(), 2 * n - 3));
    // Collinear points only lose rank.
    RationalRealization line;
    for (std::size_t v = 0; v < n; ++v) line.points.push_back({Rational(long(v * v + 1)), Rational(0)});
    CHECK(matrix_rank(build_rigidity_matrix(g, line)) <= r);
    // Exact rational route agrees with the field route.
    CHECK(generic_rank(g, 2, rng(), ScalarDomain::rational) == r);
    CHECK(testing_support::rational_gauss_rank(g, rng()) == r);
  }
}

TEST_CASE("stress counts") {
  CHECK(stress_count(complete_graph(4), 5) == 1);
  CHECK(stress_count(complete_graph(5), 7) == 3);
  Graph tree(4, {{0, 1}, {1, 2}, {1, 3}});
  CHECK(stress_count(tree, generic_rank(tree)) == 0);
  CHECK_THROWS_AS(stress_count(tree, 4), std::invalid_argument);
}

TEST_CASE("stress basis") {
  SUBCASE("K4 has one stress with full support") {
    Graph k4 = complete_graph(4);
    const auto m = build_rigidity_matrix(k4, sample_rational_realization(k4, 4));
    const auto basis = stress_basis(m);
    REQUIRE(basis.vectors.size() == 1);
    for (const auto& w : basis.vectors[0]) CHECK(sgn(w) != 0);
    CHECK(annihilates(m, basis.vectors[0]));
  }
  SUBCASE("collinear triangle") {
    const long x1 = 2, x2 = 5, x3 = 11;
    const auto m = build_rigidity_matrix(complete_graph(3), points({{x1, 0}, {x2, 0}, {x3, 0}}));
    const auto basis = stress_basis(m);
    REQUIRE(basis.vectors.size() == 1);
    // Edge order is (0,1), (0,2), (1,2).
    const Rational w12 = 1 / Rational(x1 - x2), w23 = 1 / Rational(x2 - x3), w13 = -1 / Rational(x1 - x3);
    const auto& w = basis.vectors[0];
    CHECK(w[0] * w23 == w[2] * w12);
    CHECK(w[1] * w12 == w[0] * w13);
  }
  SUBCASE("tree") {
    Graph tree(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(stress_basis(build_rigidity_matrix(tree, sample_rational_realization(tree, 0))).vectors.empty());
  }
  SUBCASE("count and kernel property on random graphs") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 25; ++t) {
      Graph g = random_gnp(3 + rng() % 6, 0.6, rng());
      const auto m = build_rigidity_matrix(g, sample_rational_realization(g, rng()));
      const auto basis = stress_basis(m);
      CHECK(basis.vectors.size() + matrix_rank(m) == g.edge_count());
      for (const auto& w : basis.vectors) CHECK(annihilates(m, w));
      if (!basis.vectors.empty()) {
        DenseMatrix<Rational> stack(basis.vectors.size(), g.edge_count());
        for (std::size_t i = 0; i < basis.vectors.size(); ++i)
          for (std::size_t e = 0; e < g.edge_count(); ++e) stack(i, e) = basis.vectors[i][e];
        CHECK(linalg::rank(stack) == basis.vectors.size());
      }
    }
  }
}

TEST_CASE("general position") {
  CHECK(is_general_position(points({{0, 0}, {1, 0}, {0, 1}})));
  CHECK_FALSE(is_general_position(points({{0, 0}, {1, 1}, {2, 2}})));
  CHECK_FALSE(is_general_position(points({{0, 0}, {1, 0}, {2, 0}, {0, 5}})));
  AnyRealization field = sample_field_realization(complete_graph(3), 0);
  CHECK_THROWS_AS(is_general_position(field), std::invalid_argument);
}

TEST_CASE("sampling") {
  Graph k5 = complete_graph(5);
  const auto a = sample_rational_realization(k5, 17), b = sample_rational_realization(k5, 17);
  for (std::size_t v = 0; v < 5; ++v) {
    CHECK(a.points[v].x == b.points[v].x);
    CHECK(a.points[v].y == b.points[v].y);
    CHECK(a.points[v].x >= 1);
    CHECK(a.points[v].x <= Rational(2147483648.0));
    for (std::size_t w = 0; w < v; ++w)
      CHECK_FALSE((a.points[v].x == a.points[w].x && a.points[v].y == a.points[w].y));
  }
  CHECK(is_general_position(a));
  const auto f1 = sample_field_realization(k5, 3), f2 = sample_field_realization(k5, 3);
  for (std::size_t v = 0; v < 5; ++v) CHECK(f1.points[v].x == f2.points[v].x);
}

TEST_CASE("H1 dimension") {
  CHECK(h1_dimension(complete_graph(5)) == 3);
  CHECK(h1_dimension(clique_chain(5, 3)) == 6);
  CHECK(h1_dimension(Graph(1)) == 2);
}

TEST_CASE("restriction containment") {
  Graph k4 = complete_graph(4);
  const auto r = sample_rational_realization(k4, 5);
  const std::vector<Vertex> one{2}, all{0, 1, 2, 3};
  CHECK(restriction_containment(k4, r, std::span<const Vertex>(one)));
  CHECK(restriction_containment(k4, r, std::span<const Vertex>(all)));
  CHECK_THROWS_AS(restriction_containment(k4, r, std::span<const Vertex>()), std::invalid_argument);

  std::mt19937_64 rng(21);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 2 + rng() % 7;
    Graph g = random_gnp(n, 0.6, rng());
    std::vector<Vertex> subset;
    for (Vertex v = 0; v < n; ++v)
      if (rng() % 2) subset.push_back(v);
    if (subset.empty()) subset.push_back(0);
    CHECK(restriction_containment(g, sample_rational_realization(g, rng()), std::span<const Vertex>(subset)));
    CHECK(restriction_containment(g, sample_field_realization(g, rng()), std::span<const Vertex>(subset)));
  }
}
