#include <doctest.h>

#include <cmath>
#include <random>

#include "specomm/errors.hpp"
#include "specomm/metrics.hpp"
#include "support.hpp"

using namespace specomm;

TEST_CASE("modularity of a known split") {
  // Two triangles joined by one edge: Q = 2 * (3/7 - (7/14)^2) = 5/14.
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}};
  const Graph g = Graph::from_edges(6, edges);
  CHECK(modularity(g, Partition(6, {{0, 1, 2}, {3, 4, 5}})) == doctest::Approx(5.0 / 14.0));
  CHECK(modularity(g, Partition(6, {{0, 1, 2, 3, 4, 5}})) == doctest::Approx(0.0));
  CHECK_THROWS_AS(modularity(Graph::from_edges(2, {}), Partition(2, {{0, 1}})), ValidationError);
}

TEST_CASE("property: modularity agrees with the pairwise definition") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 50)(rng);
    const Graph g = testing::random_connected(n, n, rng);
    const Partition p = testing::random_partition(n, 1 + t % 6, rng);
    CHECK(std::abs(modularity(g, p) - testing::brute_force_modularity(g, p)) <= 1e-12);
  }
}

TEST_CASE("accuracy of a known confusion") {
  const Partition truth(6, {{0, 1, 2}, {3, 4, 5}});
  CHECK(accuracy(truth, truth) == 1.0);
  CHECK(accuracy(Partition(6, {{3, 4, 5}, {0, 1, 2}}), truth) == 1.0);
  CHECK(accuracy(Partition(6, {{0, 1, 2, 3}, {4, 5}}), truth) == doctest::Approx(5.0 / 6.0));
  CHECK(accuracy(Partition(6, {{0, 1, 2, 3, 4, 5}}), truth) == doctest::Approx(0.5));
}

TEST_CASE("property: accuracy equals the best relabelling") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
    const Partition a = testing::random_partition(n, 1 + rng() % 4, rng);
    const Partition b = testing::random_partition(n, 1 + rng() % 4, rng);
    CHECK(accuracy(a, b) == doctest::Approx(testing::brute_force_accuracy(a, b)).epsilon(1e-12));
  }
}

TEST_CASE("matching on rectangular weights") {
  CHECK(max_weight_matching({{5, 1}, {4, 3}, {0, 9}}) == 14);
  CHECK(max_weight_matching({{1, 2, 3}}) == 3);
  CHECK(max_weight_matching({}) == 0);
}

TEST_CASE("NMI basics") {
  const Partition truth(6, {{0, 1, 2}, {3, 4, 5}});
  const Partition whole(6, {{0, 1, 2, 3, 4, 5}});
  CHECK(nmi(truth, truth) == doctest::Approx(1.0));
  CHECK(nmi(whole, truth) == doctest::Approx(0.0));
  CHECK(nmi(truth, whole) == doctest::Approx(0.0));
  CHECK(nmi(whole, whole) == 1.0);
  CHECK_THROWS_AS(nmi(truth, Partition(5, {{0, 1, 2, 3, 4}})), ValidationError);
}

TEST_CASE("property: NMI is bounded, symmetric and 1 on identical partitions") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 60)(rng);
    const Partition a = testing::random_partition(n, 1 + rng() % 6, rng);
    const Partition b = testing::random_partition(n, 1 + rng() % 6, rng);
    const double ab = nmi(a, b);
    CHECK(ab >= 0.0);
    CHECK(ab <= 1.0);
    CHECK(ab == doctest::Approx(nmi(b, a)).epsilon(1e-12));
    CHECK(nmi(a, a) == doctest::Approx(1.0));
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    const Partition whole(n, {all});
    if (a.size() > 1) CHECK(nmi(a, whole) == doctest::Approx(0.0));
  }
}

TEST_CASE("evaluate bundles the three scores") {
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}};
  const Graph g = Graph::from_edges(6, edges);
  const Partition p(6, {{0, 1, 2}, {3, 4, 5}});
  const MetricTriple m = evaluate(g, p, p);
  CHECK(m.q == doctest::Approx(5.0 / 14.0));
  CHECK(m.accuracy == 1.0);
  CHECK(m.nmi == doctest::Approx(1.0));
}
