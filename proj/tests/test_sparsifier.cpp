#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "specomm/errors.hpp"
#include "specomm/sparsifier.hpp"
#include "support.hpp"

using namespace specomm;

namespace {

std::set<Edge> removed_set(const SparsifyResult& r) {
  return {r.report.removed_edges.begin(), r.report.removed_edges.end()};
}

Graph random_dense(std::mt19937_64& rng) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(8, 40)(rng);
  return testing::planted_partition(n, 3, 0.5, 0.1, rng);
}

}  // namespace

TEST_CASE("similarity counts common neighbours over the first degree") {
  // Triangle 0-1-2 with a pendant 3 on vertex 0.
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}, {0, 3}};
  const Graph g = Graph::from_edges(4, edges);
  CHECK(similarity(g, 0, 1) == doctest::Approx(1.0 / 3.0));
  CHECK(similarity(g, 1, 0) == doctest::Approx(1.0 / 2.0));
  CHECK(similarity(g, 0, 3) == 0.0);
  CHECK(similarity(g, 1, 3) == 0.0);  // not adjacent
}

TEST_CASE("a bridge between two dense blocks is removed") {
  // Two K5 joined by one edge (4, 5): endpoints share no neighbours.
  std::vector<Edge> edges;
  for (Vertex base : {0u, 5u}) {
    for (Vertex u = 0; u < 5; ++u) {
      for (Vertex v = u + 1; v < 5; ++v) edges.push_back({base + u, base + v});
    }
  }
  edges.push_back({4, 5});
  const Graph g = Graph::from_edges(10, edges);
  const SparsifyResult r = sparsify(g);
  CHECK(r.report.removed_edges == std::vector<Edge>{{4, 5}});
  CHECK(r.graph.edge_count() == g.edge_count() - 1);
  CHECK(r.graph.vertex_count() == 10);
}

TEST_CASE("degree-3 guard") {
  // Star centre 0 of degree 3 whose neighbours all have degree <= 3: every
  // edge has similarity 0 but is kept.
  const std::vector<Edge> star{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 6}, {2, 7}, {3, 8}, {3, 9}};
  const Graph g = Graph::from_edges(10, star);
  const SparsifyResult r = sparsify(g, SparsifyConfig{1.0});
  CHECK(r.report.removed_edges.empty());
  CHECK(r.report.kept_by_degree3_guard == 3);
}

TEST_CASE("theta out of range") {
  const std::vector<Edge> edges{{0, 1}};
  const Graph g = Graph::from_edges(2, edges);
  CHECK_THROWS_AS(sparsify(g, SparsifyConfig{-0.1}), ValidationError);
  CHECK_THROWS_AS(sparsify(g, SparsifyConfig{1.5}), ValidationError);
}

TEST_CASE("property: theta = 0 removes nothing") {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 50; ++t) {
    const Graph g = random_dense(rng);
    const SparsifyResult r = sparsify(g, SparsifyConfig{0.0});
    CHECK(r.report.removed_edges.empty());
    CHECK(r.graph == g);
  }
}

TEST_CASE("property: removed sets grow with theta") {
  std::mt19937_64 rng(202);
  for (int t = 0; t < 50; ++t) {
    const Graph g = random_dense(rng);
    std::set<Edge> previous;
    for (int step = 0; step <= 20; ++step) {
      const auto current = removed_set(sparsify(g, SparsifyConfig{step * 0.05}));
      CHECK(std::includes(current.begin(), current.end(), previous.begin(), previous.end()));
      previous = current;
    }
  }
}

TEST_CASE("property: edges touching degree <= 2 survive") {
  std::mt19937_64 rng(303);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(5, 40)(rng);
    const Graph g = testing::random_connected(n, n, rng);
    for (const auto& [u, v] : sparsify(g, SparsifyConfig{1.0}).report.removed_edges) {
      CHECK(std::min(g.degree(u), g.degree(v)) > 2);
    }
  }
}

TEST_CASE("property: result does not depend on edge visit order") {
  std::mt19937_64 rng(404);
  for (int t = 0; t < 50; ++t) {
    const Graph g = random_dense(rng);
    const double theta = std::uniform_real_distribution<double>(0.0, 0.6)(rng);
    const SparsifyResult base = sparsify(g, SparsifyConfig{theta});
    auto order = g.edges();
    for (int shuffle = 0; shuffle < 5; ++shuffle) {
      std::shuffle(order.begin(), order.end(), rng);
      for (auto& e : order) {
        if (rng() & 1) std::swap(e.first, e.second);
      }
      const SparsifyResult other = sparsify(g, SparsifyConfig{theta}, order);
      CHECK(other.graph == base.graph);
      CHECK(other.report.removed_edges == base.report.removed_edges);
    }
  }
}

TEST_CASE("visit order must list existing edges") {
  const std::vector<Edge> edges{{0, 1}, {1, 2}};
  const Graph g = Graph::from_edges(3, edges);
  const std::vector<Edge> bogus{{0, 2}};
  CHECK_THROWS_AS(sparsify(g, SparsifyConfig{}, bogus), ValidationError);
}

TEST_CASE("theta suggestion picks the fuller bin") {
  const std::vector<double> low{0.11, 0.12, 0.16, 0.5};
  CHECK(suggest_theta_from_values(low) == doctest::Approx(0.125));
  const std::vector<double> high{0.11, 0.16, 0.18, 0.20};
  CHECK(suggest_theta_from_values(high) == doctest::Approx(0.175));
  const std::vector<double> tie{0.12, 0.17};
  CHECK(suggest_theta_from_values(tie) == doctest::Approx(0.125));
  const std::vector<double> none{0.05, 0.5};
  CHECK(suggest_theta_from_values(none) == kDefaultTheta);
  CHECK_THROWS_AS(suggest_theta(Graph::from_edges(3, {})), ValidationError);
}
