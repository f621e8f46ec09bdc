#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "specomm/errors.hpp"
#include "specomm/spectral.hpp"
#include "support.hpp"

using namespace specomm;

namespace {

double abs_cosine(const std::vector<double>& a, const std::vector<double>& b) {
  const double dot = std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
  const double na = std::sqrt(std::inner_product(a.begin(), a.end(), a.begin(), 0.0));
  const double nb = std::sqrt(std::inner_product(b.begin(), b.end(), b.begin(), 0.0));
  return std::abs(dot) / (na * nb);
}

double weighted_sum(const Graph& g, const std::vector<double>& x) {
  double s = 0.0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) s += static_cast<double>(g.degree(v)) * x[v];
  return s;
}

}  // namespace

TEST_CASE("single edge") {
  const std::vector<Edge> edges{{0, 1}};
  const Graph g = Graph::from_edges(2, edges);
  const EigenPair p = second_eigenpair(g);
  CHECK(p.value == doctest::Approx(-1.0));
  CHECK(p.vector[0] == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(p.vector[1] == doctest::Approx(-1.0 / std::sqrt(2.0)));
  const Bisection b = spectra_bisection(g);
  CHECK(b.first == std::vector<Vertex>{0});
  CHECK(b.second == std::vector<Vertex>{1});
}

TEST_CASE("path of four vertices splits down the middle") {
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}};
  const Graph g = Graph::from_edges(4, edges);
  const EigenPair p = second_eigenpair(g);
  CHECK(p.value == doctest::Approx(0.5));
  const Bisection b = spectra_bisection(g);
  CHECK(b.first == std::vector<Vertex>{0, 1});
  CHECK(b.second == std::vector<Vertex>{2, 3});
}

TEST_CASE("bad input") {
  CHECK_THROWS_AS(second_eigenpair(Graph::from_edges(1, {})), ValidationError);
  const std::vector<Edge> split{{0, 1}, {2, 3}};
  CHECK_THROWS_AS(second_eigenpair(Graph::from_edges(4, split)), ValidationError);
  const std::vector<Edge> isolated{{0, 1}};
  CHECK_THROWS_AS(second_eigenpair(Graph::from_edges(3, isolated)), ValidationError);
}

TEST_CASE("tiny iteration budget reports non-convergence") {
  std::mt19937_64 rng(5);
  const Graph g = testing::random_connected(40, 60, rng);
  SolverConfig cfg;
  cfg.max_iterations = 1;
  CHECK_THROWS_AS(second_eigenpair(g, cfg), ConvergenceError);
}

TEST_CASE("disconnected graphs bisect into largest component and the rest") {
  const std::vector<Edge> edges{{0, 1}, {2, 3}, {3, 4}, {5, 6}};
  const Graph g = Graph::from_edges(7, edges);
  const Bisection b = spectra_bisection(g);
  CHECK(b.first == std::vector<Vertex>{2, 3, 4});
  CHECK(b.second == std::vector<Vertex>{0, 1, 5, 6});
}

TEST_CASE("sign convention and gap") {
  std::vector<double> v{0.0, -0.5, 0.5};
  apply_sign_convention(v);
  CHECK(v[1] == 0.5);
  const std::vector<double> w{-0.3, -0.1, 0.0, 0.4};
  CHECK(sign_gap(w) == doctest::Approx(0.1));
  const std::vector<double> one_sided{0.1, 0.2};
  CHECK_THROWS_AS(sign_gap(one_sided), ValidationError);
}

TEST_CASE("property: agrees with the dense oracle on random connected graphs") {
  std::mt19937_64 rng(777);
  int compared_vectors = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 16)(rng);
    const std::size_t extra = std::uniform_int_distribution<std::size_t>(0, 2 * n)(rng);
    const Graph g = testing::random_connected(n, extra, rng);
    CAPTURE(t);
    const EigenPair got = second_eigenpair(g);
    const auto spectrum = dense_spectrum(g);
    CHECK(std::abs(got.value - spectrum[1].value) <= 1e-8);
    CHECK(transition_residual(g, got) <= 1e-10);
    CHECK(std::abs(weighted_sum(g, got.vector)) <= 1e-6 * 2.0 * static_cast<double>(g.edge_count()));

    // The vector is only determined when the eigenvalue is simple.
    const bool simple = n == 2 || std::abs(spectrum[1].value - spectrum[2].value) > 1e-6;
    if (simple) {
      ++compared_vectors;
      const double c = std::min(1.0, abs_cosine(got.vector, spectrum[1].vector));
      CHECK(std::sqrt(1.0 - c * c) <= 1e-6);
      // Same sign convention, so the entries agree and not just the direction.
      double worst = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        worst = std::max(worst, std::abs(got.vector[i] - spectrum[1].vector[i]));
      }
      CHECK(worst <= 1e-6);
    }
  }
  CHECK(compared_vectors > 150);
}

TEST_CASE("property: larger planted graphs converge with orthogonality") {
  std::mt19937_64 rng(888);
  for (int t = 0; t < 10; ++t) {
    const Graph raw = testing::planted_partition(200, 4, 0.15, 0.01, rng);
    const Graph g = induced_subgraph(raw, connected_components(raw).group(0));
    const EigenPair p = second_eigenpair(g);
    CHECK(transition_residual(g, p) <= 1e-10);
    CHECK(std::abs(weighted_sum(g, p.vector)) <= 1e-6 * 2.0 * static_cast<double>(g.edge_count()));
  }
}
