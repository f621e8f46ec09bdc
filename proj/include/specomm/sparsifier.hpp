#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "specomm/graph.hpp"

namespace specomm {

/// Similarity threshold used when none is given.
inline constexpr double kDefaultTheta = 0.15;

struct SparsifyConfig {
  double theta = kDefaultTheta;  ///< in [0, 1]
};

struct SparsifyReport {
  std::vector<Edge> removed_edges;        ///< (u, v) with u < v, sorted
  std::size_t kept_by_guard = 0;          ///< edges with an endpoint of degree <= 2
  std::size_t kept_by_degree3_guard = 0;  ///< degree-3 endpoint with no higher-degree neighbour
};

struct SparsifyResult {
  Graph graph;
  SparsifyReport report;
};

/// |N(u) ∩ N(v)| / d_u for adjacent u, v; 0 otherwise. Not symmetric.
double similarity(const Graph& g, Vertex u, Vertex v);

/// Removes edges whose endpoints are dissimilar in both directions.
///
/// Every decision reads degrees and neighbourhoods of the input graph, so the
/// result does not depend on the order edges are visited. For an edge (u, v)
/// let x be the endpoint of smaller degree (smaller index on ties):
///   - d_x <= 2: keep;
///   - d_x == 3 and no neighbour of x has degree above 3: keep;
///   - otherwise remove iff similarity(u,v) < theta and similarity(v,u) < theta.
/// The vertex set is preserved, including vertices left isolated.
SparsifyResult sparsify(const Graph& g, const SparsifyConfig& cfg = {});

/// Same as sparsify() but visits the edges in the given order. Exists so the
/// order-independence of the result can be checked.
SparsifyResult sparsify(const Graph& g, const SparsifyConfig& cfg, std::span<const Edge> visit_order);

/// Mode of the similarity values inside [0.10, 0.20], using the bins
/// [0.10, 0.15) and [0.15, 0.20]; returns the midpoint of the fuller bin
/// (the lower bin on ties), or kDefaultTheta if no value lies in range.
double suggest_theta_from_values(std::span<const double> similarities);

/// suggest_theta_from_values over similarity(u,v) and similarity(v,u) of
/// every edge. Throws ValidationError on an edgeless graph.
double suggest_theta(const Graph& g);

}  // namespace specomm
