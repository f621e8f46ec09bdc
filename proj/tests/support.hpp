#pragma once

// Random graph generators and small oracles shared by the test binaries.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "specomm/divisive.hpp"
#include "specomm/graph.hpp"
#include "specomm/metrics.hpp"
#include "specomm/spectral.hpp"

namespace specomm::testing {

/// Random spanning tree plus `extra` random chords. Always connected.
inline Graph random_connected(std::size_t n, std::size_t extra, std::mt19937_64& rng) {
  std::set<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    const auto u = static_cast<Vertex>(std::uniform_int_distribution<std::size_t>(0, v - 1)(rng));
    edges.insert({u, v});
  }
  const std::size_t max_edges = n * (n - 1) / 2;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t i = 0; i < extra && edges.size() < max_edges; ++i) {
    auto u = static_cast<Vertex>(pick(rng));
    auto v = static_cast<Vertex>(pick(rng));
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    edges.insert({u, v});
  }
  const std::vector<Edge> list(edges.begin(), edges.end());
  return Graph::from_edges(n, list);
}

/// Planted partition: `groups` blocks of roughly equal size, edge probability
/// p_in inside blocks and p_out across. May be disconnected.
inline Graph planted_partition(std::size_t n, std::size_t groups, double p_in, double p_out,
                               std::mt19937_64& rng) {
  std::bernoulli_distribution in(p_in), out(p_out);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const bool same = (u % groups) == (v % groups);
      if (same ? in(rng) : out(rng)) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

/// Uniformly random partition of n vertices into at most `groups` nonempty groups.
inline Partition random_partition(std::size_t n, std::size_t groups, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, groups - 1);
  std::vector<std::vector<Vertex>> buckets(groups);
  for (Vertex v = 0; v < n; ++v) buckets[pick(rng)].push_back(v);
  std::erase_if(buckets, [](const auto& b) { return b.empty(); });
  return Partition(n, std::move(buckets));
}

/// Straight-from-the-definition modularity: (1/2m) sum_ij (A_ij - d_i d_j / 2m) [c_i == c_j].
inline double brute_force_modularity(const Graph& g, const Partition& p) {
  const auto group = p.membership();
  const double two_m = 2.0 * static_cast<double>(g.edge_count());
  double q = 0.0;
  for (Vertex i = 0; i < g.vertex_count(); ++i) {
    for (Vertex j = 0; j < g.vertex_count(); ++j) {
      if (group[i] != group[j]) continue;
      const double a = g.has_edge(i, j) ? 1.0 : 0.0;
      q += a - static_cast<double>(g.degree(i)) * static_cast<double>(g.degree(j)) / two_m;
    }
  }
  return q / two_m;
}

/// Accuracy by trying every injective relabelling of the extracted groups.
inline double brute_force_accuracy(const Partition& extracted, const Partition& truth) {
  const auto truth_of = truth.membership();
  const std::size_t slots = std::max(extracted.size(), truth.size());
  std::vector<std::size_t> perm(slots);
  for (std::size_t i = 0; i < slots; ++i) perm[i] = i;
  std::size_t best = 0;
  do {
    std::size_t hit = 0;
    for (std::size_t i = 0; i < extracted.size(); ++i) {
      for (Vertex v : extracted.group(i)) {
        if (truth_of[v] == perm[i]) ++hit;
      }
    }
    best = std::max(best, hit);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<double>(best) / static_cast<double>(extracted.universe_size());
}

/// Re-bisects every community on every round and keeps the candidate with
/// the highest modularity. No caching at all.
struct NaiveOracle {
  std::size_t calls = 0;

  Partition run(const Graph& g, std::size_t k, const Graph& scoring) {
    Partition current = connected_components(g).canonical();
    while (current.size() < k) {
      std::optional<Partition> best;
      double best_q = 0.0;
      Vertex best_min = 0;
      for (std::size_t i = 0; i < current.size(); ++i) {
        const auto& members = current.group(i);
        if (members.size() < 2) continue;
        ++calls;
        Bisection halves = spectra_bisection(induced_subgraph(g, members));
        for (Vertex& v : halves.first) v = members[v];
        for (Vertex& v : halves.second) v = members[v];
        auto groups = current.groups();
        groups[i] = halves.first;
        groups.push_back(halves.second);
        Partition candidate = Partition(g.vertex_count(), std::move(groups)).canonical();
        const double q = modularity(scoring, candidate);
        const bool tie = best && std::abs(q - best_q) <= 1e-12;
        if (!best || (!tie && q > best_q) || (tie && members.front() < best_min)) {
          best = std::move(candidate);
          best_q = q;
          best_min = members.front();
        }
      }
      if (!best) break;
      current = std::move(*best);
    }
    return current;
  }
};

}  // namespace specomm::testing
