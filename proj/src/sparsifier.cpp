#include "specomm/sparsifier.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "specomm/errors.hpp"

namespace specomm {

namespace {

std::size_t common_neighbors(const Graph& g, Vertex u, Vertex v) {
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

enum class EdgeDecision { kKeepLowDegree, kKeepDegreeThree, kKeepSimilar, kRemove };

EdgeDecision decide(const Graph& g, Vertex u, Vertex v, double theta) {
  const std::size_t du = g.degree(u);
  const std::size_t dv = g.degree(v);
  const std::size_t dmin = std::min(du, dv);
  Vertex x = u;
  if (dv < du || (dv == du && v < u)) x = v;

  if (dmin <= 2) return EdgeDecision::kKeepLowDegree;
  if (dmin == 3) {
    std::size_t max_neighbor_degree = 0;
    for (Vertex w : g.neighbors(x)) max_neighbor_degree = std::max(max_neighbor_degree, g.degree(w));
    if (max_neighbor_degree <= dmin) return EdgeDecision::kKeepDegreeThree;
  }
  const double shared = static_cast<double>(common_neighbors(g, u, v));
  const double sim_uv = shared / static_cast<double>(du);
  const double sim_vu = shared / static_cast<double>(dv);
  if (sim_uv < theta && sim_vu < theta) return EdgeDecision::kRemove;
  return EdgeDecision::kKeepSimilar;
}

}  // namespace

double similarity(const Graph& g, Vertex u, Vertex v) {
  if (u == v || !g.has_edge(u, v)) return 0.0;
  return static_cast<double>(common_neighbors(g, u, v)) / static_cast<double>(g.degree(u));
}

SparsifyResult sparsify(const Graph& g, const SparsifyConfig& cfg) {
  const auto edges = g.edges();
  return sparsify(g, cfg, edges);
}

SparsifyResult sparsify(const Graph& g, const SparsifyConfig& cfg, std::span<const Edge> visit_order) {
  if (!(cfg.theta >= 0.0 && cfg.theta <= 1.0)) {
    throw ValidationError("similarity threshold must lie in [0, 1], got " + std::to_string(cfg.theta));
  }
  SparsifyResult result{g, {}};
  auto& report = result.report;
  for (const auto& [u, v] : visit_order) {
    if (!g.has_edge(u, v)) {
      throw ValidationError("visit order names a missing edge (" + g.label(u) + ", " + g.label(v) + ")");
    }
    switch (decide(g, u, v, cfg.theta)) {
      case EdgeDecision::kKeepLowDegree:
        ++report.kept_by_guard;
        break;
      case EdgeDecision::kKeepDegreeThree:
        ++report.kept_by_degree3_guard;
        break;
      case EdgeDecision::kKeepSimilar:
        break;
      case EdgeDecision::kRemove:
        report.removed_edges.emplace_back(std::min(u, v), std::max(u, v));
        break;
    }
  }
  std::sort(report.removed_edges.begin(), report.removed_edges.end());
  for (const auto& [u, v] : report.removed_edges) result.graph.remove_edge(u, v);
  return result;
}

double suggest_theta_from_values(std::span<const double> similarities) {
  // Slack absorbs rounding of ratios such as 3/20 that sit on a bin edge.
  constexpr double kSlack = 1e-12;
  std::size_t lower = 0;
  std::size_t upper = 0;
  for (double s : similarities) {
    if (s < 0.10 - kSlack || s > 0.20 + kSlack) continue;
    if (s < 0.15 - kSlack) {
      ++lower;
    } else {
      ++upper;
    }
  }
  if (lower == 0 && upper == 0) return kDefaultTheta;
  return upper > lower ? 0.175 : 0.125;
}

double suggest_theta(const Graph& g) {
  if (g.edge_count() == 0) throw ValidationError("cannot suggest a threshold for an edgeless graph");
  std::vector<double> values;
  values.reserve(2 * g.edge_count());
  for (const auto& [u, v] : g.edges()) {
    values.push_back(similarity(g, u, v));
    values.push_back(similarity(g, v, u));
  }
  return suggest_theta_from_values(values);
}

}  // namespace specomm
