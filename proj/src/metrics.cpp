#include "specomm/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "specomm/errors.hpp"

namespace specomm {

namespace {

void require_same_universe(const Partition& a, const Partition& b) {
  if (a.universe_size() != b.universe_size()) {
    throw ValidationError("partitions cover different vertex sets (" +
                          std::to_string(a.universe_size()) + " vs " +
                          std::to_string(b.universe_size()) + " vertices)");
  }
}

}  // namespace

double modularity(const Graph& g, const Partition& p) {
  if (p.universe_size() != g.vertex_count()) {
    throw ValidationError("partition does not cover the graph's vertices");
  }
  if (g.edge_count() == 0) throw ValidationError("modularity is undefined on an edgeless graph");

  const auto group_of = p.membership();
  std::vector<std::size_t> internal(p.size(), 0);
  std::vector<std::size_t> volume(p.size(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    volume[group_of[v]] += g.degree(v);
    for (Vertex w : g.neighbors(v)) {
      if (v < w && group_of[v] == group_of[w]) ++internal[group_of[v]];
    }
  }
  const double m = static_cast<double>(g.edge_count());
  double q = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double a = static_cast<double>(volume[i]) / (2.0 * m);
    q += static_cast<double>(internal[i]) / m - a * a;
  }
  return q;
}

ConfusionTable confusion(const Partition& extracted, const Partition& truth) {
  require_same_universe(extracted, truth);
  ConfusionTable t;
  t.counts.assign(extracted.size(), std::vector<std::size_t>(truth.size(), 0));
  t.row_sums.assign(extracted.size(), 0);
  t.col_sums.assign(truth.size(), 0);
  t.total = extracted.universe_size();
  const auto truth_of = truth.membership();
  for (std::size_t i = 0; i < extracted.size(); ++i) {
    for (Vertex v : extracted.group(i)) ++t.counts[i][truth_of[v]];
    t.row_sums[i] = extracted.group(i).size();
  }
  for (std::size_t j = 0; j < truth.size(); ++j) t.col_sums[j] = truth.group(j).size();
  return t;
}

std::size_t max_weight_matching(const std::vector<std::vector<std::size_t>>& weights) {
  const std::size_t rows = weights.size();
  const std::size_t cols = rows == 0 ? 0 : weights.front().size();
  const std::size_t n = std::max(rows, cols);
  if (n == 0) return 0;

  // Hungarian method (shortest augmenting paths with potentials) on the
  // square cost matrix -weight, padded with zero-weight dummy rows/columns.
  auto cost = [&](std::size_t i, std::size_t j) -> long long {
    if (i >= rows || j >= cols) return 0;
    return -static_cast<long long>(weights[i][j]);
  };
  constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
  std::vector<long long> row_pot(n + 1, 0), col_pot(n + 1, 0);
  std::vector<std::size_t> match_of_col(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    match_of_col[0] = i;
    std::size_t j0 = 0;
    std::vector<long long> min_slack(n + 1, kInf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = match_of_col[j0];
      long long delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const long long cur = cost(i0 - 1, j - 1) - row_pot[i0] - col_pot[j];
        if (cur < min_slack[j]) {
          min_slack[j] = cur;
          way[j] = j0;
        }
        if (min_slack[j] < delta) {
          delta = min_slack[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          row_pot[match_of_col[j]] += delta;
          col_pot[j] -= delta;
        } else {
          min_slack[j] -= delta;
        }
      }
      j0 = j1;
    } while (match_of_col[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      match_of_col[j0] = match_of_col[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::size_t total = 0;
  for (std::size_t j = 1; j <= n; ++j) {
    const std::size_t i = match_of_col[j];
    if (i >= 1 && i - 1 < rows && j - 1 < cols) total += weights[i - 1][j - 1];
  }
  return total;
}

double accuracy(const Partition& extracted, const Partition& truth) {
  const ConfusionTable t = confusion(extracted, truth);
  if (t.total == 0) return 1.0;
  return static_cast<double>(max_weight_matching(t.counts)) / static_cast<double>(t.total);
}

double nmi(const Partition& extracted, const Partition& truth) {
  const ConfusionTable t = confusion(extracted, truth);
  if (t.total == 0) throw ValidationError("NMI of empty partitions");
  const double n = static_cast<double>(t.total);

  double numerator = 0.0;
  for (std::size_t i = 0; i < t.counts.size(); ++i) {
    for (std::size_t j = 0; j < t.col_sums.size(); ++j) {
      const double nij = static_cast<double>(t.counts[i][j]);
      if (nij == 0.0) continue;
      numerator += nij * std::log(nij * n / (static_cast<double>(t.row_sums[i]) *
                                             static_cast<double>(t.col_sums[j])));
    }
  }
  numerator *= -2.0;

  double denominator = 0.0;
  for (std::size_t r : t.row_sums) denominator += static_cast<double>(r) * std::log(r / n);
  for (std::size_t c : t.col_sums) denominator += static_cast<double>(c) * std::log(c / n);

  if (denominator == 0.0) return 1.0;  // both partitions are the whole set
  return std::clamp(numerator / denominator, 0.0, 1.0);
}

MetricTriple evaluate(const Graph& original, const Partition& extracted, const Partition& truth) {
  return {modularity(original, extracted), accuracy(extracted, truth), nmi(extracted, truth)};
}

}  // namespace specomm
