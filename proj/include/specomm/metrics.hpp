#pragma once

#include <cstddef>
#include <vector>

#include "specomm/graph.hpp"

namespace specomm {

struct MetricTriple {
  double q = 0.0;
  double accuracy = 0.0;
  double nmi = 0.0;
};

/// Overlap counts between an extracted partition (rows) and a reference
/// partition (columns).
struct ConfusionTable {
  std::vector<std::vector<std::size_t>> counts;  ///< counts[i][j] = |P_i ∩ C_j|
  std::vector<std::size_t> row_sums;
  std::vector<std::size_t> col_sums;
  std::size_t total = 0;
};

/// Newman-Girvan modularity, sum over groups of (e_ii - a_i^2), where e_ii is
/// the fraction of edges inside group i and a_i the fraction of edge ends
/// attached to it. Throws ValidationError for an edgeless graph or a
/// partition of a different vertex set.
double modularity(const Graph& g, const Partition& p);

ConfusionTable confusion(const Partition& extracted, const Partition& truth);

/// Fraction of vertices in a correctly matched group, under the one-to-one
/// group matching that maximises the matched overlap.
double accuracy(const Partition& extracted, const Partition& truth);

/// Normalized mutual information, -2 sum n_ij log(n_ij n / (n_i n_j)) divided
/// by sum n_i log(n_i / n) + sum n_j log(n_j / n). Two single-group
/// partitions score 1.
double nmi(const Partition& extracted, const Partition& truth);

/// Modularity on `original` plus accuracy and NMI against `truth`.
MetricTriple evaluate(const Graph& original, const Partition& extracted, const Partition& truth);

/// Maximum-weight one-to-one assignment between the rows and columns of a
/// (possibly rectangular) non-negative weight matrix. Returns the total weight.
std::size_t max_weight_matching(const std::vector<std::vector<std::size_t>>& weights);

}  // namespace specomm
