#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "specomm/graph.hpp"

namespace specomm {

/// Eigenvalue/eigenvector of the random-walk transition matrix T = D^-1 A.
/// The vector is indexed by dense vertex index, has unit Euclidean norm, and
/// its first entry that is not (numerically) zero is positive.
struct EigenPair {
  double value = 0.0;
  std::vector<double> vector;
};

struct SolverConfig {
  double tolerance = 1e-10;                   ///< bound on ||T x - lambda x||_inf
  std::optional<std::size_t> max_iterations;  ///< defaults to 100 n + 1000

  std::size_t iteration_budget(std::size_t n) const {
    return max_iterations.value_or(100 * n + 1000);
  }
};

/// Eigenvector entries with magnitude at or below this are treated as zero,
/// both by the sign convention and by the bisection rule.
inline constexpr double kZeroEntryTolerance = 1e-9;

/// ||T x - lambda x||_inf for the transition matrix of g.
double transition_residual(const Graph& g, const EigenPair& pair);

/// Flips the vector so its first non-zero entry is positive.
void apply_sign_convention(std::vector<double>& v);

/// Distance between the two sign classes of an eigenvector: the smallest
/// entry on the non-negative side minus the largest negative entry (entries
/// within kZeroEntryTolerance of zero count as non-negative). Throws
/// ValidationError if either side is empty.
double sign_gap(std::span<const double> vector);

/// Eigenpair of T with the second most positive eigenvalue.
///
/// Works on the symmetric M = D^-1/2 A D^-1/2, whose top eigenvector
/// (proportional to sqrt(d)) is known and projected out. Subspace iteration on
/// (M + I) / 2 with Rayleigh-Ritz extraction then converges to the most
/// positive remaining eigenvalue rather than the one of largest magnitude. The
/// result is mapped back with x = D^-1/2 y, so sum_v d_v x_v = 0.
///
/// Requires a connected graph with at least two vertices. Throws
/// ValidationError on bad input and ConvergenceError when the budget runs out.
EigenPair second_eigenpair(const Graph& g, const SolverConfig& cfg = {});

struct Bisection {
  std::vector<Vertex> first;   ///< non-negative entries (or the largest component)
  std::vector<Vertex> second;  ///< negative entries (or the other components)
};

/// Splits g in two by the signs of the second eigenvector. Zero entries go to
/// `first`. A disconnected graph is split into its largest component and the
/// rest without solving an eigenproblem. Both halves are nonempty.
Bisection spectra_bisection(const Graph& g, const SolverConfig& cfg = {});

/// Every eigenpair of T from a dense symmetric solve, sorted by descending
/// eigenvalue. Reference implementation for tests; limited to 64 vertices.
std::vector<EigenPair> dense_spectrum(const Graph& g);

}  // namespace specomm
