#include "specomm/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "specomm/errors.hpp"

namespace specomm {

namespace {

using Vec = std::vector<double>;

constexpr std::size_t kMaxBlockSize = 8;

double dot(const Vec& a, const Vec& b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double norm2(const Vec& a) { return std::sqrt(dot(a, a)); }

void scale(Vec& a, double s) {
  for (double& x : a) x *= s;
}

// y += alpha * x
void axpy(double alpha, const Vec& x, Vec& y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

// Applies (M + I) / 2 with M = D^-1/2 A D^-1/2.
void apply_shifted(const Graph& g, const Vec& inv_sqrt_deg, const Vec& x, Vec& out) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    double acc = 0.0;
    for (Vertex w : g.neighbors(v)) acc += inv_sqrt_deg[w] * x[w];
    out[v] = 0.5 * (inv_sqrt_deg[v] * acc + x[v]);
  }
}

// Cyclic Jacobi on a symmetric row-major b x b matrix. On return `values`
// holds the eigenvalues in descending order and column k of the row-major
// `vectors` the matching eigenvector.
void jacobi_eigen(std::vector<double> a, std::size_t b, Vec& values, std::vector<double>& vectors) {
  auto at = [b](std::vector<double>& m, std::size_t r, std::size_t c) -> double& { return m[r * b + c]; };
  std::vector<double> v(b * b, 0.0);
  for (std::size_t i = 0; i < b; ++i) at(v, i, i) = 1.0;

  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    double diag = 0.0;
    for (std::size_t p = 0; p < b; ++p) {
      diag += at(a, p, p) * at(a, p, p);
      for (std::size_t q = p + 1; q < b; ++q) off += at(a, p, q) * at(a, p, q);
    }
    if (off <= 1e-32 * std::max(diag, 1e-300)) break;
    for (std::size_t p = 0; p < b; ++p) {
      for (std::size_t q = p + 1; q < b; ++q) {
        const double apq = at(a, p, q);
        if (apq == 0.0) continue;
        const double theta = (at(a, q, q) - at(a, p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < b; ++k) {
          const double akp = at(a, k, p);
          const double akq = at(a, k, q);
          at(a, k, p) = c * akp - s * akq;
          at(a, k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < b; ++k) {
          const double apk = at(a, p, k);
          const double aqk = at(a, q, k);
          at(a, p, k) = c * apk - s * aqk;
          at(a, q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < b; ++k) {
          const double vkp = at(v, k, p);
          const double vkq = at(v, k, q);
          at(v, k, p) = c * vkp - s * vkq;
          at(v, k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(b);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return at(a, i, i) > at(a, j, j); });
  values.assign(b, 0.0);
  vectors.assign(b * b, 0.0);
  for (std::size_t k = 0; k < b; ++k) {
    values[k] = at(a, order[k], order[k]);
    for (std::size_t r = 0; r < b; ++r) vectors[r * b + k] = at(v, r, order[k]);
  }
}

// Deterministic source of fill-in vectors for the iteration block.
class StartVectors {
 public:
  explicit StartVectors(std::size_t n) : n_(n) {}

  Vec next() {
    Vec x(n_);
    for (double& e : x) e = std::ldexp(static_cast<double>(engine_() >> 11), -52) - 1.0;
    return x;
  }

 private:
  std::size_t n_;
  std::mt19937_64 engine_{0x5eed5eedULL};
};

// Orthonormalizes `block` in place against `fixed` and itself (two passes of
// modified Gram-Schmidt). Columns that collapse are replaced from `fill`.
void orthonormalize(std::vector<Vec>& block, const Vec& fixed, StartVectors& fill) {
  for (std::size_t j = 0; j < block.size(); ++j) {
    for (int attempt = 0;; ++attempt) {
      Vec& col = block[j];
      const double before = norm2(col);
      for (int pass = 0; pass < 2; ++pass) {
        axpy(-dot(fixed, col), fixed, col);
        for (std::size_t i = 0; i < j; ++i) axpy(-dot(block[i], col), block[i], col);
      }
      const double after = norm2(col);
      if (after > 1e-10 * std::max(before, 1e-300) && after > 1e-200) {
        scale(col, 1.0 / after);
        break;
      }
      if (attempt > 16) throw AlgorithmError("eigensolver could not build an orthonormal block");
      col = fill.next();
    }
  }
}

void require_solvable(const Graph& g) {
  if (g.vertex_count() < 2) {
    throw ValidationError("second eigenpair needs at least two vertices");
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) {
      throw ValidationError("vertex '" + g.label(v) + "' has degree 0; transition matrix undefined");
    }
  }
  if (!is_connected(g)) throw ValidationError("second eigenpair needs a connected graph");
}

}  // namespace

double transition_residual(const Graph& g, const EigenPair& pair) {
  double worst = 0.0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    double acc = 0.0;
    for (Vertex w : g.neighbors(v)) acc += pair.vector[w];
    const double tx = g.degree(v) > 0 ? acc / static_cast<double>(g.degree(v)) : 0.0;
    worst = std::max(worst, std::abs(tx - pair.value * pair.vector[v]));
  }
  return worst;
}

void apply_sign_convention(std::vector<double>& v) {
  for (double e : v) {
    if (std::abs(e) > kZeroEntryTolerance) {
      if (e < 0.0) {
        for (double& x : v) x = -x;
      }
      return;
    }
  }
}

double sign_gap(std::span<const double> vector) {
  double smallest_nonneg = std::numeric_limits<double>::infinity();
  double largest_neg = -std::numeric_limits<double>::infinity();
  for (double e : vector) {
    if (e < -kZeroEntryTolerance) {
      largest_neg = std::max(largest_neg, e);
    } else {
      smallest_nonneg = std::min(smallest_nonneg, e);
    }
  }
  if (std::isinf(smallest_nonneg) || std::isinf(largest_neg)) {
    throw ValidationError("sign gap needs entries of both signs");
  }
  return smallest_nonneg - largest_neg;
}

EigenPair second_eigenpair(const Graph& g, const SolverConfig& cfg) {
  if (!(cfg.tolerance > 0.0)) throw ValidationError("solver tolerance must be positive");
  const std::size_t n = g.vertex_count();
  const std::size_t budget = cfg.iteration_budget(n);
  if (budget < 1) throw ValidationError("solver needs at least one iteration");
  require_solvable(g);

  Vec sqrt_deg(n);
  Vec inv_sqrt_deg(n);
  for (Vertex v = 0; v < n; ++v) {
    sqrt_deg[v] = std::sqrt(static_cast<double>(g.degree(v)));
    inv_sqrt_deg[v] = 1.0 / sqrt_deg[v];
  }
  // Top eigenvector of M, known in closed form.
  Vec top = sqrt_deg;
  scale(top, 1.0 / norm2(top));

  const std::size_t block_size = std::min(n - 1, kMaxBlockSize);
  StartVectors fill(n);
  std::vector<Vec> block;
  block.reserve(block_size);
  Vec first(n);
  for (std::size_t i = 0; i < n; ++i) first[i] = 1.0 + static_cast<double>(i) / static_cast<double>(n);
  block.push_back(std::move(first));
  while (block.size() < block_size) block.push_back(fill.next());
  orthonormalize(block, top, fill);

  std::vector<Vec> images(block_size, Vec(n));
  std::vector<Vec> ritz(block_size, Vec(n));
  std::vector<Vec> ritz_images(block_size, Vec(n));
  std::vector<double> projected(block_size * block_size);
  Vec ritz_values;
  std::vector<double> ritz_vectors;
  EigenPair candidate;
  double residual = std::numeric_limits<double>::infinity();

  for (std::size_t iter = 0; iter < budget; ++iter) {
    for (std::size_t j = 0; j < block_size; ++j) apply_shifted(g, inv_sqrt_deg, block[j], images[j]);
    for (std::size_t i = 0; i < block_size; ++i) {
      for (std::size_t j = i; j < block_size; ++j) {
        const double h = 0.5 * (dot(block[i], images[j]) + dot(block[j], images[i]));
        projected[i * block_size + j] = h;
        projected[j * block_size + i] = h;
      }
    }
    jacobi_eigen(projected, block_size, ritz_values, ritz_vectors);
    for (std::size_t k = 0; k < block_size; ++k) {
      std::fill(ritz[k].begin(), ritz[k].end(), 0.0);
      std::fill(ritz_images[k].begin(), ritz_images[k].end(), 0.0);
      for (std::size_t r = 0; r < block_size; ++r) {
        const double w = ritz_vectors[r * block_size + k];
        axpy(w, block[r], ritz[k]);
        axpy(w, images[r], ritz_images[k]);
      }
    }

    // Map the leading Ritz vector back to T and measure the true residual.
    Vec y = ritz[0];
    axpy(-dot(top, y), top, y);
    candidate.value = 2.0 * ritz_values[0] - 1.0;
    candidate.vector.assign(n, 0.0);
    for (std::size_t v = 0; v < n; ++v) candidate.vector[v] = inv_sqrt_deg[v] * y[v];
    scale(candidate.vector, 1.0 / norm2(candidate.vector));
    residual = transition_residual(g, candidate);
    if (residual <= cfg.tolerance) {
      apply_sign_convention(candidate.vector);
      return candidate;
    }

    block.swap(ritz_images);
    orthonormalize(block, top, fill);
  }

  std::ostringstream msg;
  msg << "second eigenpair did not converge in " << budget << " iterations (residual " << residual
      << ")";
  throw ConvergenceError(msg.str(), residual);
}

Bisection spectra_bisection(const Graph& g, const SolverConfig& cfg) {
  if (g.vertex_count() < 2) throw ValidationError("bisection needs at least two vertices");

  Bisection out;
  const Partition components = connected_components(g);
  if (components.size() > 1) {
    out.first = components.group(0);
    for (std::size_t i = 1; i < components.size(); ++i) {
      const auto& grp = components.group(i);
      out.second.insert(out.second.end(), grp.begin(), grp.end());
    }
    std::sort(out.second.begin(), out.second.end());
    return out;
  }

  const EigenPair pair = second_eigenpair(g, cfg);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    (pair.vector[v] < -kZeroEntryTolerance ? out.second : out.first).push_back(v);
  }
  if (out.first.empty() || out.second.empty()) {
    throw AlgorithmError("second eigenvector does not change sign");
  }
  return out;
}

}  // namespace specomm
