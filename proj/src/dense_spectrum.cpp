#include <Eigen/Dense>
#include <cmath>

#include "specomm/errors.hpp"
#include "specomm/spectral.hpp"

namespace specomm {

std::vector<EigenPair> dense_spectrum(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw ValidationError("dense spectrum of an empty graph");
  if (n > 64) throw ValidationError("dense spectrum is limited to 64 vertices");

  Eigen::VectorXd inv_sqrt_deg(n);
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == 0) throw ValidationError("vertex '" + g.label(v) + "' has degree 0");
    inv_sqrt_deg[v] = 1.0 / std::sqrt(static_cast<double>(g.degree(v)));
  }
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [u, v] : g.edges()) {
    const double w = inv_sqrt_deg[u] * inv_sqrt_deg[v];
    m(u, v) = w;
    m(v, u) = w;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) throw AlgorithmError("dense eigensolver failed");

  std::vector<EigenPair> out;
  out.reserve(n);
  // Eigen returns ascending eigenvalues.
  for (Eigen::Index k = static_cast<Eigen::Index>(n) - 1; k >= 0; --k) {
    Eigen::VectorXd x = inv_sqrt_deg.cwiseProduct(solver.eigenvectors().col(k));
    x.normalize();
    EigenPair pair{solver.eigenvalues()[k], std::vector<double>(x.data(), x.data() + n)};
    apply_sign_convention(pair.vector);
    out.push_back(std::move(pair));
  }
  return out;
}

}  // namespace specomm
