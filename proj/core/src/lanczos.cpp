// SPDX-License-Identifier: Apache-2.0
#include "qdiscord/lanczos.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "qdiscord/error.hpp"

namespace qdiscord::ed {

namespace {

double dot(std::span<const double> x, std::span<const double> y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

double norm(std::span<const double> x) { return std::sqrt(dot(x, x)); }

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

void scale(double alpha, std::span<double> x) {
  for (double& v : x) v *= alpha;
}

// Two passes of classical Gram-Schmidt.
void orthogonalize(std::span<double> v, std::span<const std::vector<double>> locked,
                   const std::vector<std::vector<double>>& basis, std::size_t basis_size) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& u : locked) axpy(-dot(u, v), u, v);
    for (std::size_t k = 0; k < basis_size; ++k) axpy(-dot(basis[k], v), basis[k], v);
  }
}

}  // namespace

Eigenpair lowest_eigenpair(const LinearOperator& op, std::span<const std::vector<double>> locked,
                           const LanczosOptions& options) {
  const std::size_t n = op.dim;
  if (n == 0 || locked.size() >= n) {
    throw Error(ErrorCode::invalid_argument, "Lanczos needs a nonempty complement of the locked space");
  }
  const std::size_t free_dim = n - locked.size();
  const std::size_t m = std::min<std::size_t>(static_cast<std::size_t>(std::max(2, options.krylov_dim)), free_dim);

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  std::vector<double> start(n);
  for (double& v : start) v = uniform(rng);

  std::vector<std::vector<double>> basis(m, std::vector<double>(n));
  std::vector<double> w(n);
  std::vector<double> alpha(m);
  std::vector<double> beta(m);
  Eigenpair best;
  int products = 0;

  while (true) {
    orthogonalize(start, locked, basis, 0);
    double start_norm = norm(start);
    if (start_norm < 1e-300) {
      for (double& v : start) v = uniform(rng);
      orthogonalize(start, locked, basis, 0);
      start_norm = norm(start);
    }
    std::copy(start.begin(), start.end(), basis[0].begin());
    scale(1.0 / start_norm, basis[0]);

    std::size_t steps = 0;
    double last_beta = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      op.apply(basis[j], w);
      ++products;
      alpha[j] = dot(basis[j], w);
      orthogonalize(w, locked, basis, j + 1);
      const double b = norm(w);
      steps = j + 1;
      last_beta = b;
      if (j + 1 == m || b < 1e-12) break;
      beta[j] = b;
      std::copy(w.begin(), w.end(), basis[j + 1].begin());
      scale(1.0 / b, basis[j + 1]);
    }

    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(steps), static_cast<Eigen::Index>(steps));
    for (std::size_t j = 0; j < steps; ++j) {
      const auto jj = static_cast<Eigen::Index>(j);
      t(jj, jj) = alpha[j];
      if (j + 1 < steps) {
        t(jj, jj + 1) = beta[j];
        t(jj + 1, jj) = beta[j];
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri(t);
    const Eigen::VectorXd y = tri.eigenvectors().col(0);

    std::vector<double> ritz(n, 0.0);
    for (std::size_t j = 0; j < steps; ++j) axpy(y(static_cast<Eigen::Index>(j)), basis[j], ritz);
    orthogonalize(ritz, locked, basis, 0);
    scale(1.0 / norm(ritz), ritz);

    const double estimate = std::abs(last_beta * y(static_cast<Eigen::Index>(steps - 1)));
    if (estimate <= options.residual_tol || steps < m) {
      // Confirm with an explicit residual.
      op.apply(ritz, w);
      ++products;
      const double value = dot(ritz, w);
      axpy(-value, ritz, w);
      orthogonalize(w, locked, basis, 0);
      const double residual = norm(w);
      if (residual <= options.residual_tol) {
        best.value = value;
        best.vector = std::move(ritz);
        best.residual = residual;
        return best;
      }
    }
    if (products >= options.max_iterations) {
      throw Error(ErrorCode::no_convergence,
                  "Lanczos residual " + std::to_string(estimate) + " after " + std::to_string(products) + " products");
    }
    start = std::move(ritz);
  }
}

}  // namespace qdiscord::ed
