// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace qdiscord::ed {

/// y = A x for a real symmetric operator of fixed dimension.
struct LinearOperator {
  std::size_t dim = 0;
  std::function<void(std::span<const double> x, std::span<double> y)> apply;
};

struct LanczosOptions {
  int max_iterations = 2000;  ///< total matrix-vector products
  int krylov_dim = 80;        ///< basis size per restart cycle
  double residual_tol = 1e-10;
  std::uint64_t seed = 0x5eed5eedULL;
};

struct Eigenpair {
  double value = 0.0;
  std::vector<double> vector;
  double residual = 0.0;
};

/// Lowest eigenpair of `op` restricted to the orthogonal complement of
/// `locked` (which must be orthonormal). Restarted Lanczos with full
/// reorthogonalization; throws Error(no_convergence) when the residual
/// target is not met within max_iterations products.
Eigenpair lowest_eigenpair(const LinearOperator& op, std::span<const std::vector<double>> locked,
                           const LanczosOptions& options = {});

}  // namespace qdiscord::ed
