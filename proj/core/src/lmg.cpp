// SPDX-License-Identifier: Apache-2.0
#include "qdiscord/lmg.hpp"

#include <cmath>

#include "qdiscord/error.hpp"

namespace qdiscord::lmg {

double variational_angle(double lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw Error(ErrorCode::invalid_argument, "lambda must be finite and >= 0");
  }
  return lambda < 1.0 ? 0.5 * std::acos(lambda) : 0.0;
}

XState lmg_pair_density(const LmgPoint& p) {
  const double alpha = variational_angle(p.lambda);
  const double c = std::cos(alpha);
  const double s = std::sin(alpha);
  XState x{};
  if (p.same_mode) {
    x = {0.0, c * c, s * s, 0.0, s * c, 0.0};
  } else {
    x = {s * s * c * c, c * c * c * c, s * s * s * s, s * s * c * c, 0.0, 0.0};
  }
  validate(x);
  return x;
}

CorrelationReport lmg_report(const LmgPoint& p) { return quantum_discord(lmg_pair_density(p)); }

}  // namespace qdiscord::lmg
