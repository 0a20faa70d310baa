// SPDX-License-Identifier: Apache-2.0
#include "qdiscord/entropy.hpp"

#include <cmath>
#include <string>

#include "qdiscord/error.hpp"

namespace qdiscord {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::non_physical_state: return "NonPhysicalState";
    case ErrorCode::degenerate_outcome: return "DegenerateOutcome";
    case ErrorCode::optimizer_stall: return "OptimizerStall";
    case ErrorCode::not_applicable: return "NotApplicable";
    case ErrorCode::domain_error: return "DomainError";
    case ErrorCode::sector_empty: return "SectorEmpty";
    case ErrorCode::no_convergence: return "NoConvergence";
    case ErrorCode::symmetry_violation: return "SymmetryViolation";
    case ErrorCode::near_degeneracy: return "NearDegeneracy";
    case ErrorCode::grid_too_coarse: return "GridTooCoarse";
    case ErrorCode::extremum_on_boundary: return "ExtremumOnBoundary";
    case ErrorCode::rank_deficient: return "RankDeficient";
    case ErrorCode::no_crossing: return "NoCrossing";
    case ErrorCode::multiple_crossings: return "MultipleCrossings";
    case ErrorCode::sweep_point_failed: return "SweepPointFailed";
    case ErrorCode::io_error: return "IoError";
  }
  return "Unknown";
}

double entropy_term(double x) noexcept {
  if (x <= 0.0) return 0.0;
  return -x * std::log2(x);
}

double binary_entropy(double p) {
  if (!(p >= -kProbabilitySlack && p <= 1.0 + kProbabilitySlack)) {
    throw Error(ErrorCode::domain_error, "binary entropy argument " + std::to_string(p) + " outside [0, 1]");
  }
  if (p < 0.0) p = 0.0;
  if (p > 1.0) p = 1.0;
  return entropy_term(p) + entropy_term(1.0 - p);
}

double spectrum_entropy(std::span<const double> eigenvalues) {
  double s = 0.0;
  for (double lambda : eigenvalues) {
    if (lambda < -kProbabilitySlack) {
      throw Error(ErrorCode::non_physical_state, "negative eigenvalue " + std::to_string(lambda));
    }
    s += entropy_term(lambda);
  }
  return s;
}

}  // namespace qdiscord
