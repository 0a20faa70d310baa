// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <numbers>

#include "qdiscord/xstate.hpp"

namespace qdiscord {

/// Projective measurement on site B along the Bloch direction
/// (sin(theta) cos(phi), sin(theta) sin(phi), cos(theta)).
struct MeasurementAngles {
  double theta = 0.0;  ///< [0, pi]
  double phi = 0.0;    ///< [0, 2 pi)

  [[nodiscard]] std::array<double, 3> direction() const noexcept;
};

/// Outcome-resolved entropies after measuring site B. Outcome k has
/// probability p[k] = (1 + (-1)^k c4 w3) / 2; when p[k] < kOutcomeFloor the
/// outcome is flagged degenerate and its entropy is defined as 0.
struct ConditionalEntropies {
  std::array<double, 2> entropy{};
  std::array<double, 2> probability{};
  std::array<double, 2> bloch_length{};
  std::array<bool, 2> degenerate{};
};

inline constexpr double kOutcomeFloor = 1e-14;

ConditionalEntropies measured_conditional_entropy(const CorrCoeffs& c, const MeasurementAngles& m);

/// S(rho^A) - sum_k p_k S(rho_k): the locally accessible information for the
/// given measurement. Classical correlation is its maximum over angles.
double measurement_objective(const CorrCoeffs& c, const MeasurementAngles& m);

/// Marginal entropies from the Bloch z-components c5 (site A) and c4 (site B).
double entropy_a(const CorrCoeffs& c);
double entropy_b(const CorrCoeffs& c);

double mutual_information(const CorrCoeffs& c);

enum class Strategy {
  grid_refine,       ///< always run the numerical optimizer
  closed_form_auto,  ///< closed form when c4 = c5 = 0, optimizer otherwise
};

struct ClassicalResult {
  double value = 0.0;
  MeasurementAngles optimal;
};

/// Tolerance used to decide that c4 and c5 vanish.
inline constexpr double kCoherenceOnlyTolerance = 1e-12;

ClassicalResult classical_correlation(const CorrCoeffs& c, Strategy strategy = Strategy::closed_form_auto);

/// Closed form valid for c4 = c5 = 0. Throws Error(not_applicable) otherwise.
double classical_correlation_closed_form(const CorrCoeffs& c);

/// Maximizing axis of the closed form: z for |c3|, x for |c1|, y for |c2|.
MeasurementAngles closed_form_angles(const CorrCoeffs& c) noexcept;

struct CorrelationReport {
  SpinFunctions spin;
  CorrCoeffs coeffs;
  double mutual_info = 0.0;
  double classical = 0.0;
  double discord = 0.0;
  MeasurementAngles optimal_angles;
  double entropy_a = 0.0;
  double entropy_b = 0.0;
};

CorrelationReport quantum_discord(const CorrCoeffs& c, Strategy strategy = Strategy::closed_form_auto);
CorrelationReport quantum_discord(const XState& s, Strategy strategy = Strategy::closed_form_auto);

/// Maps (theta, phi) onto the representative in [0, pi/2] x [0, pi/2] using
/// the objective's reflection symmetries (w1, w2, w3 sign flips).
MeasurementAngles canonicalize(MeasurementAngles m) noexcept;

}  // namespace qdiscord
