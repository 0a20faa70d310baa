// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qdiscord/correlations.hpp"
#include "qdiscord/ed.hpp"

namespace qdiscord::xxz {

struct XxzPoint {
  double delta = 0.0;
  int sites = 0;
};

inline constexpr int kMinSites = 4;
inline constexpr int kMaxSites = 20;
inline constexpr double kSymmetryTolerance = 1e-10;

void validate(const XxzPoint& p);

ed::RingSpec ring(const XxzPoint& p);

/// Ground-state energy per site.
double energy_density(const XxzPoint& p, const ed::GroundOptions& options = {});

/// Nearest-neighbour report. Checks that f, c4 and c5 vanish (Error(symmetry_violation)
/// otherwise), then uses the coherence-only closed forms for C and I.
CorrelationReport xxz_report(const XxzPoint& p, const ed::GroundOptions& options = {});

/// Mutual information from the four eigenvalues (1 -+ c1 -+ c2 -+ c3)/4 of
/// an X-state with c4 = c5 = 0.
double mutual_information_coherent(const CorrCoeffs& c);

struct HellmannFeynmanResiduals {
  double r1 = 0.0;  ///< |c1 - (delta de/ddelta - e)|
  double r3 = 0.0;  ///< |c3 + 2 de/ddelta|
  double energy_density = 0.0;
  double derivative = 0.0;  ///< Richardson-extrapolated de/ddelta
  CorrCoeffs direct;
};

/// Compares direct correlators with energy derivatives from central
/// differences at steps h and h/2. Throws Error(near_degeneracy) within 2h
/// of delta = 1 or if the ground degeneracy changes across the stencil.
HellmannFeynmanResiduals hellmann_feynman_residuals(const XxzPoint& p, double h = 1e-4,
                                                    const ed::GroundOptions& options = {});

enum class IsingSign { ferromagnetic, antiferromagnetic };

/// Analytic report for delta -> +infinity (mixture of the two polarized
/// states) or delta -> -infinity (mixture of the two Neel states).
CorrelationReport ising_limit_state(IsingSign sign);

}  // namespace qdiscord::xxz
