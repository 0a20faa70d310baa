// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qdiscord/correlations.hpp"

namespace qdiscord::lmg {

/// Hartree-Fock ground state of the Lipkin-Meshkov-Glick model in the
/// large-degeneracy limit. `same_mode` selects the pair (+m, -m) rather than
/// (+m, -n) with m != n.
struct LmgPoint {
  double lambda = 0.0;
  bool same_mode = true;
};

/// HF mixing angle: arccos(lambda)/2 below the critical point, 0 at and above it.
double variational_angle(double lambda);

/// Pair state with rows ordered (<MM>, <MN>, <NM>, <NN>), M = 1 - N the
/// vacancy projector.
XState lmg_pair_density(const LmgPoint& p);

CorrelationReport lmg_report(const LmgPoint& p);

}  // namespace qdiscord::lmg
