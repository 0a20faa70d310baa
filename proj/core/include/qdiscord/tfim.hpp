// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "qdiscord/correlations.hpp"

namespace qdiscord::tfim {

/// Periodic transverse-field Ising ring, H = -sum_i (sx_i sx_{i+1} + g sz_i).
struct TfimPoint {
  double g = 0.0;
  int sites = 0;
};

/// Throws Error(invalid_argument) unless g >= 0 and sites is even and >= 4.
void validate(const TfimPoint& p);

/// Bogoliubov data of the even-parity ground state on half-integer momenta
/// k = 2 pi q / L, q = -(L-1)/2, ..., (L-1)/2.
struct ModeAmplitudes {
  std::vector<double> momentum;
  std::vector<double> uv;         ///< u_q v_q
  std::vector<double> v_squared;  ///< v_q^2
  std::vector<double> energy;     ///< 2 sqrt(1 + g^2 - 2 g cos k)
};

ModeAmplitudes mode_amplitudes(const TfimPoint& p);

/// Nearest-neighbour spin functions. gz_a = gz_b = <sz>; gzz from the
/// Wick identity gzz = gz^2 - gxx gyy.
SpinFunctions tfim_correlators(const TfimPoint& p);

CorrelationReport tfim_report(const TfimPoint& p, Strategy strategy = Strategy::closed_form_auto);

/// C = H_bin((1 + gz)/2) - H_bin((1 + sqrt(gxx^2 + gz^2))/2): the value of
/// the measurement objective along the x axis.
double tfim_classical_closed_form(const TfimPoint& p);
double tfim_classical_closed_form(const SpinFunctions& g);

}  // namespace qdiscord::tfim
