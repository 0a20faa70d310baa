// SPDX-License-Identifier: Apache-2.0
#include "qdiscord/tfim.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "numeric.hpp"
#include "qdiscord/entropy.hpp"
#include "qdiscord/error.hpp"

namespace qdiscord::tfim {

void validate(const TfimPoint& p) {
  if (!(p.g >= 0.0) || !std::isfinite(p.g)) {
    throw Error(ErrorCode::invalid_argument, "transverse field must be finite and >= 0");
  }
  if (p.sites < 4 || p.sites % 2 != 0) {
    throw Error(ErrorCode::invalid_argument, "ring size must be even and >= 4, got " + std::to_string(p.sites));
  }
}

ModeAmplitudes mode_amplitudes(const TfimPoint& p) {
  validate(p);
  const auto n = static_cast<std::size_t>(p.sites);
  const double l = p.sites;
  ModeAmplitudes m;
  m.momentum.resize(n);
  m.uv.resize(n);
  m.v_squared.resize(n);
  m.energy.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double q = static_cast<double>(j) - 0.5 * (l - 1.0);
    const double k = 2.0 * std::numbers::pi * q / l;
    const double c = std::cos(k);
    // sqrt(1 + g^2 - 2 g cos k) written to avoid cancellation near g = 1, k = 0.
    const double half = std::sin(0.5 * k);
    const double root = std::sqrt((1.0 - p.g) * (1.0 - p.g) + 4.0 * p.g * half * half);
    m.momentum[j] = k;
    m.uv[j] = 0.5 * std::sin(k) / root;
    m.v_squared[j] = 0.5 * (1.0 - (p.g - c) / root);
    m.energy[j] = 2.0 * root;
  }
  return m;
}

SpinFunctions tfim_correlators(const TfimPoint& p) {
  const ModeAmplitudes m = mode_amplitudes(p);
  const std::size_t n = m.momentum.size();
  std::vector<double> xx(n);
  std::vector<double> yy(n);
  std::vector<double> z(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double c = std::cos(m.momentum[j]) * m.v_squared[j];
    const double s = std::sin(m.momentum[j]) * m.uv[j];
    xx[j] = c + s;
    yy[j] = c - s;
    z[j] = 1.0 - 2.0 * m.v_squared[j];
  }
  const double l = p.sites;
  SpinFunctions g;
  g.gxx = 2.0 / l * detail::pairwise_sum(xx);
  g.gyy = 2.0 / l * detail::pairwise_sum(yy);
  g.gz_a = detail::pairwise_sum(z) / l;
  g.gz_b = g.gz_a;
  g.gzz = g.gz_a * g.gz_a - g.gxx * g.gyy;
  return g;
}

CorrelationReport tfim_report(const TfimPoint& p, Strategy strategy) {
  const SpinFunctions g = tfim_correlators(p);
  CorrelationReport r = quantum_discord(xstate_from_spin_functions(g), strategy);
  r.spin = g;
  return r;
}

double tfim_classical_closed_form(const SpinFunctions& g) {
  const double p1 = 0.5 * (1.0 + g.gz_a);
  const double p2 = 0.5 * (1.0 + std::min(1.0, std::hypot(g.gxx, g.gz_a)));
  return binary_entropy(p1) - binary_entropy(p2);
}

double tfim_classical_closed_form(const TfimPoint& p) { return tfim_classical_closed_form(tfim_correlators(p)); }

}  // namespace qdiscord::tfim
