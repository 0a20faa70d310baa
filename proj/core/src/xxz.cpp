// SPDX-License-Identifier: Apache-2.0
#include "qdiscord/xxz.hpp"

#include <array>
#include <cmath>
#include <string>

#include "qdiscord/entropy.hpp"
#include "qdiscord/error.hpp"

namespace qdiscord::xxz {

void validate(const XxzPoint& p) {
  if (p.sites < kMinSites || p.sites > kMaxSites) {
    throw Error(ErrorCode::invalid_argument, "ring size " + std::to_string(p.sites) + " outside [4, 20]");
  }
  if (!std::isfinite(p.delta)) throw Error(ErrorCode::invalid_argument, "non-finite anisotropy");
}

ed::RingSpec ring(const XxzPoint& p) {
  validate(p);
  return ed::RingSpec::xxz(p.sites, p.delta);
}

double energy_density(const XxzPoint& p, const ed::GroundOptions& options) {
  return ed::ground_space(ring(p), options).energy / p.sites;
}

double mutual_information_coherent(const CorrCoeffs& c) {
  const std::array<double, 4> lambda{
      0.25 * (1.0 - c.c1 - c.c2 - c.c3),
      0.25 * (1.0 - c.c1 + c.c2 + c.c3),
      0.25 * (1.0 + c.c1 - c.c2 + c.c3),
      0.25 * (1.0 + c.c1 + c.c2 - c.c3),
  };
  return 2.0 - spectrum_entropy(lambda);
}

namespace {

CorrCoeffs symmetric_coefficients(const XState& s) {
  CorrCoeffs c = bloch_coefficients(s);
  if (std::abs(s.f) > kSymmetryTolerance || std::abs(c.c4) > kSymmetryTolerance ||
      std::abs(c.c5) > kSymmetryTolerance) {
    throw Error(ErrorCode::symmetry_violation, "U(1) constraints broken: f=" + std::to_string(s.f) +
                                                   " c4=" + std::to_string(c.c4) + " c5=" + std::to_string(c.c5));
  }
  c.c4 = 0.0;
  c.c5 = 0.0;
  return c;
}

}  // namespace

CorrelationReport xxz_report(const XxzPoint& p, const ed::GroundOptions& options) {
  const ed::GroundSolution sol = ed::ground_space(ring(p), options);
  const XState s = ed::pair_density(sol, 0, 1);
  const CorrCoeffs c = symmetric_coefficients(s);

  CorrelationReport r;
  r.coeffs = c;
  r.spin = spin_functions(c);
  r.entropy_a = 1.0;
  r.entropy_b = 1.0;
  r.mutual_info = mutual_information_coherent(c);
  r.classical = classical_correlation_closed_form(c);
  r.optimal_angles = closed_form_angles(c);
  r.discord = r.mutual_info - r.classical;
  return r;
}

HellmannFeynmanResiduals hellmann_feynman_residuals(const XxzPoint& p, double h, const ed::GroundOptions& options) {
  validate(p);
  if (!(h > 0.0)) throw Error(ErrorCode::invalid_argument, "step must be positive");
  if (std::abs(p.delta - 1.0) <= 2.0 * h) {
    throw Error(ErrorCode::near_degeneracy, "stencil overlaps the level crossing at delta = 1");
  }
  const ed::GroundSolution centre = ed::ground_space(ring(p), options);
  const std::size_t degeneracy = centre.degeneracy();

  auto energy_at = [&](double delta) {
    const ed::GroundSolution sol = ed::ground_space(ring({delta, p.sites}), options);
    if (sol.degeneracy() != degeneracy) {
      throw Error(ErrorCode::near_degeneracy, "ground degeneracy changes across the stencil");
    }
    return sol.energy / p.sites;
  };
  const double d_h = (energy_at(p.delta + h) - energy_at(p.delta - h)) / (2.0 * h);
  const double d_half = (energy_at(p.delta + 0.5 * h) - energy_at(p.delta - 0.5 * h)) / h;
  const double derivative = (4.0 * d_half - d_h) / 3.0;

  HellmannFeynmanResiduals out;
  out.energy_density = centre.energy / p.sites;
  out.derivative = derivative;
  out.direct = symmetric_coefficients(ed::pair_density(centre, 0, 1));
  out.r1 = std::abs(out.direct.c1 - (p.delta * derivative - out.energy_density));
  out.r3 = std::abs(out.direct.c3 + 2.0 * derivative);
  return out;
}

CorrelationReport ising_limit_state(IsingSign sign) {
  XState s{0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
  if (sign == IsingSign::ferromagnetic) {
    s.a = 0.5;
    s.d = 0.5;
  } else {
    s.b1 = 0.5;
    s.b2 = 0.5;
  }
  return quantum_discord(s);
}

}  // namespace qdiscord::xxz
