// SPDX-License-Identifier: Apache-2.0
#include "qdiscord/correlations.hpp"

#include <algorithm>
#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "qdiscord/entropy.hpp"
#include "qdiscord/error.hpp"

namespace qdiscord {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr int kGridNodes = 64;
constexpr int kMaxSeeds = 6;
constexpr int kMaxSweeps = 200;
constexpr double kSweepImprovement = 1e-14;
constexpr double kSnapDistance = 1e-6;

// theta_k may exceed 1 by rounding; beyond this it signals an invalid state.
constexpr double kBlochSlack = 1e-9;

class Objective {
 public:
  explicit Objective(const CorrCoeffs& c) : c_(c), s_a_(entropy_a(c)) {}

  [[nodiscard]] ConditionalEntropies conditional(double theta, double phi) const {
    const double st = std::sin(theta);
    const double w1 = st * std::cos(phi);
    const double w2 = st * std::sin(phi);
    const double w3 = std::cos(theta);
    ConditionalEntropies out;
    for (int k = 0; k < 2; ++k) {
      const double sign = k == 0 ? 1.0 : -1.0;
      const double denom = 1.0 + sign * c_.c4 * w3;
      out.probability[k] = 0.5 * denom;
      if (out.probability[k] < kOutcomeFloor) {
        out.degenerate[k] = true;
        out.entropy[k] = 0.0;
        out.bloch_length[k] = 0.0;
        continue;
      }
      const double q1 = sign * c_.c1 * w1 / denom;
      const double q2 = sign * c_.c2 * w2 / denom;
      const double q3 = sign * (c_.c3 * w3 + sign * c_.c5) / denom;
      double length = std::sqrt(q1 * q1 + q2 * q2 + q3 * q3);
      if (length > 1.0) {
        if (length > 1.0 + kBlochSlack && out.probability[k] > 1e-8) {
          throw Error(ErrorCode::non_physical_state,
                      "conditional Bloch vector longer than 1: " + std::to_string(length));
        }
        length = 1.0;
      }
      out.bloch_length[k] = length;
      out.entropy[k] = binary_entropy(0.5 * (1.0 + length));
    }
    return out;
  }

  [[nodiscard]] double operator()(double theta, double phi) const {
    const ConditionalEntropies ce = conditional(theta, phi);
    double value = s_a_;
    for (int k = 0; k < 2; ++k) {
      if (!ce.degenerate[k]) value -= ce.probability[k] * ce.entropy[k];
    }
    return value;
  }

 private:
  CorrCoeffs c_;
  double s_a_;
};

struct Candidate {
  double theta;
  double phi;
  double value;
};

double brent_maximize(const auto& f, double lo, double hi, double& arg) {
  const auto result = boost::math::tools::brent_find_minima(
      [&](double x) { return -f(x); }, lo, hi, std::numeric_limits<double>::digits / 2 + 4);
  arg = result.first;
  return -result.second;
}

// Cyclic coordinate ascent with Brent (parabolic) line searches, each
// confined to one coarse cell on either side of the current point.
Candidate refine(const Objective& objective, Candidate start, double cell) {
  Candidate best = start;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    const double before = best.value;

    double theta = best.theta;
    const double phi_fixed = best.phi;
    double value = brent_maximize([&](double t) { return objective(t, phi_fixed); },
                                  std::max(0.0, best.theta - cell), std::min(kHalfPi, best.theta + cell), theta);
    if (value > best.value) best = {theta, best.phi, value};

    double phi = best.phi;
    const double theta_fixed = best.theta;
    value = brent_maximize([&](double p) { return objective(theta_fixed, p); }, std::max(0.0, best.phi - cell),
                           std::min(kHalfPi, best.phi + cell), phi);
    if (value > best.value) best = {best.theta, phi, value};

    if (best.value - before < kSweepImprovement) break;
  }

  // Reduced-domain edges are mirror lines of the objective, so maxima there
  // are smooth; snap onto them exactly when the line search lands close.
  auto snap = [](double x) {
    if (x < kSnapDistance) return 0.0;
    if (kHalfPi - x < kSnapDistance) return kHalfPi;
    return x;
  };
  const Candidate snapped{snap(best.theta), snap(best.phi), 0.0};
  if (snapped.theta != best.theta || snapped.phi != best.phi) {
    const double v = objective(snapped.theta, snapped.phi);
    if (v >= best.value - 1e-15) best = {snapped.theta, snapped.phi, std::max(v, best.value)};
  }
  return best;
}

ClassicalResult optimize(const CorrCoeffs& c) {
  const Objective objective(c);
  const double cell = kHalfPi / (kGridNodes - 1);

  std::vector<double> grid(static_cast<std::size_t>(kGridNodes * kGridNodes));
  auto at = [&](int i, int j) -> double& { return grid[static_cast<std::size_t>(i * kGridNodes + j)]; };
  double grid_best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < kGridNodes; ++i) {
    for (int j = 0; j < kGridNodes; ++j) {
      at(i, j) = objective(i * cell, j * cell);
      grid_best = std::max(grid_best, at(i, j));
    }
  }

  std::vector<Candidate> seeds;
  for (int i = 0; i < kGridNodes; ++i) {
    for (int j = 0; j < kGridNodes; ++j) {
      const double v = at(i, j);
      bool is_peak = true;
      for (int di = -1; di <= 1 && is_peak; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          const int ni = i + di;
          const int nj = j + dj;
          if ((di == 0 && dj == 0) || ni < 0 || nj < 0 || ni >= kGridNodes || nj >= kGridNodes) continue;
          if (at(ni, nj) > v) {
            is_peak = false;
            break;
          }
        }
      }
      if (is_peak) seeds.push_back({i * cell, j * cell, v});
    }
  }
  std::stable_sort(seeds.begin(), seeds.end(),
                   [](const Candidate& x, const Candidate& y) { return x.value > y.value; });
  if (seeds.size() > kMaxSeeds) seeds.resize(kMaxSeeds);

  Candidate best{0.0, 0.0, -std::numeric_limits<double>::infinity()};
  for (const Candidate& seed : seeds) {
    const Candidate refined = refine(objective, seed, cell);
    if (refined.value > best.value + 1e-15) best = refined;
  }
  if (!std::isfinite(best.value) || best.value < grid_best - 1e-12) {
    throw Error(ErrorCode::optimizer_stall, "refinement did not reach the coarse-grid maximum");
  }
  MeasurementAngles angles = canonicalize({best.theta, best.phi});
  return {best.value, angles};
}

}  // namespace

std::array<double, 3> MeasurementAngles::direction() const noexcept {
  const double st = std::sin(theta);
  return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
}

MeasurementAngles canonicalize(MeasurementAngles m) noexcept {
  const auto w = m.direction();
  MeasurementAngles out;
  out.theta = std::acos(std::clamp(std::abs(w[2]), 0.0, 1.0));
  out.phi = out.theta == 0.0 ? 0.0 : std::atan2(std::abs(w[1]), std::abs(w[0]));
  // Exact inputs on the reduced domain come back unchanged.
  if (m.theta >= 0.0 && m.theta <= kHalfPi && m.phi >= 0.0 && m.phi <= kHalfPi) {
    out.theta = m.theta;
    out.phi = m.theta == 0.0 ? 0.0 : m.phi;
  }
  return out;
}

ConditionalEntropies measured_conditional_entropy(const CorrCoeffs& c, const MeasurementAngles& m) {
  return Objective(c).conditional(m.theta, m.phi);
}

double measurement_objective(const CorrCoeffs& c, const MeasurementAngles& m) { return Objective(c)(m.theta, m.phi); }

double entropy_a(const CorrCoeffs& c) { return binary_entropy(0.5 * (1.0 + c.c5)); }
double entropy_b(const CorrCoeffs& c) { return binary_entropy(0.5 * (1.0 + c.c4)); }

double mutual_information(const CorrCoeffs& c) {
  const auto lambda = global_eigenvalues(c);
  return entropy_a(c) + entropy_b(c) - spectrum_entropy(lambda);
}

double classical_correlation_closed_form(const CorrCoeffs& c) {
  if (std::abs(c.c4) > kCoherenceOnlyTolerance || std::abs(c.c5) > kCoherenceOnlyTolerance) {
    throw Error(ErrorCode::not_applicable, "closed form requires c4 = c5 = 0");
  }
  const double m = std::min(1.0, std::max({std::abs(c.c1), std::abs(c.c2), std::abs(c.c3)}));
  auto half_xlog = [](double x) { return x > 0.0 ? 0.5 * x * std::log2(x) : 0.0; };
  return half_xlog(1.0 - m) + half_xlog(1.0 + m);
}

MeasurementAngles closed_form_angles(const CorrCoeffs& c) noexcept {
  const double x = std::abs(c.c1);
  const double y = std::abs(c.c2);
  const double z = std::abs(c.c3);
  if (x >= y && x >= z) return {kHalfPi, 0.0};
  if (y >= z) return {kHalfPi, kHalfPi};
  return {0.0, 0.0};
}

ClassicalResult classical_correlation(const CorrCoeffs& c, Strategy strategy) {
  if (strategy == Strategy::closed_form_auto && std::abs(c.c4) <= kCoherenceOnlyTolerance &&
      std::abs(c.c5) <= kCoherenceOnlyTolerance) {
    return {classical_correlation_closed_form(c), closed_form_angles(c)};
  }
  return optimize(c);
}

CorrelationReport quantum_discord(const CorrCoeffs& c, Strategy strategy) {
  CorrelationReport r;
  r.coeffs = c;
  r.spin = spin_functions(c);
  r.entropy_a = entropy_a(c);
  r.entropy_b = entropy_b(c);
  r.mutual_info = mutual_information(c);
  const ClassicalResult classical = classical_correlation(c, strategy);
  r.classical = classical.value;
  r.optimal_angles = classical.optimal;
  r.discord = r.mutual_info - r.classical;
  return r;
}

CorrelationReport quantum_discord(const XState& s, Strategy strategy) {
  validate(s);
  return quantum_discord(bloch_coefficients(s), strategy);
}

}  // namespace qdiscord
