// SPDX-License-Identifier: Apache-2.0
#include "qdiscord/xstate.hpp"

#include <cmath>
#include <sstream>

#include "qdiscord/error.hpp"

namespace qdiscord {

namespace {

[[noreturn]] void reject(const XState& s, const char* why) {
  std::ostringstream os;
  os.precision(17);
  os << why << " (a=" << s.a << " b1=" << s.b1 << " b2=" << s.b2 << " d=" << s.d << " z=" << s.z
     << " f=" << s.f << ")";
  throw Error(ErrorCode::non_physical_state, os.str());
}

}  // namespace

void validate(const XState& s) {
  const std::array<double, 6> all{s.a, s.b1, s.b2, s.d, s.z, s.f};
  for (double v : all) {
    if (!std::isfinite(v)) reject(s, "non-finite element");
  }
  if (std::abs(s.a + s.b1 + s.b2 + s.d - 1.0) > kStateTolerance) reject(s, "trace differs from 1");
  if (s.a < -kStateTolerance || s.b1 < -kStateTolerance || s.b2 < -kStateTolerance ||
      s.d < -kStateTolerance) {
    reject(s, "negative population");
  }
  if (s.z * s.z > s.b1 * s.b2 + kStateTolerance) reject(s, "inner coherence violates positivity");
  if (s.f * s.f > s.a * s.d + kStateTolerance) reject(s, "outer coherence violates positivity");
}

XState xstate_from_spin_functions(const SpinFunctions& g) {
  const std::array<double, 5> inputs{g.gz_a, g.gz_b, g.gxx, g.gyy, g.gzz};
  for (double v : inputs) {
    if (!(std::abs(v) <= 1.0 + kStateTolerance)) {
      throw Error(ErrorCode::non_physical_state, "spin function outside [-1, 1]: " + std::to_string(v));
    }
  }
  XState s;
  s.a = 0.25 * (1.0 + g.gz_a + g.gz_b + g.gzz);
  s.b1 = 0.25 * (1.0 + g.gz_a - g.gz_b - g.gzz);
  s.b2 = 0.25 * (1.0 - g.gz_a + g.gz_b - g.gzz);
  s.d = 0.25 * (1.0 - g.gz_a - g.gz_b + g.gzz);
  s.z = 0.25 * (g.gxx + g.gyy);
  s.f = 0.25 * (g.gxx - g.gyy);
  validate(s);
  return s;
}

XState xstate_from_spin_functions(double gz_i, double gz_j, double gxx, double gyy, double gzz) {
  return xstate_from_spin_functions(SpinFunctions{gz_i, gz_j, gxx, gyy, gzz});
}

CorrCoeffs bloch_coefficients(const XState& s) noexcept {
  return CorrCoeffs{
      2.0 * s.z + 2.0 * s.f,
      2.0 * s.z - 2.0 * s.f,
      s.a + s.d - s.b1 - s.b2,
      s.a - s.d - s.b1 + s.b2,
      s.a - s.d + s.b1 - s.b2,
  };
}

XState xstate_from_coeffs(const CorrCoeffs& c) {
  XState s;
  s.a = 0.25 * (1.0 + c.c3 + c.c4 + c.c5);
  s.b1 = 0.25 * (1.0 - c.c3 - c.c4 + c.c5);
  s.b2 = 0.25 * (1.0 - c.c3 + c.c4 - c.c5);
  s.d = 0.25 * (1.0 + c.c3 - c.c4 - c.c5);
  s.z = 0.25 * (c.c1 + c.c2);
  s.f = 0.25 * (c.c1 - c.c2);
  validate(s);
  return s;
}

SpinFunctions spin_functions(const CorrCoeffs& c) noexcept {
  return SpinFunctions{c.c5, c.c4, c.c1, c.c2, c.c3};
}

SpinFunctions spin_functions(const XState& s) noexcept { return spin_functions(bloch_coefficients(s)); }

std::array<double, 4> global_eigenvalues(const CorrCoeffs& c) noexcept {
  const double outer = std::hypot(c.c4 + c.c5, c.c1 - c.c2);
  const double inner = std::hypot(c.c4 - c.c5, c.c1 + c.c2);
  return {
      0.25 * ((1.0 + c.c3) + outer),
      0.25 * ((1.0 + c.c3) - outer),
      0.25 * ((1.0 - c.c3) + inner),
      0.25 * ((1.0 - c.c3) - inner),
  };
}

}  // namespace qdiscord
