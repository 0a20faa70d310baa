// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>

namespace qdiscord {

/// Z2-symmetric real two-qubit density matrix in the basis
/// {|uu>, |ud>, |du>, |dd>} (first label is site A, second site B):
///
///   | a   0   0   f |
///   | 0   b1  z   0 |
///   | 0   z   b2  0 |
///   | f   0   0   d |
struct XState {
  double a = 0.25;
  double b1 = 0.25;
  double b2 = 0.25;
  double d = 0.25;
  double z = 0.0;
  double f = 0.0;
};

/// Coefficients of rho = 1/4 [I + sum_i c_i s^i (x) s^i + c4 I (x) s^3 + c5 s^3 (x) I].
/// c4 is the Bloch z-component of site B, c5 that of site A.
struct CorrCoeffs {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
  double c4 = 0.0;
  double c5 = 0.0;
};

/// One- and two-point spin functions of a site pair (A = i, B = j).
struct SpinFunctions {
  double gz_a = 0.0;  ///< <s^z_i>
  double gz_b = 0.0;  ///< <s^z_j>
  double gxx = 0.0;
  double gyy = 0.0;
  double gzz = 0.0;
};

inline constexpr double kStateTolerance = 1e-12;

/// Throws Error(non_physical_state) unless trace, population and positivity
/// invariants hold to kStateTolerance.
void validate(const XState& s);

XState xstate_from_spin_functions(const SpinFunctions& g);
XState xstate_from_spin_functions(double gz_i, double gz_j, double gxx, double gyy, double gzz);

CorrCoeffs bloch_coefficients(const XState& s) noexcept;

/// Inverse of bloch_coefficients; validates the result.
XState xstate_from_coeffs(const CorrCoeffs& c);

/// gxx = c1, gyy = c2, gzz = c3, gz_b = c4, gz_a = c5.
SpinFunctions spin_functions(const CorrCoeffs& c) noexcept;
SpinFunctions spin_functions(const XState& s) noexcept;

/// The four eigenvalues of the X-state written as functions of c1..c5:
///   lambda_{0,1} = [(1 + c3) +- sqrt((c4 + c5)^2 + (c1 - c2)^2)] / 4
///   lambda_{2,3} = [(1 - c3) +- sqrt((c4 - c5)^2 + (c1 + c2)^2)] / 4
std::array<double, 4> global_eigenvalues(const CorrCoeffs& c) noexcept;

}  // namespace qdiscord
