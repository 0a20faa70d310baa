// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "qdiscord/correlations.hpp"
#include "qdiscord/entropy.hpp"
#include "qdiscord/error.hpp"
#include "qdiscord/xstate.hpp"

using namespace qdiscord;
using std::numbers::pi;

namespace {

XState bell_phi_plus() { return {0.5, 0.0, 0.0, 0.5, 0.0, 0.5}; }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected qdiscord::Error");
  return ErrorCode::invalid_argument;
}

}  // namespace

TEST_CASE("binary entropy") {
  CHECK(binary_entropy(0.5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(binary_entropy(0.75) == doctest::Approx(0.811278124459).epsilon(1e-11));
  CHECK(binary_entropy(-1e-13) == 0.0);
  CHECK(code_of([] { binary_entropy(-1e-6); }) == ErrorCode::domain_error);
  CHECK(code_of([] { binary_entropy(1.0 + 1e-6); }) == ErrorCode::domain_error);
}

TEST_CASE("spectrum entropy clips round-off and rejects negative weight") {
  const double tiny[] = {0.5, 0.5, -5e-13};
  CHECK(spectrum_entropy(tiny) == doctest::Approx(1.0));
  const double bad[] = {0.5, 0.6, -0.1};
  CHECK(code_of([&] { spectrum_entropy(bad); }) == ErrorCode::non_physical_state);
}

TEST_CASE("x-state from spin functions") {
  const XState s = xstate_from_spin_functions(0, 0, 1, 0, 0);
  CHECK(s.a == doctest::Approx(0.25));
  CHECK(s.d == doctest::Approx(0.25));
  CHECK(s.b1 == doctest::Approx(0.25));
  CHECK(s.b2 == doctest::Approx(0.25));
  CHECK(s.z == doctest::Approx(0.25));
  CHECK(s.f == doctest::Approx(0.25));

  const XState doublet = xstate_from_spin_functions(0, 0, 0, 0, 1);
  CHECK(doublet.a == doctest::Approx(0.5));
  CHECK(doublet.d == doctest::Approx(0.5));
  CHECK(doublet.b1 == 0.0);
  CHECK(doublet.b2 == 0.0);
  CHECK(doublet.z == 0.0);
  CHECK(doublet.f == 0.0);

  const XState critical = xstate_from_spin_functions(0.63662, 0.63662, 0.63662, -0.21221, 0.54038);
  CHECK(critical.b1 == doctest::Approx(critical.b2).epsilon(1e-15));
  CHECK_NOTHROW(validate(critical));

  CHECK(code_of([] { xstate_from_spin_functions(0, 0, 1, 1, 1); }) == ErrorCode::non_physical_state);
}

TEST_CASE("bloch coefficients") {
  const CorrCoeffs zero = bloch_coefficients(XState{});
  CHECK(zero.c1 == 0.0);
  CHECK(zero.c3 == 0.0);
  CHECK(zero.c5 == 0.0);

  const CorrCoeffs bell = bloch_coefficients(bell_phi_plus());
  CHECK(bell.c1 == doctest::Approx(1.0));
  CHECK(bell.c2 == doctest::Approx(-1.0));
  CHECK(bell.c3 == doctest::Approx(1.0));
  CHECK(bell.c4 == 0.0);
  CHECK(bell.c5 == 0.0);

  const CorrCoeffs x = bloch_coefficients(xstate_from_spin_functions(0, 0, 1, 0, 0));
  CHECK(x.c1 == doctest::Approx(1.0));
  CHECK(x.c2 == doctest::Approx(0.0));
  CHECK(x.c3 == doctest::Approx(0.0));
}

TEST_CASE("global eigenvalues") {
  for (double l : global_eigenvalues(CorrCoeffs{})) CHECK(l == doctest::Approx(0.25));

  auto x = global_eigenvalues({1, 0, 0, 0, 0});
  std::sort(x.begin(), x.end());
  CHECK(x[0] == doctest::Approx(0.0));
  CHECK(x[1] == doctest::Approx(0.0));
  CHECK(x[2] == doctest::Approx(0.5));
  CHECK(x[3] == doctest::Approx(0.5));

  auto bell = global_eigenvalues({1, -1, 1, 0, 0});
  std::sort(bell.begin(), bell.end());
  CHECK(bell[3] == doctest::Approx(1.0));
  CHECK(bell[0] + bell[1] + bell[2] == doctest::Approx(0.0));
}

TEST_CASE("mutual information") {
  CHECK(mutual_information(CorrCoeffs{}) == doctest::Approx(0.0));
  CHECK(mutual_information({1, 0, 0, 0, 0}) == doctest::Approx(1.0));
  CHECK(mutual_information({1, -1, 1, 0, 0}) == doctest::Approx(2.0));

  std::mt19937_64 rng(11);
  for (int n = 0; n < 200; ++n) {
    const XState s = oracle::random_xstate(rng);
    CHECK(mutual_information(bloch_coefficients(s)) == doctest::Approx(oracle::mutual_information(s)).epsilon(1e-10));
  }
}

TEST_CASE("measured conditional entropy") {
  const auto mixed = measured_conditional_entropy(CorrCoeffs{}, {0.3, 1.1});
  CHECK(mixed.entropy[0] == doctest::Approx(1.0));
  CHECK(mixed.entropy[1] == doctest::Approx(1.0));
  CHECK(mixed.probability[0] == doctest::Approx(0.5));

  const auto bell = measured_conditional_entropy(bloch_coefficients(bell_phi_plus()), {0.0, 0.0});
  CHECK(bell.bloch_length[0] == doctest::Approx(1.0));
  CHECK(bell.entropy[0] == doctest::Approx(0.0));
  CHECK(bell.entropy[1] == doctest::Approx(0.0));

  const CorrCoeffs critical{0.6366, -0.2122, 0.5404, 0.6366, 0.6366};
  const auto x = measured_conditional_entropy(critical, {pi / 2, 0.0});
  CHECK(x.entropy[0] == doctest::Approx(x.entropy[1]).epsilon(1e-14));
  CHECK(x.probability[0] == doctest::Approx(0.5));
  CHECK(x.probability[1] == doctest::Approx(0.5));
}

TEST_CASE("a vanishing outcome is flagged, not fatal") {
  // Site B fully up: measuring along z never yields the down outcome.
  const CorrCoeffs up = bloch_coefficients(XState{1.0, 0.0, 0.0, 0.0, 0.0, 0.0});
  const auto r = measured_conditional_entropy(up, {0.0, 0.0});
  CHECK(r.degenerate[1]);
  CHECK_FALSE(r.degenerate[0]);
  CHECK(r.entropy[1] == 0.0);
  CHECK(measurement_objective(up, {0.0, 0.0}) == doctest::Approx(0.0));
}

TEST_CASE("measured information agrees with the projector oracle") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> th(0.0, pi);
  std::uniform_real_distribution<double> ph(0.0, 2 * pi);
  for (int n = 0; n < 300; ++n) {
    const XState s = oracle::random_xstate(rng);
    const oracle::MeasuredInformation ref(s);
    const double t = th(rng);
    const double p = ph(rng);
    CHECK(measurement_objective(bloch_coefficients(s), {t, p}) == doctest::Approx(ref(t, p)).epsilon(1e-11));
  }
}

TEST_CASE("classical correlation examples") {
  CHECK(classical_correlation(CorrCoeffs{}).value == doctest::Approx(0.0));
  CHECK(classical_correlation({1, 0, 0, 0, 0}).value == doctest::Approx(1.0));
  CHECK(classical_correlation({1, 0, 0, 0, 0}, Strategy::grid_refine).value == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("closed form") {
  CHECK(classical_correlation_closed_form({1, 0, 0, 0, 0}) == doctest::Approx(1.0));
  CHECK(classical_correlation_closed_form({0, 0, -1, 0, 0}) == doctest::Approx(1.0));
  CHECK(classical_correlation_closed_form(CorrCoeffs{}) == 0.0);

  const CorrCoeffs c{0.5, 0.5, 0.2, 0.0, 0.0};
  const double expected = 0.25 * std::log2(0.5) + 0.75 * std::log2(1.5);
  CHECK(expected == doctest::Approx(0.18872).epsilon(1e-4));
  CHECK(classical_correlation_closed_form(c) == doctest::Approx(expected).epsilon(1e-14));
  // These coefficients are not a density matrix (z^2 > b1 b2); the sign flip
  // of c3 gives a physical state with the same closed-form value.
  CHECK(code_of([&] { xstate_from_coeffs(c); }) == ErrorCode::non_physical_state);
  const XState s = xstate_from_coeffs({0.5, 0.5, -0.2, 0.0, 0.0});
  CHECK(oracle::grid_classical(s, 181, 361).value == doctest::Approx(expected).epsilon(1e-9));

  CHECK(code_of([] { classical_correlation_closed_form({0.5, 0, 0, 0.1, 0}); }) == ErrorCode::not_applicable);

  const auto angles = closed_form_angles({0.1, -0.7, 0.3, 0, 0});
  CHECK(angles.theta == doctest::Approx(pi / 2));
  CHECK(angles.phi == doctest::Approx(pi / 2));
  CHECK(closed_form_angles({0.1, 0.2, 0.3, 0, 0}).theta == doctest::Approx(0.0));
}

TEST_CASE("quantum discord examples") {
  const auto x = quantum_discord(CorrCoeffs{1, 0, 0, 0, 0});
  CHECK(x.discord == doctest::Approx(0.0).epsilon(1e-12));
  const auto bell = quantum_discord(bell_phi_plus());
  CHECK(bell.mutual_info == doctest::Approx(2.0));
  CHECK(bell.classical == doctest::Approx(1.0));
  CHECK(bell.discord == doctest::Approx(1.0));
  const auto zero = quantum_discord(CorrCoeffs{});
  CHECK(zero.discord == doctest::Approx(0.0));
  CHECK(zero.discord == zero.mutual_info - zero.classical);
}

TEST_CASE("canonical angles stay in the reduced quadrant and keep the objective") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> th(0.0, pi);
  std::uniform_real_distribution<double> ph(0.0, 2 * pi);
  for (int n = 0; n < 500; ++n) {
    const CorrCoeffs c = bloch_coefficients(oracle::random_xstate(rng));
    const MeasurementAngles m{th(rng), ph(rng)};
    const MeasurementAngles r = canonicalize(m);
    CHECK(r.theta >= 0.0);
    CHECK(r.theta <= pi / 2 + 1e-15);
    CHECK(r.phi >= 0.0);
    CHECK(r.phi <= pi / 2 + 1e-15);
    CHECK(measurement_objective(c, r) == doctest::Approx(measurement_objective(c, m)).epsilon(1e-12));
  }
}

// ---- properties -----------------------------------------------------------

TEST_CASE("property: eigenvalues of random states form a distribution") {
  std::mt19937_64 rng(1);
  for (int n = 0; n < 1000; ++n) {
    const auto ev = global_eigenvalues(bloch_coefficients(oracle::random_xstate(rng)));
    double sum = 0.0;
    for (double l : ev) {
      CHECK(l >= -1e-12);
      sum += l;
    }
    CHECK(std::abs(sum - 1.0) <= 1e-12);
  }
}

TEST_CASE("property: coefficient round trip") {
  std::mt19937_64 rng(2);
  for (int n = 0; n < 1000; ++n) {
    const CorrCoeffs c = bloch_coefficients(oracle::random_xstate(rng));
    const CorrCoeffs back = bloch_coefficients(xstate_from_coeffs(c));
    CHECK(std::abs(back.c1 - c.c1) <= 1e-14);
    CHECK(std::abs(back.c2 - c.c2) <= 1e-14);
    CHECK(std::abs(back.c3 - c.c3) <= 1e-14);
    CHECK(std::abs(back.c4 - c.c4) <= 1e-14);
    CHECK(std::abs(back.c5 - c.c5) <= 1e-14);
  }
}

TEST_CASE("property: objective reflection symmetries") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> th(0.0, pi);
  std::uniform_real_distribution<double> ph(0.0, 2 * pi);
  for (int n = 0; n < 1000; ++n) {
    const CorrCoeffs c = bloch_coefficients(oracle::random_xstate(rng));
    const double t = th(rng);
    const double p = ph(rng);
    const double v = measurement_objective(c, {t, p});
    CHECK(std::abs(measurement_objective(c, {t, -p}) - v) <= 1e-12);
    CHECK(std::abs(measurement_objective(c, {pi - t, p + pi}) - v) <= 1e-12);
  }
}

TEST_CASE("property: optimizer matches the grid oracle") {
  std::mt19937_64 rng(4);
  for (int n = 0; n < 12; ++n) {
    const XState s = oracle::random_xstate(rng);
    const auto result = classical_correlation(bloch_coefficients(s), Strategy::grid_refine);
    const auto ref = oracle::grid_classical(s, 181, 361);
    CHECK(std::abs(result.value - ref.value) <= 1e-6);
  }
}

TEST_CASE("property: closed form equals the optimizer when c4 = c5 = 0") {
  std::mt19937_64 rng(6);
  for (int n = 0; n < 100; ++n) {
    const CorrCoeffs c = bloch_coefficients(oracle::random_xstate(rng, true));
    REQUIRE(std::abs(c.c4) <= 1e-15);
    const double numeric = classical_correlation(c, Strategy::grid_refine).value;
    CHECK(std::abs(numeric - classical_correlation_closed_form(c)) <= 1e-8);
  }
}

TEST_CASE("property: discord bounds") {
  std::mt19937_64 rng(7);
  for (int n = 0; n < 300; ++n) {
    const auto r = quantum_discord(oracle::random_xstate(rng));
    CHECK(r.discord >= -1e-9);
    CHECK(r.classical <= r.mutual_info + 1e-9);
    CHECK(r.classical >= -1e-12);
    CHECK(r.discord == r.mutual_info - r.classical);
  }
}

TEST_CASE("property: pure states give C = Q = S_A") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> angle(0.0, 2 * pi);
  for (int n = 0; n < 200; ++n) {
    const double t = angle(rng);
    const double c = std::cos(t);
    const double s = std::sin(t);
    // alternately cos|ud> + sin|du> and cos|uu> + sin|dd>
    const XState psi = n % 2 ? XState{0, c * c, s * s, 0, c * s, 0} : XState{c * c, 0, 0, s * s, 0, c * s};
    const auto ev = global_eigenvalues(bloch_coefficients(psi));
    REQUIRE(*std::max_element(ev.begin(), ev.end()) == doctest::Approx(1.0).epsilon(1e-10));
    const auto r = quantum_discord(psi);
    CHECK(std::abs(r.classical - r.entropy_a) <= 1e-8);
    CHECK(std::abs(r.discord - r.entropy_a) <= 1e-8);
  }
}

TEST_CASE("validation rejects unphysical input") {
  CHECK(code_of([] { validate(XState{0.5, 0.5, 0.5, 0.0, 0, 0}); }) == ErrorCode::non_physical_state);
  CHECK(code_of([] { validate(XState{0.25, 0.25, 0.25, 0.25, 0.3, 0}); }) == ErrorCode::non_physical_state);
  CHECK(code_of([] { xstate_from_coeffs({1.5, 0, 0, 0, 0}); }) == ErrorCode::non_physical_state);
}
