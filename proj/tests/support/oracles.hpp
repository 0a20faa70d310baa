// SPDX-License-Identifier: Apache-2.0
// Brute-force reference implementations used only by the tests. None of
// these reuse library code beyond the plain data types.
#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "qdiscord/xstate.hpp"

namespace oracle {

using cplx = std::complex<double>;

inline double h2(double lambda) { return lambda > 0.0 ? -lambda * std::log2(lambda) : 0.0; }

/// Full two-qubit density matrix, basis |uu>, |ud>, |du>, |dd> with site A
/// as the left factor.
inline Eigen::Matrix4d density(const qdiscord::XState& s) {
  Eigen::Matrix4d rho = Eigen::Matrix4d::Zero();
  rho(0, 0) = s.a;
  rho(1, 1) = s.b1;
  rho(2, 2) = s.b2;
  rho(3, 3) = s.d;
  rho(1, 2) = rho(2, 1) = s.z;
  rho(0, 3) = rho(3, 0) = s.f;
  return rho;
}

inline double von_neumann(const Eigen::MatrixXd& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(rho, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (double l : es.eigenvalues()) s += h2(std::max(l, 0.0));
  return s;
}

inline double mutual_information(const qdiscord::XState& s) {
  const Eigen::Matrix4d rho = density(s);
  Eigen::Matrix2d ra = Eigen::Matrix2d::Zero();
  Eigen::Matrix2d rb = Eigen::Matrix2d::Zero();
  for (int a = 0; a < 2; ++a)
    for (int ap = 0; ap < 2; ++ap)
      for (int b = 0; b < 2; ++b) ra(a, ap) += rho(2 * a + b, 2 * ap + b);
  for (int b = 0; b < 2; ++b)
    for (int bp = 0; bp < 2; ++bp)
      for (int a = 0; a < 2; ++a) rb(b, bp) += rho(2 * a + b, 2 * a + bp);
  return von_neumann(ra) + von_neumann(rb) - von_neumann(rho);
}

/// Entropy of a 2x2 Hermitian matrix given its trace-normalised entries.
inline double qubit_entropy(double x, double y, cplx w) {
  const double mid = 0.5 * (x + y);
  const double rad = std::sqrt(0.25 * (x - y) * (x - y) + std::norm(w));
  return h2(mid + rad) + h2(mid - rad);
}

/// S(rho_A) - sum_k p_k S(rho_A | k) for a projective measurement of site B
/// along (theta, phi), evaluated with explicit projectors.
class MeasuredInformation {
 public:
  explicit MeasuredInformation(const qdiscord::XState& s) : rho_(density(s)) {
    const double pa = s.a + s.b1;
    s_a_ = h2(pa) + h2(1.0 - pa);
  }

  double operator()(double theta, double phi) const {
    const double nx = std::sin(theta) * std::cos(phi);
    const double ny = std::sin(theta) * std::sin(phi);
    const double nz = std::cos(theta);
    double value = s_a_;
    for (int sign : {+1, -1}) {
      // Projector on B in the (u, d) basis: (I + sign n.sigma) / 2.
      cplx proj[2][2];
      proj[0][0] = 0.5 * (1.0 + sign * nz);
      proj[1][1] = 0.5 * (1.0 - sign * nz);
      proj[0][1] = 0.5 * sign * cplx(nx, -ny);
      proj[1][0] = 0.5 * sign * cplx(nx, ny);
      cplx cond[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
      for (int a = 0; a < 2; ++a)
        for (int ap = 0; ap < 2; ++ap)
          for (int b = 0; b < 2; ++b)
            for (int bp = 0; bp < 2; ++bp) cond[a][ap] += rho_(2 * a + b, 2 * ap + bp) * proj[bp][b];
      const double p = (cond[0][0] + cond[1][1]).real();
      if (p < 1e-15) continue;
      value -= p * qubit_entropy(cond[0][0].real() / p, cond[1][1].real() / p, cond[0][1] / p);
    }
    return value;
  }

 private:
  Eigen::Matrix4d rho_;
  double s_a_ = 0.0;
};

struct GridMaximum {
  double value = 0.0;
  double theta = 0.0;
  double phi = 0.0;
};

/// Exhaustive (theta, phi) grid over the full sphere followed by repeated
/// zoomed sub-grids around the best node.
inline GridMaximum grid_classical(const qdiscord::XState& s, int n_theta = 721, int n_phi = 1441) {
  const MeasuredInformation f(s);
  const double pi = std::numbers::pi;
  GridMaximum best{-1e300, 0.0, 0.0};
  for (int i = 0; i < n_theta; ++i) {
    const double t = pi * i / (n_theta - 1);
    for (int j = 0; j < n_phi; ++j) {
      const double p = 2.0 * pi * j / (n_phi - 1);
      const double v = f(t, p);
      if (v > best.value) best = {v, t, p};
    }
  }
  double dt = pi / (n_theta - 1);
  double dp = 2.0 * pi / (n_phi - 1);
  for (int round = 0; round < 14; ++round) {
    GridMaximum local = best;
    for (int i = -4; i <= 4; ++i)
      for (int j = -4; j <= 4; ++j) {
        const double t = std::clamp(best.theta + dt * i / 4.0, 0.0, pi);
        const double p = best.phi + dp * j / 4.0;
        const double v = f(t, p);
        if (v > local.value) local = {v, t, p};
      }
    best = local;
    dt *= 0.4;
    dp *= 0.4;
  }
  return best;
}

/// Random physical X-state: Dirichlet(1,1,1,1) populations and coherences
/// uniform inside the positivity bounds.
template <typename Rng>
qdiscord::XState random_xstate(Rng& rng, bool coherence_only = false) {
  std::exponential_distribution<double> expo(1.0);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  double w[4];
  for (double& x : w) x = expo(rng);
  if (coherence_only) {
    w[3] = w[0];
    w[2] = w[1];
  }
  const double sum = w[0] + w[1] + w[2] + w[3];
  qdiscord::XState s;
  s.a = w[0] / sum;
  s.b1 = w[1] / sum;
  s.b2 = w[2] / sum;
  s.d = w[3] / sum;
  s.z = unit(rng) * std::sqrt(s.b1 * s.b2);
  s.f = unit(rng) * std::sqrt(s.a * s.d);
  return s;
}

// ---- dense many-body reference ----------------------------------------

/// Single-site basis index 0 = down, 1 = up, so that bit k of a many-body
/// index is site k and a set bit means up.
inline Eigen::MatrixXd kron_chain(int sites, int i, const Eigen::Matrix2d& a, int j, const Eigen::Matrix2d& b) {
  const Eigen::Matrix2d id = Eigen::Matrix2d::Identity();
  Eigen::MatrixXd out = Eigen::MatrixXd::Ones(1, 1);
  for (int s = sites - 1; s >= 0; --s) {
    Eigen::Matrix2d f = id;
    if (s == i) f = a;
    if (s == j) f = (s == i ? a * b : b).eval();
    Eigen::MatrixXd next(out.rows() * 2, out.cols() * 2);
    for (int r = 0; r < out.rows(); ++r)
      for (int c = 0; c < out.cols(); ++c) next.block(2 * r, 2 * c, 2, 2) = out(r, c) * f;
    out = std::move(next);
  }
  return out;
}

inline Eigen::MatrixXd site_operator(int sites, int k, const Eigen::Matrix2d& op) {
  return kron_chain(sites, k, op, -1, Eigen::Matrix2d::Identity());
}

/// op_a on site i times op_b on site j.
inline Eigen::MatrixXd pair_operator(int sites, int i, const Eigen::Matrix2d& a, int j, const Eigen::Matrix2d& b) {
  return kron_chain(sites, i, a, j, b);
}

inline Eigen::Matrix2d pauli_x() { return (Eigen::Matrix2d() << 0, 1, 1, 0).finished(); }
inline Eigen::Matrix2d pauli_z() { return (Eigen::Matrix2d() << -1, 0, 0, 1).finished(); }
inline Eigen::Matrix2d raising() { return (Eigen::Matrix2d() << 0, 0, 1, 0).finished(); }

/// sigma^x sigma^x + sigma^y sigma^y on sites (i, j).
inline Eigen::MatrixXd hopping(int sites, int i, int j) {
  const Eigen::Matrix2d up = raising();
  const Eigen::Matrix2d dn = up.transpose();
  return 2.0 * (pair_operator(sites, i, up, j, dn) + pair_operator(sites, i, dn, j, up));
}

inline Eigen::MatrixXd xxz_matrix(int sites, double delta) {
  const int dim = 1 << sites;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (int i = 0; i < sites; ++i) {
    const int j = (i + 1) % sites;
    h -= 0.5 * (hopping(sites, i, j) + delta * pair_operator(sites, i, pauli_z(), j, pauli_z()));
  }
  return h;
}

inline Eigen::MatrixXd tfim_matrix(int sites, double g) {
  const int dim = 1 << sites;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (int i = 0; i < sites; ++i) {
    const int j = (i + 1) % sites;
    h -= pair_operator(sites, i, pauli_x(), j, pauli_x());
    h -= g * site_operator(sites, i, pauli_z());
  }
  return h;
}

struct DenseGround {
  double energy = 0.0;
  int degeneracy = 0;
  qdiscord::SpinFunctions spin;  // nearest-neighbour pair (0, 1)
};

inline DenseGround dense_ground(const Eigen::MatrixXd& h, int sites, double window) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  const auto& vals = es.eigenvalues();
  DenseGround out;
  out.energy = vals(0);
  while (out.degeneracy < vals.size() && vals(out.degeneracy) - vals(0) <= window) ++out.degeneracy;
  const Eigen::MatrixXd xx = pair_operator(sites, 0, pauli_x(), 1, pauli_x());
  const Eigen::MatrixXd flip = hopping(sites, 0, 1);
  const Eigen::MatrixXd zz = pair_operator(sites, 0, pauli_z(), 1, pauli_z());
  const Eigen::MatrixXd z0 = site_operator(sites, 0, pauli_z());
  const Eigen::MatrixXd z1 = site_operator(sites, 1, pauli_z());
  for (int k = 0; k < out.degeneracy; ++k) {
    const Eigen::VectorXd v = es.eigenvectors().col(k);
    const double gxx = v.dot(xx * v);
    out.spin.gxx += gxx;
    out.spin.gyy += v.dot(flip * v) - gxx;
    out.spin.gzz += v.dot(zz * v);
    out.spin.gz_a += v.dot(z0 * v);
    out.spin.gz_b += v.dot(z1 * v);
  }
  const double n = out.degeneracy;
  out.spin.gxx /= n;
  out.spin.gyy /= n;
  out.spin.gzz /= n;
  out.spin.gz_a /= n;
  out.spin.gz_b /= n;
  return out;
}

}  // namespace oracle
