// SPDX-License-Identifier: Apache-2.0
#include "qdiscord/ed.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "qdiscord/error.hpp"

namespace qdiscord::ed {

namespace {

constexpr double kOffXTolerance = 1e-10;

bool bit(std::uint32_t state, int site) { return ((state >> site) & 1U) != 0U; }

// Calls visit(target_state, amplitude) for every off-diagonal element of the
// row belonging to `state`.
template <typename Visit>
void for_each_offdiagonal(const RingSpec& spec, std::uint32_t state, Visit&& visit) {
  const int n = spec.sites;
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    const std::uint32_t mask = (1U << i) | (1U << j);
    if (spec.model == ModelKind::xxz) {
      if (bit(state, i) != bit(state, j)) visit(state ^ mask, -1.0);
    } else {
      visit(state ^ mask, -1.0);
    }
  }
}

double diagonal_element(const RingSpec& spec, std::uint32_t state) {
  const int n = spec.sites;
  if (spec.model == ModelKind::xxz) {
    int aligned = 0;
    for (int i = 0; i < n; ++i) aligned += bit(state, i) == bit(state, (i + 1) % n) ? 1 : -1;
    return -0.5 * spec.parameter * aligned;
  }
  const int up = std::popcount(state);
  return -spec.parameter * (up - (n - up));
}

void check_label(const RingSpec& spec, SectorLabel label) {
  const bool ok = spec.model == ModelKind::xxz ? (label >= 0 && label <= spec.sites) : (label == 0 || label == 1);
  if (!ok) throw Error(ErrorCode::sector_empty, "sector label " + std::to_string(label) + " is empty");
}

}  // namespace

void validate(const RingSpec& spec) {
  if (spec.sites < kMinSites || spec.sites > kMaxSites) {
    throw Error(ErrorCode::invalid_argument, "ring size " + std::to_string(spec.sites) + " outside [" +
                                                 std::to_string(kMinSites) + ", " + std::to_string(kMaxSites) + "]");
  }
  if (spec.model == ModelKind::tfim && spec.sites % 2 != 0) {
    throw Error(ErrorCode::invalid_argument, "transverse-field ring size must be even");
  }
  if (!std::isfinite(spec.parameter)) throw Error(ErrorCode::invalid_argument, "non-finite model parameter");
}

std::vector<SectorLabel> sector_labels(const RingSpec& spec) {
  std::vector<SectorLabel> labels;
  if (spec.model == ModelKind::xxz) {
    for (int up = 0; up <= spec.sites; ++up) labels.push_back(up);
  } else {
    labels = {0, 1};
  }
  return labels;
}

SectorBasis::SectorBasis(const RingSpec& spec, SectorLabel label) : sites_(spec.sites), label_(label) {
  validate(spec);
  check_label(spec, label);
  const std::uint32_t full = 1U << spec.sites;
  lookup_.assign(full, -1);
  for (std::uint32_t s = 0; s < full; ++s) {
    const int up = std::popcount(s);
    const bool member = spec.model == ModelKind::xxz ? up == label : ((spec.sites - up) % 2) == label;
    if (member) {
      lookup_[s] = static_cast<std::int32_t>(states_.size());
      states_.push_back(s);
    }
  }
}

RingHamiltonian::RingHamiltonian(const RingSpec& spec, std::shared_ptr<const SectorBasis> basis)
    : spec_(spec), basis_(std::move(basis)) {
  diagonal_.resize(basis_->dim());
  for (std::size_t r = 0; r < basis_->dim(); ++r) diagonal_[r] = diagonal_element(spec_, basis_->state(r));
}

void RingHamiltonian::apply(std::span<const double> x, std::span<double> y) const {
  const SectorBasis& b = *basis_;
  for (std::size_t r = 0; r < b.dim(); ++r) {
    double acc = diagonal_[r] * x[r];
    for_each_offdiagonal(spec_, b.state(r), [&](std::uint32_t target, double amp) {
      const std::int64_t c = b.index_of(target);
      if (c >= 0) acc += amp * x[static_cast<std::size_t>(c)];
    });
    y[r] = acc;
  }
}

std::vector<double> RingHamiltonian::dense() const {
  const std::size_t n = dim();
  std::vector<double> m(n * n, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    m[r * n + r] += diagonal_[r];
    for_each_offdiagonal(spec_, basis_->state(r), [&](std::uint32_t target, double amp) {
      const std::int64_t c = basis_->index_of(target);
      if (c >= 0) m[r * n + static_cast<std::size_t>(c)] += amp;
    });
  }
  return m;
}

LinearOperator RingHamiltonian::as_operator() const {
  return {dim(), [this](std::span<const double> x, std::span<double> y) { apply(x, y); }};
}

RingHamiltonian build_hamiltonian(const RingSpec& spec, SectorLabel label) {
  validate(spec);
  check_label(spec, label);
  return RingHamiltonian(spec, std::make_shared<const SectorBasis>(spec, label));
}

std::vector<SectorLabel> GroundSolution::sectors() const {
  std::vector<SectorLabel> out;
  for (const auto& s : states) {
    if (std::find(out.begin(), out.end(), s.sector) == out.end()) out.push_back(s.sector);
  }
  return out;
}

namespace {

struct SectorLevels {
  RingHamiltonian hamiltonian;
  std::vector<GroundState> levels;  // ascending energies, lowest first
  bool complete = false;            // all levels inside the window are known
};

void dense_levels(SectorLevels& sector, double window) {
  const RingHamiltonian& h = sector.hamiltonian;
  const auto n = static_cast<Eigen::Index>(h.dim());
  const std::vector<double> data = h.dense();
  const Eigen::MatrixXd m = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
      data.data(), n, n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  const double lowest = solver.eigenvalues()(0);
  for (Eigen::Index k = 0; k < n && solver.eigenvalues()(k) <= lowest + window; ++k) {
    GroundState g;
    g.sector = h.basis()->label();
    g.energy = solver.eigenvalues()(k);
    g.basis = h.basis();
    g.amplitudes.assign(solver.eigenvectors().col(k).data(), solver.eigenvectors().col(k).data() + n);
    sector.levels.push_back(std::move(g));
  }
  sector.complete = true;
}

std::uint32_t rotate(std::uint32_t state, int sites) {
  const std::uint32_t top = (state >> (sites - 1)) & 1U;
  return ((state << 1) | top) & ((sites == 32 ? 0U : (1U << sites)) - 1U);
}

// Replaces v by its normalised component in the dominant real momentum
// block, P_m = (w_m / L) sum_r cos(2 pi m r / L) T^r with m = 0..L/2.
// Near-degenerate partners at other momenta (Neel pairs, for instance) leak
// into Krylov vectors at the level residual / gap; since P_m commutes with H
// the projection can only lower the residual.
void project_momentum(const SectorBasis& basis, std::vector<double>& v) {
  const int n = basis.sites();
  const std::size_t dim = basis.dim();
  std::vector<std::size_t> image(dim);
  for (std::size_t i = 0; i < dim; ++i) image[i] = static_cast<std::size_t>(basis.index_of(rotate(basis.state(i), n)));

  std::vector<std::vector<double>> shifted(static_cast<std::size_t>(n), std::vector<double>(dim));
  shifted[0] = v;
  for (int r = 1; r < n; ++r) {
    const auto& prev = shifted[static_cast<std::size_t>(r - 1)];
    auto& cur = shifted[static_cast<std::size_t>(r)];
    for (std::size_t i = 0; i < dim; ++i) cur[image[i]] = prev[i];
  }

  std::vector<double> best;
  double best_norm = -1.0;
  std::vector<double> component(dim);
  for (int m = 0; m <= n / 2; ++m) {
    const double weight = (m == 0 || 2 * m == n) ? 1.0 : 2.0;
    std::fill(component.begin(), component.end(), 0.0);
    for (int r = 0; r < n; ++r) {
      const double c = weight * std::cos(2.0 * std::numbers::pi * m * r / n) / n;
      const auto& sr = shifted[static_cast<std::size_t>(r)];
      for (std::size_t i = 0; i < dim; ++i) component[i] += c * sr[i];
    }
    double norm2 = 0.0;
    for (double x : component) norm2 += x * x;
    if (norm2 > best_norm) {
      best_norm = norm2;
      best = component;
    }
  }
  const double inv = 1.0 / std::sqrt(best_norm);
  for (double& x : best) x *= inv;
  v = std::move(best);
}

GroundState lanczos_level(const SectorLevels& sector, const LanczosOptions& options) {
  std::vector<std::vector<double>> locked;
  for (const auto& l : sector.levels) locked.push_back(l.amplitudes);
  const RingHamiltonian& h = sector.hamiltonian;
  Eigenpair pair = lowest_eigenpair(h.as_operator(), locked, options);
  project_momentum(*h.basis(), pair.vector);
  // Locked levels are momentum eigenvectors, so the projection keeps the
  // new vector orthogonal to them up to the Lanczos residual; restore it.
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& u : locked) {
      double d = 0.0;
      for (std::size_t i = 0; i < u.size(); ++i) d += u[i] * pair.vector[i];
      for (std::size_t i = 0; i < u.size(); ++i) pair.vector[i] -= d * u[i];
    }
  }
  double norm2 = 0.0;
  for (double x : pair.vector) norm2 += x * x;
  for (double& x : pair.vector) x /= std::sqrt(norm2);
  std::vector<double> hv(pair.vector.size());
  h.apply(pair.vector, hv);
  double energy = 0.0;
  for (std::size_t i = 0; i < hv.size(); ++i) energy += pair.vector[i] * hv[i];

  GroundState g;
  g.sector = h.basis()->label();
  g.energy = energy;
  g.basis = h.basis();
  g.amplitudes = std::move(pair.vector);
  return g;
}

}  // namespace

GroundSolution ground_space(const RingSpec& spec, const GroundOptions& options) {
  validate(spec);
  const double window = options.degeneracy_tol < 0.0 ? 1e-9 * spec.sites : options.degeneracy_tol;

  std::vector<SectorLevels> sectors;
  for (SectorLabel label : sector_labels(spec)) {
    SectorLevels s{build_hamiltonian(spec, label), {}, false};
    if (s.hamiltonian.dim() <= options.dense_threshold) {
      dense_levels(s, window);
    } else {
      s.levels.push_back(lanczos_level(s, options.lanczos));
    }
    sectors.push_back(std::move(s));
  }

  double e0 = sectors.front().levels.front().energy;
  for (const auto& s : sectors) e0 = std::min(e0, s.levels.front().energy);

  GroundSolution sol;
  sol.spec = spec;
  sol.energy = e0;
  for (auto& s : sectors) {
    if (s.levels.front().energy > e0 + window) continue;
    while (!s.complete) {
      if (s.levels.size() >= s.hamiltonian.dim()) break;
      GroundState next = lanczos_level(s, options.lanczos);
      if (next.energy > e0 + window) {
        s.complete = true;
      } else {
        s.levels.push_back(std::move(next));
      }
    }
    for (auto& l : s.levels) {
      if (l.energy <= e0 + window) sol.states.push_back(std::move(l));
    }
  }
  return sol;
}

std::array<std::array<double, 4>, 4> pair_density_matrix(const GroundSolution& sol, int i, int j) {
  const int n = sol.spec.sites;
  if (i == j || i < 0 || j < 0 || i >= n || j >= n) {
    throw Error(ErrorCode::invalid_argument, "pair density needs two distinct sites on the ring");
  }
  std::array<std::array<double, 4>, 4> rho{};
  if (sol.states.empty()) throw Error(ErrorCode::invalid_argument, "empty ground space");
  const std::uint32_t clear = ~((1U << i) | (1U << j));
  for (const GroundState& g : sol.states) {
    const SectorBasis& b = *g.basis;
    for (std::size_t r = 0; r < b.dim(); ++r) {
      const double amp = g.amplitudes[r];
      if (amp == 0.0) continue;
      const std::uint32_t s = b.state(r);
      const int row = 2 * (bit(s, i) ? 0 : 1) + (bit(s, j) ? 0 : 1);
      for (int col = 0; col < 4; ++col) {
        const std::uint32_t ui = (col & 2) == 0 ? 1U : 0U;
        const std::uint32_t uj = (col & 1) == 0 ? 1U : 0U;
        const std::uint32_t t = (s & clear) | (ui << i) | (uj << j);
        const std::int64_t c = b.index_of(t);
        if (c >= 0) rho[row][col] += amp * g.amplitudes[static_cast<std::size_t>(c)];
      }
    }
  }
  const double w = 1.0 / static_cast<double>(sol.states.size());
  for (auto& row : rho) {
    for (double& v : row) v *= w;
  }
  return rho;
}

XState pair_density(const GroundSolution& sol, int i, int j) {
  const auto rho = pair_density_matrix(sol, i, j);
  const double off_x = std::max({std::abs(rho[0][1]), std::abs(rho[0][2]), std::abs(rho[1][3]), std::abs(rho[2][3]),
                                 std::abs(rho[1][0]), std::abs(rho[2][0]), std::abs(rho[3][1]), std::abs(rho[3][2])});
  if (off_x > kOffXTolerance) {
    throw Error(ErrorCode::non_physical_state, "pair density is not of X form (off-X entry " +
                                                   std::to_string(off_x) + ")");
  }
  XState s;
  s.a = rho[0][0];
  s.b1 = rho[1][1];
  s.b2 = rho[2][2];
  s.d = rho[3][3];
  s.z = 0.5 * (rho[1][2] + rho[2][1]);
  s.f = 0.5 * (rho[0][3] + rho[3][0]);
  validate(s);
  return s;
}

SpinFunctions spin_correlators(const GroundSolution& sol, int i, int j) {
  return spin_functions(pair_density(sol, i, j));
}

}  // namespace qdiscord::ed
