// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "qdiscord/lanczos.hpp"
#include "qdiscord/xstate.hpp"

namespace qdiscord::ed {

enum class ModelKind { xxz, tfim };

/// Periodic spin-1/2 ring with unit coupling:
///   XXZ:  H = -1/2 sum_i (sx sx + sy sy + delta sz sz)_{i,i+1}
///   TFIM: H = -sum_i (sx_i sx_{i+1} + g sz_i)
struct RingSpec {
  int sites = 0;
  ModelKind model = ModelKind::xxz;
  double parameter = 0.0;  ///< delta (XXZ) or g (TFIM)

  static RingSpec xxz(int sites, double delta) { return {sites, ModelKind::xxz, delta}; }
  static RingSpec tfim(int sites, double g) { return {sites, ModelKind::tfim, g}; }
};

inline constexpr int kMinSites = 2;
inline constexpr int kMaxSites = 20;

/// Throws Error(invalid_argument) for site counts outside [kMinSites,
/// kMaxSites] or odd TFIM rings.
void validate(const RingSpec& spec);

/// Conserved-quantity label. XXZ: number of up spins (0..L).
/// TFIM: 0 for even, 1 for odd number of down spins (prod sz = +1 / -1).
using SectorLabel = int;

std::vector<SectorLabel> sector_labels(const RingSpec& spec);

/// Computational basis of one sector. Bit k of a state is site k; a set bit
/// is spin up.
class SectorBasis {
 public:
  SectorBasis(const RingSpec& spec, SectorLabel label);

  [[nodiscard]] std::size_t dim() const noexcept { return states_.size(); }
  [[nodiscard]] int sites() const noexcept { return sites_; }
  [[nodiscard]] SectorLabel label() const noexcept { return label_; }
  [[nodiscard]] std::uint32_t state(std::size_t index) const noexcept { return states_[index]; }
  [[nodiscard]] std::span<const std::uint32_t> states() const noexcept { return states_; }
  /// Index of `state` in this sector, or -1 when it belongs elsewhere.
  [[nodiscard]] std::int64_t index_of(std::uint32_t state) const noexcept {
    return state < lookup_.size() ? lookup_[state] : -1;
  }

 private:
  int sites_;
  SectorLabel label_;
  std::vector<std::uint32_t> states_;
  std::vector<std::int32_t> lookup_;
};

/// Matrix-free sector Hamiltonian.
class RingHamiltonian {
 public:
  RingHamiltonian(const RingSpec& spec, std::shared_ptr<const SectorBasis> basis);

  [[nodiscard]] std::size_t dim() const noexcept { return basis_->dim(); }
  [[nodiscard]] const RingSpec& spec() const noexcept { return spec_; }
  [[nodiscard]] const std::shared_ptr<const SectorBasis>& basis() const noexcept { return basis_; }

  void apply(std::span<const double> x, std::span<double> y) const;
  /// Row-major dense copy (dim x dim).
  [[nodiscard]] std::vector<double> dense() const;
  [[nodiscard]] LinearOperator as_operator() const;

 private:
  RingSpec spec_;
  std::shared_ptr<const SectorBasis> basis_;
  std::vector<double> diagonal_;
};

/// Throws Error(sector_empty) for labels the model cannot carry.
RingHamiltonian build_hamiltonian(const RingSpec& spec, SectorLabel label);

struct GroundState {
  SectorLabel sector = 0;
  double energy = 0.0;
  std::shared_ptr<const SectorBasis> basis;
  std::vector<double> amplitudes;
};

struct GroundOptions {
  /// Energy window defining the ground space; negative means 1e-9 * L.
  double degeneracy_tol = -1.0;
  /// Sectors up to this dimension are diagonalized densely.
  std::size_t dense_threshold = 400;
  LanczosOptions lanczos{};
};

struct GroundSolution {
  RingSpec spec;
  double energy = 0.0;  ///< lowest eigenvalue over all sectors
  std::vector<GroundState> states;

  [[nodiscard]] std::size_t degeneracy() const noexcept { return states.size(); }
  [[nodiscard]] std::vector<SectorLabel> sectors() const;
};

GroundSolution ground_space(const RingSpec& spec, const GroundOptions& options = {});

/// Full 4x4 reduced density matrix of sites (i, j) for the equal-weight
/// mixture over the ground space, basis {|uu>, |ud>, |du>, |dd>}.
std::array<std::array<double, 4>, 4> pair_density_matrix(const GroundSolution& sol, int i, int j);

/// X-form of the pair density; throws Error(non_physical_state) if the
/// entries outside the X pattern exceed 1e-10.
XState pair_density(const GroundSolution& sol, int i, int j);

SpinFunctions spin_correlators(const GroundSolution& sol, int i, int j);

}  // namespace qdiscord::ed
