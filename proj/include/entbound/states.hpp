#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <vector>

#include "entbound/hamiltonian.hpp"

namespace entbound {

struct StateVector {
  BasisPtr basis;
  Eigen::VectorXcd amplitudes;  // unit norm over the sector basis

  double norm() const { return amplitudes.norm(); }
};

struct ThermalEnsembleSpec {
  double beta = 0.0;
  std::uint64_t seed = 0;
};

/// Deterministic stream of standard normals: mt19937_64 feeding a
/// Box-Muller transform. Fixed here so runs are reproducible bit for bit
/// across platforms (std::normal_distribution is not portable).
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed) : rng_(seed) {}
  double next();

 private:
  std::mt19937_64 rng_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

/// Random pure thermal state |psi> = Z^{-1/2} sum_E c_E e^{-beta E/2} |E>
/// with c_E = (x_E + i y_E)/sqrt(2), x, y ~ N(0,1). Energies are shifted by
/// E_min inside the Boltzmann weights; the shift cancels in normalization.
StateVector random_pure_thermal_state(const SpectralData& spectral,
                                      const ThermalEnsembleSpec& ensemble);

/// |psi_tau> = e^{-i H tau} |psi| via the eigenbasis.
StateVector evolve(const StateVector& state, const SpectralData& spectral, double tau);

/// Groups of (near-)degenerate eigenvalues: |dE| <= 1e-10 max|E| merges.
/// Returns one group id per eigenvalue, ids contiguous from 0, ascending.
std::vector<int> eigenvalue_groups(const SpectralData& spectral);

inline int group_count(const std::vector<int>& groups) {
  return groups.empty() ? 0 : groups.back() + 1;
}

/// Multiplies each eigencomponent by e^{-i phi_g} of its degeneracy group.
/// phases.size() must equal the number of groups.
StateVector phase_state(const StateVector& state, const SpectralData& spectral,
                        const std::vector<double>& phases);

/// The canonical bound-saturating state: per sector n_a, pairs the k-th A
/// configuration with the k-th B configuration for k < d_{n_a}, all
/// amplitudes (sum d)^{-1/2}.
StateVector max_entangled_state(BasisPtr basis);

/// Text dump: "L M n" header, then "index real imag" rows.
void dump_state(const StateVector& state, std::ostream& out);
StateVector load_state(std::istream& in);

}  // namespace entbound
