#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>

#include "entbound/fock_basis.hpp"

namespace entbound {

enum class Boundary { Open, Periodic };

inline std::string to_string(Boundary b) {
  return b == Boundary::Open ? "open" : "periodic";
}

/// t-t'-V-V' spinless-fermion chain couplings.
struct HamiltonianParams {
  double t = 0.0;        // NN hopping
  double t_prime = 0.0;  // NNN hopping
  double V = 0.0;        // NN interaction
  double V_prime = 0.0;  // NNN interaction
  Boundary boundary = Boundary::Open;

  static HamiltonianParams nonintegrable() { return {1.9, 1.9, 0.5, 0.5, Boundary::Open}; }
  static HamiltonianParams nn_hopping_only() { return {1.9, 0.0, 0.0, 0.0, Boundary::Open}; }
  static HamiltonianParams interaction_only() { return {0.0, 0.0, 0.5, 0.5, Boundary::Open}; }
};

struct HamiltonianMatrix {
  BasisPtr basis;
  Eigen::MatrixXd elements;
};

struct SpectralData {
  BasisPtr basis;
  Eigen::VectorXd eigenvalues;  // ascending
  Eigen::MatrixXd eigenvectors; // orthonormal columns, same order
  std::size_t dim() const { return static_cast<std::size_t>(eigenvalues.size()); }
};

/// Assembles the Hamiltonian in the fixed-n sector. Hopping matrix elements
/// carry the Jordan-Wigner sign with strings ordered by site index 1..L;
/// periodic wrap bonds pick up the string over all intervening sites.
HamiltonianMatrix build_hamiltonian(BasisPtr basis, const HamiltonianParams& params);

/// Dense symmetric eigendecomposition, eigenvalues ascending.
/// Throws std::runtime_error on solver failure.
SpectralData diagonalize(const HamiltonianMatrix& h);

/// Debug dump as "row col value" triples, one nonzero per line.
void dump_matrix(const HamiltonianMatrix& h, std::ostream& out);

}  // namespace entbound
