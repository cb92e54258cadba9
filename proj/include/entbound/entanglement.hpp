#pragma once

#include <vector>

#include "entbound/states.hpp"

namespace entbound {

/// Schmidt data of one fixed-n_a block: sector weight |a_{n_a}|^2 and the
/// block's reduced-density-matrix eigenvalues (descending; these already
/// include the sector weight, i.e. they sum to `weight`).
struct SectorSpectrum {
  long n_a;
  double weight;
  std::vector<double> eigenvalues;
};

struct SectorSchmidt {
  std::vector<SectorSpectrum> sectors;  // ascending n_a

  std::vector<double> all_eigenvalues() const;
  double total_weight() const;
};

/// Which subsystem's Gram matrix to diagonalize. Auto picks the smaller
/// side per sector; A and B force one side (they agree to roundoff, which
/// the tests exploit as the S(rho_A) = S(rho_B) check).
enum class GramSide { Auto, A, B };

/// Block-wise Schmidt spectra: per sector, reshape the amplitudes into the
/// dim_a x dim_b coefficient matrix and take eigenvalues of the Gram matrix.
/// Number superselection makes rho_A block-diagonal across sectors, so the
/// union of block spectra is the full spectrum of rho_A.
SectorSchmidt sector_schmidt(const StateVector& state, GramSide side = GramSide::Auto);

/// Von Neumann entropy -sum lambda ln lambda of the reduced state, in nats.
double entanglement_entropy(const StateVector& state);
double entropy_of_spectrum(const std::vector<double>& eigenvalues);

/// Renyi entropy (1/(1-alpha)) ln sum lambda^alpha; alpha > 0, alpha != 1.
double renyi_entropy(const StateVector& state, double alpha);

struct NumberDistribution {
  std::vector<std::pair<long, double>> probabilities;
  double mean;
};

/// Probability of finding n_a particles on the A sites, and its mean.
NumberDistribution number_distribution(const StateVector& state);

enum class MaxEntVerdict { Possible, RuledOut };

/// Necessary-condition test: compares the measured number distribution with
/// the maximally entangled prediction p(n_a) = d_{n_a}/sum d in total
/// variation distance. RuledOut is conclusive; Possible is not.
MaxEntVerdict max_entanglement_test(const StateVector& state, double tolerance);

}  // namespace entbound
