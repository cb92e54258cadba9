#include "entbound/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace entbound {

std::vector<double> SectorSchmidt::all_eigenvalues() const {
  std::vector<double> all;
  for (const auto& s : sectors) all.insert(all.end(), s.eigenvalues.begin(), s.eigenvalues.end());
  return all;
}

double SectorSchmidt::total_weight() const {
  double w = 0.0;
  for (const auto& s : sectors) w += s.weight;
  return w;
}

SectorSchmidt sector_schmidt(const StateVector& state, GramSide side) {
  const SectorBasis& basis = *state.basis;
  SectorSchmidt result;

  for (const auto& shape : basis.sectors()) {
    Eigen::MatrixXcd coeff = Eigen::MatrixXcd::Zero(shape.rows, shape.cols);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const auto& c = basis.coord(i);
      if (c.n_a == shape.n_a) coeff(c.a_index, c.b_index) = state.amplitudes[i];
    }

    const bool use_a = side == GramSide::A ||
                       (side == GramSide::Auto && shape.rows <= shape.cols);
    Eigen::MatrixXcd gram = use_a ? Eigen::MatrixXcd(coeff * coeff.adjoint())
                                  : Eigen::MatrixXcd(coeff.adjoint() * coeff);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram);
    if (solver.info() != Eigen::Success)
      throw std::runtime_error("sector_schmidt: Gram eigensolver failed");

    SectorSpectrum spectrum;
    spectrum.n_a = shape.n_a;
    spectrum.weight = coeff.squaredNorm();
    const auto& vals = solver.eigenvalues();
    for (Eigen::Index k = vals.size() - 1; k >= 0; --k) {
      double lambda = vals[k];
      if (lambda < 0.0) {
        if (lambda < -1e-12)
          throw std::runtime_error("sector_schmidt: spectrum eigenvalue below -1e-12");
        lambda = 0.0;
      }
      spectrum.eigenvalues.push_back(lambda);
    }
    result.sectors.push_back(std::move(spectrum));
  }
  return result;
}

double entropy_of_spectrum(const std::vector<double>& eigenvalues) {
  double s = 0.0;
  for (double lambda : eigenvalues)
    if (lambda > 0.0) s -= lambda * std::log(lambda);
  return s;
}

double entanglement_entropy(const StateVector& state) {
  return entropy_of_spectrum(sector_schmidt(state).all_eigenvalues());
}

double renyi_entropy(const StateVector& state, double alpha) {
  if (alpha <= 0.0) throw std::invalid_argument("renyi_entropy: alpha must be > 0");
  if (alpha == 1.0)
    throw std::invalid_argument("renyi_entropy: alpha = 1 is entanglement_entropy");
  double sum = 0.0;
  for (double lambda : sector_schmidt(state).all_eigenvalues())
    if (lambda > 0.0) sum += std::pow(lambda, alpha);
  return std::log(sum) / (1.0 - alpha);
}

NumberDistribution number_distribution(const StateVector& state) {
  const SectorBasis& basis = *state.basis;
  NumberDistribution dist;
  for (const auto& shape : basis.sectors()) dist.probabilities.emplace_back(shape.n_a, 0.0);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& c = basis.coord(i);
    for (auto& [na, p] : dist.probabilities)
      if (na == c.n_a) p += std::norm(state.amplitudes[i]);
  }
  dist.mean = 0.0;
  for (const auto& [na, p] : dist.probabilities) dist.mean += p * na;
  return dist;
}

MaxEntVerdict max_entanglement_test(const StateVector& state, double tolerance) {
  const SectorBasis& basis = *state.basis;
  const SystemSpec spec{basis.L(), basis.M(), basis.n(), Statistics::Fermionic};
  const auto predicted = max_ent_number_distribution(spec);
  const auto measured = number_distribution(state);
  double tv = 0.0;
  for (std::size_t k = 0; k < predicted.size(); ++k)
    tv += 0.5 * std::abs(predicted[k].second - measured.probabilities[k].second);
  return tv > tolerance ? MaxEntVerdict::RuledOut : MaxEntVerdict::Possible;
}

}  // namespace entbound
