#include "entbound/states.hpp"

#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace entbound {

double NormalStream::next() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  // u1 in (0,1]: avoids log(0).
  const double u1 = (rng_() >> 11) * 0x1.0p-53 + 0x1.0p-54;
  const double u2 = (rng_() >> 11) * 0x1.0p-53;
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  cached_ = r * std::sin(angle);
  has_cached_ = true;
  return r * std::cos(angle);
}

namespace {

bool same_basis(const BasisPtr& a, const BasisPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->L() == b->L() && a->M() == b->M() && a->n() == b->n();
}

}  // namespace

StateVector random_pure_thermal_state(const SpectralData& spectral,
                                      const ThermalEnsembleSpec& ensemble) {
  const Eigen::Index dim = spectral.eigenvalues.size();
  if (dim == 0) throw std::invalid_argument("random_pure_thermal_state: empty spectrum");
  if (!std::isfinite(ensemble.beta))
    throw std::invalid_argument("random_pure_thermal_state: beta must be finite");

  NormalStream normals(ensemble.seed);
  const double e_min = spectral.eigenvalues.minCoeff();
  Eigen::VectorXcd coeffs(dim);
  double z = 0.0;
  for (Eigen::Index k = 0; k < dim; ++k) {
    const double x = normals.next();
    const double y = normals.next();
    const std::complex<double> c{x / std::numbers::sqrt2, y / std::numbers::sqrt2};
    const double w = std::exp(-ensemble.beta * (spectral.eigenvalues[k] - e_min) / 2.0);
    coeffs[k] = c * w;
    z += std::norm(coeffs[k]);
  }
  if (z <= 0.0)
    throw std::runtime_error("random_pure_thermal_state: all Boltzmann weights underflowed");
  coeffs /= std::sqrt(z);
  return {spectral.basis, spectral.eigenvectors * coeffs};
}

StateVector evolve(const StateVector& state, const SpectralData& spectral, double tau) {
  if (!same_basis(state.basis, spectral.basis))
    throw std::invalid_argument("evolve: state and spectrum use different bases");
  Eigen::VectorXcd coeffs = spectral.eigenvectors.transpose() * state.amplitudes;
  for (Eigen::Index k = 0; k < coeffs.size(); ++k)
    coeffs[k] *= std::polar(1.0, -spectral.eigenvalues[k] * tau);
  return {state.basis, spectral.eigenvectors * coeffs};
}

std::vector<int> eigenvalue_groups(const SpectralData& spectral) {
  const Eigen::Index dim = spectral.eigenvalues.size();
  const double scale = spectral.eigenvalues.cwiseAbs().maxCoeff();
  const double tol = 1e-10 * std::max(scale, 1.0);
  std::vector<int> groups(dim);
  int g = 0;
  for (Eigen::Index k = 1; k < dim; ++k) {
    if (spectral.eigenvalues[k] - spectral.eigenvalues[k - 1] > tol) ++g;
    groups[k] = g;
  }
  return groups;
}

StateVector phase_state(const StateVector& state, const SpectralData& spectral,
                        const std::vector<double>& phases) {
  if (!same_basis(state.basis, spectral.basis))
    throw std::invalid_argument("phase_state: state and spectrum use different bases");
  const auto groups = eigenvalue_groups(spectral);
  if (static_cast<int>(phases.size()) != group_count(groups))
    throw std::invalid_argument("phase_state: need one phase per distinct-eigenvalue group");
  Eigen::VectorXcd coeffs = spectral.eigenvectors.transpose() * state.amplitudes;
  for (Eigen::Index k = 0; k < coeffs.size(); ++k)
    coeffs[k] *= std::polar(1.0, -phases[groups[k]]);
  return {state.basis, spectral.eigenvectors * coeffs};
}

StateVector max_entangled_state(BasisPtr basis) {
  if (!basis) throw std::invalid_argument("max_entangled_state: null basis");
  long total_d = 0;
  for (const auto& s : basis->sectors()) total_d += std::min(s.rows, s.cols);
  Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(basis->size());
  const double a = 1.0 / std::sqrt(static_cast<double>(total_d));
  for (const auto& s : basis->sectors()) {
    const int d = std::min(s.rows, s.cols);
    for (int k = 0; k < d; ++k)
      amp[basis->index_from_coord(static_cast<int>(s.n_a), k, k)] = a;
  }
  return {std::move(basis), std::move(amp)};
}

void dump_state(const StateVector& state, std::ostream& out) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%d %d %ld\n", state.basis->L(), state.basis->M(),
                state.basis->n());
  out << buf;
  for (Eigen::Index i = 0; i < state.amplitudes.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%ld %.17g %.17g\n", long(i),
                  state.amplitudes[i].real(), state.amplitudes[i].imag());
    out << buf;
  }
}

StateVector load_state(std::istream& in) {
  int L, M;
  long n;
  if (!(in >> L >> M >> n)) throw std::runtime_error("load_state: bad header");
  auto basis = build_basis(L, M, n);
  Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(basis->size());
  long idx;
  double re, im;
  while (in >> idx >> re >> im) {
    if (idx < 0 || idx >= static_cast<long>(basis->size()))
      throw std::runtime_error("load_state: index out of range");
    amp[idx] = {re, im};
  }
  return {std::move(basis), std::move(amp)};
}

}  // namespace entbound
