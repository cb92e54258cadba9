#pragma once

// Independent brute-force routes used to check the library. Everything here
// works in the full 2^L space or by direct enumeration and deliberately
// shares no code with the sector-based implementation.

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "entbound/combinatorics.hpp"
#include "entbound/fock_basis.hpp"
#include "entbound/hamiltonian.hpp"
#include "entbound/states.hpp"

namespace oracles {

// Counts sum over n_a of min(#A-configs, #B-configs) by enumerating every
// occupation configuration and tallying the two sides per sector.
inline long brute_force_min_dim_sum_fermionic(int L, int M, long n) {
  std::map<int, std::pair<long, long>> per_sector;  // n_a -> (count_a, count_b)
  std::map<int, std::map<std::uint32_t, bool>> a_seen, b_seen;
  for (std::uint32_t mask = 0; mask < (1u << L); ++mask) {
    if (std::popcount(mask) != n) continue;
    const std::uint32_t a = mask & ((1u << M) - 1u);
    const std::uint32_t b = mask >> M;
    const int na = std::popcount(a);
    a_seen[na][a] = true;
    b_seen[na][b] = true;
  }
  long total = 0;
  for (const auto& [na, seen] : a_seen)
    total += std::min<long>(seen.size(), b_seen[na].size());
  return total;
}

// Bosonic occupation vectors, counted per n_a by recursive enumeration.
inline void enumerate_bosonic(int sites, long n, std::vector<long>& occ,
                              const std::function<void(const std::vector<long>&)>& visit) {
  if (sites == 1) {
    occ.push_back(n);
    visit(occ);
    occ.pop_back();
    return;
  }
  for (long k = 0; k <= n; ++k) {
    occ.push_back(k);
    enumerate_bosonic(sites - 1, n - k, occ, visit);
    occ.pop_back();
  }
}

inline long brute_force_min_dim_sum_bosonic(int L, int M, long n) {
  std::map<long, std::pair<long, long>> dims;  // n_a -> (dim_a, dim_b)
  for (long na = 0; na <= n; ++na) {
    long da = 0, db = 0;
    std::vector<long> occ;
    enumerate_bosonic(M, na, occ, [&](const std::vector<long>&) { ++da; });
    if (L - M > 0)
      enumerate_bosonic(L - M, n - na, occ, [&](const std::vector<long>&) { ++db; });
    else
      db = (n - na == 0) ? 1 : 0;
    dims[na] = {da, db};
  }
  long total = 0;
  for (const auto& [na, d] : dims) total += std::min(d.first, d.second);
  return total;
}

// Full 2^L-space fermion operators via explicit Jordan-Wigner matrices.
// Qubit q holds site q+1's occupation; basis index is the occupation mask.
inline Eigen::MatrixXd jw_annihilation(int L, int site) {
  const int dim = 1 << L;
  Eigen::MatrixXd f = Eigen::MatrixXd::Zero(dim, dim);
  for (int s = 0; s < dim; ++s) {
    if (!(s >> site & 1)) continue;
    const int below = std::popcount(static_cast<unsigned>(s) & ((1u << site) - 1u));
    f(s & ~(1 << site), s) = (below & 1) ? -1.0 : 1.0;
  }
  return f;
}

inline Eigen::MatrixXd full_space_hamiltonian(int L, const entbound::HamiltonianParams& p) {
  const int dim = 1 << L;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  std::vector<Eigen::MatrixXd> f, fd, nf;
  for (int i = 0; i < L; ++i) {
    f.push_back(jw_annihilation(L, i));
    fd.push_back(f.back().transpose());
    nf.push_back(fd.back() * f.back());
  }
  for (int d : {1, 2}) {
    const double hop = d == 1 ? p.t : p.t_prime;
    const double inter = d == 1 ? p.V : p.V_prime;
    for (int i = 0; i < L; ++i) {
      int j = i + d;
      if (j >= L) {
        if (p.boundary == entbound::Boundary::Open) continue;
        j %= L;
        if (j == i) continue;
      }
      h += -hop * (fd[i] * f[j] + fd[j] * f[i]) + inter * nf[i] * nf[j];
    }
  }
  return h;
}

inline Eigen::MatrixXd project_to_sector(const Eigen::MatrixXd& h_full,
                                         const entbound::SectorBasis& basis) {
  const std::size_t dim = basis.size();
  Eigen::MatrixXd h(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) h(i, j) = h_full(basis.state(i), basis.state(j));
  return h;
}

inline Eigen::MatrixXd full_space_number_operator(int L) {
  const int dim = 1 << L;
  Eigen::MatrixXd n = Eigen::MatrixXd::Zero(dim, dim);
  for (int s = 0; s < dim; ++s) n(s, s) = std::popcount(static_cast<unsigned>(s));
  return n;
}

// Reduced density matrix of the A qubits (low M bits) by explicit index
// summation in the full space; the entanglement spectrum of the mode
// bipartition equals the qubit one because the A block is the left JW
// segment.
inline Eigen::MatrixXcd full_space_rho_A(const entbound::StateVector& state) {
  const int L = state.basis->L();
  const int M = state.basis->M();
  Eigen::VectorXcd full = Eigen::VectorXcd::Zero(1 << L);
  for (std::size_t i = 0; i < state.basis->size(); ++i)
    full[state.basis->state(i)] = state.amplitudes[i];
  const int da = 1 << M, db = 1 << (L - M);
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(da, da);
  for (int a = 0; a < da; ++a)
    for (int ap = 0; ap < da; ++ap)
      for (int b = 0; b < db; ++b)
        rho(a, ap) += full[a + (b << M)] * std::conj(full[ap + (b << M)]);
  return rho;
}

inline double full_space_entropy(const entbound::StateVector& state) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(full_space_rho_A(state));
  double s = 0.0;
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
    const double lambda = solver.eigenvalues()[k];
    if (lambda > 1e-15) s -= lambda * std::log(lambda);
  }
  return s;
}

// Cyclic Jacobi rotations, eigenvalues only, ascending. Independent of
// Eigen's tridiagonal QR path.
inline std::vector<double> jacobi_eigenvalues(Eigen::MatrixXd a, double tol = 1e-13) {
  const Eigen::Index n = a.rows();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (off < tol * tol) break;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) < 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        Eigen::MatrixXd g = Eigen::MatrixXd::Identity(n, n);
        g(p, p) = c;
        g(q, q) = c;
        g(p, q) = s;
        g(q, p) = -s;
        a = g.transpose() * a * g;
      }
  }
  std::vector<double> ev(n);
  for (Eigen::Index k = 0; k < n; ++k) ev[k] = a(k, k);
  std::sort(ev.begin(), ev.end());
  return ev;
}

// Haar-ish random normalized state over the sector basis.
inline entbound::StateVector random_state(entbound::BasisPtr basis, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Eigen::VectorXcd amp(basis->size());
  for (Eigen::Index i = 0; i < amp.size(); ++i) amp[i] = {normal(rng), normal(rng)};
  amp /= amp.norm();
  return {std::move(basis), std::move(amp)};
}

}  // namespace oracles
