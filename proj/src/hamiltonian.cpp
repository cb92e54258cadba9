#include "entbound/hamiltonian.hpp"

#include <bit>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace entbound {

namespace {

// Jordan-Wigner string below bit p: parity of the occupied sites with index < p.
int string_parity(std::uint32_t s, int p) {
  const std::uint32_t below = p == 0 ? 0u : (s & ((1u << p) - 1u));
  return std::popcount(below) & 1;
}

// Applies f_j^dag f_i to |s>; returns {new mask, sign} or sign 0 if annihilated.
struct HopResult {
  std::uint32_t mask;
  int sign;
};

HopResult apply_hop(std::uint32_t s, int i, int j) {
  if (!(s & (1u << i)) || (s & (1u << j))) return {0, 0};
  int sign = string_parity(s, i) ? -1 : 1;
  const std::uint32_t s1 = s & ~(1u << i);
  if (string_parity(s1, j)) sign = -sign;
  return {s1 | (1u << j), sign};
}

}  // namespace

HamiltonianMatrix build_hamiltonian(BasisPtr basis, const HamiltonianParams& params) {
  if (!basis) throw std::invalid_argument("build_hamiltonian: null basis");
  const int L = basis->L();
  const std::size_t dim = basis->size();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);

  struct Bond {
    int i, j;
    double hop, interaction;
  };
  std::vector<Bond> bonds;
  for (int d : {1, 2}) {
    const double hop = d == 1 ? params.t : params.t_prime;
    const double interaction = d == 1 ? params.V : params.V_prime;
    for (int i = 0; i < L; ++i) {
      int j = i + d;
      if (j >= L) {
        if (params.boundary == Boundary::Open) continue;
        j %= L;
        if (j == i) continue;
      }
      bonds.push_back({i, j, hop, interaction});
    }
  }

  for (std::size_t col = 0; col < dim; ++col) {
    const std::uint32_t s = basis->state(col);
    double diag = 0.0;
    for (const auto& b : bonds) {
      if ((s >> b.i & 1u) && (s >> b.j & 1u)) diag += b.interaction;
      if (b.hop == 0.0) continue;
      for (auto [from, to] : {std::pair{b.i, b.j}, std::pair{b.j, b.i}}) {
        const auto hop = apply_hop(s, from, to);
        if (hop.sign == 0) continue;
        h(basis->index_of(hop.mask), col) += -b.hop * hop.sign;
      }
    }
    h(col, col) += diag;
  }
  return {std::move(basis), std::move(h)};
}

SpectralData diagonalize(const HamiltonianMatrix& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.elements);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("diagonalize: eigensolver failed to converge (dim " +
                             std::to_string(h.elements.rows()) + ")");
  return {h.basis, solver.eigenvalues(), solver.eigenvectors()};
}

void dump_matrix(const HamiltonianMatrix& h, std::ostream& out) {
  char buf[64];
  for (Eigen::Index r = 0; r < h.elements.rows(); ++r)
    for (Eigen::Index c = 0; c < h.elements.cols(); ++c)
      if (h.elements(r, c) != 0.0) {
        std::snprintf(buf, sizeof buf, "%ld %ld %.12g\n", long(r), long(c), h.elements(r, c));
        out << buf;
      }
}

}  // namespace entbound
