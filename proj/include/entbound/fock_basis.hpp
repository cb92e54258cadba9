#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "entbound/combinatorics.hpp"

namespace entbound {

/// Location of a basis state inside its fixed-n_A block: the coefficient
/// matrix of sector n_a has dim_a rows (A configurations) and dim_b columns
/// (B configurations).
struct SectorCoord {
  int n_a;
  int a_index;
  int b_index;
};

struct SectorShape {
  long n_a;
  int rows;  // C(M, n_a)
  int cols;  // C(L-M, n-n_a)
};

/// Occupation basis of the n-particle fermionic sector on L sites.
///
/// Site i in 1..L maps to bit i-1; subsystem A is sites 1..M, i.e. the M
/// lowest bits. A ket string like |000101> is read left to right as sites
/// 1..6, so it denotes the mask with bits 3 and 5 set. States are ordered
/// by ascending mask value; within a sector, a_index and b_index are the
/// ascending ranks of the A- and B-sub-masks among same-popcount masks.
class SectorBasis {
 public:
  SectorBasis(int L, int M, long n);

  int L() const { return L_; }
  int M() const { return M_; }
  long n() const { return n_; }
  std::size_t size() const { return states_.size(); }

  const std::vector<std::uint32_t>& states() const { return states_; }
  std::uint32_t state(std::size_t i) const { return states_[i]; }

  /// Dense index of a mask; throws if the mask is not in the basis.
  std::size_t index_of(std::uint32_t mask) const;

  const SectorCoord& coord(std::size_t i) const { return coords_[i]; }
  const std::vector<SectorShape>& sectors() const { return sectors_; }

  /// Dense index of the state whose A part is the a_index-th n_a-particle
  /// configuration and whose B part is the b_index-th one.
  std::size_t index_from_coord(int n_a, int a_index, int b_index) const;

 private:
  int L_, M_;
  long n_;
  std::vector<std::uint32_t> states_;
  std::vector<SectorCoord> coords_;
  std::vector<SectorShape> sectors_;  // ascending n_a over the admissible range
};

using BasisPtr = std::shared_ptr<const SectorBasis>;

BasisPtr build_basis(int L, int M, long n);

/// Particles on the A sites (the M lowest bits).
int number_in_A(std::uint32_t state, int M);

/// Rank of `mask` in the ascending ordering of all equal-popcount masks.
int combinatorial_rank(std::uint32_t mask);

/// Inverse of combinatorial_rank for `bits`-bit masks with `k` set bits.
std::uint32_t combinatorial_unrank(int bits, int k, int rank);

}  // namespace entbound
