#include "entbound/fock_basis.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace entbound {

namespace {

std::uint64_t binomial_u64(int n, int k) {
  if (k < 0 || k > n) return 0;
  return binomial(n, k).convert_to<std::uint64_t>();
}

}  // namespace

int number_in_A(std::uint32_t state, int M) {
  const std::uint32_t a_mask = M >= 32 ? ~0u : ((1u << M) - 1u);
  return std::popcount(state & a_mask);
}

int combinatorial_rank(std::uint32_t mask) {
  // Combinatorial number system: the count of same-popcount masks below
  // `mask` is sum C(p_i, i+1) over set-bit positions p_i, LSB first.
  int rank = 0;
  int i = 0;
  while (mask) {
    const int p = std::countr_zero(mask);
    rank += static_cast<int>(binomial_u64(p, i + 1));
    mask &= mask - 1;
    ++i;
  }
  return rank;
}

std::uint32_t combinatorial_unrank(int bits, int k, int rank) {
  if (k < 0 || k > bits || rank < 0 ||
      static_cast<std::uint64_t>(rank) >= binomial_u64(bits, k))
    throw std::out_of_range("combinatorial_unrank: rank out of range");
  std::uint32_t mask = 0;
  for (int i = k; i >= 1; --i) {
    int p = i - 1;
    while (p + 1 <= bits - 1 && binomial_u64(p + 1, i) <= static_cast<std::uint64_t>(rank))
      ++p;
    rank -= static_cast<int>(binomial_u64(p, i));
    mask |= 1u << p;
  }
  if (rank != 0) throw std::out_of_range("combinatorial_unrank: rank out of range");
  return mask;
}

SectorBasis::SectorBasis(int L, int M, long n) : L_(L), M_(M), n_(n) {
  if (L < 1 || L > 30) throw std::invalid_argument("SectorBasis: L must be in 1..30");
  if (M < 1 || M > L) throw std::invalid_argument("SectorBasis: M must be in 1..L");
  if (n < 0 || n > L) throw std::invalid_argument("SectorBasis: n must be in 0..L");

  const std::size_t dim = binomial(L, n).convert_to<std::size_t>();
  states_.reserve(dim);
  coords_.reserve(dim);

  if (n == 0) {
    states_.push_back(0);
  } else {
    // Gosper's hack: next mask with the same popcount, ascending.
    std::uint32_t v = (1u << n) - 1u;
    const std::uint32_t limit = 1u << L;
    while (v < limit) {
      states_.push_back(v);
      const std::uint32_t c = v & -v;
      const std::uint32_t r = v + c;
      v = (((r ^ v) >> 2) / c) | r;
      if (c == 0) break;
    }
  }

  const std::uint32_t a_mask = M >= 32 ? ~0u : ((1u << M) - 1u);
  for (std::uint32_t s : states_) {
    const std::uint32_t a = s & a_mask;
    const std::uint32_t b = s >> M;
    coords_.push_back({std::popcount(a), combinatorial_rank(a), combinatorial_rank(b)});
  }

  const long lo = std::max(0L, n - (L - M));
  const long hi = std::min(n, static_cast<long>(M));
  for (long na = lo; na <= hi; ++na) {
    sectors_.push_back({na, static_cast<int>(binomial_u64(M, na)),
                        static_cast<int>(binomial_u64(L - M, n - na))});
  }
}

std::size_t SectorBasis::index_of(std::uint32_t mask) const {
  const auto it = std::lower_bound(states_.begin(), states_.end(), mask);
  if (it == states_.end() || *it != mask)
    throw std::out_of_range("SectorBasis::index_of: mask not in basis");
  return static_cast<std::size_t>(it - states_.begin());
}

std::size_t SectorBasis::index_from_coord(int n_a, int a_index, int b_index) const {
  const std::uint32_t a = combinatorial_unrank(M_, n_a, a_index);
  const std::uint32_t b = combinatorial_unrank(L_ - M_, static_cast<int>(n_ - n_a), b_index);
  return index_of(a | (b << M_));
}

BasisPtr build_basis(int L, int M, long n) {
  return std::make_shared<const SectorBasis>(L, M, n);
}

}  // namespace entbound
