#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace entbound {

using BigInt = boost::multiprecision::cpp_int;

enum class Statistics { Fermionic, Bosonic };

inline std::string to_string(Statistics s) {
  return s == Statistics::Fermionic ? "fermionic" : "bosonic";
}

/// Lattice of L sites, bipartitioned into subsystem A (the M leftmost
/// sites) and subsystem B (the remaining L-M), holding n particles total.
struct SystemSpec {
  int L = 1;
  int M = 1;
  long n = 0;
  Statistics statistics = Statistics::Fermionic;

  /// Throws std::invalid_argument naming the violated constraint.
  void validate() const;
};

struct SectorRow {
  long n_a;
  BigInt dim_a;  // states of n_a particles on the A sites
  BigInt dim_b;  // states of n-n_a particles on the B sites
  BigInt d;      // min(dim_a, dim_b), the sector Schmidt rank cap
};

struct SectorTable {
  std::vector<SectorRow> rows;
  BigInt total_d() const;
};

/// Exact binomial C(n, k).
BigInt binomial(long n, long k);

/// Dimension of the k-particle space on `sites` sites:
/// C(sites, k) for fermions / hard-core bosons, C(sites+k-1, k) for bosons.
BigInt sector_dim(int sites, long k, Statistics statistics);

/// Admissible n_a range for the bipartition: fermionic
/// max(0, n-L+M) .. min(n, M); bosonic 0 .. n.
std::pair<long, long> admissible_range(const SystemSpec& spec);

SectorTable sector_table(const SystemSpec& spec);

/// ln of a positive big integer, accurate to ~1 ulp of double.
double log_big(const BigInt& x);

/// ln sum_{n_a} min(dim_a, dim_b) over the admissible range.
double closed_system_bound(const SystemSpec& spec);

/// ln min(dim H_A, dim H_B), the bound that ignores number conservation
/// beyond restricting each subsystem to particle counts compatible with n.
double general_bound(const SystemSpec& spec);

/// Number distribution p(n_a) = d_{n_a} / sum d of a maximally entangled state.
std::vector<std::pair<long, double>> max_ent_number_distribution(const SystemSpec& spec);

double mean_subsystem_particles(const SystemSpec& spec);

/// Smallest L at which the fermionic bound stops depending on L:
/// L >= max(max_{n_a} C(M, n_a), n) + M.
long flattening_threshold(int M, long n);

/// L-independent value of the fermionic bound past the threshold:
/// ln(1 + sum_{n_a=0}^{min(n,M)-1} C(M, n_a)); equals M ln 2 once n >= M.
double flattened_bound(int M, long n);

/// For pure global states: (lower bound on S(A|B), upper bound on I(A;B))
/// = (-B, 2B) with B the closed-system bound.
std::pair<double, double> entropy_corollaries(const SystemSpec& spec);

}  // namespace entbound
