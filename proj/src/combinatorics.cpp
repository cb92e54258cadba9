#include "entbound/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace entbound {

void SystemSpec::validate() const {
  if (L < 1) throw std::invalid_argument("SystemSpec: L must be >= 1");
  if (M < 1 || M > L)
    throw std::invalid_argument("SystemSpec: M must satisfy 1 <= M <= L");
  if (n < 0) throw std::invalid_argument("SystemSpec: n must be >= 0");
  if (statistics == Statistics::Fermionic && n > L)
    throw std::invalid_argument(
        "SystemSpec: fermionic n must satisfy n <= L (one particle per site)");
}

BigInt SectorTable::total_d() const {
  BigInt s = 0;
  for (const auto& r : rows) s += r.d;
  return s;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

namespace {

// Same counting as sector_dim but tolerates sites == 0 (empty subsystem),
// which arises internally when M == L.
BigInt sector_dim_unchecked(int sites, long k, Statistics statistics) {
  if (sites == 0) return k == 0 ? BigInt(1) : BigInt(0);
  if (statistics == Statistics::Fermionic) return binomial(sites, k);
  return binomial(sites + k - 1, k);
}

}  // namespace

BigInt sector_dim(int sites, long k, Statistics statistics) {
  if (sites < 1) throw std::domain_error("sector_dim: sites must be >= 1");
  if (k < 0) throw std::domain_error("sector_dim: k must be >= 0");
  return sector_dim_unchecked(sites, k, statistics);
}

std::pair<long, long> admissible_range(const SystemSpec& spec) {
  spec.validate();
  if (spec.statistics == Statistics::Fermionic) {
    long lo = std::max(0L, spec.n - (spec.L - spec.M));
    long hi = std::min(spec.n, static_cast<long>(spec.M));
    return {lo, hi};
  }
  return {0L, spec.n};
}

SectorTable sector_table(const SystemSpec& spec) {
  auto [lo, hi] = admissible_range(spec);
  SectorTable table;
  table.rows.reserve(hi - lo + 1);
  for (long na = lo; na <= hi; ++na) {
    SectorRow row;
    row.n_a = na;
    row.dim_a = sector_dim_unchecked(spec.M, na, spec.statistics);
    row.dim_b = sector_dim_unchecked(spec.L - spec.M, spec.n - na, spec.statistics);
    row.d = std::min(row.dim_a, row.dim_b);
    table.rows.push_back(std::move(row));
  }
  return table;
}

double log_big(const BigInt& x) {
  if (x <= 0) throw std::domain_error("log_big: argument must be positive");
  const unsigned bits = boost::multiprecision::msb(x);
  if (bits < 900) return std::log(x.convert_to<double>());
  const unsigned shift = bits - 64;
  const double top = BigInt(x >> shift).convert_to<double>();
  return std::log(top) + shift * std::numbers::ln2;
}

double closed_system_bound(const SystemSpec& spec) {
  return log_big(sector_table(spec).total_d());
}

double general_bound(const SystemSpec& spec) {
  auto table = sector_table(spec);
  BigInt dim_a = 0, dim_b = 0;
  for (const auto& r : table.rows) {
    dim_a += r.dim_a;
    dim_b += r.dim_b;
  }
  return log_big(std::min(dim_a, dim_b));
}

std::vector<std::pair<long, double>> max_ent_number_distribution(const SystemSpec& spec) {
  auto table = sector_table(spec);
  const double log_total = log_big(table.total_d());
  std::vector<std::pair<long, double>> dist;
  dist.reserve(table.rows.size());
  for (const auto& r : table.rows) {
    const double p = r.d > 0 ? std::exp(log_big(r.d) - log_total) : 0.0;
    dist.emplace_back(r.n_a, p);
  }
  return dist;
}

double mean_subsystem_particles(const SystemSpec& spec) {
  double mean = 0.0;
  for (const auto& [na, p] : max_ent_number_distribution(spec)) mean += p * na;
  return mean;
}

long flattening_threshold(int M, long n) {
  if (M < 1) throw std::invalid_argument("flattening_threshold: M must be >= 1");
  if (n < 0) throw std::invalid_argument("flattening_threshold: n must be >= 0");
  BigInt peak = 0;
  const long hi = std::min(n, static_cast<long>(M));
  for (long na = 0; na <= hi; ++na) peak = std::max(peak, binomial(M, na));
  peak = std::max(peak, BigInt(n));
  const BigInt threshold = peak + M;
  if (threshold > std::numeric_limits<long>::max())
    throw std::overflow_error("flattening_threshold: exceeds long range");
  return threshold.convert_to<long>();
}

double flattened_bound(int M, long n) {
  if (M < 1) throw std::invalid_argument("flattened_bound: M must be >= 1");
  if (n < 0) throw std::invalid_argument("flattened_bound: n must be >= 0");
  if (n >= M) return M * std::numbers::ln2;
  BigInt sum = 1;
  for (long na = 0; na < n; ++na) sum += binomial(M, na);
  return log_big(sum);
}

std::pair<double, double> entropy_corollaries(const SystemSpec& spec) {
  const double bound = closed_system_bound(spec);
  return {-bound, 2.0 * bound};
}

}  // namespace entbound
