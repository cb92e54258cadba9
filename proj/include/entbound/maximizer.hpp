#pragma once

#include <functional>
#include <optional>

#include "entbound/entanglement.hpp"

namespace entbound {

enum class MaximizerMode { PhaseSimplex, TimeScan };

struct MaximizationConfig {
  int rpts_seeds = 6;
  int restarts_per_seed = 3;
  int max_restarts = 10;       // extra restarts while still > stall_margin below the bound
  int max_iterations = 20000;  // Nelder-Mead iterations per restart
  double convergence_tol = 1e-7;  // simplex entropy spread
  double stall_margin = 0.02;     // nats below the bound that triggers extra restarts
  MaximizerMode mode = MaximizerMode::PhaseSimplex;
  double tau_max = 100.0;
  double tau_step = 0.1;
  std::uint64_t master_seed = 0;

  void validate() const;
};

struct MaximizationResult {
  std::vector<double> per_seed_maxima;  // nats, one entry per RPTS seed
  double mean = 0.0;
  double std_dev = 0.0;  // sample standard deviation (n-1)
  std::vector<double> best_phases;
  double best_state_number_mean = 0.0;   // n_A mean of the single best state
  double mean_number_at_maxima = 0.0;    // n_A mean averaged over per-seed maximizers
  int non_converged_restarts = 0;
};

using ProgressHook = std::function<void(int iteration, double best_entropy)>;

/// max over phases of S_ent(phase_state(RPTS)), Nelder-Mead on the phase
/// torus with the first group's phase gauge-fixed to 0. Statistics are
/// aggregated over rpts_seeds independent thermal states whose seeds derive
/// deterministically from master_seed.
MaximizationResult maximize_entropy(const SpectralData& spectral, double beta,
                                    const MaximizationConfig& config,
                                    const ProgressHook& progress = nullptr);

struct TimeScanResult {
  double best_tau = 0.0;
  double best_entropy = 0.0;
  std::vector<std::pair<double, double>> trace;  // (tau, S_ent)
};

/// Direct scan of S_ent(|psi_tau>) on a tau grid; the slower alternative to
/// phase maximization, useful for plots and as a cross-check.
TimeScanResult time_scan(const SpectralData& spectral, double beta, std::uint64_t seed,
                         double tau_max, double tau_step);

/// Per-seed RPTS seeds derived from a master seed (SplitMix64 stream).
std::vector<std::uint64_t> derive_seeds(std::uint64_t master_seed, int count);

}  // namespace entbound
