#include "entbound/maximizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

namespace entbound {

void MaximizationConfig::validate() const {
  if (rpts_seeds < 1) throw std::invalid_argument("MaximizationConfig: rpts_seeds must be >= 1");
  if (restarts_per_seed < 1)
    throw std::invalid_argument("MaximizationConfig: restarts_per_seed must be >= 1");
  if (max_restarts < restarts_per_seed)
    throw std::invalid_argument("MaximizationConfig: max_restarts < restarts_per_seed");
  if (max_iterations < 1)
    throw std::invalid_argument("MaximizationConfig: max_iterations must be >= 1");
  if (convergence_tol <= 0.0)
    throw std::invalid_argument("MaximizationConfig: convergence_tol must be > 0");
  if (mode == MaximizerMode::TimeScan && tau_step <= 0.0)
    throw std::invalid_argument("MaximizationConfig: tau_step must be > 0");
}

std::vector<std::uint64_t> derive_seeds(std::uint64_t master_seed, int count) {
  std::vector<std::uint64_t> seeds(count);
  std::uint64_t x = master_seed;
  for (auto& s : seeds) {
    // SplitMix64 step
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    s = z ^ (z >> 31);
  }
  return seeds;
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Entropy as a function of the free phases (group 0 gauge-fixed to 0),
// evaluated on a fixed set of eigenbasis coefficients.
class PhaseObjective {
 public:
  PhaseObjective(const SpectralData& spectral, Eigen::VectorXcd coeffs,
                 std::vector<int> groups)
      : spectral_(spectral), coeffs_(std::move(coeffs)), groups_(std::move(groups)) {}

  int dimension() const { return group_count(groups_) - 1; }

  StateVector state_at(const std::vector<double>& free_phases) const {
    Eigen::VectorXcd rotated = coeffs_;
    for (Eigen::Index k = 0; k < rotated.size(); ++k) {
      const int g = groups_[k];
      if (g > 0) rotated[k] *= std::polar(1.0, -free_phases[g - 1]);
    }
    return {spectral_.basis, spectral_.eigenvectors * rotated};
  }

  double entropy_at(const std::vector<double>& free_phases) const {
    return entanglement_entropy(state_at(free_phases));
  }

 private:
  const SpectralData& spectral_;
  Eigen::VectorXcd coeffs_;
  std::vector<int> groups_;
};

struct SimplexOutcome {
  std::vector<double> best_point;
  double best_value;  // entropy (maximized)
  bool converged;
};

// Nelder-Mead with the standard coefficients (reflect 1, expand 2,
// contract 0.5, shrink 0.5), maximizing by minimizing -entropy.
SimplexOutcome nelder_mead(const PhaseObjective& objective, std::vector<double> start,
                           int max_iterations, double tol, const ProgressHook& progress) {
  const int dim = objective.dimension();
  std::vector<std::vector<double>> points;
  std::vector<double> values;  // -entropy
  points.push_back(start);
  for (int k = 0; k < dim; ++k) {
    auto p = start;
    p[k] += 0.5;
    points.push_back(std::move(p));
  }
  for (const auto& p : points) values.push_back(-objective.entropy_at(p));

  std::vector<int> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  auto sort_order = [&] {
    std::sort(order.begin(), order.end(), [&](int a, int b) { return values[a] < values[b]; });
  };

  bool converged = false;
  for (int iter = 0; iter < max_iterations; ++iter) {
    sort_order();
    const int best = order.front();
    const int worst = order.back();
    const int second_worst = order[order.size() - 2];
    if (values[worst] - values[best] < tol) {
      converged = true;
      break;
    }
    if (progress && iter % 500 == 0) progress(iter, -values[best]);

    std::vector<double> centroid(dim, 0.0);
    for (std::size_t j = 0; j + 1 < order.size(); ++j)
      for (int k = 0; k < dim; ++k) centroid[k] += points[order[j]][k];
    for (double& c : centroid) c /= dim;

    auto affine = [&](double s) {
      std::vector<double> p(dim);
      for (int k = 0; k < dim; ++k) p[k] = centroid[k] + s * (centroid[k] - points[worst][k]);
      return p;
    };

    auto reflected = affine(1.0);
    const double fr = -objective.entropy_at(reflected);
    if (fr < values[best]) {
      auto expanded = affine(2.0);
      const double fe = -objective.entropy_at(expanded);
      if (fe < fr) {
        points[worst] = std::move(expanded);
        values[worst] = fe;
      } else {
        points[worst] = std::move(reflected);
        values[worst] = fr;
      }
    } else if (fr < values[second_worst]) {
      points[worst] = std::move(reflected);
      values[worst] = fr;
    } else {
      const bool outside = fr < values[worst];
      auto contracted = outside ? affine(0.5) : affine(-0.5);
      const double fc = -objective.entropy_at(contracted);
      if (fc < std::min(fr, values[worst])) {
        points[worst] = std::move(contracted);
        values[worst] = fc;
      } else {
        // shrink toward the best vertex
        for (int idx : order)
          if (idx != best) {
            for (int k = 0; k < dim; ++k)
              points[idx][k] = points[best][k] + 0.5 * (points[idx][k] - points[best][k]);
            values[idx] = -objective.entropy_at(points[idx]);
          }
      }
    }
  }
  sort_order();
  auto best_point = points[order.front()];
  for (double& p : best_point) p = std::fmod(std::fmod(p, kTwoPi) + kTwoPi, kTwoPi);
  return {std::move(best_point), -values[order.front()], converged};
}

}  // namespace

MaximizationResult maximize_entropy(const SpectralData& spectral, double beta,
                                    const MaximizationConfig& config,
                                    const ProgressHook& progress) {
  config.validate();
  const auto groups = eigenvalue_groups(spectral);
  const int dim = group_count(groups) - 1;
  if (dim > 400)
    throw std::invalid_argument(
        "maximize_entropy: phase dimension > 400; use TimeScan mode instead");

  const SectorBasis& basis = *spectral.basis;
  const SystemSpec spec{basis.L(), basis.M(), basis.n(), Statistics::Fermionic};
  const double bound = closed_system_bound(spec);

  MaximizationResult result;
  double global_best = -1.0;
  std::vector<double> seed_number_means;

  const auto seeds = derive_seeds(config.master_seed, config.rpts_seeds);
  for (int si = 0; si < config.rpts_seeds; ++si) {
    const auto state = random_pure_thermal_state(spectral, {beta, seeds[si]});
    Eigen::VectorXcd coeffs = spectral.eigenvectors.transpose() * state.amplitudes;
    PhaseObjective objective(spectral, std::move(coeffs), groups);

    double seed_best = entanglement_entropy(state);
    std::vector<double> seed_best_phases(dim, 0.0);
    if (dim > 0) {
      std::mt19937_64 rng(seeds[si] ^ 0x5851f42d4c957f2dULL);
      std::uniform_real_distribution<double> uniform(0.0, kTwoPi);
      for (int r = 0; r < config.max_restarts; ++r) {
        if (r >= config.restarts_per_seed && seed_best >= bound - config.stall_margin) break;
        std::vector<double> start(dim);
        if (r > 0 && r % 2 == 1) {
          start = seed_best_phases;  // polish the best point found so far
        } else {
          for (double& x : start) x = uniform(rng);
        }
        auto outcome =
            nelder_mead(objective, std::move(start), config.max_iterations,
                        config.convergence_tol, progress);
        if (!outcome.converged) ++result.non_converged_restarts;
        if (outcome.best_value > seed_best) {
          seed_best = outcome.best_value;
          seed_best_phases = std::move(outcome.best_point);
        }
      }
    }
    result.per_seed_maxima.push_back(seed_best);
    const auto best_state = objective.state_at(seed_best_phases);
    seed_number_means.push_back(number_distribution(best_state).mean);
    if (seed_best > global_best) {
      global_best = seed_best;
      result.best_phases = seed_best_phases;
      result.best_state_number_mean = seed_number_means.back();
    }
  }

  const auto& m = result.per_seed_maxima;
  result.mean = std::accumulate(m.begin(), m.end(), 0.0) / m.size();
  if (m.size() > 1) {
    double ss = 0.0;
    for (double v : m) ss += (v - result.mean) * (v - result.mean);
    result.std_dev = std::sqrt(ss / (m.size() - 1));
  }
  result.mean_number_at_maxima =
      std::accumulate(seed_number_means.begin(), seed_number_means.end(), 0.0) /
      seed_number_means.size();
  return result;
}

TimeScanResult time_scan(const SpectralData& spectral, double beta, std::uint64_t seed,
                         double tau_max, double tau_step) {
  if (tau_step <= 0.0) throw std::invalid_argument("time_scan: tau_step must be > 0");
  const auto state = random_pure_thermal_state(spectral, {beta, seed});
  TimeScanResult result;
  result.best_entropy = -1.0;
  for (double tau = 0.0; tau <= tau_max + 1e-12; tau += tau_step) {
    const double s = entanglement_entropy(evolve(state, spectral, tau));
    result.trace.emplace_back(tau, s);
    if (s > result.best_entropy) {
      result.best_entropy = s;
      result.best_tau = tau;
    }
  }
  return result;
}

}  // namespace entbound
