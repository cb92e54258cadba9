#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "entbound/maximizer.hpp"

namespace entbound {

HamiltonianParams resolve_preset(const std::string& name);

/// One sweep configuration: (L_values x betas x presets) saturation runs at
/// fixed M, n. Desk-scale default caps L at 11; larger L needs allow_large_L.
struct ExperimentConfig {
  int M = 4;
  long n = 3;
  std::vector<int> L_values;
  std::vector<double> betas;
  std::vector<std::string> presets = {"nonintegrable"};
  Boundary boundary = Boundary::Open;
  std::uint64_t master_seed = 1;
  MaximizationConfig maximizer;
  std::string output_dir = ".";
  bool csv = true;
  bool json = false;
  bool svg = true;
  bool allow_large_L = false;

  void validate() const;
};

ExperimentConfig config_from_json_text(const std::string& text);
ExperimentConfig config_from_json_file(const std::string& path);

struct SweepRow {
  int L = 0;
  int M = 0;
  long n = 0;
  double beta = 0.0;
  std::string preset;
  std::string boundary;
  double mean_max_entropy_nats = 0.0;
  double std_dev = 0.0;
  double bound_nats = 0.0;
  double mean_nA_at_max = 0.0;
  int seeds = 0;
  std::string error;  // empty on success
};

using SweepProgress = std::function<void(const SweepRow&)>;

/// Runs every (L, beta, preset) point; failures land in the row's error
/// column and the run continues. Rows come back in config order regardless
/// of worker scheduling, so output is deterministic for a fixed master_seed.
std::vector<SweepRow> run_sweep(const ExperimentConfig& config, int jobs = 1,
                                const SweepProgress& progress = nullptr);

/// Versioned CSV, 12 significant digits.
void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);
void write_sweep_json(const std::vector<SweepRow>& rows, std::ostream& out);

/// %.12g, the project-wide numeric text format.
std::string format_number(double v);

}  // namespace entbound
