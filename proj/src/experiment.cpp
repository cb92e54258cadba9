#include "entbound/experiment.hpp"

#include <atomic>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace entbound {

HamiltonianParams resolve_preset(const std::string& name) {
  if (name == "nonintegrable") return HamiltonianParams::nonintegrable();
  if (name == "nn_hopping_only") return HamiltonianParams::nn_hopping_only();
  if (name == "interaction_only") return HamiltonianParams::interaction_only();
  throw std::invalid_argument("unknown Hamiltonian preset: " + name);
}

void ExperimentConfig::validate() const {
  if (L_values.empty()) throw std::invalid_argument("ExperimentConfig: L_values is empty");
  if (betas.empty()) throw std::invalid_argument("ExperimentConfig: betas is empty");
  if (presets.empty()) throw std::invalid_argument("ExperimentConfig: presets is empty");
  for (const auto& p : presets) resolve_preset(p);
  for (int L : L_values) {
    SystemSpec{L, M, n, Statistics::Fermionic}.validate();
    if (L > 11 && !allow_large_L)
      throw std::invalid_argument(
          "ExperimentConfig: L > 11 takes long; set allow_large_L to run it");
  }
  maximizer.validate();
}

ExperimentConfig config_from_json_text(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  ExperimentConfig c;
  if (j.contains("system")) {
    const auto& s = j.at("system");
    c.M = s.value("M", c.M);
    c.n = s.value("n", c.n);
  }
  c.L_values = j.value("L_values", c.L_values);
  c.betas = j.value("betas", c.betas);
  if (j.contains("presets"))
    c.presets = j.at("presets").get<std::vector<std::string>>();
  else if (j.contains("preset"))
    c.presets = {j.at("preset").get<std::string>()};
  if (j.contains("boundary")) {
    const auto b = j.at("boundary").get<std::string>();
    if (b == "open")
      c.boundary = Boundary::Open;
    else if (b == "periodic")
      c.boundary = Boundary::Periodic;
    else
      throw std::invalid_argument("boundary must be \"open\" or \"periodic\"");
  }
  c.master_seed = j.value("master_seed", c.master_seed);
  if (j.contains("maximizer")) {
    const auto& m = j.at("maximizer");
    c.maximizer.rpts_seeds = m.value("rpts_seeds", c.maximizer.rpts_seeds);
    c.maximizer.restarts_per_seed = m.value("restarts_per_seed", c.maximizer.restarts_per_seed);
    c.maximizer.max_restarts = m.value("max_restarts", c.maximizer.max_restarts);
    c.maximizer.max_iterations = m.value("max_iterations", c.maximizer.max_iterations);
    c.maximizer.convergence_tol = m.value("convergence_tol", c.maximizer.convergence_tol);
    c.maximizer.stall_margin = m.value("stall_margin", c.maximizer.stall_margin);
  }
  if (j.contains("output")) {
    const auto& o = j.at("output");
    c.output_dir = o.value("directory", c.output_dir);
    if (o.contains("formats")) {
      c.csv = c.json = c.svg = false;
      for (const auto& f : o.at("formats")) {
        const auto name = f.get<std::string>();
        if (name == "csv")
          c.csv = true;
        else if (name == "json")
          c.json = true;
        else if (name == "svg")
          c.svg = true;
        else
          throw std::invalid_argument("unknown output format: " + name);
      }
    }
  }
  c.allow_large_L = j.value("allow_large_L", c.allow_large_L);
  c.validate();
  return c;
}

ExperimentConfig config_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return config_from_json_text(ss.str());
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace {

SweepRow run_point(const ExperimentConfig& config, int L, double beta,
                   const std::string& preset, std::uint64_t point_seed) {
  SweepRow row;
  row.L = L;
  row.M = config.M;
  row.n = config.n;
  row.beta = beta;
  row.preset = preset;
  row.boundary = to_string(config.boundary);
  row.seeds = config.maximizer.rpts_seeds;
  try {
    auto params = resolve_preset(preset);
    params.boundary = config.boundary;
    auto basis = build_basis(L, config.M, config.n);
    const auto spectral = diagonalize(build_hamiltonian(basis, params));
    auto mcfg = config.maximizer;
    mcfg.master_seed = point_seed;
    const auto result = maximize_entropy(spectral, beta, mcfg);
    row.mean_max_entropy_nats = result.mean;
    row.std_dev = result.std_dev;
    row.bound_nats =
        closed_system_bound({L, config.M, config.n, Statistics::Fermionic});
    row.mean_nA_at_max = result.mean_number_at_maxima;
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const ExperimentConfig& config, int jobs,
                                const SweepProgress& progress) {
  config.validate();

  struct Point {
    int L;
    double beta;
    std::string preset;
    std::uint64_t seed;
  };
  std::vector<Point> points;
  // Point seeds derive from the master seed by position, so the results do
  // not depend on how many workers ran them.
  const auto point_seeds =
      derive_seeds(config.master_seed,
                   static_cast<int>(config.L_values.size() * config.betas.size() *
                                    config.presets.size()));
  std::size_t idx = 0;
  for (int L : config.L_values)
    for (double beta : config.betas)
      for (const auto& preset : config.presets)
        points.push_back({L, beta, preset, point_seeds[idx++]});

  std::vector<SweepRow> rows(points.size());
  std::atomic<std::size_t> next{0};
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(points.size())));
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < points.size(); i = next.fetch_add(1))
      rows[i] = run_point(config, points[i].L, points[i].beta, points[i].preset,
                          points[i].seed);
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (progress)
    for (const auto& row : rows) progress(row);
  return rows;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << "# entbound sweep csv v1\n";
  out << "L,M,n,beta,preset,boundary,mean_max_entropy_nats,std_dev,bound_nats,"
         "mean_nA_at_max,seeds,error\n";
  for (const auto& r : rows) {
    out << r.L << ',' << r.M << ',' << r.n << ',' << format_number(r.beta) << ','
        << r.preset << ',' << r.boundary << ',' << format_number(r.mean_max_entropy_nats)
        << ',' << format_number(r.std_dev) << ',' << format_number(r.bound_nats) << ','
        << format_number(r.mean_nA_at_max) << ',' << r.seeds << ',' << r.error << '\n';
  }
}

void write_sweep_json(const std::vector<SweepRow>& rows, std::ostream& out) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : rows) {
    j.push_back({{"L", r.L},
                 {"M", r.M},
                 {"n", r.n},
                 {"beta", r.beta},
                 {"preset", r.preset},
                 {"boundary", r.boundary},
                 {"mean_max_entropy_nats", r.mean_max_entropy_nats},
                 {"std_dev", r.std_dev},
                 {"bound_nats", r.bound_nats},
                 {"mean_nA_at_max", r.mean_nA_at_max},
                 {"seeds", r.seeds},
                 {"error", r.error}});
  }
  out << j.dump(2) << '\n';
}

}  // namespace entbound
