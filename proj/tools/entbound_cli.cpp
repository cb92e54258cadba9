// entbound: bounds on bipartite entanglement entropy in particle-number
// conserving systems, plus the saturation experiment on a 1D fermion chain.

#include <CLI11.hpp>
#include <cmath>
#include <numbers>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "entbound/entanglement.hpp"
#include "entbound/experiment.hpp"
#include "entbound/svg_plot.hpp"

namespace fs = std::filesystem;
using namespace entbound;

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitInvalid = 2;

double display(double nats, bool bits) { return bits ? nats / std::numbers::ln2 : nats; }

Statistics parse_stats(const std::string& s) {
  if (s == "fermionic") return Statistics::Fermionic;
  if (s == "bosonic") return Statistics::Bosonic;
  throw CLI::ValidationError("--stats must be fermionic or bosonic");
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

int cmd_bound(int L, int M, long n, const std::string& stats_name, bool bits,
              const std::string& csv_path) {
  SystemSpec spec{L, M, n, parse_stats(stats_name)};
  spec.validate();

  const double closed = closed_system_bound(spec);
  const double general = general_bound(spec);
  const auto dist = max_ent_number_distribution(spec);
  const double mean = mean_subsystem_particles(spec);
  const char* unit = bits ? "bits" : "nats";

  std::cout << "L=" << L << " M=" << M << " n=" << n << " statistics=" << stats_name
            << "\n";
  std::cout << "closed_system_bound (" << unit << "): " << format_number(display(closed, bits))
            << "\n";
  std::cout << "general_bound (" << unit << "): " << format_number(display(general, bits))
            << "\n";
  if (spec.statistics == Statistics::Fermionic) {
    const long threshold = flattening_threshold(M, n);
    std::cout << "flattened_bound (" << unit
              << "): " << format_number(display(flattened_bound(M, n), bits))
              << "  (valid for L >= " << threshold << ")\n";
  }
  std::cout << "max-ent number distribution p(n_A):\n";
  for (const auto& [na, p] : dist)
    std::cout << "  n_A=" << na << "  p=" << format_number(p) << "\n";
  std::cout << "mean n_A: " << format_number(mean) << "\n";

  if (!csv_path.empty()) {
    auto out = open_out(csv_path);
    out << "# entbound bound csv v1\n";
    out << "L,M,n,statistics,closed_system_bound_nats,general_bound_nats,mean_nA\n";
    out << L << ',' << M << ',' << n << ',' << stats_name << ',' << format_number(closed)
        << ',' << format_number(general) << ',' << format_number(mean) << '\n';
  }
  return 0;
}

int cmd_sweep(const std::string& config_path, int jobs, bool verbose,
              const std::string& output_dir_override, long master_seed_override,
              bool allow_large_l) {
  auto config = config_from_json_file(config_path);
  if (!output_dir_override.empty()) config.output_dir = output_dir_override;
  if (master_seed_override >= 0)
    config.master_seed = static_cast<std::uint64_t>(master_seed_override);
  if (allow_large_l) config.allow_large_L = true;
  config.validate();

  fs::create_directories(config.output_dir);
  const auto progress = verbose ? SweepProgress([](const SweepRow& r) {
    std::cerr << "L=" << r.L << " beta=" << r.beta << " preset=" << r.preset << " mean="
              << format_number(r.mean_max_entropy_nats) << " bound="
              << format_number(r.bound_nats)
              << (r.error.empty() ? "" : " error=" + r.error) << "\n";
  })
                               : SweepProgress();
  const auto rows = run_sweep(config, jobs, progress);

  const fs::path dir = config.output_dir;
  if (config.csv) {
    auto out = open_out(dir / "sweep.csv");
    write_sweep_csv(rows, out);
  }
  if (config.json) {
    auto out = open_out(dir / "sweep.json");
    write_sweep_json(rows, out);
  }
  if (config.svg) {
    auto out = open_out(dir / "sweep.svg");
    render_sweep_svg(rows, out);
  }
  for (const auto& r : rows)
    if (!r.error.empty()) {
      std::cerr << "warning: point L=" << r.L << " beta=" << r.beta
                << " failed: " << r.error << "\n";
    }
  std::cout << "wrote " << rows.size() << " rows to " << dir.string() << "\n";
  return 0;
}

int cmd_maxstate(int L, int M, long n, bool bits, const std::string& out_path) {
  auto basis = build_basis(L, M, n);
  const auto psi = max_entangled_state(basis);
  const SystemSpec spec{L, M, n, Statistics::Fermionic};
  const double bound = closed_system_bound(spec);
  const double entropy = entanglement_entropy(psi);
  const char* unit = bits ? "bits" : "nats";

  std::cout << "entropy (" << unit << "): " << format_number(display(entropy, bits)) << "\n";
  std::cout << "bound (" << unit << "): " << format_number(display(bound, bits)) << "\n";
  std::cout << "entropy - bound: " << format_number(entropy - bound) << "\n";
  const auto verdict = max_entanglement_test(psi, 1e-10);
  std::cout << "number-distribution check: "
            << (verdict == MaxEntVerdict::Possible ? "consistent" : "inconsistent") << "\n";
  const auto dist = number_distribution(psi);
  for (const auto& [na, p] : dist.probabilities)
    std::cout << "  n_A=" << na << "  p=" << format_number(p) << "\n";
  std::cout << "mean n_A: " << format_number(dist.mean) << "\n";

  if (out_path.empty() || out_path == "-") {
    dump_state(psi, std::cout);
  } else {
    auto out = open_out(out_path);
    dump_state(psi, out);
  }
  return std::abs(entropy - bound) < 1e-10 ? 0 : kExitRuntime;
}

int cmd_evolve(int L, int M, long n, const std::string& preset, double beta,
               std::uint64_t seed, double tau_max, double tau_step,
               const std::string& csv_path, const std::string& svg_path) {
  if (tau_step <= 0.0) throw CLI::ValidationError("--tau-step must be > 0");
  auto basis = build_basis(L, M, n);
  const auto spectral = diagonalize(build_hamiltonian(basis, resolve_preset(preset)));
  const auto h = build_hamiltonian(basis, resolve_preset(preset));
  const auto psi0 = random_pure_thermal_state(spectral, {beta, seed});
  const double bound = closed_system_bound({L, M, n, Statistics::Fermionic});

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!csv_path.empty() && csv_path != "-") {
    file = open_out(csv_path);
    out = &file;
  }
  *out << "# entbound evolve csv v1\n";
  *out << "tau,S1_nats,S2_nats";
  for (const auto& s : basis->sectors()) *out << ",p_nA" << s.n_a;
  *out << ",energy\n";

  std::vector<std::pair<double, double>> trace;
  for (double tau = 0.0; tau <= tau_max + 1e-12; tau += tau_step) {
    const auto psi = evolve(psi0, spectral, tau);
    const double s1 = entanglement_entropy(psi);
    const double s2 = renyi_entropy(psi, 2.0);
    const double energy =
        (psi.amplitudes.adjoint() * h.elements * psi.amplitudes)(0).real();
    trace.emplace_back(tau, s1);
    *out << format_number(tau) << ',' << format_number(s1) << ',' << format_number(s2);
    for (const auto& [na, p] : number_distribution(psi).probabilities)
      *out << ',' << format_number(p);
    *out << ',' << format_number(energy) << '\n';
  }

  if (!svg_path.empty()) {
    auto svg = open_out(svg_path);
    render_trace_svg(trace, bound, svg);
  }
  return 0;
}

// Compact built-in verification pass over the main cross-checks; the full
// suite lives in the test binaries.
int cmd_selftest() {
  int failures = 0;
  auto check = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
    if (!ok) ++failures;
  };

  check("Fig.2 closed bound = ln 5",
        std::abs(closed_system_bound({6, 3, 2, Statistics::Fermionic}) - std::log(5.0)) <
            1e-12);
  check("Fig.2 general bound = ln 7",
        std::abs(general_bound({6, 3, 2, Statistics::Fermionic}) - std::log(7.0)) < 1e-12);

  {
    bool ok = true;
    const double expected[] = {0.7, 1.4, 2.1, 2.8, 3.5, 2.8, 2.1, 1.4, 0.7};
    for (int M = 1; M <= 9; ++M) {
      const double b = closed_system_bound({10, M, 5, Statistics::Fermionic});
      ok = ok && std::abs(std::round(b * 10.0) / 10.0 - expected[M - 1]) < 0.05;
    }
    check("fermionic L=10 n=5 bound vector", ok);
  }

  {
    auto psi = max_entangled_state(build_basis(8, 4, 3));
    check("max-ent state saturates ln 10",
          std::abs(entanglement_entropy(psi) - std::log(10.0)) < 1e-10);
    check("max-ent number distribution consistent",
          max_entanglement_test(psi, 1e-10) == MaxEntVerdict::Possible);
  }

  {
    auto basis = build_basis(6, 3, 2);
    auto spectral = diagonalize(build_hamiltonian(basis, HamiltonianParams::nonintegrable()));
    auto psi = random_pure_thermal_state(spectral, {0.01, 1});
    bool ok = std::abs(psi.norm() - 1.0) < 1e-12;
    auto evolved = evolve(psi, spectral, 3.7);
    ok = ok && std::abs(evolved.norm() - 1.0) < 1e-12;
    ok = ok && entanglement_entropy(evolved) <=
                   closed_system_bound({6, 3, 2, Statistics::Fermionic}) + 1e-9;
    check("RPTS norm, evolution norm, bound compliance", ok);
  }
  std::cout << (failures == 0 ? "selftest OK\n" : "selftest FAILED\n");
  return failures == 0 ? 0 : kExitRuntime;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entanglement entropy bounds for particle-number conserving systems"};
  app.require_subcommand(1);
  bool bits = false;
  app.add_flag("--bits", bits, "display entropies in bits instead of nats");

  const char* env_dir = std::getenv("ENTBOUND_OUTPUT_DIR");
  std::string default_dir = env_dir ? env_dir : "";

  int L = 6, M = 3;
  long n = 2;
  std::string stats_name = "fermionic", csv_path;
  auto* bound = app.add_subcommand("bound", "evaluate the closed-system and general bounds");
  bound->add_option("--L", L, "lattice sites")->required();
  bound->add_option("--M", M, "subsystem-A sites")->required();
  bound->add_option("--n", n, "total particles")->required();
  bound->add_option("--stats", stats_name, "fermionic|bosonic");
  bound->add_option("--csv", csv_path, "also write a CSV row to this path");

  std::string config_path, output_dir = default_dir;
  int jobs = 1;
  bool verbose = false, allow_large_l = false;
  long master_seed_override = -1;
  auto* sweep = app.add_subcommand("sweep", "saturation sweep over (L, beta, preset)");
  sweep->add_option("--config", config_path, "JSON experiment config")->required();
  sweep->add_option("--jobs", jobs, "worker threads");
  sweep->add_option("--output-dir", output_dir, "overrides the config output directory");
  sweep->add_option("--master-seed", master_seed_override, "overrides the config seed");
  sweep->add_flag("--allow-large-L", allow_large_l, "permit L > 11");
  sweep->add_flag("-v,--verbose", verbose, "per-point progress on stderr");

  std::string state_out;
  auto* maxstate =
      app.add_subcommand("maxstate", "construct and verify the maximally entangled state");
  maxstate->add_option("--L", L, "lattice sites")->required();
  maxstate->add_option("--M", M, "subsystem-A sites")->required();
  maxstate->add_option("--n", n, "total particles")->required();
  maxstate->add_option("--out", state_out, "state dump path (default stdout)");

  std::string preset = "nonintegrable", evolve_csv, evolve_svg;
  double beta = 0.01, tau_max = 10.0, tau_step = 0.1;
  std::uint64_t seed = 1;
  auto* evolve_cmd = app.add_subcommand("evolve", "time-evolution trace of S_ent");
  evolve_cmd->add_option("--L", L, "lattice sites")->required();
  evolve_cmd->add_option("--M", M, "subsystem-A sites")->required();
  evolve_cmd->add_option("--n", n, "total particles")->required();
  evolve_cmd->add_option("--preset", preset, "nonintegrable|nn_hopping_only|interaction_only");
  evolve_cmd->add_option("--beta", beta, "inverse temperature");
  evolve_cmd->add_option("--seed", seed, "RPTS seed");
  evolve_cmd->add_option("--tau-max", tau_max, "end of the tau grid");
  evolve_cmd->add_option("--tau-step", tau_step, "tau grid spacing");
  evolve_cmd->add_option("--csv", evolve_csv, "trace CSV path (default stdout)");
  evolve_cmd->add_option("--svg", evolve_svg, "optional trace SVG path");

  auto* selftest = app.add_subcommand("selftest", "run the built-in oracle checks");

  try {
    app.parse(argc, argv);
    if (bound->parsed()) return cmd_bound(L, M, n, stats_name, bits, csv_path);
    if (sweep->parsed())
      return cmd_sweep(config_path, jobs, verbose, output_dir, master_seed_override,
                       allow_large_l);
    if (maxstate->parsed()) return cmd_maxstate(L, M, n, bits, state_out);
    if (evolve_cmd->parsed())
      return cmd_evolve(L, M, n, preset, beta, seed, tau_max, tau_step, evolve_csv,
                        evolve_svg);
    if (selftest->parsed()) return cmd_selftest();
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return 0;
}
