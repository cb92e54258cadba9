#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>

#include "entbound/combinatorics.hpp"
#include "entbound/entanglement.hpp"
#include "entbound/experiment.hpp"
#include "entbound/hamiltonian.hpp"
#include "entbound/maximizer.hpp"
#include "entbound/states.hpp"

namespace py = pybind11;
using namespace entbound;

namespace {

Statistics parse_statistics(const std::string& name) {
  if (name == "fermionic") return Statistics::Fermionic;
  if (name == "bosonic") return Statistics::Bosonic;
  throw std::invalid_argument("statistics must be 'fermionic' or 'bosonic'");
}

SystemSpec make_spec(int L, int M, long n, const std::string& statistics) {
  SystemSpec spec{L, M, n, parse_statistics(statistics)};
  spec.validate();
  return spec;
}

// StateVector plus the spectral data it was built against, so entropy,
// evolution, and distributions are methods rather than free functions.
struct PyState {
  StateVector state;
};

struct PyChain {
  HamiltonianParams params;
  SpectralData spectral;

  PyChain(int L, int M, long n, const HamiltonianParams& p)
      : params(p), spectral(diagonalize(build_hamiltonian(build_basis(L, M, n), p))) {}
};

HamiltonianParams params_from_args(const std::string& preset, std::optional<double> t,
                                   std::optional<double> t_prime, std::optional<double> V,
                                   std::optional<double> V_prime,
                                   const std::string& boundary) {
  HamiltonianParams p = preset.empty() ? HamiltonianParams{} : resolve_preset(preset);
  if (t) p.t = *t;
  if (t_prime) p.t_prime = *t_prime;
  if (V) p.V = *V;
  if (V_prime) p.V_prime = *V_prime;
  if (boundary == "periodic")
    p.boundary = Boundary::Periodic;
  else if (boundary != "open")
    throw std::invalid_argument("boundary must be 'open' or 'periodic'");
  return p;
}

py::dict distribution_dict(const NumberDistribution& d) {
  py::dict out;
  py::dict probs;
  for (auto [na, p] : d.probabilities) probs[py::int_(na)] = p;
  out["probabilities"] = probs;
  out["mean"] = d.mean;
  return out;
}

}  // namespace

PYBIND11_MODULE(_entbound, m) {
  m.doc() = "entanglement bounds and saturation dynamics for number-conserving systems";

  m.def(
      "closed_system_bound",
      [](int L, int M, long n, const std::string& statistics) {
        return closed_system_bound(make_spec(L, M, n, statistics));
      },
      py::arg("L"), py::arg("M"), py::arg("n"), py::arg("statistics") = "fermionic",
      "tight entropy bound ln sum_nA min{dim_A(nA), dim_B(n-nA)}, in nats");

  m.def(
      "general_bound",
      [](int L, int M, long n, const std::string& statistics) {
        return general_bound(make_spec(L, M, n, statistics));
      },
      py::arg("L"), py::arg("M"), py::arg("n"), py::arg("statistics") = "fermionic",
      "statistics-agnostic bound ln min{dim H_A, dim H_B}, in nats");

  m.def("flattening_threshold", &flattening_threshold, py::arg("M"), py::arg("n"),
        "smallest L beyond which the fermionic bound no longer depends on L");
  m.def("flattened_bound", &flattened_bound, py::arg("M"), py::arg("n"),
        "the L-independent value the fermionic bound flattens to");

  m.def(
      "max_ent_number_distribution",
      [](int L, int M, long n, const std::string& statistics) {
        const auto spec = make_spec(L, M, n, statistics);
        py::dict probs;
        for (auto [na, p] : max_ent_number_distribution(spec)) probs[py::int_(na)] = p;
        py::dict out;
        out["probabilities"] = probs;
        out["mean"] = mean_subsystem_particles(spec);
        return out;
      },
      py::arg("L"), py::arg("M"), py::arg("n"), py::arg("statistics") = "fermionic",
      "subsystem particle-number distribution of a bound-saturating state");

  py::class_<PyState>(m, "State")
      .def_property_readonly("L", [](const PyState& s) { return s.state.basis->L(); })
      .def_property_readonly("M", [](const PyState& s) { return s.state.basis->M(); })
      .def_property_readonly("n", [](const PyState& s) { return s.state.basis->n(); })
      .def_property_readonly("dim", [](const PyState& s) { return s.state.basis->size(); })
      .def("entropy", [](const PyState& s) { return entanglement_entropy(s.state); },
           "von Neumann entanglement entropy of subsystem A, in nats")
      .def("renyi", [](const PyState& s, double alpha) { return renyi_entropy(s.state, alpha); },
           py::arg("alpha"))
      .def("number_distribution",
           [](const PyState& s) { return distribution_dict(number_distribution(s.state)); })
      .def("schmidt_spectrum",
           [](const PyState& s) { return sector_schmidt(s.state).all_eigenvalues(); },
           "eigenvalues of the reduced density matrix, all sectors pooled")
      .def("amplitudes",
           [](const PyState& s) {
             std::vector<std::complex<double>> out(s.state.amplitudes.data(),
                                                   s.state.amplitudes.data() +
                                                       s.state.amplitudes.size());
             return out;
           })
      .def("basis_states",
           [](const PyState& s) {
             std::vector<std::uint32_t> out;
             for (std::size_t i = 0; i < s.state.basis->size(); ++i)
               out.push_back(s.state.basis->state(i));
             return out;
           },
           "occupation bitmasks in amplitude order (site i is bit i-1)");

  m.def(
      "max_entangled_state",
      [](int L, int M, long n) { return PyState{max_entangled_state(build_basis(L, M, n))}; },
      py::arg("L"), py::arg("M"), py::arg("n"),
      "explicit pure state attaining the closed-system bound");

  py::class_<PyChain>(m, "Chain")
      .def(py::init([](int L, int M, long n, const std::string& preset,
                       std::optional<double> t, std::optional<double> t_prime,
                       std::optional<double> V, std::optional<double> V_prime,
                       const std::string& boundary) {
             return PyChain(L, M, n,
                            params_from_args(preset, t, t_prime, V, V_prime, boundary));
           }),
           py::arg("L"), py::arg("M"), py::arg("n"), py::arg("preset") = "nonintegrable",
           py::arg("t") = std::nullopt, py::arg("t_prime") = std::nullopt,
           py::arg("V") = std::nullopt, py::arg("V_prime") = std::nullopt,
           py::arg("boundary") = "open",
           "diagonalized t-t'-V-V' spinless-fermion chain in one number sector")
      .def_property_readonly("L", [](const PyChain& c) { return c.spectral.basis->L(); })
      .def_property_readonly("dim", [](const PyChain& c) { return c.spectral.dim(); })
      .def_property_readonly("eigenvalues",
                             [](const PyChain& c) {
                               return std::vector<double>(
                                   c.spectral.eigenvalues.data(),
                                   c.spectral.eigenvalues.data() + c.spectral.eigenvalues.size());
                             })
      .def("bound",
           [](const PyChain& c) {
             return closed_system_bound({c.spectral.basis->L(), c.spectral.basis->M(),
                                         c.spectral.basis->n(), Statistics::Fermionic});
           })
      .def("thermal_state",
           [](const PyChain& c, double beta, std::uint64_t seed) {
             return PyState{random_pure_thermal_state(c.spectral, {beta, seed})};
           },
           py::arg("beta"), py::arg("seed"),
           "random pure thermal state with Gaussian coefficients weighted by exp(-beta E/2)")
      .def("evolve",
           [](const PyChain& c, const PyState& s, double tau) {
             return PyState{evolve(s.state, c.spectral, tau)};
           },
           py::arg("state"), py::arg("tau"))
      .def("maximize_entropy",
           [](const PyChain& c, double beta, int seeds, std::uint64_t master_seed,
              int max_iterations, double stall_margin) {
             MaximizationConfig config;
             config.rpts_seeds = seeds;
             config.master_seed = master_seed;
             config.max_iterations = max_iterations;
             config.stall_margin = stall_margin;
             const auto r = maximize_entropy(c.spectral, beta, config);
             py::dict out;
             out["per_seed_maxima"] = r.per_seed_maxima;
             out["mean"] = r.mean;
             out["std_dev"] = r.std_dev;
             out["mean_nA_at_maxima"] = r.mean_number_at_maxima;
             out["non_converged_restarts"] = r.non_converged_restarts;
             return out;
           },
           py::arg("beta"), py::arg("seeds") = 6, py::arg("master_seed") = 0,
           py::arg("max_iterations") = 20000, py::arg("stall_margin") = 0.02,
           "Nelder-Mead phase maximization of S_ent over dephased thermal states")
      .def("time_scan",
           [](const PyChain& c, double beta, std::uint64_t seed, double tau_max,
              double tau_step) {
             const auto r = time_scan(c.spectral, beta, seed, tau_max, tau_step);
             py::dict out;
             out["best_tau"] = r.best_tau;
             out["best_entropy"] = r.best_entropy;
             out["trace"] = r.trace;
             return out;
           },
           py::arg("beta"), py::arg("seed"), py::arg("tau_max") = 100.0,
           py::arg("tau_step") = 0.1);
}
