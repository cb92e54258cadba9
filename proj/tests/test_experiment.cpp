#include <doctest.h>

#include <sstream>

#include "entbound/experiment.hpp"
#include "entbound/svg_plot.hpp"

using namespace entbound;

TEST_CASE("preset resolution") {
  auto p = resolve_preset("nonintegrable");
  CHECK(p.t == 1.9);
  CHECK(p.t_prime == 1.9);
  CHECK(p.V == 0.5);
  CHECK(p.V_prime == 0.5);
  CHECK(resolve_preset("nn_hopping_only").t_prime == 0.0);
  CHECK(resolve_preset("interaction_only").t == 0.0);
  CHECK_THROWS_AS(resolve_preset("bogus"), std::invalid_argument);
}

TEST_CASE("config parsing and validation") {
  const char* text = R"({
    "system": {"M": 3, "n": 2},
    "L_values": [6, 7],
    "betas": [0.01],
    "presets": ["nn_hopping_only"],
    "master_seed": 99,
    "maximizer": {"rpts_seeds": 2, "max_iterations": 500},
    "output": {"directory": "/tmp/out", "formats": ["csv", "svg"]}
  })";
  auto c = config_from_json_text(text);
  CHECK(c.M == 3);
  CHECK(c.n == 2);
  CHECK(c.L_values == std::vector<int>{6, 7});
  CHECK(c.master_seed == 99);
  CHECK(c.maximizer.rpts_seeds == 2);
  CHECK(c.output_dir == "/tmp/out");
  CHECK(c.csv);
  CHECK(c.svg);
  CHECK(!c.json);

  CHECK_THROWS(config_from_json_text(R"({"L_values": [6], "betas": []})"));
  CHECK_THROWS(config_from_json_text(R"({"L_values": [], "betas": [0.01]})"));
  CHECK_THROWS(config_from_json_text(
      R"({"L_values": [12], "betas": [0.01]})"));  // needs allow_large_L
  CHECK_NOTHROW(config_from_json_text(
      R"({"system": {"M":4,"n":3}, "L_values": [12], "betas": [0.01], "allow_large_L": true,
          "maximizer": {"max_iterations": 10}})"));
}

TEST_CASE("sweep runs, reports errors per point, and is byte-reproducible") {
  ExperimentConfig config;
  config.M = 3;
  config.n = 2;
  config.L_values = {6, 7};
  config.betas = {0.01};
  config.presets = {"nn_hopping_only"};
  config.master_seed = 4;
  config.maximizer.rpts_seeds = 2;
  config.maximizer.restarts_per_seed = 1;
  config.maximizer.max_restarts = 2;
  config.maximizer.max_iterations = 1500;

  auto rows = run_sweep(config, 2);
  REQUIRE(rows.size() == 2);
  for (const auto& r : rows) {
    CHECK(r.error.empty());
    CHECK(r.mean_max_entropy_nats <= r.bound_nats + 1e-9);
    CHECK(r.mean_max_entropy_nats > 0.5);
    CHECK(r.seeds == 2);
  }
  CHECK(rows[0].L == 6);
  CHECK(rows[1].L == 7);

  std::ostringstream a, b;
  write_sweep_csv(rows, a);
  write_sweep_csv(run_sweep(config, 1), b);
  CHECK(a.str() == b.str());
  CHECK(a.str().starts_with("# entbound sweep csv v1\n"));
  CHECK(a.str().find("mean_nA_at_max") != std::string::npos);
}

TEST_CASE("sweep svg renders from rows alone") {
  SweepRow row;
  row.L = 8;
  row.M = 4;
  row.n = 3;
  row.beta = 0.01;
  row.preset = "nonintegrable";
  row.boundary = "open";
  row.mean_max_entropy_nats = 2.29;
  row.std_dev = 0.01;
  row.bound_nats = 2.302;
  SweepRow row2 = row;
  row2.L = 9;
  row2.bound_nats = 2.398;

  std::ostringstream out;
  render_sweep_svg({row, row2}, out);
  const auto svg = out.str();
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("stroke-dasharray") != std::string::npos);
  CHECK(svg.find("beta=0.01") != std::string::npos);
}

TEST_CASE("json output includes every column") {
  SweepRow row;
  row.L = 6;
  row.preset = "nonintegrable";
  row.boundary = "open";
  std::ostringstream out;
  write_sweep_json({row}, out);
  for (const char* key : {"mean_max_entropy_nats", "std_dev", "bound_nats",
                          "mean_nA_at_max", "seeds", "error"})
    CHECK(out.str().find(key) != std::string::npos);
}
