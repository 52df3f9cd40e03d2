// Copyright 2026 The qutrit-harvest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>

#include "harvest/config.hpp"
#include "harvest/error.hpp"
#include "harvest/harness.hpp"

using harvest::SweepSpec;

namespace {

SweepSpec small_spec() {
  SweepSpec s;
  s.axis = harvest::Axis::omega;
  s.grid = {0.5, 1.0, 1.5, 2.0};
  s.fixed.rtilde = 0.1;
  s.fixed.dtilde = 4.0;
  s.states = {harvest::StateVariant::joint, harvest::StateVariant::reduced_tensor_reduced,
              harvest::StateVariant::reduced_tensor_ground};
  s.dynamics = {harvest::Dynamics::SU2, harvest::Dynamics::HW};
  return s;
}

std::string csv(const SweepSpec &s, const harvest::CsvOptions &o = {}) {
  std::ostringstream os;
  harvest::write_csv(os, s, harvest::run_sweep(s), o);
  return os.str();
}

}  // namespace

TEST_CASE("enum names round trip") {
  for (auto a : {harvest::Axis::omega, harvest::Axis::dtilde, harvest::Axis::rtilde,
                 harvest::Axis::lambda})
    CHECK(harvest::parse_axis(harvest::to_string(a)) == a);
  for (auto p : {harvest::Parametrization::fixed_RT, harvest::Parametrization::fixed_ROmega})
    CHECK(harvest::parse_parametrization(harvest::to_string(p)) == p);
  CHECK_THROWS_AS(harvest::parse_axis("time"), harvest::contract_violation);
}

TEST_CASE("config parsing") {
  const auto spec = harvest::parse_sweep_config(R"(
[detector]
lambda = 1e-3
rtilde = 0.1
dtilde_offset = 2.0
dynamics = ["SU2", "HW"]

[sweep]
axis = "omega"
start = 0.0
stop = 2.0
points = 5
modes = ["cf"]
states = ["joint", "reduced_tensor_ground"]

[numerics]
rel_tol = 1e-9
workers = 3
)");
  CHECK(spec.grid == std::vector<double>{0.0, 0.5, 1.0, 1.5, 2.0});
  CHECK(spec.fixed.dtilde == doctest::Approx(0.2 + 5 / std::sqrt(2.0) + 2.0));
  CHECK(spec.dynamics.size() == 2);
  CHECK(spec.compute_cf);
  CHECK_FALSE(spec.compute_negativity);
  CHECK(spec.states.size() == 2);
  CHECK(spec.quadrature.rel_tol == 1e-9);
  CHECK(spec.workers == 3);

  const auto defaults = harvest::parse_sweep_config("[sweep]\naxis = \"omega\"\n");
  CHECK(defaults.grid == harvest::default_omega_grid());
  CHECK(defaults.grid.size() == 61);
  CHECK(defaults.grid.back() == doctest::Approx(6.0));
  CHECK(defaults.default_grid);
  CHECK_FALSE(spec.default_grid);
  std::ostringstream os;
  harvest::write_csv(os, defaults, {});
  CHECK(os.str().find("# grid=default omega 0:0.1:6 (artifact choice)\n") != std::string::npos);
}

TEST_CASE("config errors") {
  using harvest::contract_violation;
  using harvest::parse_sweep_config;
  CHECK_THROWS_AS(parse_sweep_config("[detector]\ncolour = 1\n"), contract_violation);
  CHECK_THROWS_AS(parse_sweep_config("[sweep]\ngrid = [1.0, 0.5]\n"), contract_violation);
  CHECK_THROWS_AS(parse_sweep_config("[sweep]\ngrid = []\n"), contract_violation);
  CHECK_THROWS_AS(parse_sweep_config("[detector]\nlambda = -1.0\n[sweep]\ngrid = [1.0]\n"),
                  contract_violation);
  CHECK_THROWS_AS(parse_sweep_config("[detector]\ndtilde = 5\ndtilde_offset = 1\n"),
                  contract_violation);
  CHECK_THROWS_AS(parse_sweep_config("[sweep]\nparametrization = \"fixed_ROmega\"\n"
                                     "grid = [0.0, 1.0]\n"),
                  contract_violation);
  CHECK_THROWS_AS(parse_sweep_config("[sweep\n"), contract_violation);
  CHECK_THROWS_AS(harvest::load_sweep_config("/nonexistent/sweep.toml"), contract_violation);
}

TEST_CASE("fixed_ROmega rescales the geometry") {
  SweepSpec s;
  s.parametrization = harvest::Parametrization::fixed_ROmega;
  s.fixed.rtilde = 0.2;
  s.fixed.dtilde = 8.0;
  s.grid = {0.5, 2.0};
  s.validate();
  const auto c = s.point(2.0, harvest::Dynamics::SU2);
  CHECK(c.omega == 2.0);
  CHECK(c.rtilde == doctest::Approx(0.1));
  CHECK(c.dtilde == doctest::Approx(4.0));
}

TEST_CASE("sweep rows and CSV determinism") {
  const auto spec = small_spec();
  const auto rows = harvest::run_sweep(spec);
  REQUIRE(rows.size() == 8);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].ok());
    CHECK(rows[i].grid_index == i / 2);
    CHECK(rows[i].config.dynamics == spec.dynamics[i % 2]);
    CHECK(rows[i].spacelike ==
          (rows[i].config.dtilde >= 2 * rows[i].config.rtilde + 5 / std::sqrt(2.0)));
    CHECK(std::isfinite(rows[i].cf_joint));
    CHECK(std::isfinite(rows[i].cf_product));
    CHECK(std::isfinite(rows[i].cf_ground));
  }
  const std::string a = csv(spec);
  auto serial = spec;
  serial.workers = 1;
  CHECK(csv(serial) == a);
  CHECK(a.rfind("# qutrit-harvest sweep schema v1\n", 0) == 0);
  std::istringstream lines(a);
  std::string line;
  int data = 0;
  std::string header;
  while (std::getline(lines, line)) {
    if (line[0] == '#') continue;
    if (header.empty()) {
      header = line;
      continue;
    }
    ++data;
  }
  CHECK(data == 8);
  CHECK(header.find("Q_re,Q_im") != std::string::npos);
  CHECK(header.find("seconds") == std::string::npos);
  harvest::CsvOptions timed;
  timed.timings = true;
  timed.seed = 7;
  const std::string t = csv(spec, timed);
  CHECK(t.find("kernel_seconds") != std::string::npos);
  CHECK(t.find("# seed=7") != std::string::npos);
}

TEST_CASE("worker count resolution") {
  ::unsetenv("HARVEST_WORKERS");
  CHECK(harvest::resolve_workers(3) == 3);
  CHECK(harvest::resolve_workers(0) >= 1);
  ::setenv("HARVEST_WORKERS", "2", 1);
  CHECK(harvest::resolve_workers(5) == 2);
  ::setenv("HARVEST_WORKERS", "many", 1);
  CHECK(harvest::resolve_workers(5) == 5);
  ::unsetenv("HARVEST_WORKERS");
}

TEST_CASE("widespread point failures abort the sweep") {
  auto spec = small_spec();
  spec.dynamics = {harvest::Dynamics::SU2};
  // No subdivision allowed and a tolerance below the rule's error floor.
  spec.quadrature.max_segments = 1;
  spec.quadrature.rel_tol = 1e-16;
  try {
    harvest::run_sweep(spec);
    FAIL("expected sweep_error");
  } catch (const harvest::sweep_error &e) {
    CHECK(e.rows().size() == spec.grid.size());
    for (const auto &r : e.rows()) CHECK_FALSE(r.ok());
  }
}

TEST_CASE("a single failing point is isolated") {
  SweepSpec spec;
  spec.axis = harvest::Axis::lambda;
  spec.fixed.rtilde = 0.1;
  spec.fixed.dtilde = 4.0;
  spec.compute_negativity = false;
  for (int i = 0; i < 10; ++i) spec.grid.push_back(1e-4 * (i + 1));
  // Far outside the perturbative regime the probabilities pick up
  // imaginary rounding residue beyond the 1e-12 check.
  spec.grid.push_back(1e4);
  const auto rows = harvest::run_sweep(spec);
  REQUIRE(rows.size() == 11);
  for (int i = 0; i < 10; ++i) CHECK(rows[i].ok());
  CHECK_FALSE(rows[10].ok());
  CHECK(std::isnan(rows[10].cf_joint));
}

TEST_CASE("scaling check") {
  harvest::DetectorConfig c;
  c.rtilde = 0.1;
  c.omega = 1.0;
  c.dtilde = 4.0;
  const auto r = harvest::scaling_check(c, {1e-4, 1e-3, 1e-2});
  CHECK(r.pass);
  CHECK_FALSE(r.zero_signal);
  CHECK(r.max_relative_deviation <= 0.01);
  CHECK_THROWS_AS(harvest::scaling_check(c, {0.05}), harvest::contract_violation);
  CHECK_THROWS_AS(harvest::scaling_check(c, {}), harvest::contract_violation);

  c.omega = 8.0;  // no harvesting at a large gap
  const auto zero = harvest::scaling_check(c, {1e-4, 1e-3, 1e-2});
  CHECK(zero.zero_signal);
  CHECK(zero.pass);
}

TEST_CASE("dynamics comparison needs both dynamics") {
  auto spec = small_spec();
  spec.states = {harvest::StateVariant::joint};
  const auto r = harvest::dynamics_comparison(spec);
  CHECK(r.cf_su2.size() == 4);
  CHECK(r.cf_hw.size() == 4);
  CHECK(r.fraction_hw_ge >= 0.0);
  CHECK(r.fraction_hw_ge <= 1.0);
  spec.dynamics = {harvest::Dynamics::HW};
  CHECK_THROWS_AS(harvest::dynamics_comparison(spec), harvest::contract_violation);
}
