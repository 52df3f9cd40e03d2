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


#include "harvest/serialize.hpp"

#include <cmath>

#include "harvest/error.hpp"

namespace harvest {

namespace {

json complex_pair(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

std::complex<double> pair_complex(const json &j) {
  if (!j.is_array() || j.size() != 2) {
    throw contract_violation("expected a complex number as [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

// NaN and infinity are not representable in JSON; emit null instead.
json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

json to_json(const DetectorConfig &cfg) {
  return {{"lambda", cfg.lambda},
          {"omega", cfg.omega},
          {"rtilde", cfg.rtilde},
          {"dtilde", cfg.dtilde},
          {"dynamics", std::string(to_string(cfg.dynamics))}};
}

json to_json(const KernelSet &k) {
  return {{"L", k.L},
          {"Lab", k.Lab},
          {"Q", complex_pair(k.Q)},
          {"Mab", complex_pair(k.Mab)},
          {"V", complex_pair(k.V)},
          {"error", {{"L", k.error[0]},
                     {"Lab", k.error[1]},
                     {"Q", k.error[2]},
                     {"Mab", k.error[3]},
                     {"V", k.error[4]}}}};
}

json to_json(const DetectorState &s, std::optional<long long> seed) {
  json rho = json::array();
  for (Eigen::Index i = 0; i < s.rho.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < s.rho.cols(); ++j) row.push_back(complex_pair(s.rho(i, j)));
    rho.push_back(std::move(row));
  }
  json prov = {{"config", to_json(s.config)},
               {"kernels", to_json(s.kernels)},
               {"dynamics", std::string(to_string(s.dynamics))}};
  if (seed) prov["seed"] = *seed;
  return {{"schema", kStateSchema}, {"rho", std::move(rho)}, {"provenance", std::move(prov)}};
}

json to_json(const CFResult &r, double clamp_report) {
  return {{"cf", r.cf},
          {"lp_status", std::string(to_string(r.lp_status))},
          {"clamp_report", clamp_report}};
}

json to_json(const WignerProfile<double> &w) {
  return {{"values", w.values},
          {"negativity", w.negativity},
          {"mana", w.mana()},
          {"violated_facets", w.violated_facets}};
}

json to_json(const InequalityReport &r) {
  return {{"slack", r.slack}, {"violated", r.violated}};
}

json to_json(const ScalingReport &r) {
  return {{"lambdas", r.lambdas},
          {"cf_over_lambda2", r.cf_over_lambda2},
          {"max_relative_deviation", number(r.max_relative_deviation)},
          {"zero_signal", r.zero_signal},
          {"pass", r.pass}};
}

json to_json(const DynamicsComparison &r) {
  auto arr = [](const std::vector<double> &v) {
    json a = json::array();
    for (double x : v) a.push_back(number(x));
    return a;
  };
  return {{"axis_values", r.axis_values},
          {"cf_su2", arr(r.cf_su2)},
          {"cf_hw", arr(r.cf_hw)},
          {"negativity_su2", arr(r.negativity_su2)},
          {"negativity_hw", arr(r.negativity_hw)},
          {"fraction_hw_ge", r.fraction_hw_ge}};
}

json to_json(const SweepRow &r) {
  return {{"grid_index", r.grid_index},
          {"axis_value", r.axis_value},
          {"config", to_json(r.config)},
          {"kernels", to_json(r.kernels)},
          {"spacelike", r.spacelike},
          {"cf_joint", number(r.cf_joint)},
          {"cf_product", number(r.cf_product)},
          {"cf_ground", number(r.cf_ground)},
          {"lp_status", std::string(to_string(r.lp_status))},
          {"negativity", number(r.negativity)},
          {"mana", number(r.mana)},
          {"violated_facets", r.violated_facets},
          {"inequalities", to_json(r.inequalities)},
          {"clamp_report", r.clamp_report},
          {"error", r.error}};
}

DetectorConfig config_from_json(const json &j) {
  DetectorConfig c;
  c.lambda = j.value("lambda", c.lambda);
  c.omega = j.value("omega", c.omega);
  c.rtilde = j.value("rtilde", c.rtilde);
  c.dtilde = j.value("dtilde", c.dtilde);
  if (j.contains("dynamics")) c.dynamics = parse_dynamics(j["dynamics"].get<std::string>());
  return c;
}

KernelSet kernels_from_json(const json &j) {
  KernelSet k;
  k.L = j.at("L").get<double>();
  k.Lab = j.at("Lab").get<double>();
  k.Q = pair_complex(j.at("Q"));
  k.Mab = pair_complex(j.at("Mab"));
  k.V = pair_complex(j.at("V"));
  if (j.contains("error")) {
    const auto &e = j["error"];
    k.error = {e.value("L", 0.0), e.value("Lab", 0.0), e.value("Q", 0.0), e.value("Mab", 0.0),
               e.value("V", 0.0)};
  }
  return k;
}

DetectorState state_from_json(const json &j) {
  if (j.value("schema", std::string()) != kStateSchema) {
    throw contract_violation("state document: unsupported schema");
  }
  const json &rho = j.at("rho");
  if (!rho.is_array() || rho.size() != 9) throw contract_violation("state document: rho is not 9x9");
  DetectorState s;
  s.rho = ComplexMatrix::Zero(9, 9);
  for (int i = 0; i < 9; ++i) {
    if (!rho[i].is_array() || rho[i].size() != 9) {
      throw contract_violation("state document: rho is not 9x9");
    }
    for (int k = 0; k < 9; ++k) s.rho(i, k) = pair_complex(rho[i][k]);
  }
  if (j.contains("provenance")) {
    const json &p = j["provenance"];
    if (p.contains("config")) s.config = config_from_json(p["config"]);
    if (p.contains("kernels")) s.kernels = kernels_from_json(p["kernels"]);
    if (p.contains("dynamics")) s.dynamics = parse_dynamics(p["dynamics"].get<std::string>());
  }
  return s;
}

}  // namespace harvest
