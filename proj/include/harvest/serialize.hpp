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


#ifndef HARVEST_SERIALIZE_HPP_
#define HARVEST_SERIALIZE_HPP_

#include <json.hpp>
#include <optional>

#include "harvest/contextuality.hpp"
#include "harvest/detector_state.hpp"
#include "harvest/harness.hpp"
#include "harvest/kernels.hpp"
#include "harvest/wigner.hpp"

namespace harvest {

using json = nlohmann::json;

inline constexpr const char *kStateSchema = "qutrit-harvest/state/v1";

json to_json(const DetectorConfig &cfg);
json to_json(const KernelSet &k);
/// Complex entries as [re, im] pairs, row-major, plus a provenance block
/// holding the config, kernels, dynamics and (when given) the seed.
json to_json(const DetectorState &s, std::optional<long long> seed = std::nullopt);
json to_json(const CFResult &r, double clamp_report);
json to_json(const WignerProfile<double> &w);
json to_json(const InequalityReport &r);
json to_json(const ScalingReport &r);
json to_json(const DynamicsComparison &r);
json to_json(const SweepRow &r);

/// Inverse of to_json(DetectorConfig); missing keys keep their defaults.
DetectorConfig config_from_json(const json &j);
KernelSet kernels_from_json(const json &j);
/// Reads a state document. Throws contract_violation on a schema mismatch
/// or a matrix that is not 9x9.
DetectorState state_from_json(const json &j);

}  // namespace harvest

#endif  // HARVEST_SERIALIZE_HPP_
