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


#ifndef HARVEST_CONFIG_HPP_
#define HARVEST_CONFIG_HPP_

#include <string>
#include <string_view>

#include "harvest/harness.hpp"

namespace harvest {

/// Builds a SweepSpec from a TOML document with [detector], [sweep] and
/// [numerics] tables. Unknown keys are rejected so typos surface.
///
///   [detector]  lambda, omega, rtilde, dtilde | dtilde_offset, dynamics
///   [sweep]     axis, grid | (start, stop, points), modes, states,
///               parametrization
///   [numerics]  rel_tol, max_segments, lp_tolerance, cf_zero_threshold,
///               workers
///
/// dtilde_offset places the detectors at 2 rtilde + 5/sqrt(2) + offset.
/// Without a grid, an omega sweep uses default_omega_grid().
/// Throws contract_violation on malformed input.
SweepSpec parse_sweep_config(std::string_view toml_text);
SweepSpec load_sweep_config(const std::string &path);

}  // namespace harvest

#endif  // HARVEST_CONFIG_HPP_
