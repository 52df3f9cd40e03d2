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


#ifndef HARVEST_DETECTOR_STATE_HPP_
#define HARVEST_DETECTOR_STATE_HPP_

#include "harvest/hw_operators.hpp"
#include "harvest/kernels.hpp"

namespace harvest {

/// Joint state of the two detectors to order lambda^2, in the basis
/// |00>, |01>, |02>, |10>, ..., |22> (detector a is the left factor).
struct DetectorState {
  ComplexMatrix rho;
  Dynamics dynamics = Dynamics::SU2;
  DetectorConfig config;
  KernelSet kernels;
};

enum class Subsystem { A, B };

/// Single-detector state obtained by a partial trace.
struct ReducedState {
  ComplexMatrix rho;
  Subsystem which = Subsystem::A;
};

/// Populates the perturbative density matrix for cfg.dynamics from k.
/// Entries not fixed by the dynamics are exactly zero. No positivity
/// projection is applied. Throws contract_violation for non-finite kernels
/// or a negative L.
DetectorState assemble_state(const DetectorConfig &cfg, const KernelSet &k);

/// Partial trace over the complementary detector.
ReducedState reduce(const DetectorState &state, Subsystem which);
ReducedState reduce(const ComplexMatrix &rho9, Subsystem which);

/// 9x9 matrix of a (x) b, with a the left factor.
ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b);

/// d >= 2 R + 5 / sqrt(2), all in units of T.
bool spacelike_ok(const DetectorConfig &cfg);
/// Smallest spacelike separation for a given radius.
double min_spacelike_distance(double rtilde);

}  // namespace harvest

#endif  // HARVEST_DETECTOR_STATE_HPP_
