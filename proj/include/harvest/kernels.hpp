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

#ifndef HARVEST_KERNELS_HPP_
#define HARVEST_KERNELS_HPP_

#include <array>
#include <complex>
#include <cstddef>
#include <string>
#include <string_view>

namespace harvest {

/// Internal detector dynamics: SU(2) ladder coupling or Heisenberg-Weyl.
enum class Dynamics { SU2, HW };

std::string_view to_string(Dynamics d);
/// Accepts "SU2"/"su2" and "HW"/"hw"; throws contract_violation otherwise.
Dynamics parse_dynamics(std::string_view s);

/// Physical parameters in units of the switching time T.
struct DetectorConfig {
  double lambda = 1e-3;  ///< coupling constant
  double omega = 1.0;    ///< gap times duration, Omega T
  double rtilde = 0.1;   ///< smearing radius over duration, R / T
  double dtilde = 5.0;   ///< separation over duration, d / T
  Dynamics dynamics = Dynamics::SU2;

  /// Throws contract_violation unless lambda > 0, rtilde > 0, dtilde >= 0,
  /// omega >= 0 and all are finite.
  void validate() const;
};

/// The five second-order interaction integrals of one configuration.
struct KernelSet {
  double L = 0.0;    ///< local excitation probability
  double Lab = 0.0;  ///< cross Wightman term (real)
  std::complex<double> Q{};
  std::complex<double> Mab{};
  std::complex<double> V{};
  /// Absolute error estimates in the order L, Lab, Q, Mab, V.
  std::array<double, 5> error{};
};

struct QuadratureOptions {
  /// Target relative error per kernel. Cross kernels (Lab, Mab) are measured
  /// against max(|value|, 1e-3 * |local counterpart|).
  double rel_tol = 1e-10;
  std::size_t max_segments = 400000;
};

/// Evaluates L, L_ab, Q, M_ab and V for a configuration. V is computed for
/// both dynamics. Throws numeric_failure when a kernel misses its tolerance
/// within the segment budget.
KernelSet compute_kernels(const DetectorConfig &cfg, const QuadratureOptions &opts = {});

/// alpha = 9 lambda^2 / (4 pi rtilde^2).
double kernel_prefactor(const DetectorConfig &cfg);

}  // namespace harvest

#endif  // HARVEST_KERNELS_HPP_
