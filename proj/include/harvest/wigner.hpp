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


#ifndef HARVEST_WIGNER_HPP_
#define HARVEST_WIGNER_HPP_

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "harvest/detector_state.hpp"
#include "harvest/hw_operators.hpp"
#include "harvest/kernels.hpp"

namespace harvest {

/// Discrete Wigner function of one qutrit. values[3 x + y] = Tr(rho A^(x,y)) / 3.
template <typename Scalar = double>
struct WignerProfile {
  std::array<Scalar, 9> values{};
  Scalar negativity = Scalar(0);   ///< sum of |value| over violated facets
  std::vector<int> violated_facets;  ///< indices 3 x + y
  /// log(2 N + 1), the mana of the state.
  Scalar mana() const { return std::log(Scalar(2) * negativity + Scalar(1)); }
};

/// A facet counts as violated when its value is below -1e-12 max(1, lambda^2).
inline double facet_threshold(double lambda = 0.0) {
  return 1e-12 * std::max(1.0, lambda * lambda);
}

template <typename Scalar = double>
WignerProfile<Scalar> wigner_profile(const CMatrix<Scalar> &rho, double lambda = 0.0) {
  if (rho.rows() != 3 || rho.cols() != 3) {
    throw contract_violation("wigner_profile: expected a 3x3 state");
  }
  WignerProfile<Scalar> out;
  const Scalar threshold = Scalar(facet_threshold(lambda));
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      const CMatrix<Scalar> a = phase_point_operator<Scalar>(x, y);
      const Scalar v = (a.transpose().cwiseProduct(rho)).sum().real() / Scalar(3);
      out.values[3 * x + y] = v;
      if (v < -threshold) {
        out.negativity += -v;
        out.violated_facets.push_back(3 * x + y);
      }
    }
  }
  return out;
}

inline WignerProfile<double> wigner_profile(const ReducedState &rho, double lambda = 0.0) {
  return wigner_profile<double>(rho.rho, lambda);
}

/// Slacks of the three closed-form conditions on the reduced state:
/// L + 2 Re X, L - Re X + sqrt3 Im X, L - Re X - sqrt3 Im X, with X = Q
/// for SU2 and X = V for HW. For the HW reduced state each slack is three
/// times a facet value, so violation is judged on that scale: slack / 3
/// below -facet_threshold(lambda).
struct InequalityReport {
  std::array<double, 3> slack{};
  std::array<bool, 3> violated{};
  bool any() const { return violated[0] || violated[1] || violated[2]; }
};

InequalityReport reduced_inequalities(const KernelSet &k, Dynamics dynamics, double lambda = 0.0);

}  // namespace harvest

#endif  // HARVEST_WIGNER_HPP_
