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


#include "harvest/detector_state.hpp"

#include <cmath>

#include "harvest/error.hpp"

namespace harvest {

namespace {

void check_kernels(const KernelSet &k) {
  const bool finite = std::isfinite(k.L) && std::isfinite(k.Lab) &&
                      std::isfinite(k.Q.real()) && std::isfinite(k.Q.imag()) &&
                      std::isfinite(k.Mab.real()) && std::isfinite(k.Mab.imag()) &&
                      std::isfinite(k.V.real()) && std::isfinite(k.V.imag());
  if (!finite) throw contract_violation("assemble_state: non-finite kernel value");
  if (k.L < 0.0) throw contract_violation("assemble_state: negative L");
}

ComplexMatrix su2_state(const KernelSet &k) {
  ComplexMatrix r = ComplexMatrix::Zero(9, 9);
  r(0, 0) = 1.0 - 2.0 * k.L;
  r(1, 1) = k.L;
  r(3, 3) = k.L;
  r(1, 3) = k.Lab;
  r(3, 1) = k.Lab;
  r(0, 2) = std::conj(k.Q);
  r(0, 6) = std::conj(k.Q);
  r(0, 4) = std::conj(k.Mab);
  r(2, 0) = k.Q;
  r(6, 0) = k.Q;
  r(4, 0) = k.Mab;
  return r;
}

ComplexMatrix hw_state(const KernelSet &k) {
  ComplexMatrix r = ComplexMatrix::Zero(9, 9);
  r(0, 0) = 1.0 - 4.0 * k.L;
  // One excitation on a (|10>, |20>) or on b (|01>, |02>).
  constexpr int single_b[] = {1, 2};
  constexpr int single_a[] = {3, 6};
  constexpr int both[] = {4, 5, 7, 8};
  for (int i : single_b) {
    r(0, i) = std::conj(k.V);
    r(i, 0) = k.V;
  }
  for (int i : single_a) {
    r(0, i) = std::conj(k.V);
    r(i, 0) = k.V;
  }
  for (int i : both) {
    r(0, i) = std::conj(k.Mab);
    r(i, 0) = k.Mab;
  }
  for (int i : single_b) {
    for (int j : single_b) r(i, j) = k.L;
    for (int j : single_a) {
      r(i, j) = k.Lab;
      r(j, i) = k.Lab;
    }
  }
  for (int i : single_a)
    for (int j : single_a) r(i, j) = k.L;
  return r;
}

}  // namespace

DetectorState assemble_state(const DetectorConfig &cfg, const KernelSet &k) {
  cfg.validate();
  check_kernels(k);
  DetectorState s;
  s.dynamics = cfg.dynamics;
  s.config = cfg;
  s.kernels = k;
  s.rho = cfg.dynamics == Dynamics::SU2 ? su2_state(k) : hw_state(k);
  return s;
}

ReducedState reduce(const ComplexMatrix &rho9, Subsystem which) {
  if (rho9.rows() != 9 || rho9.cols() != 9) {
    throw contract_violation("reduce: expected a 9x9 matrix");
  }
  ReducedState out;
  out.which = which;
  out.rho = ComplexMatrix::Zero(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int m = 0; m < 3; ++m) {
        out.rho(i, j) += which == Subsystem::A ? rho9(3 * i + m, 3 * j + m)
                                               : rho9(3 * m + i, 3 * m + j);
      }
  return out;
}

ReducedState reduce(const DetectorState &state, Subsystem which) {
  return reduce(state.rho, which);
}

ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b) {
  return detail::kron<double>(a, b);
}

double min_spacelike_distance(double rtilde) {
  return 2.0 * rtilde + 5.0 / std::sqrt(2.0);
}

bool spacelike_ok(const DetectorConfig &cfg) {
  return cfg.dtilde >= min_spacelike_distance(cfg.rtilde);
}

}  // namespace harvest
