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


#include "harvest/wigner.hpp"

namespace harvest {

InequalityReport reduced_inequalities(const KernelSet &k, Dynamics dynamics, double lambda) {
  const std::complex<double> x = dynamics == Dynamics::SU2 ? k.Q : k.V;
  const double root3 = std::sqrt(3.0);
  InequalityReport out;
  out.slack = {k.L + 2.0 * x.real(), k.L - x.real() + root3 * x.imag(),
               k.L - x.real() - root3 * x.imag()};
  const double threshold = facet_threshold(lambda);
  for (int i = 0; i < 3; ++i) out.violated[i] = out.slack[i] / 3.0 < -threshold;
  return out;
}

}  // namespace harvest
