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

#ifndef HARVEST_SPECIAL_FUNCTIONS_HPP_
#define HARVEST_SPECIAL_FUNCTIONS_HPP_

#include <complex>

namespace harvest {

/// Faddeeva function w(z) = exp(-z^2) erfc(-iz).
///
/// In the closed upper half-plane |z| >= 8 uses the Laplace continued
/// fraction; elsewhere an exponentially convergent trapezoidal rule for
/// (i/pi) int exp(-t^2) / (z - t) dt with the pole correction term. The grid
/// (integer or half-integer nodes) is chosen so Re z stays away from nodes.
/// The lower half-plane follows from w(z) = 2 exp(-z^2) - w(-z).
/// Relative accuracy is about 1e-14 away from the zeros of w in the lower
/// half-plane. Throws contract_violation on a non-finite argument.
std::complex<double> faddeeva(std::complex<double> z);

/// sin(x)/x with j0(0) = 1.
double spherical_bessel_j0(double x);

/// sin(x)/x^2 - cos(x)/x, series near zero; j1(0) = 0.
double spherical_bessel_j1(double x);

}  // namespace harvest

#endif  // HARVEST_SPECIAL_FUNCTIONS_HPP_
