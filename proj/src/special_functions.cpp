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

#include "harvest/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "harvest/error.hpp"

namespace harvest {

namespace {

constexpr double kStep = 0.5;   // trapezoid spacing; discretisation error ~ exp(-pi^2/h^2)
constexpr int kNodes = 15;      // nodes per side; exp(-(15 h)^2) < 1e-24
constexpr int kFractionTerms = 24;

struct TrapezoidWeights {
  std::array<double, 2 * kNodes + 2> integer{};   // t = n h,      n = -kNodes..kNodes
  std::array<double, 2 * kNodes + 2> half{};      // t = (n + 1/2) h
};

const TrapezoidWeights &weights() {
  static const TrapezoidWeights w = [] {
    TrapezoidWeights out;
    for (int n = -kNodes; n <= kNodes; ++n) {
      const double t = n * kStep;
      out.integer[n + kNodes] = std::exp(-t * t);
    }
    for (int n = -kNodes - 1; n <= kNodes; ++n) {
      const double t = (n + 0.5) * kStep;
      out.half[n + kNodes + 1] = std::exp(-t * t);
    }
    return out;
  }();
  return w;
}

std::complex<double> continued_fraction(std::complex<double> z) {
  std::complex<double> t = z;
  for (int k = kFractionTerms; k >= 1; --k) t = z - (0.5 * k) / t;
  return std::complex<double>(0.0, 1.0 / std::sqrt(std::numbers::pi)) / t;
}

// Valid for Im z >= 0.
std::complex<double> trapezoid(std::complex<double> z) {
  using namespace std::complex_literals;
  const auto &w = weights();
  // Pick the grid whose nodes are farthest from Re z.
  const double frac = z.real() / kStep - std::floor(z.real() / kStep);
  const bool half_grid = frac < 0.25 || frac > 0.75;

  std::complex<double> sum = 0.0;
  if (half_grid) {
    for (int n = -kNodes - 1; n <= kNodes; ++n) {
      sum += w.half[n + kNodes + 1] / (z - (n + 0.5) * kStep);
    }
  } else {
    for (int n = -kNodes; n <= kNodes; ++n) {
      sum += w.integer[n + kNodes] / (z - n * kStep);
    }
  }
  std::complex<double> result = (1i * kStep / std::numbers::pi) * sum;

  // Residue of the pole at t = z; negligible once Im z > pi / h.
  if (z.imag() < std::numbers::pi / kStep) {
    const auto e = std::exp(-2i * std::numbers::pi * z / kStep);
    const auto g = 2.0 * std::exp(-z * z);
    result += half_grid ? g / (1.0 + e) : g / (1.0 - e);
  }
  return result;
}

std::complex<double> upper(std::complex<double> z) {
  if (std::abs(z) >= 8.0) return continued_fraction(z);
  return trapezoid(z);
}

}  // namespace

std::complex<double> faddeeva(std::complex<double> z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw contract_violation("faddeeva: non-finite argument");
  }
  if (z.imag() >= 0.0) return upper(z);
  return 2.0 * std::exp(-z * z) - upper(-z);
}

double spherical_bessel_j0(double x) {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0);
  }
  return std::sin(x) / x;
}

double spherical_bessel_j1(double x) {
  const double ax = std::abs(x);
  if (ax < 0.5) {
    // x/3 - x^3/30 + x^5/840 - x^7/45360 + x^9/3991680 - x^11/518918400
    const double x2 = x * x;
    return x / 3.0 *
           (1.0 - x2 / 10.0 *
                      (1.0 - x2 / 28.0 *
                                 (1.0 - x2 / 54.0 *
                                            (1.0 - x2 / 88.0 *
                                                       (1.0 - x2 / 130.0)))));
  }
  return std::sin(x) / (x * x) - std::cos(x) / x;
}

}  // namespace harvest
