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


#include <doctest.h>

#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "harvest/error.hpp"
#include "harvest/special_functions.hpp"

using cd = std::complex<double>;

TEST_CASE("faddeeva against the 40-digit oracle") {
  std::ifstream in(std::string(HARVEST_TEST_DATA) + "/faddeeva_oracle.csv");
  REQUIRE(in.good());
  std::string line;
  int rows = 0;
  double worst = 0.0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    double v[4];
    char comma;
    ss >> v[0] >> comma >> v[1] >> comma >> v[2] >> comma >> v[3];
    const cd z{v[0], v[1]}, ref{v[2], v[3]};
    const double rel = std::abs(harvest::faddeeva(z) - ref) / std::abs(ref);
    worst = std::max(worst, rel);
    CHECK_MESSAGE(rel <= 1e-12, "z = " << z);
    ++rows;
  }
  CHECK(rows == 1000);
  MESSAGE("worst relative error " << worst);
}

TEST_CASE("faddeeva special values") {
  CHECK(std::abs(harvest::faddeeva({0, 0}) - 1.0) < 1e-15);
  const cd wi = harvest::faddeeva({0, 1});
  CHECK(std::abs(wi.real() - 0.42758357615580700442) < 1e-15);
  CHECK(std::abs(wi.imag()) < 1e-15);
  // Purely imaginary arguments give the scaled complementary error function.
  for (double y : {0.1, 0.5, 2.0, 7.5, 20.0}) {
    const double ref = std::exp(y * y) * std::erfc(y);
    CHECK(std::abs(harvest::faddeeva({0, y}).real() - ref) <= 1e-13 * ref);
  }
}

TEST_CASE("faddeeva reflection symmetry") {
  double worst = 0.0;
  for (int i = 0; i < 40; ++i)
    for (int j = 0; j < 25; ++j) {
      const cd z{-10.0 + 0.5 * i + 0.013, -2.0 + 0.5 * j + 0.007};
      const cd a = harvest::faddeeva(-std::conj(z));
      const cd b = std::conj(harvest::faddeeva(z));
      worst = std::max(worst, std::abs(a - b) / std::abs(b));
    }
  CHECK(worst <= 1e-13);
}

TEST_CASE("faddeeva rejects non-finite input") {
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(harvest::faddeeva({inf, 0}), harvest::contract_violation);
  CHECK_THROWS_AS(harvest::faddeeva({0, std::nan("")}), harvest::contract_violation);
}

TEST_CASE("spherical Bessel functions") {
  using harvest::spherical_bessel_j0;
  using harvest::spherical_bessel_j1;
  CHECK(spherical_bessel_j0(0.0) == 1.0);
  CHECK(spherical_bessel_j1(0.0) == 0.0);
  CHECK(std::abs(spherical_bessel_j1(1e-6) / 1e-6 - 1.0 / 3.0) < 1e-9);
  CHECK(std::abs(spherical_bessel_j0(std::numbers::pi)) < 1e-13);
  // Independent reference: the standard library's spherical Bessel functions,
  // which lose accuracy at large arguments, so 1234.5 is checked against
  // 30-digit values below.
  for (double x : {1e-3, 0.05, 0.3, 0.49, 0.51, 1.0, 4.2, 37.0}) {
    const double j0 = std::sph_bessel(0, x);
    const double j1 = std::sph_bessel(1, x);
    CHECK(std::abs(spherical_bessel_j0(x) - j0) <= 1e-13 * std::max(std::abs(j0), 1e-3));
    CHECK(std::abs(spherical_bessel_j1(x) - j1) <= 1e-13 * std::max(std::abs(j1), 1e-3));
  }
  CHECK(std::abs(spherical_bessel_j0(1234.5) / 1.17776954656084585521e-4 - 1) <= 1e-13);
  CHECK(std::abs(spherical_bessel_j1(1234.5) / 8.01532093225660665778e-4 - 1) <= 1e-13);
}
