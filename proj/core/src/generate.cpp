// Copyright 2026 The octolct Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "octolct/generate.hpp"

#include <cmath>
#include <random>

#include "octolct/errors.hpp"

namespace octolct {

namespace {

template <typename Fn>
RealField3D fill(const Grid3& g, Fn&& fn) {
  RealField3D out(g);
  for (int i1 = 0; i1 < g.axis[0].n; ++i1) {
    const double x1 = g.axis[0].coord(i1);
    for (int i2 = 0; i2 < g.axis[1].n; ++i2) {
      const double x2 = g.axis[1].coord(i2);
      for (int i3 = 0; i3 < g.axis[2].n; ++i3) {
        out.v[g.index(i1, i2, i3)] = fn(x1, x2, g.axis[2].coord(i3));
      }
    }
  }
  return out;
}

}  // namespace

RealField3D make_gaussian(const Grid3& g, double sigma) {
  if (!(sigma > 0.0)) throw ParameterError("make_gaussian: sigma must be positive");
  const double inv = 1.0 / (2.0 * sigma * sigma);
  return fill(g, [inv](double x1, double x2, double x3) {
    return std::exp(-(x1 * x1 + x2 * x2 + x3 * x3) * inv);
  });
}

RealField3D make_chirped_gaussian(const Grid3& g, double sigma, double rate) {
  if (!(sigma > 0.0)) throw ParameterError("make_chirped_gaussian: sigma must be positive");
  const double inv = 1.0 / (2.0 * sigma * sigma);
  return fill(g, [inv, rate](double x1, double x2, double x3) {
    const double r2 = x1 * x1 + x2 * x2 + x3 * x3;
    return std::exp(-r2 * inv) * std::cos(rate * r2);
  });
}

RealField3D make_box(const Grid3& g, double half_width) {
  if (!(half_width > 0.0)) throw ParameterError("make_box: half_width must be positive");
  return fill(g, [half_width](double x1, double x2, double x3) {
    return (std::abs(x1) <= half_width && std::abs(x2) <= half_width &&
            std::abs(x3) <= half_width)
               ? 1.0
               : 0.0;
  });
}

RealField3D make_delta(const Grid3& g) {
  for (const Grid1D& a : g.axis) {
    if (a.n % 2 == 0) throw ParameterError("make_delta: sample counts must be odd");
  }
  RealField3D out(g);
  out.at(g.axis[0].n / 2, g.axis[1].n / 2, g.axis[2].n / 2) = 1.0 / g.cell_volume();
  return out;
}

RealField3D make_random(const Grid3& g, std::uint64_t seed) {
  RealField3D out(g);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (double& x : out.v) x = dist(rng);
  return out;
}

}  // namespace octolct
