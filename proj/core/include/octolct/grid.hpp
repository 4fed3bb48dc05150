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

#ifndef OCTOLCT_GRID_HPP
#define OCTOLCT_GRID_HPP

#include <array>
#include <cmath>
#include <cstddef>

#include "octolct/errors.hpp"

namespace octolct {

// Uniform 1D lattice centered at the origin: coord(i) = (i - (n-1)/2) * step.
// The centering makes every lattice reflection-closed (i <-> n-1-i), which the
// parity machinery relies on; odd n additionally has an origin sample.
struct Grid1D {
  int n = 0;
  double step = 0.0;

  Grid1D() = default;
  Grid1D(int n_, double step_) : n(n_), step(step_) { validate(); }

  void validate() const {
    if (n < 1) throw ShapeError("Grid1D: n must be >= 1");
    if (!(step > 0.0) || !std::isfinite(step)) {
      throw ShapeError("Grid1D: step must be positive and finite");
    }
  }

  double coord(int i) const { return (i - 0.5 * (n - 1)) * step; }
  double extent() const { return n * step; }

  // Lattice the chirp path maps onto: same n, spacing 2*pi*|b| / (n*step).
  Grid1D paired(double b) const { return Grid1D(n, 2.0 * M_PI * std::abs(b) / (n * step)); }

  bool same_as(const Grid1D& o, double rel_tol = 1e-12) const {
    return n == o.n && std::abs(step - o.step) <= rel_tol * std::max(step, o.step);
  }
};

// Axis-ordered triple of centered lattices. Linear index runs with axis 3
// fastest: idx = (i1*n2 + i2)*n3 + i3.
struct Grid3 {
  std::array<Grid1D, 3> axis;

  Grid3() = default;
  Grid3(const Grid1D& g1, const Grid1D& g2, const Grid1D& g3) : axis{g1, g2, g3} {}
  static Grid3 cubic(int n, double step) {
    Grid1D g(n, step);
    return Grid3(g, g, g);
  }

  std::size_t count() const {
    return static_cast<std::size_t>(axis[0].n) * static_cast<std::size_t>(axis[1].n) *
           static_cast<std::size_t>(axis[2].n);
  }
  double cell_volume() const { return axis[0].step * axis[1].step * axis[2].step; }
  std::size_t index(int i1, int i2, int i3) const {
    return (static_cast<std::size_t>(i1) * axis[1].n + static_cast<std::size_t>(i2)) * axis[2].n +
           static_cast<std::size_t>(i3);
  }
  std::array<double, 3> coord(int i1, int i2, int i3) const {
    return {axis[0].coord(i1), axis[1].coord(i2), axis[2].coord(i3)};
  }
  bool same_as(const Grid3& o) const {
    return axis[0].same_as(o.axis[0]) && axis[1].same_as(o.axis[1]) && axis[2].same_as(o.axis[2]);
  }
};

}  // namespace octolct

#endif  // OCTOLCT_GRID_HPP
