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

#ifndef OCTOLCT_FIELD_HPP
#define OCTOLCT_FIELD_HPP

#include <complex>
#include <vector>

#include "octolct/grid.hpp"
#include "octolct/octonion.hpp"

namespace octolct {

// Samples of a real signal over a centered 3D lattice, axis 3 fastest.
struct RealField3D {
  Grid3 grid;
  std::vector<double> v;

  RealField3D() = default;
  explicit RealField3D(const Grid3& g) : grid(g), v(g.count(), 0.0) {}

  double& at(int i1, int i2, int i3) { return v[grid.index(i1, i2, i3)]; }
  double at(int i1, int i2, int i3) const { return v[grid.index(i1, i2, i3)]; }
};

struct ComplexField3D {
  Grid3 grid;
  std::vector<std::complex<double>> v;

  ComplexField3D() = default;
  explicit ComplexField3D(const Grid3& g) : grid(g), v(g.count()) {}

  std::complex<double>& at(int i1, int i2, int i3) { return v[grid.index(i1, i2, i3)]; }
  const std::complex<double>& at(int i1, int i2, int i3) const {
    return v[grid.index(i1, i2, i3)];
  }
};

struct OctonionField3D {
  Grid3 grid;
  std::vector<Octonion> v;

  OctonionField3D() = default;
  explicit OctonionField3D(const Grid3& g) : grid(g), v(g.count()) {}

  Octonion& at(int i1, int i2, int i3) { return v[grid.index(i1, i2, i3)]; }
  const Octonion& at(int i1, int i2, int i3) const { return v[grid.index(i1, i2, i3)]; }
};

OctonionField3D embed_real(const RealField3D& f);
OctonionField3D embed_complex(const ComplexField3D& f, int imag_unit);
RealField3D real_part(const OctonionField3D& f);

// L2 mass on the seven imaginary planes relative to the whole field.
double imag_residual(const OctonionField3D& f);

// Relative L2 distance, denominated by the second argument.
double rel_l2_diff(const OctonionField3D& a, const OctonionField3D& b);
double rel_l2_diff(const RealField3D& a, const RealField3D& b);
double rel_l2_diff(const std::vector<std::complex<double>>& a,
                   const std::vector<std::complex<double>>& b);

}  // namespace octolct

#endif  // OCTOLCT_FIELD_HPP
