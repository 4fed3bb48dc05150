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

#ifndef OCTOLCT_OLCT3D_HPP
#define OCTOLCT_OLCT3D_HPP

#include <array>

#include "octolct/field.hpp"
#include "octolct/lct1d.hpp"

namespace octolct {

using LCTTriple = std::array<LCTParams, 3>;

// Axis units of the three kernel factors, in application order.
inline constexpr std::array<int, 3> kAxisUnits = {1, 2, 4};

// Literal Riemann-sum transform: for every target point, accumulate
// f(x) * K1 * K2 * K3 with the octonion products taken strictly left to
// right. Quadratic cost; this is the trusted small-grid reference.
OctonionField3D olct_direct(const RealField3D& f, const Grid3& wgrid, const LCTTriple& p);

// Staged separable transform: one axis pass per kernel factor, multiplying
// from the right, in kernel order. Equal to olct_direct by distributivity.
// Accepts a full octonion field so the inverse can reuse it.
OctonionField3D olct_separable(const OctonionField3D& f, const Grid3& wgrid, const LCTTriple& p,
                               Path path);
OctonionField3D olct_separable(const RealField3D& f, const Grid3& wgrid, const LCTTriple& p,
                               Path path);

// Inverse transform: multiplies by the inverse-parameter kernels in reversed
// axis order (axis 3 first) and integrates over the spectrum lattice.
OctonionField3D olct_inverse(const OctonionField3D& F, const Grid3& xgrid, const LCTTriple& p,
                             Path path);

// Even/odd split per axis: component k is odd along axis a iff bit a of k is
// set, matching the basis slot its spectrum occupies. The components sum to f.
std::array<RealField3D, 8> parity_split(const RealField3D& f);

// The eight real coefficient fields of the transform on the basis
// (1, mu1, ..., mu7): slot k integrates f against the cos/sin profile
// selected by the bits of k on each axis, scaled per axis by the kernel
// modulus. Slot k is where the spectrum of the parity-k part of f lands
// when the kernel phase is an odd function of x; general parameters mix
// parities across slots.
std::array<RealField3D, 8> olct_parity_components(const RealField3D& f, const Grid3& wgrid,
                                                  const LCTTriple& p);

// Sum of component spectra times their basis units.
OctonionField3D assemble_from_parity(const std::array<RealField3D, 8>& comps);

// Complex-kernel transform with all three factors on the same imaginary axis.
ComplexField3D lct3d(const ComplexField3D& f, const Grid3& wgrid, const LCTTriple& p, Path path);
ComplexField3D lct3d(const RealField3D& f, const Grid3& wgrid, const LCTTriple& p, Path path);

// Octonion transform rebuilt from four complex transforms, flipping the sign
// of b and c on axes 2 and 3. The published form of this identity carries a
// sign defect in its mu5 brace; the assembly below is the orientation that
// actually reproduces olct_direct (the differences are taken flipped minus
// unflipped).
OctonionField3D olct_from_lct3d(const RealField3D& f, const Grid3& wgrid, const LCTTriple& p,
                                Path path);

// Pointwise step of that reassembly. zpp is the unflipped transform value,
// zpm flips axis 3, zmp flips axis 2, zmm flips both.
Octonion assemble_four(const std::complex<double>& zpp, const std::complex<double>& zpm,
                       const std::complex<double>& zmp, const std::complex<double>& zmm);

// Flips the sign of b and c, i.e. conjugates the kernel phase.
LCTParams flip_b(const LCTParams& p);

// Paired spectrum lattice of all three axes.
Grid3 paired_grid(const Grid3& xgrid, const LCTTriple& p);

}  // namespace octolct

#endif  // OCTOLCT_OLCT3D_HPP
