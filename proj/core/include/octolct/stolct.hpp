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

#ifndef OCTOLCT_STOLCT_HPP
#define OCTOLCT_STOLCT_HPP

#include <array>
#include <vector>

#include "octolct/olct3d.hpp"

namespace octolct {

// Real window sampled on the signal lattice. Shifts are whole lattice steps,
// values off the lattice read as zero.
struct Window3D {
  RealField3D samples;

  Window3D() = default;
  explicit Window3D(RealField3D s);

  double norm_sq_weighted() const;  // sum of squares times the cell volume
};

// Translation lattice: a centered, stride-thinned subset of the signal
// lattice whose shifts are whole index offsets on every axis.
Grid3 make_ugrid(const Grid3& xgrid, int stride);

// Index offsets of one translation; throws ShapeError when u is not a whole
// number of steps.
std::array<int, 3> shift_indices(const Grid3& xgrid, const Grid3& ugrid, int u1, int u2, int u3);

// Windowed slice f(x) * phi(x - u) for the translation with indices (u1,u2,u3).
RealField3D windowed_slice(const RealField3D& f, const Window3D& window, const Grid3& ugrid,
                           int u1, int u2, int u3);

// Octonion samples over the joint (w, u) lattice; each translation owns one
// contiguous spectrum slab: index = u_lin * wcount + w_lin.
struct Spectrogram {
  Grid3 wgrid;
  Grid3 ugrid;
  std::vector<Octonion> v;

  Spectrogram() = default;
  Spectrogram(const Grid3& w, const Grid3& u) : wgrid(w), ugrid(u), v(w.count() * u.count()) {}

  std::size_t slab(std::size_t u_lin) const { return u_lin * wgrid.count(); }
  double cell_volume() const { return wgrid.cell_volume() * ugrid.cell_volume(); }
};

struct SpectrogramReal {
  Grid3 wgrid;
  Grid3 ugrid;
  std::vector<double> v;

  SpectrogramReal() = default;
  SpectrogramReal(const Grid3& w, const Grid3& u) : wgrid(w), ugrid(u), v(w.count() * u.count()) {}
};

struct SpectrogramComplex {
  Grid3 wgrid;
  Grid3 ugrid;
  std::vector<std::complex<double>> v;

  SpectrogramComplex() = default;
  SpectrogramComplex(const Grid3& w, const Grid3& u)
      : wgrid(w), ugrid(u), v(w.count() * u.count()) {}
};

// Literal windowed transform: the plain Riemann-sum transform of every
// windowed slice. The small-grid reference route.
Spectrogram stolct_forward(const RealField3D& f, const Window3D& window, const Grid3& wgrid,
                           const Grid3& ugrid, const LCTTriple& p);

// Same quantity computed by handing each windowed slice to the separable
// transform; with Path::kFast this is the production route.
Spectrogram stolct_via_olct(const RealField3D& f, const Window3D& window, const Grid3& wgrid,
                            const Grid3& ugrid, const LCTTriple& p, Path path);

// Inversion: per-translation inverse transform, window-correlated and summed
// over the translation lattice, normalized by the window energy. The result
// keeps its imaginary planes so callers can inspect the residual.
OctonionField3D stolct_reconstruct(const Spectrogram& G, const Window3D& window,
                                   const Grid3& xgrid, const LCTTriple& p, Path path);

// Per-slice basis coefficient spectrograms: slot k holds the cos/sin pattern
// integral of each windowed slice, as in olct_parity_components.
std::array<SpectrogramReal, 8> stolct_parity_components(const RealField3D& f,
                                                        const Window3D& window,
                                                        const Grid3& wgrid, const Grid3& ugrid,
                                                        const LCTTriple& p);

Spectrogram assemble_from_parity(const std::array<SpectrogramReal, 8>& comps);

// Complex windowed transform with all kernel factors on one imaginary axis.
SpectrogramComplex stlct3d(const RealField3D& f, const Window3D& window, const Grid3& wgrid,
                           const Grid3& ugrid, const LCTTriple& p, Path path);

// Octonion spectrogram rebuilt from four complex spectrograms (b,c sign flips
// on axes 2 and 3), with the same corrected brace orientation as
// olct_from_lct3d.
Spectrogram stolct_from_stlct3d(const RealField3D& f, const Window3D& window, const Grid3& wgrid,
                                const Grid3& ugrid, const LCTTriple& p, Path path);

// Two-axis windowed transform with quaternion values on (1, mu1, mu2, mu3).
// Degenerate configuration of the 3-axis machinery; the third axis of the
// inputs must be a single sample.
struct Spectrogram2D {
  Grid3 wgrid;
  Grid3 ugrid;
  std::vector<Quaternion> v;
};

Spectrogram2D qstlct_2d(const RealField3D& f, const Window3D& window, const Grid3& wgrid,
                        const Grid3& ugrid, const LCTParams& p1, const LCTParams& p2);

}  // namespace octolct

#endif  // OCTOLCT_STOLCT_HPP
