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

#ifndef OCTOLCT_LCT1D_HPP
#define OCTOLCT_LCT1D_HPP

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "octolct/grid.hpp"
#include "octolct/octonion.hpp"

namespace octolct {

// Unimodular parameter matrix (a b; c d) of one transform axis. The kernel is
// defined only away from b == 0 (the b -> 0 limit degenerates to a scaled
// chirp multiplication, which this library does not model).
struct LCTParams {
  double a = 0.0;
  double b = 1.0;
  double c = -1.0;
  double d = 0.0;

  LCTParams() = default;
  LCTParams(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {
    validate();
  }

  void validate() const;

  // Fourier-like axis, a = d = 0.
  static LCTParams fourier() { return LCTParams(0.0, 1.0, -1.0, 0.0); }

  LCTParams inverse() const { return LCTParams(d, -b, -c, a); }
};

// Kernel phase (a x^2 - 2 x w + d w^2 - pi/2) / (2 b).
double kernel_phase(const LCTParams& p, double x, double w);

// Kernel modulus 1 / sqrt(2 pi |b|).
double kernel_scale(const LCTParams& p);

// Kernel value as an octonion in the plane spanned by (1, mu_axis).
Octonion kernel_eval(const LCTParams& p, double x, double w, int axis_unit);

enum class Path { kDirect, kFast };

// Riemann-sum transform of a complex line onto an arbitrary target lattice.
// The complex values are the coordinates of a planar octonion line in the
// (1, mu_axis) plane; the plane is closed under the transform.
std::vector<std::complex<double>> lct1d_direct(std::span<const std::complex<double>> f,
                                               const Grid1D& xgrid, const Grid1D& wgrid,
                                               const LCTParams& p);

// Chirp-multiply / FFT / chirp-multiply factorization of the same sum.
// Requires wgrid == xgrid.paired(b); on that lattice it equals lct1d_direct
// exactly (up to roundoff) and the forward/inverse pair is exactly unitary.
std::vector<std::complex<double>> lct1d_chirp_fft(std::span<const std::complex<double>> f,
                                                  const Grid1D& xgrid, const Grid1D& wgrid,
                                                  const LCTParams& p);

std::vector<std::complex<double>> lct1d(std::span<const std::complex<double>> f,
                                        const Grid1D& xgrid, const Grid1D& wgrid,
                                        const LCTParams& p, Path path);

// Transform with the inverse parameters (d, -b, -c, a) from wgrid back to
// xgrid; with Path::kFast this inverts lct1d(..., Path::kFast) to roundoff.
std::vector<std::complex<double>> lct1d_inverse(std::span<const std::complex<double>> F,
                                                const Grid1D& wgrid, const Grid1D& xgrid,
                                                const LCTParams& p, Path path);

// Component pairs (p, q) with mu_p * mu_axis == +mu_q. Right-multiplying an
// octonion by (c + s*mu_axis) rotates each pair like one complex value, so a
// planar-kernel transform of an octonion line is four independent complex
// transforms.
std::array<std::array<int, 2>, 4> axis_pairs(int axis_unit);

// Octonion line transformed against the planar kernel of axis_unit,
// multiplying from the right. Used per axis by the separable 3D paths.
std::vector<Octonion> lct1d_octonion(std::span<const Octonion> f, const Grid1D& xgrid,
                                     const Grid1D& wgrid, const LCTParams& p, int axis_unit,
                                     Path path);

// Reusable chirp-FFT engine for one (xgrid, wgrid, params) triple; apply() is
// safe to call concurrently from many threads.
class Chirp1D {
 public:
  Chirp1D(const Grid1D& xgrid, const Grid1D& wgrid, const LCTParams& p);

  void apply(const std::complex<double>* in, std::complex<double>* out) const;
  int size() const { return n_; }

 private:
  int n_ = 0;
  bool forward_sign_ = true;
  std::vector<std::complex<double>> pre_;
  std::vector<std::complex<double>> post_;
  void* plan_ = nullptr;  // cached fftw plan, owned by the process-wide cache
};

}  // namespace octolct

#endif  // OCTOLCT_LCT1D_HPP
