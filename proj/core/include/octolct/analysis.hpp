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

#ifndef OCTOLCT_ANALYSIS_HPP
#define OCTOLCT_ANALYSIS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "octolct/stolct.hpp"

namespace octolct {

// One verified bound: the inequality is lhs <= rhs, margin = rhs - lhs.
// passed uses tol = 1e-9 * max(|lhs|, |rhs|, 1) so ties at equality count.
struct InequalityReport {
  std::string name;
  std::string fixture;
  double lhs = 0.0;
  double rhs = 0.0;
  double constant = 0.0;  // the bound's prefactor
  double margin = 0.0;
  bool passed = false;
};

InequalityReport make_report(std::string name, std::string fixture, double lhs, double rhs,
                             double constant);

// Cells of the joint (w,u) lattice holding at least 1-epsilon of the
// spectrogram energy; measure is |cells| times the joint cell volume.
struct ConcentrationRegion {
  std::vector<std::size_t> cells;
  double epsilon = 1.0;
  double measure = 0.0;
};

// Diagnostic record of the convolution identity experiment. The identity's
// right side is recorded, never asserted; only the two left-side routes are
// expected to agree.
struct ConvolutionReport {
  std::string fixture;
  double lhs_routes_rel_diff = 0.0;       // definition vs separable route
  double identity_rel_discrepancy = 0.0;  // |lhs - rhs|_2 / |lhs|_2
  double lhs_l2 = 0.0;
  double rhs_l2 = 0.0;
};

// Discrete quadrature norms, (sum |.|^p * cell_volume)^{1/p}; p = infinity
// gives the max magnitude.
double lp_norm(const RealField3D& f, double p);
double lp_norm(const OctonionField3D& f, double p);
double lp_norm(const Spectrogram& G, double p);

double inner_product(const RealField3D& f, const RealField3D& g);
Octonion inner_product(const OctonionField3D& f, const OctonionField3D& g);

// Zero-padded convolution truncated to the common lattice. Requires odd
// sample counts so differences of lattice points stay on the lattice.
RealField3D convolve(const RealField3D& f, const RealField3D& g);

// D = ln 2 + psi(1/2), the digamma-based lower-bound constant.
double log_uncertainty_constant();

// Greedy highest-energy cells until the captured fraction is reached.
ConcentrationRegion top_energy_region(const Spectrogram& G, double fraction);

InequalityReport check_sup_bound(const RealField3D& f, const Window3D& phi, const LCTTriple& A,
                                 double p, double q, int ustride, const std::string& fixture);

// The mixed-norm bound in its proof's reading: the u-direction p-norm of the
// windowed product magnitude, integrated over x, against ||f||_1 ||phi||_p.
InequalityReport check_minkowski(const RealField3D& f, const Window3D& phi, const LCTTriple& A,
                                 double p, int ustride, const std::string& fixture);

// Requires ||f||_2 == ||phi||_2 == 1. The region is the greedy top-energy set
// capturing energy_fraction of the spectrogram energy; epsilon is its deficit
// against the (unit) input energy.
InequalityReport check_concentration(const RealField3D& f, const Window3D& phi,
                                     const LCTTriple& A, double energy_fraction, int ustride,
                                     const std::string& fixture,
                                     ConcentrationRegion* region_out = nullptr);

// Interpolation-consistent constant ((2pi)^3 |b1 b2 b3|)^{1/q - 1/2}: the
// published prefactor contradicts the exact p=2 isometry, so the constant
// matching both endpoint bounds is used instead.
InequalityReport check_hausdorff_young(const RealField3D& f, const LCTTriple& A, double p,
                                       const std::string& fixture);

// E_{p,q} = (4/q)^{1/q} (4/p)^{1/p} as published; the prefactor in front of it
// is the interpolation-consistent one for the same reason as above. p = 2 is
// the supported default; other p record the interpretation in the fixture.
InequalityReport check_lieb(const RealField3D& f, const Window3D& phi, const LCTTriple& A,
                            double p, int ustride, const std::string& fixture);

// Log-weighted moment bound. An exact origin sample's ln|.| weight is the
// cell average of the log (Gauss-Legendre over the cell), or zero when
// skip_origin is set.
InequalityReport check_log_uncertainty(const RealField3D& f, const Window3D& phi,
                                       const LCTTriple& A, int ustride,
                                       const std::string& fixture, bool skip_origin = false);

ConvolutionReport check_convolution_theorem(const RealField3D& f, const RealField3D& g,
                                            const Window3D& phi, const Window3D& psi,
                                            const LCTTriple& A, int ustride,
                                            const std::string& fixture);

// Unit-determinant parameter triple with |b_k| in [0.5, 2]: a, b, c drawn,
// d = (1 + b c) / a.
LCTTriple random_triple(std::uint64_t seed);

struct BatteryOptions {
  int n = 9;
  double step = 0.75;
  int ustride = 1;
  std::uint64_t seed = 0x0c70;
  int triples = 5;
};

// Canonical fixture battery: {gaussian, chirped gaussian, box-window} fixtures
// under `triples` randomized parameter triples, every bound checked on each.
std::vector<InequalityReport> run_battery(const BatteryOptions& opts);

}  // namespace octolct

#endif  // OCTOLCT_ANALYSIS_HPP
