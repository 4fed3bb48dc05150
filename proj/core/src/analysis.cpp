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

#include "octolct/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>

#include "octolct/errors.hpp"
#include "octolct/generate.hpp"

namespace octolct {

namespace {

constexpr double kEulerGamma = 0.5772156649015328606;
constexpr double kConjTol = 1e-9;

double conjugate_exponent(double p) {
  if (std::isinf(p)) return 1.0;
  if (p == 1.0) return std::numeric_limits<double>::infinity();
  return p / (p - 1.0);
}

void require_conjugate(double p, double q, const char* where) {
  if (!(p >= 1.0) || !(q >= 1.0)) throw ParameterError(std::string(where) + ": exponents must be >= 1");
  const double ip = std::isinf(p) ? 0.0 : 1.0 / p;
  const double iq = std::isinf(q) ? 0.0 : 1.0 / q;
  if (std::abs(ip + iq - 1.0) > kConjTol) {
    throw ParameterError(std::string(where) + ": exponents must be conjugate");
  }
}

double abs_b_product(const LCTTriple& A) {
  return std::abs(A[0].b * A[1].b * A[2].b);
}

// 1 / (2 pi sqrt(2 pi |b1 b2 b3|)), the modulus of the triple kernel product.
double sup_prefactor(const LCTTriple& A) {
  return std::pow(2.0 * M_PI, -1.5) / std::sqrt(abs_b_product(A));
}

Spectrogram fast_spectrogram(const RealField3D& f, const Window3D& phi, const LCTTriple& A,
                             int ustride) {
  const Grid3 wgrid = paired_grid(f.grid, A);
  const Grid3 ugrid = make_ugrid(f.grid, ustride);
  return stolct_via_olct(f, phi, wgrid, ugrid, A, Path::kFast);
}

// 8-point Gauss-Legendre rule on [-1, 1].
constexpr int kGlCount = 8;
constexpr double kGlNode[kGlCount] = {-0.9602898564975363, -0.7966664774136267,
                                      -0.5255324099163290, -0.1834346424956498,
                                      0.1834346424956498,  0.5255324099163290,
                                      0.7966664774136267,  0.9602898564975363};
constexpr double kGlWeight[kGlCount] = {0.1012285362903763, 0.2223810344533745,
                                        0.3137066458778873, 0.3626837833783620,
                                        0.3626837833783620, 0.3137066458778873,
                                        0.2223810344533745, 0.1012285362903763};

// Cell average of ln|v| over the origin cell [-h1,h1]x[-h2,h2]x[-h3,h3].
double origin_cell_log_average(double h1, double h2, double h3) {
  double acc = 0.0;
  for (int i = 0; i < kGlCount; ++i) {
    const double v1 = kGlNode[i] * h1;
    for (int j = 0; j < kGlCount; ++j) {
      const double v2 = kGlNode[j] * h2;
      for (int k = 0; k < kGlCount; ++k) {
        const double v3 = kGlNode[k] * h3;
        acc += kGlWeight[i] * kGlWeight[j] * kGlWeight[k] *
               0.5 * std::log(v1 * v1 + v2 * v2 + v3 * v3);
      }
    }
  }
  return acc / 8.0;
}

// ln|x| weight per lattice cell; the exact-origin sample is regularized.
std::vector<double> log_weights(const Grid3& g, bool skip_origin) {
  std::vector<double> out(g.count());
  for (int i1 = 0; i1 < g.axis[0].n; ++i1) {
    const double x1 = g.axis[0].coord(i1);
    for (int i2 = 0; i2 < g.axis[1].n; ++i2) {
      const double x2 = g.axis[1].coord(i2);
      for (int i3 = 0; i3 < g.axis[2].n; ++i3) {
        const double x3 = g.axis[2].coord(i3);
        const double r2 = x1 * x1 + x2 * x2 + x3 * x3;
        double w;
        if (r2 > 0.0) {
          w = 0.5 * std::log(r2);
        } else if (skip_origin) {
          w = 0.0;
        } else {
          w = origin_cell_log_average(0.5 * g.axis[0].step, 0.5 * g.axis[1].step,
                                      0.5 * g.axis[2].step);
        }
        out[g.index(i1, i2, i3)] = w;
      }
    }
  }
  return out;
}

RealField3D scaled(const RealField3D& f, double s) {
  RealField3D out(f.grid);
  for (std::size_t i = 0; i < f.v.size(); ++i) out.v[i] = f.v[i] * s;
  return out;
}

}  // namespace

InequalityReport make_report(std::string name, std::string fixture, double lhs, double rhs,
                             double constant) {
  InequalityReport r;
  r.name = std::move(name);
  r.fixture = std::move(fixture);
  r.lhs = lhs;
  r.rhs = rhs;
  r.constant = constant;
  r.margin = rhs - lhs;
  const double tol = 1e-9 * std::max({std::abs(lhs), std::abs(rhs), 1.0});
  r.passed = lhs <= rhs + tol;
  return r;
}

double lp_norm(const RealField3D& f, double p) {
  if (!(p >= 1.0)) throw ParameterError("lp_norm: p must be >= 1");
  if (std::isinf(p)) {
    double m = 0.0;
    for (double x : f.v) m = std::max(m, std::abs(x));
    return m;
  }
  double acc = 0.0;
  for (double x : f.v) acc += std::pow(std::abs(x), p);
  return std::pow(acc * f.grid.cell_volume(), 1.0 / p);
}

double lp_norm(const OctonionField3D& f, double p) {
  if (!(p >= 1.0)) throw ParameterError("lp_norm: p must be >= 1");
  if (std::isinf(p)) {
    double m = 0.0;
    for (const Octonion& o : f.v) m = std::max(m, norm(o));
    return m;
  }
  double acc = 0.0;
  for (const Octonion& o : f.v) acc += std::pow(norm(o), p);
  return std::pow(acc * f.grid.cell_volume(), 1.0 / p);
}

double lp_norm(const Spectrogram& G, double p) {
  if (!(p >= 1.0)) throw ParameterError("lp_norm: p must be >= 1");
  if (std::isinf(p)) {
    double m = 0.0;
    for (const Octonion& o : G.v) m = std::max(m, norm(o));
    return m;
  }
  double acc = 0.0;
  for (const Octonion& o : G.v) acc += std::pow(norm(o), p);
  return std::pow(acc * G.cell_volume(), 1.0 / p);
}

double inner_product(const RealField3D& f, const RealField3D& g) {
  if (!f.grid.same_as(g.grid)) throw ShapeError("inner_product: lattice mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < f.v.size(); ++i) acc += f.v[i] * g.v[i];
  return acc * f.grid.cell_volume();
}

Octonion inner_product(const OctonionField3D& f, const OctonionField3D& g) {
  if (!f.grid.same_as(g.grid)) throw ShapeError("inner_product: lattice mismatch");
  Octonion acc;
  for (std::size_t i = 0; i < f.v.size(); ++i) acc += oct_mul(f.v[i], conj(g.v[i]));
  return acc * f.grid.cell_volume();
}

RealField3D convolve(const RealField3D& f, const RealField3D& g) {
  if (!f.grid.same_as(g.grid)) throw ShapeError("convolve: lattice mismatch");
  const Grid3& gr = f.grid;
  for (const Grid1D& a : gr.axis) {
    if (a.n % 2 == 0) throw ShapeError("convolve: sample counts must be odd");
  }
  if (gr.count() > 40000) throw ResourceError("convolve: lattice too large for dense evaluation");
  const int n1 = gr.axis[0].n, n2 = gr.axis[1].n, n3 = gr.axis[2].n;
  const int c1 = (n1 - 1) / 2, c2 = (n2 - 1) / 2, c3 = (n3 - 1) / 2;
  const double vol = gr.cell_volume();
  RealField3D out(gr);
  for (int i1 = 0; i1 < n1; ++i1) {
    for (int i2 = 0; i2 < n2; ++i2) {
      for (int i3 = 0; i3 < n3; ++i3) {
        double acc = 0.0;
        for (int j1 = 0; j1 < n1; ++j1) {
          const int m1 = i1 - j1 + c1;
          if (m1 < 0 || m1 >= n1) continue;
          for (int j2 = 0; j2 < n2; ++j2) {
            const int m2 = i2 - j2 + c2;
            if (m2 < 0 || m2 >= n2) continue;
            for (int j3 = 0; j3 < n3; ++j3) {
              const int m3 = i3 - j3 + c3;
              if (m3 < 0 || m3 >= n3) continue;
              acc += f.v[gr.index(j1, j2, j3)] * g.v[gr.index(m1, m2, m3)];
            }
          }
        }
        out.v[gr.index(i1, i2, i3)] = acc * vol;
      }
    }
  }
  return out;
}

double log_uncertainty_constant() {
  // ln 2 + psi(1/2), with psi(1/2) = -gamma - 2 ln 2.
  return -kEulerGamma - std::log(2.0);
}

ConcentrationRegion top_energy_region(const Spectrogram& G, double fraction) {
  if (!(fraction > 0.0) || fraction > 1.0) {
    throw ParameterError("top_energy_region: fraction must lie in (0, 1]");
  }
  const double cellvol = G.cell_volume();
  std::vector<double> energy(G.v.size());
  double total = 0.0;
  for (std::size_t i = 0; i < G.v.size(); ++i) {
    energy[i] = norm_sq(G.v[i]) * cellvol;
    total += energy[i];
  }
  std::vector<std::size_t> order(G.v.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&energy](std::size_t a, std::size_t b) { return energy[a] > energy[b]; });

  ConcentrationRegion region;
  double captured = 0.0;
  for (std::size_t idx : order) {
    if (captured >= fraction * total) break;
    region.cells.push_back(idx);
    captured += energy[idx];
  }
  region.epsilon = std::clamp(1.0 - captured, 0.0, 1.0);
  region.measure = static_cast<double>(region.cells.size()) * cellvol;
  return region;
}

InequalityReport check_sup_bound(const RealField3D& f, const Window3D& phi, const LCTTriple& A,
                                 double p, double q, int ustride, const std::string& fixture) {
  require_conjugate(p, q, "check_sup_bound");
  const Spectrogram G = fast_spectrogram(f, phi, A, ustride);
  const double lhs = lp_norm(G, std::numeric_limits<double>::infinity());
  const double c = sup_prefactor(A);
  const double rhs = c * lp_norm(f, p) * lp_norm(phi.samples, q);
  return make_report("sup-bound", fixture, lhs, rhs, c);
}

InequalityReport check_minkowski(const RealField3D& f, const Window3D& phi, const LCTTriple& A,
                                 double p, int ustride, const std::string& fixture) {
  if (!(p >= 1.0) || std::isinf(p)) throw ParameterError("check_minkowski: p must be finite and >= 1");
  const Grid3& xg = f.grid;
  if (!phi.samples.grid.same_as(xg)) throw ShapeError("check_minkowski: window lattice mismatch");
  const Grid3 ugrid = make_ugrid(xg, ustride);
  const double ucell = ugrid.cell_volume();

  // sum over u of |phi(x-u)|^p du, per signal sample
  std::vector<double> shift_pow(xg.count(), 0.0);
  for (int u1 = 0; u1 < ugrid.axis[0].n; ++u1) {
    for (int u2 = 0; u2 < ugrid.axis[1].n; ++u2) {
      for (int u3 = 0; u3 < ugrid.axis[2].n; ++u3) {
        const auto k = shift_indices(xg, ugrid, u1, u2, u3);
        for (int i1 = 0; i1 < xg.axis[0].n; ++i1) {
          const int j1 = i1 - k[0];
          if (j1 < 0 || j1 >= xg.axis[0].n) continue;
          for (int i2 = 0; i2 < xg.axis[1].n; ++i2) {
            const int j2 = i2 - k[1];
            if (j2 < 0 || j2 >= xg.axis[1].n) continue;
            for (int i3 = 0; i3 < xg.axis[2].n; ++i3) {
              const int j3 = i3 - k[2];
              if (j3 < 0 || j3 >= xg.axis[2].n) continue;
              shift_pow[xg.index(i1, i2, i3)] +=
                  std::pow(std::abs(phi.samples.v[xg.index(j1, j2, j3)]), p) * ucell;
            }
          }
        }
      }
    }
  }

  const double c = sup_prefactor(A);
  double lhs = 0.0;
  for (std::size_t i = 0; i < f.v.size(); ++i) {
    lhs += std::abs(f.v[i]) * std::pow(shift_pow[i], 1.0 / p);
  }
  lhs *= c * xg.cell_volume();
  const double rhs = c * lp_norm(f, 1.0) * lp_norm(phi.samples, p);
  return make_report("minkowski", fixture, lhs, rhs, c);
}

InequalityReport check_concentration(const RealField3D& f, const Window3D& phi,
                                     const LCTTriple& A, double energy_fraction, int ustride,
                                     const std::string& fixture,
                                     ConcentrationRegion* region_out) {
  if (std::abs(lp_norm(f, 2.0) - 1.0) > 1e-9 || std::abs(lp_norm(phi.samples, 2.0) - 1.0) > 1e-9) {
    throw ParameterError("check_concentration: inputs must be L2-normalized");
  }
  const Spectrogram G = fast_spectrogram(f, phi, A, ustride);
  const ConcentrationRegion region = top_energy_region(G, energy_fraction);
  const double c = 1.0 / sup_prefactor(A);  // 2 pi sqrt(2 pi |b1 b2 b3|)
  const double lhs = c * (1.0 - region.epsilon);
  const double rhs = region.measure;
  if (region_out != nullptr) *region_out = region;
  return make_report("concentration", fixture, lhs, rhs, c);
}

InequalityReport check_hausdorff_young(const RealField3D& f, const LCTTriple& A, double p,
                                       const std::string& fixture) {
  if (!(p >= 1.0) || p > 2.0) throw ParameterError("check_hausdorff_young: p must lie in [1, 2]");
  const double q = conjugate_exponent(p);
  const Grid3 wgrid = paired_grid(f.grid, A);
  const OctonionField3D F = olct_separable(f, wgrid, A, Path::kFast);
  const double lhs = lp_norm(F, q);
  const double c = std::pow(std::pow(2.0 * M_PI, 3) * abs_b_product(A), 0.5 - 1.0 / p);
  const double rhs = c * lp_norm(f, p);
  return make_report("hausdorff-young", fixture, lhs, rhs, c);
}

InequalityReport check_lieb(const RealField3D& f, const Window3D& phi, const LCTTriple& A,
                            double p, int ustride, const std::string& fixture) {
  if (!(p >= 2.0)) throw ParameterError("check_lieb: p must lie in [2, inf]");
  const double q = conjugate_exponent(p);
  std::string tag = fixture;
  if (p != 2.0) tag += ";interpretation=lhs-exponent-q,interpolated-prefactor";
  const Spectrogram G = fast_spectrogram(f, phi, A, ustride);
  const double lhs = lp_norm(G, q);
  const double iq = 1.0 / q;
  const double ip = std::isinf(p) ? 0.0 : 1.0 / p;
  const double e_pq = std::pow(4.0 / q, iq) * (ip == 0.0 ? 1.0 : std::pow(4.0 * ip, ip));
  const double c = std::pow(std::pow(2.0 * M_PI, 3) * abs_b_product(A), iq - 0.5) * e_pq;
  const double rhs = c * lp_norm(f, 2.0) * lp_norm(phi.samples, 2.0);
  return make_report("lieb", tag, lhs, rhs, c);
}

InequalityReport check_log_uncertainty(const RealField3D& f, const Window3D& phi,
                                       const LCTTriple& A, int ustride,
                                       const std::string& fixture, bool skip_origin) {
  const Spectrogram G = fast_spectrogram(f, phi, A, ustride);
  const std::vector<double> lw = log_weights(G.wgrid, skip_origin);
  const std::size_t wcount = G.wgrid.count();
  double spectral = 0.0;
  for (std::size_t i = 0; i < G.v.size(); ++i) {
    spectral += lw[i % wcount] * norm_sq(G.v[i]);
  }
  spectral *= G.cell_volume();

  const std::vector<double> lx = log_weights(f.grid, skip_origin);
  double spatial = 0.0;
  for (std::size_t i = 0; i < f.v.size(); ++i) spatial += lx[i] * f.v[i] * f.v[i];
  spatial *= f.grid.cell_volume();

  const double f2 = lp_norm(f, 2.0);
  const double p2 = lp_norm(phi.samples, 2.0);
  const double d = log_uncertainty_constant();
  const double lhs = d * f2 * f2 * p2 * p2;
  const double rhs = 2.0 * M_PI * std::abs(A[2].b) * spectral + p2 * p2 * spatial;
  return make_report("log-uncertainty", fixture, lhs, rhs, d);
}

ConvolutionReport check_convolution_theorem(const RealField3D& f, const RealField3D& g,
                                            const Window3D& phi, const Window3D& psi,
                                            const LCTTriple& A, int ustride,
                                            const std::string& fixture) {
  const Grid3& xg = f.grid;
  const Grid3 ugrid = make_ugrid(xg, ustride);
  if (xg.count() > 729 || ugrid.count() > 27) {
    throw ResourceError("check_convolution_theorem: lattice too large for the m-integral");
  }
  const Grid3 wgrid = paired_grid(xg, A);

  const RealField3D fg = convolve(f, g);
  const Window3D wconv(convolve(phi.samples, psi.samples));

  // Left side twice: by definition and through the separable route.
  const Spectrogram lhs = stolct_forward(fg, wconv, wgrid, ugrid, A);
  const Spectrogram lhs_via = stolct_via_olct(fg, wconv, wgrid, ugrid, A, Path::kFast);
  double dnum = 0.0, dden = 0.0;
  for (std::size_t i = 0; i < lhs.v.size(); ++i) {
    dnum += norm_sq(lhs.v[i] - lhs_via.v[i]);
    dden += norm_sq(lhs.v[i]);
  }
  const double routes_diff = dden > 0.0 ? std::sqrt(dnum / dden) : std::sqrt(dnum);

  // Right side: the m-integral mixing the second spectrogram at sign-flipped
  // frequencies with the parity components of the first.
  const Spectrogram Gg = stolct_forward(g, psi, wgrid, ugrid, A);
  Grid3 ext = ugrid;
  for (auto& axis : ext.axis) axis = Grid1D(2 * axis.n - 1, axis.step);
  const auto comps = stolct_parity_components(f, phi, wgrid, ext, A);

  const std::size_t wcount = wgrid.count();
  const int n1 = wgrid.axis[0].n, n2 = wgrid.axis[1].n, n3 = wgrid.axis[2].n;
  const int nu1 = ugrid.axis[0].n, nu2 = ugrid.axis[1].n, nu3 = ugrid.axis[2].n;
  const double mcell = ugrid.cell_volume();

  Spectrogram rhs(wgrid, ugrid);
  for (int u1 = 0; u1 < nu1; ++u1) {
    for (int u2 = 0; u2 < nu2; ++u2) {
      for (int u3 = 0; u3 < nu3; ++u3) {
        const std::size_t out_base = rhs.slab(ugrid.index(u1, u2, u3));
        for (int j1 = 0; j1 < n1; ++j1) {
          const int r1 = n1 - 1 - j1;
          for (int j2 = 0; j2 < n2; ++j2) {
            const int r2 = n2 - 1 - j2;
            for (int j3 = 0; j3 < n3; ++j3) {
              const int r3 = n3 - 1 - j3;
              const std::size_t at_w = wgrid.index(j1, j2, j3);
              // t = (w1,-w2,-w3), s = (w1,w2,-w3), t' = (-w1,w2,-w3)
              const std::size_t at[8] = {at_w,
                                         wgrid.index(j1, r2, r3),
                                         wgrid.index(j1, j2, r3),
                                         wgrid.index(j1, r2, r3),
                                         at_w,
                                         wgrid.index(j1, j2, r3),
                                         wgrid.index(r1, j2, r3),
                                         wgrid.index(r1, j2, r3)};
              Octonion acc;
              for (int m1 = 0; m1 < nu1; ++m1) {
                for (int m2 = 0; m2 < nu2; ++m2) {
                  for (int m3 = 0; m3 < nu3; ++m3) {
                    const std::size_t slab = Gg.slab(ugrid.index(m1, m2, m3));
                    const std::size_t diff = (static_cast<std::size_t>(
                        ext.index(u1 - m1 + nu1 - 1, u2 - m2 + nu2 - 1, u3 - m3 + nu3 - 1)));
                    const std::size_t comp_at = diff * wcount + at_w;
                    acc += Gg.v[slab + at[0]] * comps[0].v[comp_at];
                    for (std::size_t k = 1; k < 8; ++k) {
                      acc += oct_mul(Gg.v[slab + at[k]] * comps[k].v[comp_at],
                                     Octonion::unit(k));
                    }
                  }
                }
              }
              rhs.v[out_base + at_w] = acc * mcell;
            }
          }
        }
      }
    }
  }

  double inum = 0.0, iden = 0.0, lsq = 0.0, rsq = 0.0;
  for (std::size_t i = 0; i < lhs.v.size(); ++i) {
    inum += norm_sq(lhs.v[i] - rhs.v[i]);
    iden += norm_sq(lhs.v[i]);
    lsq += norm_sq(lhs.v[i]);
    rsq += norm_sq(rhs.v[i]);
  }
  ConvolutionReport report;
  report.fixture = fixture;
  report.lhs_routes_rel_diff = routes_diff;
  report.identity_rel_discrepancy = iden > 0.0 ? std::sqrt(inum / iden) : std::sqrt(inum);
  report.lhs_l2 = std::sqrt(lsq * lhs.cell_volume());
  report.rhs_l2 = std::sqrt(rsq * rhs.cell_volume());
  return report;
}

LCTTriple random_triple(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> mag_a(0.5, 1.5);
  std::uniform_real_distribution<double> mag_b(0.5, 2.0);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::bernoulli_distribution flip(0.5);
  LCTTriple out;
  for (auto& p : out) {
    const double a = (flip(rng) ? -1.0 : 1.0) * mag_a(rng);
    const double b = (flip(rng) ? -1.0 : 1.0) * mag_b(rng);
    const double c = unit(rng);
    p = LCTParams(a, b, c, (1.0 + b * c) / a);
  }
  return out;
}

std::vector<InequalityReport> run_battery(const BatteryOptions& opts) {
  const Grid3 grid = Grid3::cubic(opts.n, opts.step);
  const RealField3D gauss = make_gaussian(grid, 1.0);
  const RealField3D chirped = make_chirped_gaussian(grid, 1.0, 0.7);
  const Window3D wgauss(make_gaussian(grid, 0.8));
  const Window3D wbox(make_box(grid, 1.2));

  struct Fixture {
    const char* tag;
    const RealField3D* f;
    const Window3D* phi;
  };
  const Fixture fixtures[] = {
      {"f=gaussian,phi=gaussian", &gauss, &wgauss},
      {"f=chirped-gaussian,phi=gaussian", &chirped, &wgauss},
      {"f=gaussian,phi=box", &gauss, &wbox},
  };

  std::vector<InequalityReport> reports;
  for (int t = 0; t < opts.triples; ++t) {
    const LCTTriple A = random_triple(opts.seed + static_cast<std::uint64_t>(t));
    for (const Fixture& fx : fixtures) {
      const std::string tag =
          std::string(fx.tag) + ",triple=" + std::to_string(t) + ",n=" + std::to_string(opts.n);
      reports.push_back(
          check_sup_bound(*fx.f, *fx.phi, A, 2.0, 2.0, opts.ustride, tag + ",p=q=2"));
      reports.push_back(check_minkowski(*fx.f, *fx.phi, A, 2.0, opts.ustride, tag + ",p=2"));
      reports.push_back(check_hausdorff_young(*fx.f, A, 1.0, tag + ",p=1"));
      reports.push_back(check_hausdorff_young(*fx.f, A, 4.0 / 3.0, tag + ",p=4/3"));
      reports.push_back(check_hausdorff_young(*fx.f, A, 2.0, tag + ",p=2"));
      reports.push_back(check_lieb(*fx.f, *fx.phi, A, 2.0, opts.ustride, tag + ",p=q=2"));
      const RealField3D fn = scaled(*fx.f, 1.0 / lp_norm(*fx.f, 2.0));
      const Window3D pn(scaled(fx.phi->samples, 1.0 / lp_norm(fx.phi->samples, 2.0)));
      reports.push_back(
          check_concentration(fn, pn, A, 0.9, opts.ustride, tag + ",fraction=0.9"));
      reports.push_back(check_log_uncertainty(*fx.f, *fx.phi, A, opts.ustride, tag));
    }
  }
  return reports;
}

}  // namespace octolct
