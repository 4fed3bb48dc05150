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

#include "octolct/stolct.hpp"

#include <cmath>
#include <cstddef>

#include "octolct/errors.hpp"

namespace octolct {

namespace {

void require_signal_lattice(const Grid3& window_grid, const Grid3& signal_grid,
                            const char* where) {
  if (!window_grid.same_as(signal_grid)) {
    throw ShapeError(std::string(where) + ": window must be sampled on the signal lattice");
  }
}

void copy_slab(const OctonionField3D& src, Spectrogram& dst, std::size_t u_lin) {
  const std::size_t base = dst.slab(u_lin);
  for (std::size_t i = 0; i < src.v.size(); ++i) dst.v[base + i] = src.v[i];
}

}  // namespace

Window3D::Window3D(RealField3D s) : samples(std::move(s)) {
  bool any = false;
  for (double x : samples.v) {
    if (!std::isfinite(x)) throw ParameterError("window contains non-finite samples");
    if (x != 0.0) any = true;
  }
  if (!any) throw ParameterError("window is identically zero");
}

double Window3D::norm_sq_weighted() const {
  double acc = 0.0;
  for (double x : samples.v) acc += x * x;
  return acc * samples.grid.cell_volume();
}

Grid3 make_ugrid(const Grid3& xgrid, int stride) {
  if (stride < 1) throw ParameterError("make_ugrid: stride must be positive");
  std::array<Grid1D, 3> axes;
  for (std::size_t a = 0; a < 3; ++a) {
    const int n = xgrid.axis[a].n;
    int nu = (n - 1) / stride + 1;
    // Centered shifts (i - (nu-1)/2) * stride must be whole lattice steps, so
    // an even count is only legal with an even stride.
    if (nu % 2 == 0 && stride % 2 == 1) --nu;
    if (nu < 1) nu = 1;
    axes[a] = Grid1D(nu, stride * xgrid.axis[a].step);
  }
  return Grid3(axes[0], axes[1], axes[2]);
}

std::array<int, 3> shift_indices(const Grid3& xgrid, const Grid3& ugrid, int u1, int u2,
                                 int u3) {
  const int ui[3] = {u1, u2, u3};
  std::array<int, 3> out{};
  for (std::size_t a = 0; a < 3; ++a) {
    if (ui[a] < 0 || ui[a] >= ugrid.axis[a].n) throw ShapeError("shift_indices: index out of range");
    const double raw = ugrid.axis[a].coord(ui[a]) / xgrid.axis[a].step;
    const double rounded = std::round(raw);
    if (std::abs(raw - rounded) > 1e-9 * (1.0 + std::abs(raw))) {
      throw ShapeError("shift_indices: translation is not a whole number of steps");
    }
    out[a] = static_cast<int>(rounded);
  }
  return out;
}

RealField3D windowed_slice(const RealField3D& f, const Window3D& window, const Grid3& ugrid,
                           int u1, int u2, int u3) {
  require_signal_lattice(window.samples.grid, f.grid, "windowed_slice");
  const auto k = shift_indices(f.grid, ugrid, u1, u2, u3);
  const Grid3& g = f.grid;
  RealField3D h(g);
  for (int i1 = 0; i1 < g.axis[0].n; ++i1) {
    const int j1 = i1 - k[0];
    if (j1 < 0 || j1 >= g.axis[0].n) continue;
    for (int i2 = 0; i2 < g.axis[1].n; ++i2) {
      const int j2 = i2 - k[1];
      if (j2 < 0 || j2 >= g.axis[1].n) continue;
      for (int i3 = 0; i3 < g.axis[2].n; ++i3) {
        const int j3 = i3 - k[2];
        if (j3 < 0 || j3 >= g.axis[2].n) continue;
        h.v[g.index(i1, i2, i3)] = f.v[g.index(i1, i2, i3)] * window.samples.v[g.index(j1, j2, j3)];
      }
    }
  }
  return h;
}

Spectrogram stolct_forward(const RealField3D& f, const Window3D& window, const Grid3& wgrid,
                           const Grid3& ugrid, const LCTTriple& p) {
  Spectrogram out(wgrid, ugrid);
  for (int u1 = 0; u1 < ugrid.axis[0].n; ++u1) {
    for (int u2 = 0; u2 < ugrid.axis[1].n; ++u2) {
      for (int u3 = 0; u3 < ugrid.axis[2].n; ++u3) {
        const RealField3D h = windowed_slice(f, window, ugrid, u1, u2, u3);
        copy_slab(olct_direct(h, wgrid, p), out, ugrid.index(u1, u2, u3));
      }
    }
  }
  return out;
}

Spectrogram stolct_via_olct(const RealField3D& f, const Window3D& window, const Grid3& wgrid,
                            const Grid3& ugrid, const LCTTriple& p, Path path) {
  Spectrogram out(wgrid, ugrid);
  for (int u1 = 0; u1 < ugrid.axis[0].n; ++u1) {
    for (int u2 = 0; u2 < ugrid.axis[1].n; ++u2) {
      for (int u3 = 0; u3 < ugrid.axis[2].n; ++u3) {
        const RealField3D h = windowed_slice(f, window, ugrid, u1, u2, u3);
        copy_slab(olct_separable(h, wgrid, p, path), out, ugrid.index(u1, u2, u3));
      }
    }
  }
  return out;
}

OctonionField3D stolct_reconstruct(const Spectrogram& G, const Window3D& window,
                                   const Grid3& xgrid, const LCTTriple& p, Path path) {
  require_signal_lattice(window.samples.grid, xgrid, "stolct_reconstruct");
  const double wnorm = window.norm_sq_weighted();
  const double weight = G.ugrid.cell_volume() / wnorm;
  OctonionField3D acc(xgrid);
  OctonionField3D slab(G.wgrid);
  for (int u1 = 0; u1 < G.ugrid.axis[0].n; ++u1) {
    for (int u2 = 0; u2 < G.ugrid.axis[1].n; ++u2) {
      for (int u3 = 0; u3 < G.ugrid.axis[2].n; ++u3) {
        const std::size_t base = G.slab(G.ugrid.index(u1, u2, u3));
        for (std::size_t i = 0; i < slab.v.size(); ++i) slab.v[i] = G.v[base + i];
        const OctonionField3D inv = olct_inverse(slab, xgrid, p, path);
        const auto k = shift_indices(xgrid, G.ugrid, u1, u2, u3);
        for (int i1 = 0; i1 < xgrid.axis[0].n; ++i1) {
          const int j1 = i1 - k[0];
          if (j1 < 0 || j1 >= xgrid.axis[0].n) continue;
          for (int i2 = 0; i2 < xgrid.axis[1].n; ++i2) {
            const int j2 = i2 - k[1];
            if (j2 < 0 || j2 >= xgrid.axis[1].n) continue;
            for (int i3 = 0; i3 < xgrid.axis[2].n; ++i3) {
              const int j3 = i3 - k[2];
              if (j3 < 0 || j3 >= xgrid.axis[2].n) continue;
              const std::size_t idx = xgrid.index(i1, i2, i3);
              const double coef = window.samples.v[xgrid.index(j1, j2, j3)] * weight;
              if (coef == 0.0) continue;
              acc.v[idx] += inv.v[idx] * coef;
            }
          }
        }
      }
    }
  }
  return acc;
}

std::array<SpectrogramReal, 8> stolct_parity_components(const RealField3D& f,
                                                        const Window3D& window,
                                                        const Grid3& wgrid, const Grid3& ugrid,
                                                        const LCTTriple& p) {
  std::array<SpectrogramReal, 8> out;
  for (auto& c : out) c = SpectrogramReal(wgrid, ugrid);
  const std::size_t wcount = wgrid.count();
  for (int u1 = 0; u1 < ugrid.axis[0].n; ++u1) {
    for (int u2 = 0; u2 < ugrid.axis[1].n; ++u2) {
      for (int u3 = 0; u3 < ugrid.axis[2].n; ++u3) {
        const RealField3D h = windowed_slice(f, window, ugrid, u1, u2, u3);
        const auto comps = olct_parity_components(h, wgrid, p);
        const std::size_t base = static_cast<std::size_t>(ugrid.index(u1, u2, u3)) * wcount;
        for (std::size_t c = 0; c < 8; ++c) {
          for (std::size_t i = 0; i < wcount; ++i) out[c].v[base + i] = comps[c].v[i];
        }
      }
    }
  }
  return out;
}

Spectrogram assemble_from_parity(const std::array<SpectrogramReal, 8>& comps) {
  Spectrogram out(comps[0].wgrid, comps[0].ugrid);
  for (std::size_t k = 0; k < 8; ++k) {
    if (comps[k].v.size() != out.v.size()) throw ShapeError("assemble_from_parity: size mismatch");
    for (std::size_t i = 0; i < out.v.size(); ++i) out.v[i].s[k] = comps[k].v[i];
  }
  return out;
}

SpectrogramComplex stlct3d(const RealField3D& f, const Window3D& window, const Grid3& wgrid,
                           const Grid3& ugrid, const LCTTriple& p, Path path) {
  SpectrogramComplex out(wgrid, ugrid);
  const std::size_t wcount = wgrid.count();
  for (int u1 = 0; u1 < ugrid.axis[0].n; ++u1) {
    for (int u2 = 0; u2 < ugrid.axis[1].n; ++u2) {
      for (int u3 = 0; u3 < ugrid.axis[2].n; ++u3) {
        const RealField3D h = windowed_slice(f, window, ugrid, u1, u2, u3);
        const ComplexField3D z = lct3d(h, wgrid, p, path);
        const std::size_t base = static_cast<std::size_t>(ugrid.index(u1, u2, u3)) * wcount;
        for (std::size_t i = 0; i < wcount; ++i) out.v[base + i] = z.v[i];
      }
    }
  }
  return out;
}

Spectrogram stolct_from_stlct3d(const RealField3D& f, const Window3D& window, const Grid3& wgrid,
                                const Grid3& ugrid, const LCTTriple& p, Path path) {
  const LCTTriple pp = p;
  const LCTTriple pm = {p[0], p[1], flip_b(p[2])};
  const LCTTriple mp = {p[0], flip_b(p[1]), p[2]};
  const LCTTriple mm = {p[0], flip_b(p[1]), flip_b(p[2])};

  const SpectrogramComplex zpp = stlct3d(f, window, wgrid, ugrid, pp, path);
  const SpectrogramComplex zpm = stlct3d(f, window, wgrid, ugrid, pm, path);
  const SpectrogramComplex zmp = stlct3d(f, window, wgrid, ugrid, mp, path);
  const SpectrogramComplex zmm = stlct3d(f, window, wgrid, ugrid, mm, path);

  Spectrogram out(wgrid, ugrid);
  for (std::size_t i = 0; i < out.v.size(); ++i) {
    out.v[i] = assemble_four(zpp.v[i], zpm.v[i], zmp.v[i], zmm.v[i]);
  }
  return out;
}

Spectrogram2D qstlct_2d(const RealField3D& f, const Window3D& window, const Grid3& wgrid,
                        const Grid3& ugrid, const LCTParams& p1, const LCTParams& p2) {
  if (f.grid.axis[2].n != 1 || wgrid.axis[2].n != 1 || ugrid.axis[2].n != 1) {
    throw ShapeError("qstlct_2d: third axis must be a single sample");
  }
  require_signal_lattice(window.samples.grid, f.grid, "qstlct_2d");
  p1.validate();
  p2.validate();

  const Grid1D& x1 = f.grid.axis[0];
  const Grid1D& x2 = f.grid.axis[1];
  const Grid1D& w1 = wgrid.axis[0];
  const Grid1D& w2 = wgrid.axis[1];
  const double area = x1.step * x2.step;
  const double scale = kernel_scale(p1) * kernel_scale(p2) * area;

  Spectrogram2D out;
  out.wgrid = wgrid;
  out.ugrid = ugrid;
  out.v.assign(wgrid.count() * ugrid.count(), Quaternion());

  const std::size_t wcount = wgrid.count();
  for (int u1 = 0; u1 < ugrid.axis[0].n; ++u1) {
    for (int u2 = 0; u2 < ugrid.axis[1].n; ++u2) {
      const RealField3D h = windowed_slice(f, window, ugrid, u1, u2, 0);
      const std::size_t base = static_cast<std::size_t>(ugrid.index(u1, u2, 0)) * wcount;
      for (int j1 = 0; j1 < w1.n; ++j1) {
        for (int j2 = 0; j2 < w2.n; ++j2) {
          Quaternion acc;
          for (int i1 = 0; i1 < x1.n; ++i1) {
            const double xi1 = kernel_phase(p1, x1.coord(i1), w1.coord(j1));
            const Quaternion k1{std::cos(xi1), std::sin(xi1), 0.0, 0.0};
            for (int i2 = 0; i2 < x2.n; ++i2) {
              const double hv = h.v[f.grid.index(i1, i2, 0)];
              if (hv == 0.0) continue;
              const double xi2 = kernel_phase(p2, x2.coord(i2), w2.coord(j2));
              const Quaternion k2{std::cos(xi2), 0.0, std::sin(xi2), 0.0};
              acc = acc + quat_mul(k1, k2) * hv;
            }
          }
          out.v[base + static_cast<std::size_t>(wgrid.index(j1, j2, 0))] = acc * scale;
        }
      }
    }
  }
  return out;
}

}  // namespace octolct
