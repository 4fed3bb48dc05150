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

#include "octolct/olct3d.hpp"

#include <cmath>
#include <cstddef>
#include <optional>

#include "octolct/errors.hpp"
#include "octolct/parallel.hpp"

namespace octolct {

namespace {

struct AxisView {
  int axis = 0;
  int nb = 0;      // first non-axis dimension
  int nc = 0;      // second non-axis dimension
  std::size_t stride_a = 0, stride_b = 0, stride_c = 0;
};

AxisView make_view(const Grid3& g, int axis) {
  const std::size_t s0 = static_cast<std::size_t>(g.axis[1].n) * g.axis[2].n;
  const std::size_t s1 = static_cast<std::size_t>(g.axis[2].n);
  const std::size_t strides[3] = {s0, s1, 1};
  const int others[3][2] = {{1, 2}, {0, 2}, {0, 1}};
  AxisView v;
  v.axis = axis;
  v.nb = g.axis[others[axis][0]].n;
  v.nc = g.axis[others[axis][1]].n;
  v.stride_a = strides[axis];
  v.stride_b = strides[others[axis][0]];
  v.stride_c = strides[others[axis][1]];
  return v;
}

Grid3 with_axis(const Grid3& g, int axis, const Grid1D& replacement) {
  Grid3 out = g;
  out.axis[static_cast<std::size_t>(axis)] = replacement;
  return out;
}

// Dense target-by-source kernel matrix of one direct axis pass, including the
// modulus and the quadrature weight.
std::vector<std::complex<double>> kernel_matrix(const Grid1D& xg, const Grid1D& wg,
                                                const LCTParams& p) {
  std::vector<std::complex<double>> m(static_cast<std::size_t>(wg.n) * xg.n);
  const double scale = kernel_scale(p) * xg.step;
  for (int j = 0; j < wg.n; ++j) {
    const double w = wg.coord(j);
    for (int i = 0; i < xg.n; ++i) {
      m[static_cast<std::size_t>(j) * xg.n + i] =
          std::polar(scale, kernel_phase(p, xg.coord(i), w));
    }
  }
  return m;
}

// One separable stage: transform every line along `axis`, multiplying the
// octonion values from the right by the planar kernel of `unit`.
OctonionField3D axis_pass(const OctonionField3D& in, int axis, const Grid1D& out_g,
                          const LCTParams& p, int unit, Path path) {
  p.validate();
  const Grid1D in_g = in.grid.axis[static_cast<std::size_t>(axis)];
  OctonionField3D out(with_axis(in.grid, axis, out_g));
  const AxisView vi = make_view(in.grid, axis);
  const AxisView vo = make_view(out.grid, axis);
  const auto pairs = axis_pairs(unit);

  std::optional<Chirp1D> engine;
  std::vector<std::complex<double>> matrix;
  if (path == Path::kFast) {
    engine.emplace(in_g, out_g, p);
  } else {
    matrix = kernel_matrix(in_g, out_g, p);
  }

  const std::size_t lines = static_cast<std::size_t>(vi.nb) * vi.nc;
  const std::size_t line_work =
      4 * (path == Path::kFast ? 16 * static_cast<std::size_t>(in_g.n + out_g.n)
                               : 4 * static_cast<std::size_t>(in_g.n) * out_g.n);
  parallel_for(lines, line_work, [&](std::size_t begin, std::size_t end) {
    std::vector<std::complex<double>> z(static_cast<std::size_t>(in_g.n));
    std::vector<std::complex<double>> t(static_cast<std::size_t>(out_g.n));
    for (std::size_t line = begin; line < end; ++line) {
      const std::size_t jb = line / vi.nc;
      const std::size_t jc = line % vi.nc;
      const std::size_t in_base = jb * vi.stride_b + jc * vi.stride_c;
      const std::size_t out_base = jb * vo.stride_b + jc * vo.stride_c;
      for (const auto& pq : pairs) {
        const std::size_t lo = static_cast<std::size_t>(pq[0]);
        const std::size_t hi = static_cast<std::size_t>(pq[1]);
        for (int i = 0; i < in_g.n; ++i) {
          const Octonion& o = in.v[in_base + static_cast<std::size_t>(i) * vi.stride_a];
          z[static_cast<std::size_t>(i)] = {o.s[lo], o.s[hi]};
        }
        if (engine) {
          engine->apply(z.data(), t.data());
        } else {
          for (int j = 0; j < out_g.n; ++j) {
            std::complex<double> acc(0.0, 0.0);
            const std::complex<double>* row = &matrix[static_cast<std::size_t>(j) * in_g.n];
            for (int i = 0; i < in_g.n; ++i) acc += row[i] * z[static_cast<std::size_t>(i)];
            t[static_cast<std::size_t>(j)] = acc;
          }
        }
        for (int j = 0; j < out_g.n; ++j) {
          Octonion& o = out.v[out_base + static_cast<std::size_t>(j) * vo.stride_a];
          o.s[lo] = t[static_cast<std::size_t>(j)].real();
          o.s[hi] = t[static_cast<std::size_t>(j)].imag();
        }
      }
    }
  });
  return out;
}

// Complex variant of the stage, all factors sharing one imaginary axis.
ComplexField3D axis_pass_complex(const ComplexField3D& in, int axis, const Grid1D& out_g,
                                 const LCTParams& p, Path path) {
  p.validate();
  const Grid1D in_g = in.grid.axis[static_cast<std::size_t>(axis)];
  ComplexField3D out(with_axis(in.grid, axis, out_g));
  const AxisView vi = make_view(in.grid, axis);
  const AxisView vo = make_view(out.grid, axis);

  std::optional<Chirp1D> engine;
  std::vector<std::complex<double>> matrix;
  if (path == Path::kFast) {
    engine.emplace(in_g, out_g, p);
  } else {
    matrix = kernel_matrix(in_g, out_g, p);
  }

  const std::size_t lines = static_cast<std::size_t>(vi.nb) * vi.nc;
  const std::size_t line_work = path == Path::kFast
                                    ? 16 * static_cast<std::size_t>(in_g.n + out_g.n)
                                    : 4 * static_cast<std::size_t>(in_g.n) * out_g.n;
  parallel_for(lines, line_work, [&](std::size_t begin, std::size_t end) {
    std::vector<std::complex<double>> z(static_cast<std::size_t>(in_g.n));
    std::vector<std::complex<double>> t(static_cast<std::size_t>(out_g.n));
    for (std::size_t line = begin; line < end; ++line) {
      const std::size_t jb = line / vi.nc;
      const std::size_t jc = line % vi.nc;
      const std::size_t in_base = jb * vi.stride_b + jc * vi.stride_c;
      const std::size_t out_base = jb * vo.stride_b + jc * vo.stride_c;
      for (int i = 0; i < in_g.n; ++i) {
        z[static_cast<std::size_t>(i)] = in.v[in_base + static_cast<std::size_t>(i) * vi.stride_a];
      }
      if (engine) {
        engine->apply(z.data(), t.data());
      } else {
        for (int j = 0; j < out_g.n; ++j) {
          std::complex<double> acc(0.0, 0.0);
          const std::complex<double>* row = &matrix[static_cast<std::size_t>(j) * in_g.n];
          for (int i = 0; i < in_g.n; ++i) acc += row[i] * z[static_cast<std::size_t>(i)];
          t[static_cast<std::size_t>(j)] = acc;
        }
      }
      for (int j = 0; j < out_g.n; ++j) {
        out.v[out_base + static_cast<std::size_t>(j) * vo.stride_a] = t[static_cast<std::size_t>(j)];
      }
    }
  });
  return out;
}

// Real cos/sin stage of the parity-component spectra.
RealField3D axis_pass_real(const RealField3D& in, int axis, const Grid1D& out_g,
                           const LCTParams& p, bool odd) {
  p.validate();
  const Grid1D in_g = in.grid.axis[static_cast<std::size_t>(axis)];
  RealField3D out(with_axis(in.grid, axis, out_g));
  const AxisView vi = make_view(in.grid, axis);
  const AxisView vo = make_view(out.grid, axis);

  std::vector<double> matrix(static_cast<std::size_t>(out_g.n) * in_g.n);
  const double scale = kernel_scale(p) * in_g.step;
  for (int j = 0; j < out_g.n; ++j) {
    const double w = out_g.coord(j);
    for (int i = 0; i < in_g.n; ++i) {
      const double xi = kernel_phase(p, in_g.coord(i), w);
      matrix[static_cast<std::size_t>(j) * in_g.n + i] =
          scale * (odd ? std::sin(xi) : std::cos(xi));
    }
  }

  const std::size_t lines = static_cast<std::size_t>(vi.nb) * vi.nc;
  const std::size_t line_work = 2 * static_cast<std::size_t>(in_g.n) * out_g.n;
  parallel_for(lines, line_work, [&](std::size_t begin, std::size_t end) {
    for (std::size_t line = begin; line < end; ++line) {
      const std::size_t jb = line / vi.nc;
      const std::size_t jc = line % vi.nc;
      const std::size_t in_base = jb * vi.stride_b + jc * vi.stride_c;
      const std::size_t out_base = jb * vo.stride_b + jc * vo.stride_c;
      for (int j = 0; j < out_g.n; ++j) {
        double acc = 0.0;
        const double* row = &matrix[static_cast<std::size_t>(j) * in_g.n];
        for (int i = 0; i < in_g.n; ++i) {
          acc += row[i] * in.v[in_base + static_cast<std::size_t>(i) * vi.stride_a];
        }
        out.v[out_base + static_cast<std::size_t>(j) * vo.stride_a] = acc;
      }
    }
  });
  return out;
}

}  // namespace

OctonionField3D embed_real(const RealField3D& f) {
  OctonionField3D out(f.grid);
  for (std::size_t i = 0; i < f.v.size(); ++i) out.v[i].s[0] = f.v[i];
  return out;
}

OctonionField3D embed_complex(const ComplexField3D& f, int imag_unit) {
  if (imag_unit < 1 || imag_unit > 7) throw ParameterError("embed_complex: unit in 1..7");
  OctonionField3D out(f.grid);
  for (std::size_t i = 0; i < f.v.size(); ++i) {
    out.v[i].s[0] = f.v[i].real();
    out.v[i].s[static_cast<std::size_t>(imag_unit)] = f.v[i].imag();
  }
  return out;
}

RealField3D real_part(const OctonionField3D& f) {
  RealField3D out(f.grid);
  for (std::size_t i = 0; i < f.v.size(); ++i) out.v[i] = f.v[i].s[0];
  return out;
}

double imag_residual(const OctonionField3D& f) {
  double imag = 0.0, total = 0.0;
  for (const Octonion& o : f.v) {
    for (std::size_t k = 1; k < 8; ++k) imag += o.s[k] * o.s[k];
    total += norm_sq(o);
  }
  return total > 0.0 ? std::sqrt(imag / total) : 0.0;
}

double rel_l2_diff(const OctonionField3D& a, const OctonionField3D& b) {
  if (a.v.size() != b.v.size()) throw ShapeError("rel_l2_diff: size mismatch");
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < a.v.size(); ++i) {
    num += norm_sq(a.v[i] - b.v[i]);
    den += norm_sq(b.v[i]);
  }
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

double rel_l2_diff(const RealField3D& a, const RealField3D& b) {
  if (a.v.size() != b.v.size()) throw ShapeError("rel_l2_diff: size mismatch");
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < a.v.size(); ++i) {
    num += (a.v[i] - b.v[i]) * (a.v[i] - b.v[i]);
    den += b.v[i] * b.v[i];
  }
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

double rel_l2_diff(const std::vector<std::complex<double>>& a,
                   const std::vector<std::complex<double>>& b) {
  if (a.size() != b.size()) throw ShapeError("rel_l2_diff: size mismatch");
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += std::norm(a[i] - b[i]);
    den += std::norm(b[i]);
  }
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

LCTParams flip_b(const LCTParams& p) { return LCTParams(p.a, -p.b, -p.c, p.d); }

Grid3 paired_grid(const Grid3& xgrid, const LCTTriple& p) {
  return Grid3(xgrid.axis[0].paired(p[0].b), xgrid.axis[1].paired(p[1].b),
               xgrid.axis[2].paired(p[2].b));
}

OctonionField3D olct_direct(const RealField3D& f, const Grid3& wgrid, const LCTTriple& p) {
  for (const auto& pk : p) pk.validate();
  const Grid3& xg = f.grid;
  // Per-axis kernel tables: k_a[i * wn + j] is the kernel factor of axis a.
  std::array<std::vector<Octonion>, 3> k;
  for (int a = 0; a < 3; ++a) {
    const Grid1D& gx = xg.axis[static_cast<std::size_t>(a)];
    const Grid1D& gw = wgrid.axis[static_cast<std::size_t>(a)];
    k[static_cast<std::size_t>(a)].resize(static_cast<std::size_t>(gx.n) * gw.n);
    for (int i = 0; i < gx.n; ++i) {
      for (int j = 0; j < gw.n; ++j) {
        k[static_cast<std::size_t>(a)][static_cast<std::size_t>(i) * gw.n + j] = kernel_eval(
            p[static_cast<std::size_t>(a)], gx.coord(i), gw.coord(j), kAxisUnits[static_cast<std::size_t>(a)]);
      }
    }
  }

  OctonionField3D out(wgrid);
  const double vol = xg.cell_volume();
  const std::size_t wcount = wgrid.count();
  parallel_for(wcount, 64 * xg.count(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t widx = begin; widx < end; ++widx) {
      const int j1 = static_cast<int>(widx / (static_cast<std::size_t>(wgrid.axis[1].n) * wgrid.axis[2].n));
      const int j2 = static_cast<int>((widx / wgrid.axis[2].n) % wgrid.axis[1].n);
      const int j3 = static_cast<int>(widx % wgrid.axis[2].n);
      Octonion acc;
      for (int i1 = 0; i1 < xg.axis[0].n; ++i1) {
        const Octonion& k1 = k[0][static_cast<std::size_t>(i1) * wgrid.axis[0].n + j1];
        for (int i2 = 0; i2 < xg.axis[1].n; ++i2) {
          const Octonion& k2 = k[1][static_cast<std::size_t>(i2) * wgrid.axis[1].n + j2];
          const Octonion k12 = oct_mul(k1, k2);
          for (int i3 = 0; i3 < xg.axis[2].n; ++i3) {
            const double fv = f.v[xg.index(i1, i2, i3)];
            if (fv == 0.0) continue;
            const Octonion& k3 = k[2][static_cast<std::size_t>(i3) * wgrid.axis[2].n + j3];
            acc += oct_mul(k12, k3) * fv;
          }
        }
      }
      out.v[widx] = acc * vol;
    }
  });
  return out;
}

OctonionField3D olct_separable(const OctonionField3D& f, const Grid3& wgrid, const LCTTriple& p,
                               Path path) {
  OctonionField3D stage = axis_pass(f, 0, wgrid.axis[0], p[0], kAxisUnits[0], path);
  stage = axis_pass(stage, 1, wgrid.axis[1], p[1], kAxisUnits[1], path);
  return axis_pass(stage, 2, wgrid.axis[2], p[2], kAxisUnits[2], path);
}

OctonionField3D olct_separable(const RealField3D& f, const Grid3& wgrid, const LCTTriple& p,
                               Path path) {
  return olct_separable(embed_real(f), wgrid, p, path);
}

OctonionField3D olct_inverse(const OctonionField3D& F, const Grid3& xgrid, const LCTTriple& p,
                             Path path) {
  OctonionField3D stage =
      axis_pass(F, 2, xgrid.axis[2], p[2].inverse(), kAxisUnits[2], path);
  stage = axis_pass(stage, 1, xgrid.axis[1], p[1].inverse(), kAxisUnits[1], path);
  return axis_pass(stage, 0, xgrid.axis[0], p[0].inverse(), kAxisUnits[0], path);
}

std::array<RealField3D, 8> parity_split(const RealField3D& f) {
  const Grid3& g = f.grid;
  std::array<RealField3D, 8> comps;
  for (auto& c : comps) c = RealField3D(g);
  const int n1 = g.axis[0].n, n2 = g.axis[1].n, n3 = g.axis[2].n;
  for (int i1 = 0; i1 < n1; ++i1) {
    for (int i2 = 0; i2 < n2; ++i2) {
      for (int i3 = 0; i3 < n3; ++i3) {
        const std::size_t idx = g.index(i1, i2, i3);
        for (int comp = 0; comp < 8; ++comp) {
          double acc = 0.0;
          for (int sgn = 0; sgn < 8; ++sgn) {
            const int r1 = (sgn & 1) ? n1 - 1 - i1 : i1;
            const int r2 = (sgn & 2) ? n2 - 1 - i2 : i2;
            const int r3 = (sgn & 4) ? n3 - 1 - i3 : i3;
            // Coefficient: product over axes of sigma_axis on the odd axes.
            double coef = 1.0;
            if (comp & 1 && sgn & 1) coef = -coef;
            if (comp & 2 && sgn & 2) coef = -coef;
            if (comp & 4 && sgn & 4) coef = -coef;
            acc += coef * f.v[g.index(r1, r2, r3)];
          }
          comps[static_cast<std::size_t>(comp)].v[idx] = acc / 8.0;
        }
      }
    }
  }
  return comps;
}

std::array<RealField3D, 8> olct_parity_components(const RealField3D& f, const Grid3& wgrid,
                                                  const LCTTriple& p) {
  // Each slot integrates the whole signal against one cos/sin pattern; the
  // kernel's chirp phase has no definite parity in x, so restricting slot k
  // to the matching parity part of f would drop real cross terms.
  std::array<RealField3D, 8> out;
  for (int comp = 0; comp < 8; ++comp) {
    RealField3D stage = axis_pass_real(f, 0, wgrid.axis[0], p[0], (comp & 1) != 0);
    stage = axis_pass_real(stage, 1, wgrid.axis[1], p[1], (comp & 2) != 0);
    out[static_cast<std::size_t>(comp)] =
        axis_pass_real(stage, 2, wgrid.axis[2], p[2], (comp & 4) != 0);
  }
  return out;
}

OctonionField3D assemble_from_parity(const std::array<RealField3D, 8>& comps) {
  OctonionField3D out(comps[0].grid);
  for (std::size_t k = 0; k < 8; ++k) {
    if (comps[k].v.size() != out.v.size()) throw ShapeError("assemble_from_parity: size mismatch");
    for (std::size_t i = 0; i < out.v.size(); ++i) out.v[i].s[k] = comps[k].v[i];
  }
  return out;
}

ComplexField3D lct3d(const ComplexField3D& f, const Grid3& wgrid, const LCTTriple& p, Path path) {
  ComplexField3D stage = axis_pass_complex(f, 0, wgrid.axis[0], p[0], path);
  stage = axis_pass_complex(stage, 1, wgrid.axis[1], p[1], path);
  return axis_pass_complex(stage, 2, wgrid.axis[2], p[2], path);
}

ComplexField3D lct3d(const RealField3D& f, const Grid3& wgrid, const LCTTriple& p, Path path) {
  ComplexField3D cf(f.grid);
  for (std::size_t i = 0; i < f.v.size(); ++i) cf.v[i] = f.v[i];
  return lct3d(cf, wgrid, p, path);
}

OctonionField3D olct_from_lct3d(const RealField3D& f, const Grid3& wgrid, const LCTTriple& p,
                                Path path) {
  const LCTTriple pp = p;
  const LCTTriple pm = {p[0], p[1], flip_b(p[2])};
  const LCTTriple mp = {p[0], flip_b(p[1]), p[2]};
  const LCTTriple mm = {p[0], flip_b(p[1]), flip_b(p[2])};

  // The flipped-b transforms target the mirrored spectrum spacing of the same
  // lattice, which is identical because pairing only sees |b|.
  const ComplexField3D zpp = lct3d(f, wgrid, pp, path);
  const ComplexField3D zpm = lct3d(f, wgrid, pm, path);
  const ComplexField3D zmp = lct3d(f, wgrid, mp, path);
  const ComplexField3D zmm = lct3d(f, wgrid, mm, path);

  OctonionField3D out(wgrid);
  for (std::size_t i = 0; i < out.v.size(); ++i) {
    out.v[i] = assemble_four(zpp.v[i], zpm.v[i], zmp.v[i], zmm.v[i]);
  }
  return out;
}

Octonion assemble_four(const std::complex<double>& zpp, const std::complex<double>& zpm,
                       const std::complex<double>& zmp, const std::complex<double>& zmm) {
  Octonion one_minus_mu3(1.0);
  one_minus_mu3.s[3] = -1.0;
  Octonion one_plus_mu3(1.0);
  one_plus_mu3.s[3] = 1.0;
  const Octonion mu5 = Octonion::unit(5);

  auto emb = [](const std::complex<double>& z) {
    Octonion o;
    o.s[0] = z.real();
    o.s[1] = z.imag();
    return o;
  };

  const Octonion sum_a = emb(zpp + zpm);
  const Octonion sum_b = emb(zmp + zmm);
  const Octonion dif_a = emb(zpm - zpp);
  const Octonion dif_b = emb(zmm - zmp);
  const Octonion even_half = oct_mul(sum_a, one_minus_mu3) + oct_mul(sum_b, one_plus_mu3);
  const Octonion odd_half =
      oct_mul(oct_mul(dif_a, one_minus_mu3) + oct_mul(dif_b, one_plus_mu3), mu5);
  return (even_half + odd_half) * 0.25;
}

}  // namespace octolct
