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

#include "octolct/lct1d.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <utility>

#include "octolct/errors.hpp"

namespace octolct {

namespace {

constexpr double kDetTol = 1e-12;
constexpr double kMinB = 1e-12;

// FFTW planning is not thread-safe; execution on caller arrays is. Plans are
// created once per (size, sign) with FFTW_UNALIGNED so any buffer works.
fftw_plan dft_plan(int n, int sign) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, fftw_plan> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, sign);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<std::complex<double>> scratch(static_cast<std::size_t>(n));
  fftw_plan plan = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(scratch.data()),
                                    reinterpret_cast<fftw_complex*>(scratch.data()), sign,
                                    FFTW_ESTIMATE | FFTW_UNALIGNED);
  cache.emplace(key, plan);
  return plan;
}

void require_paired(const Grid1D& xgrid, const Grid1D& wgrid, double b) {
  const Grid1D want = xgrid.paired(b);
  if (!wgrid.same_as(want, 1e-9)) {
    throw ShapeError("chirp path requires the paired target lattice (n, 2*pi*|b|/(n*step))");
  }
}

}  // namespace

void LCTParams::validate() const {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(d)) {
    throw ParameterError("LCTParams: entries must be finite");
  }
  if (std::abs(a * d - b * c - 1.0) > kDetTol) {
    throw ParameterError("LCTParams: determinant must be 1 within 1e-12");
  }
  if (std::abs(b) < kMinB) {
    throw ParameterError("LCTParams: b must be nonzero");
  }
}

double kernel_phase(const LCTParams& p, double x, double w) {
  return (p.a * x * x - 2.0 * x * w + p.d * w * w - M_PI / 2.0) / (2.0 * p.b);
}

double kernel_scale(const LCTParams& p) { return 1.0 / std::sqrt(2.0 * M_PI * std::abs(p.b)); }

Octonion kernel_eval(const LCTParams& p, double x, double w, int axis_unit) {
  if (axis_unit < 1 || axis_unit > 7) throw ParameterError("kernel_eval: axis_unit in 1..7");
  const double xi = kernel_phase(p, x, w);
  const double scale = kernel_scale(p);
  Octonion k;
  k.s[0] = scale * std::cos(xi);
  k.s[static_cast<std::size_t>(axis_unit)] = scale * std::sin(xi);
  return k;
}

std::vector<std::complex<double>> lct1d_direct(std::span<const std::complex<double>> f,
                                               const Grid1D& xgrid, const Grid1D& wgrid,
                                               const LCTParams& p) {
  if (static_cast<int>(f.size()) != xgrid.n) throw ShapeError("lct1d_direct: size mismatch");
  p.validate();
  const double scale = kernel_scale(p) * xgrid.step;
  std::vector<std::complex<double>> out(static_cast<std::size_t>(wgrid.n));
  for (int j = 0; j < wgrid.n; ++j) {
    const double w = wgrid.coord(j);
    std::complex<double> acc(0.0, 0.0);
    for (int i = 0; i < xgrid.n; ++i) {
      const double xi = kernel_phase(p, xgrid.coord(i), w);
      acc += f[static_cast<std::size_t>(i)] * std::polar(1.0, xi);
    }
    out[static_cast<std::size_t>(j)] = acc * scale;
  }
  return out;
}

Chirp1D::Chirp1D(const Grid1D& xgrid, const Grid1D& wgrid, const LCTParams& p) {
  p.validate();
  require_paired(xgrid, wgrid, p.b);
  n_ = xgrid.n;
  const double sigma = p.b > 0.0 ? 1.0 : -1.0;
  forward_sign_ = sigma > 0.0;
  const double m = 0.5 * (n_ - 1);
  const double twist = 2.0 * M_PI * sigma / n_;
  const double scale = kernel_scale(p) * xgrid.step;

  pre_.resize(static_cast<std::size_t>(n_));
  post_.resize(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    const double x = xgrid.coord(i);
    pre_[static_cast<std::size_t>(i)] =
        std::polar(1.0, p.a * x * x / (2.0 * p.b) + twist * m * i);
  }
  for (int j = 0; j < n_; ++j) {
    const double w = wgrid.coord(j);
    const double phase =
        p.d * w * w / (2.0 * p.b) - M_PI / (4.0 * p.b) + twist * m * (j - m);
    post_[static_cast<std::size_t>(j)] = std::polar(scale, phase);
  }
  plan_ = dft_plan(n_, forward_sign_ ? FFTW_FORWARD : FFTW_BACKWARD);
}

void Chirp1D::apply(const std::complex<double>* in, std::complex<double>* out) const {
  std::vector<std::complex<double>> buf(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) buf[static_cast<std::size_t>(i)] = in[i] * pre_[static_cast<std::size_t>(i)];
  fftw_execute_dft(static_cast<fftw_plan>(plan_), reinterpret_cast<fftw_complex*>(buf.data()),
                   reinterpret_cast<fftw_complex*>(buf.data()));
  for (int j = 0; j < n_; ++j) out[j] = buf[static_cast<std::size_t>(j)] * post_[static_cast<std::size_t>(j)];
}

std::vector<std::complex<double>> lct1d_chirp_fft(std::span<const std::complex<double>> f,
                                                  const Grid1D& xgrid, const Grid1D& wgrid,
                                                  const LCTParams& p) {
  if (static_cast<int>(f.size()) != xgrid.n) throw ShapeError("lct1d_chirp_fft: size mismatch");
  Chirp1D engine(xgrid, wgrid, p);
  std::vector<std::complex<double>> out(static_cast<std::size_t>(wgrid.n));
  engine.apply(f.data(), out.data());
  return out;
}

std::vector<std::complex<double>> lct1d(std::span<const std::complex<double>> f,
                                        const Grid1D& xgrid, const Grid1D& wgrid,
                                        const LCTParams& p, Path path) {
  return path == Path::kFast ? lct1d_chirp_fft(f, xgrid, wgrid, p)
                             : lct1d_direct(f, xgrid, wgrid, p);
}

std::vector<std::complex<double>> lct1d_inverse(std::span<const std::complex<double>> F,
                                                const Grid1D& wgrid, const Grid1D& xgrid,
                                                const LCTParams& p, Path path) {
  return lct1d(F, wgrid, xgrid, p.inverse(), path);
}

std::array<std::array<int, 2>, 4> axis_pairs(int axis_unit) {
  if (axis_unit < 1 || axis_unit > 7) throw ParameterError("axis_pairs: axis_unit in 1..7");
  std::array<std::array<int, 2>, 4> pairs{};
  std::array<bool, 8> used{};
  int slot = 0;
  for (int i = 0; i < 8; ++i) {
    if (used[static_cast<std::size_t>(i)]) continue;
    const int j = kMulIndex[static_cast<std::size_t>(i)][static_cast<std::size_t>(axis_unit)];
    used[static_cast<std::size_t>(i)] = used[static_cast<std::size_t>(j)] = true;
    if (kMulSign[static_cast<std::size_t>(i)][static_cast<std::size_t>(axis_unit)] > 0) {
      pairs[static_cast<std::size_t>(slot++)] = {i, j};
    } else {
      pairs[static_cast<std::size_t>(slot++)] = {j, i};
    }
  }
  return pairs;
}

std::vector<Octonion> lct1d_octonion(std::span<const Octonion> f, const Grid1D& xgrid,
                                     const Grid1D& wgrid, const LCTParams& p, int axis_unit,
                                     Path path) {
  if (static_cast<int>(f.size()) != xgrid.n) throw ShapeError("lct1d_octonion: size mismatch");
  const auto pairs = axis_pairs(axis_unit);
  std::vector<Octonion> out(static_cast<std::size_t>(wgrid.n));
  std::vector<std::complex<double>> line(static_cast<std::size_t>(xgrid.n));
  for (const auto& pq : pairs) {
    const std::size_t lo = static_cast<std::size_t>(pq[0]);
    const std::size_t hi = static_cast<std::size_t>(pq[1]);
    for (int i = 0; i < xgrid.n; ++i) {
      line[static_cast<std::size_t>(i)] = {f[static_cast<std::size_t>(i)].s[lo],
                                           f[static_cast<std::size_t>(i)].s[hi]};
    }
    const auto t = lct1d(line, xgrid, wgrid, p, path);
    for (int j = 0; j < wgrid.n; ++j) {
      out[static_cast<std::size_t>(j)].s[lo] = t[static_cast<std::size_t>(j)].real();
      out[static_cast<std::size_t>(j)].s[hi] = t[static_cast<std::size_t>(j)].imag();
    }
  }
  return out;
}

}  // namespace octolct
