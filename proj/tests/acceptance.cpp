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

// Release gate: one check per shipping claim, each printed as a single
// PASS/FAIL line with its wall time. Exits with the number of failures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "octolct/analysis.hpp"
#include "octolct/field.hpp"
#include "octolct/generate.hpp"
#include "octolct/grid.hpp"
#include "octolct/lct1d.hpp"
#include "octolct/octonion.hpp"
#include "octolct/olct3d.hpp"
#include "octolct/stolct.hpp"

namespace {

using namespace octolct;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = false;
  std::string detail;
};

int g_failures = 0;

void run_criterion(int id, const std::string& label, const std::function<Outcome()>& fn,
                   double budget_seconds) {
  const auto t0 = Clock::now();
  Outcome out;
  try {
    out = fn();
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (budget_seconds > 0.0 && secs > budget_seconds) {
    out.ok = false;
    out.detail += " [over time budget " + std::to_string(budget_seconds) + "s]";
  }
  std::printf("%s criterion %d: %s (%.2fs) %s\n", out.ok ? "PASS" : "FAIL", id, label.c_str(),
              secs, out.detail.c_str());
  std::fflush(stdout);
  if (!out.ok) ++g_failures;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

// ---------------------------------------------------------------------------
// Independent doubled-quaternion oracle for the multiplication table.

struct Quat {
  double w = 0, x = 0, y = 0, z = 0;
};

Quat qmul(const Quat& a, const Quat& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

Quat qconj(const Quat& a) { return {a.w, -a.x, -a.y, -a.z}; }

struct Pair {
  Quat a, b;
};

Pair cd_mul(const Pair& p, const Pair& q) {
  Pair r;
  // (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c))
  const Quat t1 = qmul(p.a, q.a);
  const Quat t2 = qmul(qconj(q.b), p.b);
  const Quat t3 = qmul(q.b, p.a);
  const Quat t4 = qmul(p.b, qconj(q.a));
  r.a = {t1.w - t2.w, t1.x - t2.x, t1.y - t2.y, t1.z - t2.z};
  r.b = {t3.w + t4.w, t3.x + t4.x, t3.y + t4.y, t3.z + t4.z};
  return r;
}

Pair unit_pair(int k) {
  Pair p;
  double* slot = nullptr;
  const int low = k & 3;
  Quat& half = (k < 4) ? p.a : p.b;
  switch (low) {
    case 0: slot = &half.w; break;
    case 1: slot = &half.x; break;
    case 2: slot = &half.y; break;
    default: slot = &half.z; break;
  }
  *slot = 1.0;
  return p;
}

std::array<double, 8> flatten(const Pair& p) {
  return {p.a.w, p.a.x, p.a.y, p.a.z, p.b.w, p.b.x, p.b.y, p.b.z};
}

Outcome criterion1() {
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      const Octonion got = oct_mul(Octonion::unit(i), Octonion::unit(j));
      const std::array<double, 8> want = flatten(cd_mul(unit_pair(i), unit_pair(j)));
      for (int k = 0; k < 8; ++k) {
        if (got.s[static_cast<std::size_t>(k)] != want[static_cast<std::size_t>(k)]) {
          return {false, "table mismatch at (" + std::to_string(i) + "," + std::to_string(j) + ")"};
        }
      }
      // The packed table must agree with the realized products.
      Octonion expect{};
      expect.s[static_cast<std::size_t>(kMulIndex[i][j])] = kMulSign[i][j];
      for (int k = 0; k < 8; ++k) {
        if (got.s[static_cast<std::size_t>(k)] != expect.s[static_cast<std::size_t>(k)]) {
          return {false, "packed table disagrees at (" + std::to_string(i) + "," +
                             std::to_string(j) + ")"};
        }
      }
    }
  }

  std::mt19937_64 rng(0xACCE55);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  double worst_norm = 0.0;
  double worst_pair = 0.0;
  for (int t = 0; t < 10000; ++t) {
    Octonion a, b;
    for (int k = 0; k < 8; ++k) {
      a.s[static_cast<std::size_t>(k)] = unit(rng);
      b.s[static_cast<std::size_t>(k)] = unit(rng);
    }
    const double lhs = norm(oct_mul(a, b));
    const double rhs = norm(a) * norm(b);
    worst_norm = std::max(worst_norm, std::abs(lhs - rhs) / rhs);

    const Quaternion qa(a.s[0], a.s[1], a.s[2], a.s[3]);
    const Quaternion qb(b.s[0], b.s[1], b.s[2], b.s[3]);
    worst_pair = std::max(worst_pair, quat_pair_identities_check(qa, qb));
  }
  const bool ok = worst_norm <= 1e-12 && worst_pair <= 1e-12;
  return {ok, "norm-residual=" + fmt(worst_norm) + " pair-residual=" + fmt(worst_pair)};
}

Outcome criterion2() {
  const Grid3 xg = Grid3::cubic(9, 0.75);
  const RealField3D f = make_random(xg, 1001);
  double worst_sep = 0.0, worst_par = 0.0, worst_four = 0.0;
  for (std::uint64_t t = 0; t < 5; ++t) {
    const LCTTriple A = random_triple(0xC2 + t);
    for (const auto& p : A) {
      if (std::abs(p.a * p.d - p.b * p.c - 1.0) > 1e-12) return {false, "triple det drifted"};
      if (std::abs(p.b) < 0.5 || std::abs(p.b) > 2.0) return {false, "triple |b| out of range"};
    }
    const Grid3 wg = paired_grid(xg, A);
    const OctonionField3D ref = olct_direct(f, wg, A);
    worst_sep = std::max(worst_sep, rel_l2_diff(olct_separable(f, wg, A, Path::kFast), ref));
    worst_sep = std::max(worst_sep, rel_l2_diff(olct_separable(f, wg, A, Path::kDirect), ref));
    worst_par = std::max(
        worst_par, rel_l2_diff(assemble_from_parity(olct_parity_components(f, wg, A)), ref));
    worst_four = std::max(worst_four, rel_l2_diff(olct_from_lct3d(f, wg, A, Path::kFast), ref));
  }
  const bool ok = worst_sep <= 1e-10 && worst_par <= 1e-10 && worst_four <= 1e-10;
  return {ok, "separable=" + fmt(worst_sep) + " parity=" + fmt(worst_par) +
                  " four-lct=" + fmt(worst_four)};
}

Outcome criterion3() {
  const Grid3 xg = Grid3::cubic(33, 0.5);  // spans [-8, 8] per axis
  const LCTTriple A = random_triple(0xC3);
  const Grid3 wg = paired_grid(xg, A);

  const RealField3D fr = make_random(xg, 33);
  const OctonionField3D Fr = olct_separable(fr, wg, A, Path::kFast);
  const OctonionField3D br = olct_inverse(Fr, xg, A, Path::kFast);
  const double fast_err = rel_l2_diff(br, embed_real(fr));

  const RealField3D fg = make_gaussian(xg, 1.0);
  const OctonionField3D Fg = olct_separable(fg, wg, A, Path::kDirect);
  const OctonionField3D bg = olct_inverse(Fg, xg, A, Path::kDirect);
  const double quad_err = rel_l2_diff(bg, embed_real(fg));

  const bool ok = fast_err <= 1e-9 && quad_err <= 1e-2;
  return {ok, "fast-roundtrip=" + fmt(fast_err) + " quadrature-roundtrip=" + fmt(quad_err)};
}

double spec_rel_diff(const Spectrogram& a, const Spectrogram& b) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < a.v.size(); ++i) {
    Octonion d = a.v[i];
    d -= b.v[i];
    num += norm_sq(d);
    den += norm_sq(b.v[i]);
  }
  return std::sqrt(num / den);
}

Outcome criterion4() {
  const Grid3 xg = Grid3::cubic(9, 0.75);
  const Grid3 ug = make_ugrid(xg, 4);  // 3 x 3 x 3 translations
  if (ug.count() != 27) return {false, "unexpected translation lattice"};
  const RealField3D f = make_random(xg, 44);
  const RealField3D g = make_random(xg, 45);
  const Window3D win(make_gaussian(xg, 0.8));

  double worst_route = 0.0, worst_stlct = 0.0, worst_parity = 0.0, worst_lin = 0.0;
  for (std::uint64_t t = 0; t < 3; ++t) {
    const LCTTriple A = random_triple(0xC4 + t);
    const Grid3 wg = paired_grid(xg, A);
    const Spectrogram ref = stolct_forward(f, win, wg, ug, A);
    worst_route =
        std::max(worst_route, spec_rel_diff(stolct_via_olct(f, win, wg, ug, A, Path::kDirect), ref));
    worst_stlct = std::max(
        worst_stlct, spec_rel_diff(stolct_from_stlct3d(f, win, wg, ug, A, Path::kFast), ref));
    worst_parity = std::max(
        worst_parity, spec_rel_diff(assemble_from_parity(stolct_parity_components(f, win, wg, ug, A)),
                                    ref));

    RealField3D mix(xg);
    for (std::size_t i = 0; i < mix.v.size(); ++i) mix.v[i] = 0.6 * f.v[i] - 1.7 * g.v[i];
    const Spectrogram Gf = ref;
    const Spectrogram Gg = stolct_forward(g, win, wg, ug, A);
    Spectrogram lincomb(wg, ug);
    for (std::size_t i = 0; i < lincomb.v.size(); ++i) {
      lincomb.v[i] = Gf.v[i] * 0.6 + Gg.v[i] * (-1.7);
    }
    worst_lin = std::max(worst_lin, spec_rel_diff(stolct_forward(mix, win, wg, ug, A), lincomb));
  }
  const bool ok =
      worst_route <= 1e-12 && worst_stlct <= 1e-10 && worst_parity <= 1e-10 && worst_lin <= 1e-12;
  return {ok, "routes=" + fmt(worst_route) + " stlct3d=" + fmt(worst_stlct) +
                  " parity=" + fmt(worst_parity) + " linearity=" + fmt(worst_lin)};
}

Outcome criterion5() {
  const Grid3 xg = Grid3::cubic(17, 0.5);
  const Grid3 ug = make_ugrid(xg, 1);
  const LCTTriple A = random_triple(0xC5);
  const Grid3 wg = paired_grid(xg, A);

  const RealField3D f = make_gaussian(xg, 1.0);
  const Window3D win(make_gaussian(xg, 0.8));
  const Spectrogram G = stolct_via_olct(f, win, wg, ug, A, Path::kFast);
  const OctonionField3D rec = stolct_reconstruct(G, win, xg, A, Path::kFast);
  const double gauss_err = rel_l2_diff(rec, embed_real(f));

  const RealField3D fr = make_random(xg, 55);
  const Window3D delta(make_delta(xg));
  const Spectrogram Gd = stolct_via_olct(fr, delta, wg, ug, A, Path::kFast);
  const OctonionField3D recd = stolct_reconstruct(Gd, delta, xg, A, Path::kFast);
  const double delta_err = rel_l2_diff(recd, embed_real(fr));

  const bool ok = gauss_err <= 5e-2 && delta_err <= 1e-9;
  return {ok, "gaussian-recon=" + fmt(gauss_err) + " delta-recon=" + fmt(delta_err)};
}

Outcome criterion6() {
  const std::vector<InequalityReport> reports = run_battery(BatteryOptions{});
  int combos = 0;
  int failed = 0;
  std::string first_bad;
  std::vector<std::string> seen;
  for (const auto& r : reports) {
    if (!r.passed) {
      ++failed;
      if (first_bad.empty()) {
        first_bad = r.name + "[" + r.fixture + "] lhs=" + fmt(r.lhs) + " rhs=" + fmt(r.rhs);
      }
    }
  }
  // A combo is one (fixture, parameter triple) pairing; the exponent suffix
  // distinguishes checks within a combo, so strip it before counting.
  for (const auto& r : reports) {
    std::string key = r.fixture;
    const std::size_t cut = std::min(key.find(",p="), key.find(",fraction="));
    if (cut != std::string::npos) key.resize(cut);
    if (std::find(seen.begin(), seen.end(), key) == seen.end()) seen.push_back(key);
  }
  combos = static_cast<int>(seen.size());
  const bool ok = failed == 0 && combos >= 15;
  std::string detail = "reports=" + std::to_string(reports.size()) +
                       " fixtures=" + std::to_string(combos) + " failed=" + std::to_string(failed);
  if (!first_bad.empty()) detail += " first-violation: " + first_bad;
  return {ok, detail};
}

Outcome criterion7() {
  const Grid3 xg = Grid3::cubic(5, 0.9);
  const RealField3D f = make_gaussian(xg, 1.0);
  const RealField3D g = make_chirped_gaussian(xg, 1.0, 0.5);
  const Window3D phi(make_gaussian(xg, 0.8));
  const Window3D psi(make_box(xg, 1.0));
  const LCTTriple A = random_triple(0xC7);

  const ConvolutionReport r1 = check_convolution_theorem(f, g, phi, psi, A, 2, "gate");
  const ConvolutionReport r2 = check_convolution_theorem(f, g, phi, psi, A, 2, "gate");
  const bool deterministic = r1.lhs_routes_rel_diff == r2.lhs_routes_rel_diff &&
                             r1.identity_rel_discrepancy == r2.identity_rel_discrepancy &&
                             r1.lhs_l2 == r2.lhs_l2 && r1.rhs_l2 == r2.rhs_l2;
  const bool ok = r1.lhs_routes_rel_diff <= 1e-12 && deterministic &&
                  std::isfinite(r1.identity_rel_discrepancy);
  return {ok, "routes=" + fmt(r1.lhs_routes_rel_diff) +
                  " identity-gap=" + fmt(r1.identity_rel_discrepancy) +
                  (deterministic ? " deterministic" : " NON-DETERMINISTIC")};
}

Outcome criterion8() {
  const int n = 4096;
  const Grid1D xg(n, 0.01);
  const LCTParams p(0.8, 1.3, -0.25, (1.0 + 1.3 * -0.25) / 0.8);
  const Grid1D wg = xg.paired(p.b);
  std::vector<std::complex<double>> sig(static_cast<std::size_t>(n));
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (auto& v : sig) v = {unit(rng), unit(rng)};

  auto best_of = [](int reps, const std::function<void()>& fn) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
      const auto t0 = Clock::now();
      fn();
      best = std::min(best, std::chrono::duration<double>(Clock::now() - t0).count());
    }
    return best;
  };

  std::vector<std::complex<double>> sink;
  const double direct_s = best_of(3, [&] { sink = lct1d_direct(sig, xg, wg, p); });
  const double fast_s = best_of(3, [&] { sink = lct1d_chirp_fft(sig, xg, wg, p); });
  const double speedup = direct_s / fast_s;

  const Grid3 xg3 = Grid3::cubic(64, 0.25);
  const LCTTriple A = random_triple(0xC8);
  const Grid3 wg3 = paired_grid(xg3, A);
  const RealField3D f = make_random(xg3, 88);
  const auto t0 = Clock::now();
  const OctonionField3D F = olct_separable(f, wg3, A, Path::kFast);
  const double vol_s = std::chrono::duration<double>(Clock::now() - t0).count();

  const bool ok = speedup >= 10.0 && vol_s < 5.0 && !F.v.empty();
  return {ok, "chirp-speedup=" + fmt(speedup) + "x volume64-fast=" + fmt(vol_s) +
                  "s (accuracy gated by criteria 2 and 3)"};
}

}  // namespace

int main() {
  std::printf("octolct acceptance gate\n");
  run_criterion(1, "octonion algebra exactness", criterion1, 1.0);
  run_criterion(2, "transform route equivalences", criterion2, 30.0);
  run_criterion(3, "inversion round trips", criterion3, 60.0);
  run_criterion(4, "windowed transform identities", criterion4, 60.0);
  run_criterion(5, "spectrogram reconstruction", criterion5, 0.0);
  run_criterion(6, "inequality battery", criterion6, 0.0);
  run_criterion(7, "convolution diagnostic", criterion7, 0.0);
  run_criterion(8, "fast path performance", criterion8, 0.0);
  if (g_failures == 0) {
    std::printf("all criteria passed\n");
  } else {
    std::printf("%d criterion(s) failed\n", g_failures);
  }
  return g_failures;
}
