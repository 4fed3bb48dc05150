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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>
#include <string>

#include "octolct/analysis.hpp"
#include "octolct/errors.hpp"
#include "octolct/generate.hpp"
#include "octolct/olct3d.hpp"
#include "octolct/stolct.hpp"

namespace {

using namespace octolct;

// Stirling series after shifting the argument up; no Euler constant involved.
double digamma_oracle(double x) {
  double acc = 0.0;
  while (x < 12.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  return acc + std::log(x) - 0.5 * inv -
         inv2 * (1.0 / 12.0 - inv2 * (1.0 / 120.0 - inv2 / 252.0));
}

}  // namespace

TEST_CASE("norms of the unit Gaussian match their closed forms") {
  const Grid3 g = Grid3::cubic(81, 0.25);
  const RealField3D f = make_gaussian(g, 1.0);
  CHECK(lp_norm(f, 2.0) == doctest::Approx(std::pow(M_PI, 0.75)).epsilon(1e-10));
  CHECK(lp_norm(f, 1.0) == doctest::Approx(std::pow(2.0 * M_PI, 1.5)).epsilon(1e-10));
  CHECK(lp_norm(f, std::numeric_limits<double>::infinity()) == 1.0);
  CHECK_THROWS_AS(lp_norm(f, 0.5), ParameterError);
}

TEST_CASE("inner products") {
  const Grid3 g = Grid3::cubic(3, 0.5);
  RealField3D f(g), h(g);
  for (std::size_t i = 0; i < f.v.size(); ++i) {
    f.v[i] = static_cast<double>(i);
    h.v[i] = 1.0;
  }
  const double expected = (26.0 * 27.0 / 2.0) * 0.125;
  CHECK(inner_product(f, h) == doctest::Approx(expected).epsilon(1e-14));

  RealField3D other(Grid3::cubic(5, 0.5));
  CHECK_THROWS_AS(inner_product(f, other), ShapeError);

  OctonionField3D a(g), b(g);
  a.v[0] = Octonion::unit(1);
  b.v[0] = Octonion::unit(2);
  const Octonion ip = inner_product(a, b);
  // mu1 * conj(mu2) = -mu1 mu2 = -mu3, times the cell volume
  CHECK(ip.s[3] == doctest::Approx(-0.125).epsilon(1e-14));
}

TEST_CASE("convolution against closed forms") {
  const Grid3 g = Grid3::cubic(11, 0.5);

  SUBCASE("delta is the identity") {
    const RealField3D f = make_random(g, 5);
    const RealField3D d = make_delta(g);
    const RealField3D out = convolve(f, d);
    CHECK(rel_l2_diff(out, f) <= 1e-13);
  }

  SUBCASE("box autoconvolution is the lattice triangle") {
    const RealField3D box = make_box(g, 1.2);
    const RealField3D out = convolve(box, box);
    // per axis: 5 samples inside the box; overlap count drops by |lag|
    const int c = (g.axis[0].n - 1) / 2;
    for (int i1 = 0; i1 < g.axis[0].n; ++i1) {
      for (int i2 = 0; i2 < g.axis[1].n; ++i2) {
        for (int i3 = 0; i3 < g.axis[2].n; ++i3) {
          double expected = 1.0;
          for (int lag : {i1 - c, i2 - c, i3 - c}) {
            expected *= std::max(0, 5 - std::abs(lag)) * 0.5;
          }
          CHECK(out.v[g.index(i1, i2, i3)] == doctest::Approx(expected).epsilon(1e-12));
        }
      }
    }
  }

  SUBCASE("commutes") {
    const RealField3D f = make_random(g, 6);
    const RealField3D h = make_gaussian(g, 1.0);
    CHECK(rel_l2_diff(convolve(f, h), convolve(h, f)) <= 1e-13);
  }

  SUBCASE("guards") {
    RealField3D f(Grid3::cubic(4, 0.5));
    f.v[0] = 1.0;
    CHECK_THROWS_AS(convolve(f, f), ShapeError);
    RealField3D big(Grid3::cubic(41, 0.5));
    big.v[0] = 1.0;
    CHECK_THROWS_AS(convolve(big, big), ResourceError);
  }
}

TEST_CASE("uncertainty constant matches a digamma evaluation") {
  const double d = std::log(2.0) + digamma_oracle(0.5);
  CHECK(log_uncertainty_constant() == doctest::Approx(d).epsilon(1e-10));
  CHECK(log_uncertainty_constant() < 0.0);
}

TEST_CASE("report bookkeeping") {
  const InequalityReport r = make_report("x", "fx", 1.0, 2.0, 3.0);
  CHECK(r.margin == doctest::Approx(1.0));
  CHECK(r.passed);
  CHECK_FALSE(make_report("x", "fx", 2.0 + 1e-6, 2.0, 3.0).passed);
  // ties within roundoff count as satisfied
  CHECK(make_report("x", "fx", 2.0 + 1e-13, 2.0, 3.0).passed);
}

TEST_CASE("top-energy region greedily captures the requested fraction") {
  const Grid3 wg = Grid3::cubic(3, 1.0);
  const Grid3 ug = Grid3::cubic(1, 1.0);
  Spectrogram G(wg, ug);
  G.v[4] = Octonion(3.0);   // energy 9
  G.v[10] = Octonion(2.0);  // energy 4
  G.v[20] = Octonion(1.0);  // energy 1
  const ConcentrationRegion region = top_energy_region(G, 0.9);
  // 9/14 then 13/14 >= 0.9 * 14 / 14, so two cells
  CHECK(region.cells.size() == 2);
  CHECK(region.cells[0] == 4);
  CHECK(region.cells[1] == 10);
  CHECK(region.measure == doctest::Approx(2.0));
  CHECK(region.epsilon == 0.0);  // 1 - 13 clamps to the unit range
  CHECK_THROWS_AS(top_energy_region(G, 0.0), ParameterError);
  CHECK_THROWS_AS(top_energy_region(G, 1.5), ParameterError);
}

TEST_CASE("exponent validation") {
  const Grid3 g = Grid3::cubic(5, 0.8);
  const RealField3D f = make_gaussian(g, 1.0);
  const Window3D phi(make_gaussian(g, 0.8));
  const LCTTriple A = random_triple(1);
  CHECK_THROWS_AS(check_sup_bound(f, phi, A, 2.0, 3.0, 1, "t"), ParameterError);
  CHECK_THROWS_AS(check_hausdorff_young(f, A, 3.0, "t"), ParameterError);
  CHECK_THROWS_AS(check_lieb(f, phi, A, 1.5, 1, "t"), ParameterError);
  CHECK_THROWS_AS(check_minkowski(f, phi, A, 0.5, 1, "t"), ParameterError);
  CHECK_THROWS_AS(check_concentration(f, phi, A, 0.9, 1, "t"), ParameterError);
}

TEST_CASE("Plancherel makes the p=2 Hausdorff-Young bound tight") {
  const Grid3 g = Grid3::cubic(9, 0.75);
  const RealField3D f = make_random(g, 17);
  const LCTTriple A = random_triple(3);
  const InequalityReport r = check_hausdorff_young(f, A, 2.0, "tight");
  CHECK(r.passed);
  CHECK(r.constant == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(r.lhs - r.rhs) <= 1e-10 * r.rhs);
}

TEST_CASE("battery passes and is deterministic") {
  const BatteryOptions opts;
  const auto reports = run_battery(opts);
  CHECK(reports.size() == 120);  // 5 triples x 3 fixtures x 8 checks
  std::set<std::string> keys;
  int failed = 0;
  for (const auto& r : reports) {
    keys.insert(r.name + "|" + r.fixture);
    if (!r.passed) {
      failed += 1;
      MESSAGE("failed: ", r.name, " [", r.fixture, "] lhs=", r.lhs, " rhs=", r.rhs);
    }
  }
  CHECK(failed == 0);
  CHECK(keys.size() == reports.size());

  const auto again = run_battery(opts);
  REQUIRE(again.size() == reports.size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CHECK(again[i].lhs == reports[i].lhs);
    CHECK(again[i].rhs == reports[i].rhs);
  }
}

TEST_CASE("log bound also holds with the origin cell skipped") {
  const Grid3 g = Grid3::cubic(9, 0.75);
  const RealField3D f = make_gaussian(g, 1.0);
  const Window3D phi(make_gaussian(g, 0.8));
  const LCTTriple A = random_triple(11);
  CHECK(check_log_uncertainty(f, phi, A, 1, "t", false).passed);
  CHECK(check_log_uncertainty(f, phi, A, 1, "t", true).passed);
}

TEST_CASE("convolution diagnostic runs, agrees on the left side, and is deterministic") {
  const Grid3 g = Grid3::cubic(5, 0.9);
  const RealField3D f = make_gaussian(g, 1.0);
  const RealField3D h = make_chirped_gaussian(g, 1.0, 0.5);
  const Window3D phi(make_gaussian(g, 0.8));
  const Window3D psi(make_box(g, 1.0));
  const LCTTriple A = {LCTParams::fourier(), LCTParams::fourier(), LCTParams::fourier()};

  const ConvolutionReport r1 = check_convolution_theorem(f, h, phi, psi, A, 2, "fx");
  CHECK(r1.lhs_routes_rel_diff <= 1e-12);
  CHECK(r1.lhs_l2 > 0.0);
  CHECK(r1.rhs_l2 > 0.0);
  CHECK(std::isfinite(r1.identity_rel_discrepancy));

  const ConvolutionReport r2 = check_convolution_theorem(f, h, phi, psi, A, 2, "fx");
  CHECK(r1.lhs_routes_rel_diff == r2.lhs_routes_rel_diff);
  CHECK(r1.identity_rel_discrepancy == r2.identity_rel_discrepancy);
  CHECK(r1.lhs_l2 == r2.lhs_l2);
  CHECK(r1.rhs_l2 == r2.rhs_l2);

  const Grid3 big = Grid3::cubic(9, 0.9);
  const RealField3D fb = make_gaussian(big, 1.0);
  const Window3D phib(make_gaussian(big, 0.8));
  CHECK_THROWS_AS(check_convolution_theorem(fb, fb, phib, phib, A, 1, "fx"), ResourceError);
}
