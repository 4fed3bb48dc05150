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

#include <chrono>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "octolct/analysis.hpp"
#include "octolct/errors.hpp"
#include "octolct/field_io.hpp"
#include "octolct/generate.hpp"
#include "octolct/lct1d.hpp"
#include "octolct/olct3d.hpp"
#include "octolct/parallel.hpp"
#include "octolct/stolct.hpp"

namespace {

using namespace octolct;
using nlohmann::json;

LCTParams parse_matrix(const std::string& text) {
  std::array<double, 4> q{};
  std::stringstream ss(text);
  std::string tok;
  int i = 0;
  while (std::getline(ss, tok, ',')) {
    if (i >= 4) throw ParameterError("--matrix expects exactly four entries a,b,c,d");
    try {
      q[i++] = std::stod(tok);
    } catch (const std::exception&) {
      throw ParameterError("--matrix entry is not a number: " + tok);
    }
  }
  if (i != 4) throw ParameterError("--matrix expects exactly four entries a,b,c,d");
  return LCTParams(q[0], q[1], q[2], q[3]);
}

struct MatrixFlags {
  std::string m1 = "0,1,-1,0";
  std::string m2 = "0,1,-1,0";
  std::string m3 = "0,1,-1,0";

  LCTTriple parse() const { return {parse_matrix(m1), parse_matrix(m2), parse_matrix(m3)}; }
};

void add_matrix_flags(CLI::App* cmd, MatrixFlags& mf) {
  cmd->add_option("--matrix-1", mf.m1, "Axis-1 parameters a,b,c,d (det must be 1)");
  cmd->add_option("--matrix-2", mf.m2, "Axis-2 parameters a,b,c,d");
  cmd->add_option("--matrix-3", mf.m3, "Axis-3 parameters a,b,c,d");
}

struct SignalFlags {
  std::string in;
  std::string generate;
  int n = 17;
  double step = 0.5;
  double sigma = 1.0;
  double rate = 0.7;
  double half_width = 1.2;
  std::uint64_t seed = 0;
};

void add_signal_flags(CLI::App* cmd, SignalFlags& sf) {
  cmd->add_option("--in", sf.in, "Input field file (payload path; sidecar is <path>.json)");
  cmd->add_option("--generate", sf.generate,
                  "Generate the input: gaussian | chirped-gaussian | box | delta | random");
  cmd->add_option("--n", sf.n, "Samples per axis for generated input");
  cmd->add_option("--step", sf.step, "Lattice step for generated input");
  cmd->add_option("--sigma", sf.sigma, "Gaussian width");
  cmd->add_option("--rate", sf.rate, "Chirp rate for chirped-gaussian");
  cmd->add_option("--half-width", sf.half_width, "Box half width");
  cmd->add_option("--seed", sf.seed, "Seed for random generation; recorded in output headers");
}

RealField3D load_signal(const SignalFlags& sf) {
  if (sf.in.empty() == sf.generate.empty()) {
    throw ParameterError("exactly one of --in / --generate is required");
  }
  if (!sf.in.empty()) return read_real_field(sf.in);
  const Grid3 g = Grid3::cubic(sf.n, sf.step);
  if (sf.generate == "gaussian") return make_gaussian(g, sf.sigma);
  if (sf.generate == "chirped-gaussian") return make_chirped_gaussian(g, sf.sigma, sf.rate);
  if (sf.generate == "box") return make_box(g, sf.half_width);
  if (sf.generate == "delta") return make_delta(g);
  if (sf.generate == "random") return make_random(g, sf.seed);
  throw ParameterError("unknown --generate kind: " + sf.generate);
}

Window3D parse_window(const std::string& spec, const Grid3& grid) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  try {
    if (kind == "gaussian") return Window3D(make_gaussian(grid, std::stod(arg)));
    if (kind == "box") return Window3D(make_box(grid, std::stod(arg)));
  } catch (const ParameterError&) {
    throw;
  } catch (const std::exception&) {
    throw ParameterError("window spec needs a numeric argument: " + spec);
  }
  if (kind == "file") return Window3D(read_real_field(arg));
  throw ParameterError("unknown window spec: " + spec + " (gaussian:s | box:r | file:path)");
}

Path parse_path(const std::string& text) {
  if (text == "direct") return Path::kDirect;
  if (text == "fast") return Path::kFast;
  throw ParameterError("--path must be direct or fast");
}

std::array<int, 3> parse_index_triple(const std::string& text) {
  std::array<int, 3> out{};
  std::stringstream ss(text);
  std::string tok;
  int i = 0;
  while (std::getline(ss, tok, ',')) {
    if (i >= 3) throw ParameterError("index triple expects i,j,k");
    try {
      out[i++] = std::stoi(tok);
    } catch (const std::exception&) {
      throw ParameterError("index triple entry is not an integer: " + tok);
    }
  }
  if (i != 3) throw ParameterError("index triple expects i,j,k");
  return out;
}

std::ostream& open_or_stdout(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path, std::ios::trunc);
  if (!file) throw ResourceError("cannot open " + path);
  return file;
}

// --- transform ---------------------------------------------------------

struct TransformFlags {
  MatrixFlags matrices;
  SignalFlags signal;
  bool inverse = false;
  std::string path = "fast";
  std::string out;
  std::string reference;
  double tol = 0.0;
};

int run_transform(const TransformFlags& tf) {
  const LCTTriple A = tf.matrices.parse();
  const Path path = parse_path(tf.path);
  if (tf.out.empty()) throw ParameterError("--out is required");

  if (tf.inverse) {
    if (tf.signal.in.empty()) throw ParameterError("--inverse requires --in (an octonion field)");
    const OctonionField3D F = read_octonion_field(tf.signal.in);
    const Grid3 xgrid = paired_grid(F.grid, A);
    const OctonionField3D rec = olct_inverse(F, xgrid, A, path);
    write_field(rec, tf.out, tf.signal.seed);
    std::cout << "inverse-transform cells=" << rec.grid.count() << " out=" << tf.out << "\n";
    if (!tf.reference.empty()) {
      const RealField3D ref = read_real_field(tf.reference);
      RealField3D re(rec.grid);
      for (std::size_t i = 0; i < rec.v.size(); ++i) re.v[i] = rec.v[i].s[0];
      const double diff = rel_l2_diff(re, ref);
      std::cout << "roundtrip-rel-l2=" << std::setprecision(17) << diff << "\n";
      if (tf.tol > 0.0 && !(diff <= tf.tol)) return 1;
    }
    return 0;
  }

  const RealField3D f = load_signal(tf.signal);
  const Grid3 wgrid = paired_grid(f.grid, A);
  const OctonionField3D F =
      path == Path::kFast ? olct_separable(f, wgrid, A, Path::kFast) : olct_direct(f, wgrid, A);
  write_field(F, tf.out, tf.signal.seed);
  std::cout << "transform cells=" << F.grid.count() << " out=" << tf.out << "\n";
  return 0;
}

// --- spectrogram --------------------------------------------------------

struct SpectrogramFlags {
  MatrixFlags matrices;
  SignalFlags signal;
  std::string window = "gaussian:1.0";
  std::string path = "fast";
  int ugrid_stride = 1;
  std::string out;
  std::string out_full;
  std::string slice_u;
  int slice_w3 = -1;
};

void write_spectrogram_full(const Spectrogram& G, const std::string& path, std::uint64_t seed) {
  json j;
  j["dtype"] = kDtypeOctonion;
  j["order"] = "u-major-axis3-fastest";
  for (int a = 0; a < 3; ++a) {
    j["wshape"][a] = G.wgrid.axis[a].n;
    j["wsteps"][a] = G.wgrid.axis[a].step;
    j["woffsets"][a] = G.wgrid.axis[a].coord(0);
    j["ushape"][a] = G.ugrid.axis[a].n;
    j["usteps"][a] = G.ugrid.axis[a].step;
    j["uoffsets"][a] = G.ugrid.axis[a].coord(0);
  }
  j["seed"] = seed;
  std::ofstream sidecar(header_sidecar_path(path), std::ios::trunc);
  if (!sidecar) throw ResourceError("cannot open " + header_sidecar_path(path));
  sidecar << j.dump(2) << '\n';

  std::ofstream payload(path, std::ios::binary | std::ios::trunc);
  if (!payload) throw ResourceError("cannot open " + path);
  const std::size_t count = G.v.size();
  std::vector<double> plane(count);
  for (int k = 0; k < 8; ++k) {
    for (std::size_t i = 0; i < count; ++i) plane[i] = G.v[i].s[k];
    payload.write(reinterpret_cast<const char*>(plane.data()),
                  static_cast<std::streamsize>(count * sizeof(double)));
  }
  if (!payload) throw ResourceError("short write to " + path);
}

int run_spectrogram(const SpectrogramFlags& sf) {
  const LCTTriple A = sf.matrices.parse();
  const Path path = parse_path(sf.path);
  if (sf.out.empty() && sf.out_full.empty()) {
    throw ParameterError("--out (CSV slice) or --out-full (raw payload) is required");
  }

  const RealField3D f = load_signal(sf.signal);
  const Window3D window = parse_window(sf.window, f.grid);
  const Grid3 wgrid = paired_grid(f.grid, A);
  const Grid3 ugrid = make_ugrid(f.grid, sf.ugrid_stride);
  const Spectrogram G = path == Path::kFast
                            ? stolct_via_olct(f, window, wgrid, ugrid, A, Path::kFast)
                            : stolct_forward(f, window, wgrid, ugrid, A);

  std::array<int, 3> uidx = {(ugrid.axis[0].n - 1) / 2, (ugrid.axis[1].n - 1) / 2,
                             (ugrid.axis[2].n - 1) / 2};
  if (!sf.slice_u.empty()) uidx = parse_index_triple(sf.slice_u);
  for (int a = 0; a < 3; ++a) {
    if (uidx[a] < 0 || uidx[a] >= ugrid.axis[a].n) throw ParameterError("--slice-u out of range");
  }
  int w3 = sf.slice_w3 >= 0 ? sf.slice_w3 : (wgrid.axis[2].n - 1) / 2;
  if (w3 >= wgrid.axis[2].n) throw ParameterError("--slice-w3 out of range");

  if (!sf.out.empty()) {
    std::ofstream csv(sf.out, std::ios::trunc);
    if (!csv) throw ResourceError("cannot open " + sf.out);
    csv << std::setprecision(17);
    csv << "w1,w2,g0,g1,g2,g3,g4,g5,g6,g7\n";
    const std::size_t base = G.slab(ugrid.index(uidx[0], uidx[1], uidx[2]));
    for (int j1 = 0; j1 < wgrid.axis[0].n; ++j1) {
      for (int j2 = 0; j2 < wgrid.axis[1].n; ++j2) {
        const Octonion& o = G.v[base + wgrid.index(j1, j2, w3)];
        csv << wgrid.axis[0].coord(j1) << ',' << wgrid.axis[1].coord(j2);
        for (int k = 0; k < 8; ++k) csv << ',' << o.s[k];
        csv << '\n';
      }
    }
    if (!csv) throw ResourceError("short write to " + sf.out);
  }
  if (!sf.out_full.empty()) write_spectrogram_full(G, sf.out_full, sf.signal.seed);

  std::cout << "spectrogram w-cells=" << wgrid.count() << " u-cells=" << ugrid.count()
            << " slice-u=" << uidx[0] << ',' << uidx[1] << ',' << uidx[2] << " slice-w3=" << w3
            << "\n";
  return 0;
}

// --- verify -------------------------------------------------------------

struct VerifyFlags {
  MatrixFlags matrices;
  BatteryOptions battery;
  std::string out;
  double tol = 1e-12;
};

json report_to_json(const InequalityReport& r) {
  json j;
  j["name"] = r.name;
  j["fixture"] = r.fixture;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["constant"] = r.constant;
  j["margin"] = r.margin;
  j["passed"] = r.passed;
  return j;
}

int run_verify(const VerifyFlags& vf) {
  const LCTTriple A = vf.matrices.parse();
  const std::vector<InequalityReport> reports = run_battery(vf.battery);

  const Grid3 g5 = Grid3::cubic(5, 0.9);
  const RealField3D f = make_gaussian(g5, 1.0);
  const RealField3D g = make_chirped_gaussian(g5, 1.0, 0.5);
  const Window3D phi(make_gaussian(g5, 0.8));
  const Window3D psi(make_box(g5, 1.0));
  const ConvolutionReport conv = check_convolution_theorem(
      f, g, phi, psi, A, 2, "f=gaussian,g=chirped-gaussian,phi=gaussian,psi=box,n=5");

  json j;
  j["config"]["n"] = vf.battery.n;
  j["config"]["step"] = vf.battery.step;
  j["config"]["ustride"] = vf.battery.ustride;
  j["config"]["seed"] = vf.battery.seed;
  j["config"]["triples"] = vf.battery.triples;
  j["config"]["routes_tol"] = vf.tol;
  j["environment"]["workers"] = worker_count();

  int failed = 0;
  j["battery"] = json::array();
  for (const InequalityReport& r : reports) {
    j["battery"].push_back(report_to_json(r));
    if (!r.passed) ++failed;
  }
  j["battery_total"] = reports.size();
  j["battery_failed"] = failed;

  j["convolution"]["fixture"] = conv.fixture;
  j["convolution"]["lhs_routes_rel_diff"] = conv.lhs_routes_rel_diff;
  j["convolution"]["identity_rel_discrepancy"] = conv.identity_rel_discrepancy;
  j["convolution"]["lhs_l2"] = conv.lhs_l2;
  j["convolution"]["rhs_l2"] = conv.rhs_l2;

  const bool routes_ok = conv.lhs_routes_rel_diff <= vf.tol;
  const bool all_passed = failed == 0 && routes_ok;
  j["all_passed"] = all_passed;

  std::ofstream file;
  std::ostream& out = open_or_stdout(file, vf.out);
  out << j.dump(2) << '\n';
  std::cout << "verify battery=" << reports.size() << " failed=" << failed
            << " routes-diff=" << std::setprecision(3) << conv.lhs_routes_rel_diff << "\n";
  return all_passed ? 0 : 1;
}

// --- bench --------------------------------------------------------------

struct BenchFlags {
  int n1d = 4096;
  int n3 = 32;
  int repeats = 3;
  std::uint64_t seed = 1;
  std::string out;
};

template <typename Fn>
double best_ms(int repeats, Fn&& fn) {
  double best = std::numeric_limits<double>::infinity();
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

int run_bench(const BenchFlags& bf) {
  std::mt19937_64 rng(bf.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);

  const LCTParams p(0.6, 1.1, -0.5, (1.0 + 1.1 * -0.5) / 0.6);
  const Grid1D xg(bf.n1d, 8.0 / bf.n1d);
  const Grid1D wg = xg.paired(p.b);
  std::vector<std::complex<double>> line(static_cast<std::size_t>(bf.n1d));
  for (auto& z : line) z = {unit(rng), unit(rng)};
  volatile double sink = 0.0;

  const double direct_ms = best_ms(bf.repeats, [&] {
    auto out = lct1d_direct(line, xg, wg, p);
    sink = sink + out.back().real();
  });
  const double chirp_ms = best_ms(bf.repeats, [&] {
    auto out = lct1d_chirp_fft(line, xg, wg, p);
    sink = sink + out.back().real();
  });

  const Grid3 g3 = Grid3::cubic(bf.n3, 0.25);
  const RealField3D f = make_random(g3, bf.seed);
  const LCTTriple A = {p, p, p};
  const Grid3 wg3 = paired_grid(g3, A);
  const double fast_ms = best_ms(bf.repeats, [&] {
    auto F = olct_separable(f, wg3, A, Path::kFast);
    sink = sink + F.v.back().s[0];
  });

  json j;
  j["lct1d"]["n"] = bf.n1d;
  j["lct1d"]["direct_ms"] = direct_ms;
  j["lct1d"]["chirp_ms"] = chirp_ms;
  j["lct1d"]["speedup"] = direct_ms / chirp_ms;
  j["olct3d"]["n"] = bf.n3;
  j["olct3d"]["fast_ms"] = fast_ms;
  j["environment"]["workers"] = worker_count();

  std::ofstream file;
  std::ostream& out = open_or_stdout(file, bf.out);
  out << j.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"octonion linear canonical transform toolkit"};
  app.require_subcommand(1);

  TransformFlags tf;
  CLI::App* transform = app.add_subcommand("transform", "Forward or inverse transform to file");
  add_matrix_flags(transform, tf.matrices);
  add_signal_flags(transform, tf.signal);
  transform->add_flag("--inverse", tf.inverse, "Invert an octonion spectrum file");
  transform->add_option("--path", tf.path, "direct | fast");
  transform->add_option("--out", tf.out, "Output field file")->required();
  transform->add_option("--reference", tf.reference, "Real field to compare a round trip against");
  transform->add_option("--tol", tf.tol, "Fail (exit 1) if the round-trip error exceeds this");

  SpectrogramFlags sf;
  CLI::App* spectrogram =
      app.add_subcommand("spectrogram", "Windowed transform with CSV slice export");
  add_matrix_flags(spectrogram, sf.matrices);
  add_signal_flags(spectrogram, sf.signal);
  spectrogram->add_option("--window", sf.window, "gaussian:sigma | box:r | file:path");
  spectrogram->add_option("--path", sf.path, "direct | fast");
  spectrogram->add_option("--ugrid-stride", sf.ugrid_stride, "Translation lattice stride");
  spectrogram->add_option("--out", sf.out, "CSV slice at fixed u and fixed w3");
  spectrogram->add_option("--out-full", sf.out_full, "Raw payload of the full (w,u) field");
  spectrogram->add_option("--slice-u", sf.slice_u, "u indices i,j,k for the CSV slice");
  spectrogram->add_option("--slice-w3", sf.slice_w3, "w3 index for the CSV slice");

  VerifyFlags vf;
  CLI::App* verify = app.add_subcommand("verify", "Run the inequality battery, emit JSON");
  add_matrix_flags(verify, vf.matrices);
  verify->add_option("--n", vf.battery.n, "Battery lattice size per axis");
  verify->add_option("--step", vf.battery.step, "Battery lattice step");
  verify->add_option("--ugrid-stride", vf.battery.ustride, "Battery translation stride");
  verify->add_option("--seed", vf.battery.seed, "Battery parameter seed");
  verify->add_option("--triples", vf.battery.triples, "Number of random parameter triples");
  verify->add_option("--out", vf.out, "JSON report path (default stdout)");
  verify->add_option("--tol", vf.tol, "Tolerance for the convolution route agreement");

  BenchFlags bf;
  CLI::App* bench = app.add_subcommand("bench", "Time direct vs fast paths, emit JSON");
  bench->add_option("--n", bf.n1d, "1D transform size");
  bench->add_option("--n3", bf.n3, "3D lattice size per axis");
  bench->add_option("--repeats", bf.repeats, "Repetitions (best time wins)");
  bench->add_option("--seed", bf.seed, "Input seed");
  bench->add_option("--out", bf.out, "JSON path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(transform)) return run_transform(tf);
    if (app.got_subcommand(spectrogram)) return run_spectrogram(sf);
    if (app.got_subcommand(verify)) return run_verify(vf);
    if (app.got_subcommand(bench)) return run_bench(bf);
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
