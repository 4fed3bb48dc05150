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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "octolct/field_io.hpp"
#include "octolct/generate.hpp"

// End-to-end coverage of the installed command-line surface. Each case shells
// out to the real binary; exit codes follow the 0/1/2 contract (success,
// failed check, usage or malformed input).

namespace {

using namespace octolct;
namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) return {};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string temp_path(const std::string& name) {
  return (fs::temp_directory_path() / ("octolct-cli-" + name)).string();
}

RunResult run_cli(const std::string& args) {
  const std::string out = temp_path("stdout.txt");
  const std::string err = temp_path("stderr.txt");
  const std::string cmd =
      std::string("\"") + OCTOLCT_CLI_PATH + "\" " + args + " >" + out + " 2>" + err;
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.out = slurp(out);
  r.err = slurp(err);
  if (status >= 0 && WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  return r;
}

struct Cleanup {
  std::vector<std::string> paths;
  ~Cleanup() {
    for (const auto& p : paths) {
      std::error_code ec;
      fs::remove(p, ec);
      fs::remove(header_sidecar_path(p), ec);
    }
  }
  const std::string& track(const std::string& p) {
    paths.push_back(p);
    return paths.back();
  }
};

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("transform --out x.bin --no-such-flag").exit_code == 2);
  CHECK(run_cli("transform").exit_code == 2);  // --out is required
  // det != 1 must be rejected before any compute happens.
  const RunResult r =
      run_cli("transform --generate gaussian --n 5 --matrix-1 1,1,1,1 --out " +
              temp_path("reject.bin"));
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("det") != std::string::npos);
  // b = 0 is outside the supported parameter chamber.
  CHECK(run_cli("transform --generate gaussian --n 5 --matrix-2 1,0,0,1 --out " +
                temp_path("reject.bin"))
            .exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("transform round trip through files") {
  Cleanup tmp;
  const std::string in = tmp.track(temp_path("in.bin"));
  const std::string spec = tmp.track(temp_path("spec.bin"));
  const std::string spec2 = tmp.track(temp_path("spec2.bin"));
  const std::string rec = tmp.track(temp_path("rec.bin"));

  write_field(make_random(Grid3::cubic(9, 0.6), 42), in, 42);

  const std::string matrices = " --matrix-1 0.8,1.25,-0.4,0.625 --matrix-2 0,1,-1,0 "
                               "--matrix-3 1,0.5,0.5,1.25 ";
  const RunResult fwd = run_cli("transform --in " + in + matrices + "--out " + spec);
  CHECK(fwd.exit_code == 0);
  CHECK(fs::exists(spec));
  CHECK(fs::exists(header_sidecar_path(spec)));
  CHECK(read_field(spec).header.dtype == kDtypeOctonion);

  SUBCASE("repeated runs are bit identical") {
    const RunResult again = run_cli("transform --in " + in + matrices + "--out " + spec2);
    REQUIRE(again.exit_code == 0);
    CHECK(slurp(spec2) == slurp(spec));
  }

  SUBCASE("inverse with reference reports the error and passes") {
    const RunResult inv = run_cli("transform --inverse --in " + spec + matrices + "--out " +
                                  rec + " --reference " + in + " --tol 1e-6");
    CHECK(inv.exit_code == 0);
    CHECK(inv.out.find("roundtrip-rel-l2=") != std::string::npos);
    CHECK(read_field(rec).header.dtype == kDtypeOctonion);
  }

  SUBCASE("an impossible tolerance exits 1") {
    const RunResult inv = run_cli("transform --inverse --in " + spec + matrices + "--out " +
                                  rec + " --reference " + in + " --tol 1e-30");
    CHECK(inv.exit_code == 1);
  }
}

TEST_CASE("spectrogram writes a CSV slice") {
  Cleanup tmp;
  const std::string csv = tmp.track(temp_path("slice.csv"));
  const RunResult r = run_cli(
      "spectrogram --generate gaussian --n 9 --step 0.75 --window gaussian:0.8 "
      "--ugrid-stride 4 --out " +
      csv);
  REQUIRE(r.exit_code == 0);
  std::ifstream in(csv);
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header.find("w1") != std::string::npos);
  CHECK(header.find("g7") != std::string::npos);
  int rows = 0;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) ++rows;
  }
  CHECK(rows == 9 * 9);  // one row per (w1, w2) at the sliced w3 and u
}

TEST_CASE("verify emits a parseable all-pass report") {
  Cleanup tmp;
  const std::string path = tmp.track(temp_path("verify.json"));
  const RunResult r = run_cli("verify --triples 1 --seed 5 --out " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("verify battery=") != std::string::npos);

  const nlohmann::json doc = nlohmann::json::parse(slurp(path));
  CHECK(doc.at("all_passed").get<bool>());
  CHECK(doc.at("battery_failed").get<int>() == 0);
  CHECK(doc.at("battery").is_array());
  CHECK(doc.at("battery").size() == 24);  // 8 checks x 3 fixtures x 1 triple
  CHECK(doc.at("convolution").at("lhs_routes_rel_diff").get<double>() <= 1e-12);
  for (const auto& entry : doc.at("battery")) {
    CHECK(entry.at("passed").get<bool>());
    CHECK(entry.at("lhs").get<double>() <=
          entry.at("rhs").get<double>() + 1e-9 * (1.0 + std::abs(entry.at("rhs").get<double>())));
  }
}

TEST_CASE("bench reports both paths") {
  Cleanup tmp;
  const std::string path = tmp.track(temp_path("bench.json"));
  const RunResult r = run_cli("bench --n 256 --n3 8 --repeats 1 --out " + path);
  REQUIRE(r.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(slurp(path));
  CHECK(doc.at("lct1d").at("direct_ms").get<double>() > 0.0);
  CHECK(doc.at("lct1d").at("chirp_ms").get<double>() > 0.0);
  CHECK(doc.at("lct1d").at("speedup").get<double>() > 0.0);
  CHECK(doc.at("olct3d").at("fast_ms").get<double>() > 0.0);
}
