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

#include "octolct/field_io.hpp"

#include <bit>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <vector>

#include <json.hpp>

#include "octolct/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "payloads are little-endian and written via host memcpy");

namespace octolct {

namespace {

using nlohmann::json;

void require_finite(const double* data, std::size_t count, const char* where) {
  for (std::size_t i = 0; i < count; ++i) {
    if (!std::isfinite(data[i])) {
      throw DataError(std::string(where) + ": payload contains non-finite values");
    }
  }
}

void write_payload(const std::string& path, const std::vector<double>& payload) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ResourceError("write_field: cannot open " + path);
  out.write(reinterpret_cast<const char*>(payload.data()),
            static_cast<std::streamsize>(payload.size() * sizeof(double)));
  if (!out) throw ResourceError("write_field: short write to " + path);
}

void write_header(const std::string& path, const FieldHeader& h) {
  json j;
  j["shape"] = h.shape;
  j["steps"] = h.steps;
  j["offsets"] = h.offsets;
  j["dtype"] = h.dtype;
  j["order"] = h.order;
  if (h.seed) j["seed"] = *h.seed;
  const std::string sidecar = header_sidecar_path(path);
  std::ofstream out(sidecar, std::ios::trunc);
  if (!out) throw ResourceError("write_field: cannot open " + sidecar);
  out << j.dump(2) << '\n';
  if (!out) throw ResourceError("write_field: short write to " + sidecar);
}

FieldHeader read_header(const std::string& path) {
  const std::string sidecar = header_sidecar_path(path);
  std::ifstream in(sidecar);
  if (!in) throw FormatError("read_field: missing header sidecar " + sidecar);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw FormatError("read_field: malformed header " + sidecar + ": " + e.what());
  }
  FieldHeader h;
  try {
    h.shape = j.at("shape").get<std::array<int, 3>>();
    h.steps = j.at("steps").get<std::array<double, 3>>();
    h.offsets = j.at("offsets").get<std::array<double, 3>>();
    h.dtype = j.at("dtype").get<std::string>();
    h.order = j.at("order").get<std::string>();
    if (j.contains("seed") && !j.at("seed").is_null()) {
      h.seed = j.at("seed").get<std::uint64_t>();
    }
  } catch (const json::exception& e) {
    throw FormatError("read_field: incomplete header " + sidecar + ": " + e.what());
  }
  return h;
}

std::vector<double> read_payload(const std::string& path, std::size_t expected_doubles) {
  std::ifstream in(path, std::ios::binary | std::ios::ate);
  if (!in) throw FormatError("read_field: missing payload " + path);
  const auto bytes = static_cast<std::size_t>(in.tellg());
  if (bytes != expected_doubles * sizeof(double)) {
    throw FormatError("read_field: payload size mismatch for " + path);
  }
  in.seekg(0);
  std::vector<double> payload(expected_doubles);
  in.read(reinterpret_cast<char*>(payload.data()), static_cast<std::streamsize>(bytes));
  if (!in) throw FormatError("read_field: short read from " + path);
  return payload;
}

}  // namespace

FieldHeader make_header(const Grid3& grid, const std::string& dtype,
                        std::optional<std::uint64_t> seed) {
  FieldHeader h;
  for (int a = 0; a < 3; ++a) {
    h.shape[a] = grid.axis[a].n;
    h.steps[a] = grid.axis[a].step;
    h.offsets[a] = grid.axis[a].coord(0);
  }
  h.dtype = dtype;
  h.seed = seed;
  return h;
}

Grid3 grid_from_header(const FieldHeader& h) {
  if (h.order != kOrderTag) throw FormatError("grid_from_header: unknown order tag " + h.order);
  std::array<Grid1D, 3> axes;
  for (int a = 0; a < 3; ++a) {
    if (h.shape[a] <= 0) throw FormatError("grid_from_header: non-positive shape");
    if (!(h.steps[a] > 0.0)) throw FormatError("grid_from_header: non-positive step");
    axes[a] = Grid1D(h.shape[a], h.steps[a]);
    const double expected = axes[a].coord(0);
    if (std::abs(h.offsets[a] - expected) > 1e-9 * (1.0 + std::abs(expected))) {
      throw FormatError("grid_from_header: offsets are not centered");
    }
  }
  return Grid3(axes[0], axes[1], axes[2]);
}

std::string header_sidecar_path(const std::string& path) { return path + ".json"; }

void write_field(const RealField3D& f, const std::string& path,
                 std::optional<std::uint64_t> seed) {
  require_finite(f.v.data(), f.v.size(), "write_field");
  write_header(path, make_header(f.grid, kDtypeReal, seed));
  write_payload(path, f.v);
}

void write_field(const OctonionField3D& f, const std::string& path,
                 std::optional<std::uint64_t> seed) {
  const std::size_t count = f.grid.count();
  std::vector<double> payload(count * 8);
  for (int k = 0; k < 8; ++k) {
    for (std::size_t i = 0; i < count; ++i) payload[k * count + i] = f.v[i].s[k];
  }
  require_finite(payload.data(), payload.size(), "write_field");
  write_header(path, make_header(f.grid, kDtypeOctonion, seed));
  write_payload(path, payload);
}

LoadedField read_field(const std::string& path) {
  LoadedField out;
  out.header = read_header(path);
  const Grid3 grid = grid_from_header(out.header);
  const std::size_t count = grid.count();
  if (out.header.dtype == kDtypeReal) {
    RealField3D f(grid);
    f.v = read_payload(path, count);
    require_finite(f.v.data(), f.v.size(), "read_field");
    out.field = std::move(f);
  } else if (out.header.dtype == kDtypeOctonion) {
    const std::vector<double> payload = read_payload(path, count * 8);
    require_finite(payload.data(), payload.size(), "read_field");
    OctonionField3D f(grid);
    for (int k = 0; k < 8; ++k) {
      for (std::size_t i = 0; i < count; ++i) f.v[i].s[k] = payload[k * count + i];
    }
    out.field = std::move(f);
  } else {
    throw FormatError("read_field: unknown dtype " + out.header.dtype);
  }
  return out;
}

RealField3D read_real_field(const std::string& path) {
  LoadedField loaded = read_field(path);
  if (!std::holds_alternative<RealField3D>(loaded.field)) {
    throw FormatError("read_real_field: " + path + " holds " + loaded.header.dtype);
  }
  return std::get<RealField3D>(std::move(loaded.field));
}

OctonionField3D read_octonion_field(const std::string& path) {
  LoadedField loaded = read_field(path);
  if (!std::holds_alternative<OctonionField3D>(loaded.field)) {
    throw FormatError("read_octonion_field: " + path + " holds " + loaded.header.dtype);
  }
  return std::get<OctonionField3D>(std::move(loaded.field));
}

}  // namespace octolct
