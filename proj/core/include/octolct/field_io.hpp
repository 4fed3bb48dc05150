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

#ifndef OCTOLCT_FIELD_IO_HPP_
#define OCTOLCT_FIELD_IO_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "octolct/field.hpp"

// On-disk format: a raw little-endian float64 payload at `path` plus a JSON
// sidecar at `path` + ".json" describing the lattice. Real fields store one
// plane in lattice order (axis 3 fastest); octonion fields store eight such
// planes back to back, component k in plane k.

namespace octolct {

inline constexpr const char* kDtypeReal = "real64";
inline constexpr const char* kDtypeOctonion = "octonion64x8";
inline constexpr const char* kOrderTag = "axis3-fastest";

struct FieldHeader {
  std::array<int, 3> shape{};
  std::array<double, 3> steps{};
  std::array<double, 3> offsets{};  // coordinate of index 0 per axis
  std::string dtype;
  std::string order = kOrderTag;
  std::optional<std::uint64_t> seed;
};

FieldHeader make_header(const Grid3& grid, const std::string& dtype,
                        std::optional<std::uint64_t> seed = std::nullopt);

// Rebuilds the lattice, rejecting headers whose offsets are not the centered
// -(n-1)/2 * step convention.
Grid3 grid_from_header(const FieldHeader& h);

std::string header_sidecar_path(const std::string& path);

void write_field(const RealField3D& f, const std::string& path,
                 std::optional<std::uint64_t> seed = std::nullopt);
void write_field(const OctonionField3D& f, const std::string& path,
                 std::optional<std::uint64_t> seed = std::nullopt);

struct LoadedField {
  FieldHeader header;
  std::variant<RealField3D, OctonionField3D> field;
};

LoadedField read_field(const std::string& path);

// Dtype-checked conveniences; a mismatched payload kind is a FormatError.
RealField3D read_real_field(const std::string& path);
OctonionField3D read_octonion_field(const std::string& path);

}  // namespace octolct

#endif  // OCTOLCT_FIELD_IO_HPP_
