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

#ifndef OCTOLCT_GENERATE_HPP
#define OCTOLCT_GENERATE_HPP

#include <cstdint>

#include "octolct/field.hpp"

namespace octolct {

// exp(-|x|^2 / (2 sigma^2))
RealField3D make_gaussian(const Grid3& g, double sigma);

// Gaussian envelope with a quadratic phase ripple: exp(-|x|^2/(2 sigma^2)) * cos(rate |x|^2).
RealField3D make_chirped_gaussian(const Grid3& g, double sigma, double rate);

// Indicator of the cube |x_k| <= half_width.
RealField3D make_box(const Grid3& g, double half_width);

// Unit-mass spike at the center cell: 1/cell_volume there, zero elsewhere.
// Requires an odd sample count on every axis so the center is a lattice point.
RealField3D make_delta(const Grid3& g);

// Uniform samples in [-1, 1], reproducible from the seed.
RealField3D make_random(const Grid3& g, std::uint64_t seed);

}  // namespace octolct

#endif  // OCTOLCT_GENERATE_HPP
