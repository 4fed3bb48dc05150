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

#ifndef OCTOLCT_OCTONION_HPP
#define OCTOLCT_OCTONION_HPP

#include <array>
#include <cmath>
#include <cstddef>

namespace octolct {

// Product table for the basis (1, mu1, ..., mu7): mu_i * mu_j lands on basis
// slot kMulIndex[i][j] with sign kMulSign[i][j]. The algebra is alternative
// but not associative; the table is the single source of truth for products.
inline constexpr std::array<std::array<int, 8>, 8> kMulIndex = {{
    {0, 1, 2, 3, 4, 5, 6, 7},
    {1, 0, 3, 2, 5, 4, 7, 6},
    {2, 3, 0, 1, 6, 7, 4, 5},
    {3, 2, 1, 0, 7, 6, 5, 4},
    {4, 5, 6, 7, 0, 1, 2, 3},
    {5, 4, 7, 6, 1, 0, 3, 2},
    {6, 7, 4, 5, 2, 3, 0, 1},
    {7, 6, 5, 4, 3, 2, 1, 0},
}};

inline constexpr std::array<std::array<int, 8>, 8> kMulSign = {{
    {+1, +1, +1, +1, +1, +1, +1, +1},
    {+1, -1, +1, -1, +1, -1, -1, +1},
    {+1, -1, -1, +1, +1, +1, -1, -1},
    {+1, +1, -1, -1, +1, -1, +1, -1},
    {+1, -1, -1, -1, -1, +1, +1, +1},
    {+1, +1, -1, +1, -1, -1, -1, +1},
    {+1, +1, +1, -1, -1, +1, -1, -1},
    {+1, -1, +1, +1, -1, -1, +1, -1},
}};

// Real octonion, coefficients s[0..7] on the basis (1, mu1, ..., mu7).
struct Octonion {
  std::array<double, 8> s{};

  constexpr Octonion() = default;
  constexpr explicit Octonion(double real) : s{real, 0, 0, 0, 0, 0, 0, 0} {}
  constexpr explicit Octonion(const std::array<double, 8>& coeffs) : s(coeffs) {}

  // Basis element: unit(0) == 1, unit(k) == mu_k.
  static constexpr Octonion unit(int k) {
    Octonion o;
    o.s[static_cast<std::size_t>(k)] = 1.0;
    return o;
  }

  constexpr double& operator[](std::size_t i) { return s[i]; }
  constexpr double operator[](std::size_t i) const { return s[i]; }

  constexpr Octonion& operator+=(const Octonion& o) {
    for (std::size_t i = 0; i < 8; ++i) s[i] += o.s[i];
    return *this;
  }
  constexpr Octonion& operator-=(const Octonion& o) {
    for (std::size_t i = 0; i < 8; ++i) s[i] -= o.s[i];
    return *this;
  }
  constexpr Octonion& operator*=(double a) {
    for (double& v : s) v *= a;
    return *this;
  }

  friend constexpr Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
  friend constexpr Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
  friend constexpr Octonion operator*(Octonion a, double t) { return a *= t; }
  friend constexpr Octonion operator*(double t, Octonion a) { return a *= t; }
  friend constexpr Octonion operator-(Octonion a) { return a *= -1.0; }
};

// Full non-commutative, non-associative product.
constexpr Octonion oct_mul(const Octonion& a, const Octonion& b) {
  Octonion r;
  for (std::size_t i = 0; i < 8; ++i) {
    const double ai = a.s[i];
    if (ai == 0.0) continue;
    for (std::size_t j = 0; j < 8; ++j) {
      r.s[static_cast<std::size_t>(kMulIndex[i][j])] += kMulSign[i][j] * ai * b.s[j];
    }
  }
  return r;
}

constexpr Octonion operator*(const Octonion& a, const Octonion& b) { return oct_mul(a, b); }

// Conjugation negates the seven imaginary coefficients.
constexpr Octonion conj(const Octonion& o) {
  Octonion r = o;
  for (std::size_t i = 1; i < 8; ++i) r.s[i] = -r.s[i];
  return r;
}

constexpr double norm_sq(const Octonion& o) {
  double t = 0.0;
  for (double v : o.s) t += v * v;
  return t;
}

inline double norm(const Octonion& o) { return std::sqrt(norm_sq(o)); }

// Real quaternion on the basis (1, mu1, mu2, mu3).
struct Quaternion {
  std::array<double, 4> s{};

  constexpr Quaternion() = default;
  constexpr explicit Quaternion(double real) : s{real, 0, 0, 0} {}
  constexpr Quaternion(double w, double x, double y, double z) : s{w, x, y, z} {}

  constexpr double& operator[](std::size_t i) { return s[i]; }
  constexpr double operator[](std::size_t i) const { return s[i]; }

  friend constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.s[0] + b.s[0], a.s[1] + b.s[1], a.s[2] + b.s[2], a.s[3] + b.s[3]};
  }
  friend constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.s[0] - b.s[0], a.s[1] - b.s[1], a.s[2] - b.s[2], a.s[3] - b.s[3]};
  }
  friend constexpr Quaternion operator*(Quaternion a, double t) {
    for (double& v : a.s) v *= t;
    return a;
  }
};

constexpr Quaternion quat_mul(const Quaternion& a, const Quaternion& b) {
  return {a.s[0] * b.s[0] - a.s[1] * b.s[1] - a.s[2] * b.s[2] - a.s[3] * b.s[3],
          a.s[0] * b.s[1] + a.s[1] * b.s[0] + a.s[2] * b.s[3] - a.s[3] * b.s[2],
          a.s[0] * b.s[2] - a.s[1] * b.s[3] + a.s[2] * b.s[0] + a.s[3] * b.s[1],
          a.s[0] * b.s[3] + a.s[1] * b.s[2] - a.s[2] * b.s[1] + a.s[3] * b.s[0]};
}

constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) { return quat_mul(a, b); }

constexpr Quaternion conj(const Quaternion& q) {
  return {q.s[0], -q.s[1], -q.s[2], -q.s[3]};
}

constexpr double norm_sq(const Quaternion& q) {
  return q.s[0] * q.s[0] + q.s[1] * q.s[1] + q.s[2] * q.s[2] + q.s[3] * q.s[3];
}

inline double norm(const Quaternion& q) { return std::sqrt(norm_sq(q)); }

// Embeds a quaternion into the (1, mu1, mu2, mu3) half.
constexpr Octonion embed(const Quaternion& q) {
  Octonion o;
  for (std::size_t i = 0; i < 4; ++i) o.s[i] = q.s[i];
  return o;
}

// Doubling pair: a + b*mu4.
constexpr Octonion make_octonion(const Quaternion& a, const Quaternion& b) {
  Octonion o;
  for (std::size_t i = 0; i < 4; ++i) {
    o.s[i] = a.s[i];
    o.s[i + 4] = b.s[i];
  }
  return o;
}

// Planar exponential cos(theta) + mu*sin(theta) for a unit imaginary axis mu.
// Rejects mu unless mu*mu == -1 within 1e-9. Exponentials along a shared axis
// add angles; along non-commuting axes they do not, which callers must not
// assume (see the algebra tests for a witness).
Octonion oct_exp_planar(const Octonion& mu, double theta);

// Max absolute residual over the six doubling-pair identities
//   mu4*a == conj(a)*mu4,        mu4*(a*mu4) == -conj(a),
//   (a*mu4)*mu4 == -a,           a*(b*mu4) == (b*a)*mu4,
//   (a*mu4)*b == (a*conj(b))*mu4, (a*mu4)*(b*mu4) == -conj(b)*a
// evaluated with quaternions a, b embedded into the octonions.
double quat_pair_identities_check(const Quaternion& a, const Quaternion& b);

}  // namespace octolct

#endif  // OCTOLCT_OCTONION_HPP
