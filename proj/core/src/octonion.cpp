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

#include "octolct/octonion.hpp"

#include <algorithm>
#include <cmath>

#include "octolct/errors.hpp"

namespace octolct {

Octonion oct_exp_planar(const Octonion& mu, double theta) {
  Octonion sq = oct_mul(mu, mu);
  sq.s[0] += 1.0;
  if (norm(sq) > 1e-9) {
    throw ParameterError("oct_exp_planar: axis must square to -1");
  }
  Octonion r = mu * std::sin(theta);
  r.s[0] += std::cos(theta);
  return r;
}

double quat_pair_identities_check(const Quaternion& qa, const Quaternion& qb) {
  const Octonion a = embed(qa);
  const Octonion b = embed(qb);
  const Octonion ac = embed(conj(qa));
  const Octonion bc = embed(conj(qb));
  const Octonion mu4 = Octonion::unit(4);

  const Octonion lhs[6] = {
      oct_mul(mu4, a),
      oct_mul(mu4, oct_mul(a, mu4)),
      oct_mul(oct_mul(a, mu4), mu4),
      oct_mul(a, oct_mul(b, mu4)),
      oct_mul(oct_mul(a, mu4), b),
      oct_mul(oct_mul(a, mu4), oct_mul(b, mu4)),
  };
  const Octonion rhs[6] = {
      oct_mul(ac, mu4),
      -ac,
      -a,
      oct_mul(oct_mul(b, a), mu4),
      oct_mul(oct_mul(a, bc), mu4),
      -oct_mul(bc, a),
  };

  double worst = 0.0;
  for (int k = 0; k < 6; ++k) {
    worst = std::max(worst, norm(lhs[k] - rhs[k]));
  }
  return worst;
}

}  // namespace octolct
