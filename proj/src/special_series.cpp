// Copyright 2026 The refcurves Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "refcurves/special_series.hpp"

namespace refcurves {

LSeries e_series(int order) {
  LSeries e(Var::x, 0, order);
  const Laurent s = Laurent::z_inv_minus_z();
  Laurent s_pow(1);
  Rat factorial(1);
  for (int k = 0; k <= order; ++k) {
    factorial *= k + 1;
    e.set(k, s_pow * Rat((k % 2 ? -1 : 1), 1) * Rat(1 / factorial));
    s_pow *= s;
  }
  return e;
}

LSeries insertion_series(int order) {
  // 1 + z x E(x s); the x-shift needs E only through order - 1.
  LSeries ins = e_series(order).shifted(1).truncated(order).times(Laurent::z());
  return LSeries::one(Var::x, order) + ins;
}

LSeries x_series(int order) {
  return insertion_series(order) * invert(e_series(order));
}

LSeries inverse_x_series(int order) { return invert(x_series(order)); }

LSeries functional_inverse_wq(int order) {
  const Laurent sigma = Laurent::z_plus_z_inv();
  LSeries w(Var::Q, 0, order);
  const LSeries one = LSeries::one(Var::Q, order);
  // Each pass fixes one more coefficient of w = Q (1 + w^2 - sigma w).
  for (int pass = 0; pass < order; ++pass) {
    LSeries rhs = one + w * w - w.times(sigma);
    w = rhs.shifted(1).truncated(order);
    if (w.low() > 0) w = LSeries(Var::Q, 0, order) + w;
  }
  return w;
}

}  // namespace refcurves
