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

#ifndef REFCURVES_SPECIAL_SERIES_HPP
#define REFCURVES_SPECIAL_SERIES_HPP

#include "refcurves/series.hpp"

namespace refcurves {

// E(x s) = (1 - e^{-x s}) / (x s) with s = z^-1 - z. Constant term 1.
LSeries e_series(int order);

// X_{-y}(x) = x (z^-1 - z e^{-x s}) / (1 - e^{-x s}), s = z^-1 - z.
//
// Numerator and denominator both start with x s; that factor is cancelled
// before dividing, leaving (1 + z x E(x s)) / E(x s), whose coefficients are
// Laurent polynomials. Constant term 1; equals 1 + x at z = 1.
LSeries x_series(int order);

// 1 / X_{-y}(x).
LSeries inverse_x_series(int order);

// Point-insertion factor (z^-1 - z e^{-x s}) / s = 1 + z x E(x s).
LSeries insertion_series(int order);

// w(Q) solving 1/Q = w + 1/w - z - 1/z, i.e. w = Q (1 + w^2 - (z + 1/z) w),
// known through Q^order. Leading term Q.
LSeries functional_inverse_wq(int order);

}  // namespace refcurves

#endif  // REFCURVES_SPECIAL_SERIES_HPP
