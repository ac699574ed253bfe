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

#ifndef REFCURVES_TESTS_SUPPORT_HPP
#define REFCURVES_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>

#include "refcurves/laurent.hpp"
#include "refcurves/series.hpp"

namespace testing {

using refcurves::Laurent;
using refcurves::LSeries;
using refcurves::Rat;
using refcurves::Var;

// Small-height random values for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rat rat() {
    Rat r(integer(-9, 9), integer(1, 5));
    r.canonicalize();
    return r;
  }

  Laurent laurent(int span = 2) {
    Laurent p;
    const int terms = integer(0, 3);
    for (int t = 0; t < terms; ++t) p += Laurent::monomial(rat(), integer(-span, span));
    return p;
  }

  // Series in `var` with the given order; `unit` forces an invertible
  // constant term (a nonzero rational).
  LSeries series(Var var, int order, bool unit = false, bool zero_constant = false) {
    LSeries s(var, 0, order);
    for (int k = 0; k <= order; ++k) s.set(k, laurent());
    if (zero_constant) s.set(0, Laurent());
    if (unit) {
      Rat c = rat();
      if (sgn(c) == 0) c = 1;
      s.set(0, Laurent(c));
    }
    return s;
  }

 private:
  std::mt19937_64 rng_;
};

inline Laurent z() { return Laurent::z(); }
inline Laurent zi() { return Laurent::z_inv(); }

}  // namespace testing

#endif  // REFCURVES_TESTS_SUPPORT_HPP
