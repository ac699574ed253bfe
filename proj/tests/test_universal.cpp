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

#include "doctest.h"
#include "refcurves/geometry.hpp"
#include "refcurves/localize.hpp"
#include "refcurves/toric.hpp"
#include "refcurves/universal.hpp"

using namespace refcurves;

namespace {

FitSample sample(const char* id, int n_max, int x_order) {
  const auto sb = preset(id);
  const auto g = geometry_of(sb);
  EngineOptions o;
  o.workers = 1;
  return {id, {g.L2, g.LK, g.K2, g.c2}, d_series(sb, n_max, x_order, o)};
}

// 4x4 integer determinant by cofactor expansion.
long det4(const std::array<ChernVector, 4>& m) {
  auto det3 = [&](int skip) {
    long r[3][3];
    for (int i = 1; i < 4; ++i)
      for (int j = 0, c = 0; j < 4; ++j)
        if (j != skip) r[i - 1][c++] = m[i][j];
    return r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1]) -
           r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0]) +
           r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]);
  };
  long d = 0;
  for (int j = 0; j < 4; ++j) d += (j % 2 ? -1 : 1) * m[0][j] * det3(j);
  return d;
}

}  // namespace

TEST_SUITE("universal") {
  TEST_CASE("basis has full rank") {
    const std::array<ChernVector, 4> basis{
        ChernVector{1, -3, 9, 3}, ChernVector{4, -6, 9, 3}, ChernVector{2, -4, 8, 4},
        ChernVector{8, -8, 8, 4}};
    CHECK(det4(basis) != 0);
    CHECK(sample("hirzebruch:1:1,2", 0, 0).chern == ChernVector{8, -8, 8, 4});
  }

  TEST_CASE("fit reproduces its basis and a held-out pair") {
    const int n = 4, x = 2;
    std::vector<FitSample> basis{sample("p2:1", n, x), sample("p2:2", n, x),
                                 sample("p1xp1:1,1", n, x), sample("hirzebruch:1:1,2", n, x)};
    const FitSample held = sample("p1xp1:1,2", n, x);
    const UniversalFit fit = universal_fit(basis, {held});
    CHECK_MESSAGE(fit.residual_ok, fit.residual_detail);
    for (const auto& s : basis) CHECK(universal_eval(fit, s.chern) == s.d);
    CHECK(universal_eval(fit, held.chern) == held.d);

    const LLSeries one = universal_eval(fit, {0, 0, 0, 0});
    CHECK(one.coeff(0) == LSeries::one(Var::x, x));
    for (int k = 1; k <= n; ++k) CHECK(one.coeff(k).is_zero());

    // K3-type Chern numbers.
    for (long L2 : {0, 2, 4}) {
      const LLSeries k3 = universal_eval(fit, {L2, 0, 0, 24});
      CHECK(k3.coeff(1).coeff(0).at_one().get_den() == 1);
    }
  }

  TEST_CASE("a wrong held-out pair is reported") {
    std::vector<FitSample> basis{sample("p2:1", 2, 1), sample("p2:2", 2, 1),
                                 sample("p1xp1:1,1", 2, 1), sample("hirzebruch:1:1,2", 2, 1)};
    FitSample bad = sample("p1xp1:1,2", 2, 1);
    bad.chern[0] += 2;
    const UniversalFit fit = universal_fit(basis, {bad});
    CHECK(!fit.residual_ok);
    CHECK(fit.residual_detail.find("p1xp1:1,2") != std::string::npos);
  }

  TEST_CASE("rank-deficient bases are rejected") {
    std::vector<FitSample> basis{sample("p2:1", 1, 1), sample("p2:2", 1, 1), sample("p2:3", 1, 1),
                                 sample("p2:4", 1, 1)};
    CHECK_THROWS_AS(universal_fit(basis), std::invalid_argument);
    basis.pop_back();
    CHECK_THROWS_AS(universal_fit(basis), std::invalid_argument);
  }
}
