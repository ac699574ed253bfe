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
#include "refcurves/errors.hpp"
#include "refcurves/geometry.hpp"
#include "refcurves/localize.hpp"
#include "refcurves/refined.hpp"
#include "refcurves/special_series.hpp"
#include "refcurves/toric.hpp"

using namespace refcurves;

namespace {

EngineOptions quiet() {
  EngineOptions o;
  o.workers = 1;
  return o;
}

// One-node count of a Lefschetz pencil: blowing S up at the L^2 base points
// gives e(S) + L^2 = 2 e(C) + #nodal fibers with e(C) = -(L^2 + LK).
long lefschetz(const SurfaceGeometry& g) {
  const long euler_blowup = g.c2 + g.L2;
  const long euler_fiber = -(g.L2 + g.LK);
  return euler_blowup - 2 * euler_fiber;
}

LLSeries d_of(const char* id, int n_max, int x_order) {
  return d_series(preset(id), n_max, x_order, quiet());
}

}  // namespace

TEST_SUITE("refined") {
  TEST_CASE("geometry bookkeeping") {
    const auto g = geometry_of(preset("p2:4"));
    CHECK(g.h == 3);
    CHECK(g.chiL == 15);
    CHECK(2 * g.h - 2 == g.L2 + g.LK);
    CHECK(g.noether_holds());
    CHECK_THROWS_AS(geometry_from_numbers(1, 0, 9, 3, 1), InvalidModel);
  }

  TEST_CASE("q-series anchors") {
    const LLSeries d = d_of("p2:2", 2, 2);
    CHECK(q_series(d, 0).coeff(0) == Laurent(1));
    CHECK(q_series(d, 1).coeff(0) == Laurent::z_plus_z_inv());
    for (int delta = 0; delta <= 2; ++delta) {
      const LSeries q = q_series(d, delta);
      for (int n = 0; n <= 2; ++n) CHECK(q.coeff(n).at_one().get_den() == 1);
    }
    CHECK_THROWS_AS(q_series(d, 3), TruncationError);
  }

  TEST_CASE("p-series anchors") {
    const auto sb = preset("p1xp1:1,1");
    const int chiL = static_cast<int>(geometry_of(sb).chiL);
    const LLSeries d = d_series(sb, 2, chiL - 1, quiet());
    CHECK(p_series(d, chiL, 0) == q_series(d, chiL - 1));
    CHECK(p_series(d, chiL, chiL - 1) == q_series(d, 0));
    CHECK_THROWS_AS(p_series(d, chiL, chiL), std::invalid_argument);
  }

  TEST_CASE("two paths at y = 1") {
    for (const char* id : {"p2:2", "p1xp1:1,1"}) {
      const auto sb = preset(id);
      const int chiL = static_cast<int>(geometry_of(sb).chiL);
      const LLSeries d = d_series(sb, 3, chiL - 1, quiet());
      for (int m = 0; m < chiL; ++m) {
        const LSeries p = p_series(d, chiL, m);
        for (int n = 0; n <= 3; ++n)
          CHECK(p.coeff(n).at_one() == chern_integral_y1(sb, n, m, quiet()));
      }
    }
  }

  TEST_CASE("refined integral two paths") {
    const auto sb = preset("p2:2");
    const int chiL = static_cast<int>(geometry_of(sb).chiL);
    const LLSeries d = d_series(sb, 2, 1, quiet());
    for (int delta = 0; delta <= 1; ++delta) {
      const LSeries p = p_series(d, chiL, chiL - 1 - delta);
      for (int n = 0; n <= 2; ++n)
        CHECK(eq7_direct(sb, n, chiL - 1 - delta, quiet()).integral == p.coeff(n));
    }
  }

  TEST_CASE("basis expansion round-trip") {
    // ((1 - z^-1 w)(1 - z w))^{g-1} has (w(Q)/Q)^{1-g} f(w(Q)) = 1.
    for (int g = 0; g <= 3; ++g) {
      const int order = 6;
      LSeries base(Var::w, 0, order);
      base.set(0, Laurent(1));
      base.set(1, -Laurent::z_plus_z_inv());
      base.set(2, Laurent(1));
      const auto c = basis_coefficients(pow(base, g - 1), g);
      REQUIRE(c.size() == 7);
      CHECK(c[0] == Laurent(1));
      for (int i = 1; i <= order; ++i) CHECK(c[i].is_zero());
    }
    // w(Q) substitution is undone by the inverse change of variables.
    const LSeries w = functional_inverse_wq(6);
    const LSeries f = LSeries::one(Var::w, 6) + LSeries::monomial(Var::w, 2, 6, Laurent::z());
    const auto c = basis_coefficients(f, 1);
    LSeries back(Var::Q, 0, 6);
    for (int i = 0; i <= 6; ++i) back.set(i, c[i]);
    CHECK(back == substitute(renamed(f, Var::Q), w));
  }

  TEST_CASE("one-node counts match the Lefschetz pencil") {
    for (const char* id : {"p2:2", "p2:3", "p2:4", "p1xp1:2,2", "p1xp1:1,3", "hirzebruch:1:2,2"}) {
      const auto sb = preset(id);
      const auto g = geometry_of(sb);
      const RefinedTable t = extract_refined(d_series(sb, 3, 1, quiet()), g, 1, id);
      CHECK_MESSAGE(t.N_at_y1(1) == lefschetz(g), id);
      CHECK(t.N[1] == t.M[1]);
    }
    CHECK(lefschetz(geometry_of(preset("p2:3"))) == 12);
    CHECK(lefschetz(geometry_of(preset("p1xp1:2,2"))) == 12);
  }

  TEST_CASE("node polynomials of plane quartics") {
    // Classical Severi degrees of quartics: 27 one-nodal, 225 two-nodal.
    const auto sb = preset("p2:4");
    const auto g = geometry_of(sb);
    const LLSeries d = d_series(sb, 4, 2, quiet());
    CHECK(extract_refined(d, g, 2).N_at_y1(2) == 225);
  }

  TEST_CASE("proposition holds on computed tables") {
    for (const char* id : {"p2:2", "p1xp1:1,1", "p2:3"}) {
      const auto sb = preset(id);
      const auto g = geometry_of(sb);
      for (int delta = 0; delta <= 2; ++delta) {
        const LLSeries d = d_series(sb, required_n_max(delta, 2), delta, quiet());
        const RefinedTable t = extract_refined(d, g, delta, id);
        const PropositionReport r = check_proposition(t);
        CHECK_MESSAGE(r.ok(), id, " delta=", delta);
        CHECK(r.palindromic);
        CHECK(t.N[delta] == t.M[delta]);
      }
    }
  }

  TEST_CASE("proposition failures are reported") {
    const auto sb = preset("p2:2");
    const auto g = geometry_of(sb);
    RefinedTable t = extract_refined(d_series(sb, 3, 1, quiet()), g, 1);
    RefinedTable wrong_top = t;
    wrong_top.M[1] += Laurent(1);
    const auto r = check_proposition(wrong_top);
    CHECK(!r.ok());
    CHECK(!r.checks[2].pass);
    CHECK(r.checks[0].pass);

    RefinedTable leak = t;
    leak.N[3] = Laurent::z();
    CHECK(!check_proposition(leak).checks[0].pass);

    const RefinedTable zero = extract_refined(d_series(sb, 2, 0, quiet()), g, 0);
    CHECK(check_proposition(zero).ok());
    CHECK(zero.N[0] == Laurent(1));
  }

  TEST_CASE("truncation planning") {
    const auto sb = preset("p2:3");
    const auto g = geometry_of(sb);
    CHECK(required_n_max(2, 2) == 4);
    try {
      (void)extract_refined(d_series(sb, 2, 2, quiet()), g, 2);
      FAIL("expected a truncation error");
    } catch (const TruncationError& e) {
      CHECK(e.minimum() == 3);
    }
    CHECK_THROWS_AS(extract_refined(d_series(sb, 3, 2, quiet()), g, 10), std::invalid_argument);
  }
}
