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

#include <algorithm>
#include <set>

#include "doctest.h"
#include "refcurves/errors.hpp"
#include "refcurves/hilb.hpp"
#include "refcurves/toric.hpp"

using namespace refcurves;

namespace {

// Independent census: number of c-tuples of partitions of total size n,
// counted by recursion on the tuple with a partition-count table built from
// the pentagonal-number recurrence.
long tuple_count(int c, int n) {
  std::vector<long> p(static_cast<std::size_t>(n + 1), 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const long sign = k % 2 ? 1 : -1;
      p[m] += sign * p[m - g1];
      if (g2 <= m) p[m] += sign * p[m - g2];
    }
  }
  std::vector<long> acc(static_cast<std::size_t>(n + 1), 0);
  acc[0] = 1;
  for (int rep = 0; rep < c; ++rep) {
    std::vector<long> next(acc.size(), 0);
    for (int a = 0; a <= n; ++a)
      for (int b = 0; a + b <= n; ++b) next[a + b] += acc[a] * p[b];
    acc = next;
  }
  return acc[n];
}

std::multiset<Weight> as_set(const std::vector<Weight>& v) { return {v.begin(), v.end()}; }

HilbFixedPoint single(const ToricSurfaceModel& s, std::size_t chart, std::vector<int> parts) {
  HilbFixedPoint fp;
  fp.partitions.resize(s.charts.size());
  fp.partitions[chart] = Partition(parts);
  fp.n = fp.partitions[chart].size();
  return fp;
}

ToricSurfaceModel standard_chart() {
  ToricSurfaceModel s;
  s.name = "A2";
  s.charts = {{{1, 0}, {0, 1}}};
  return s;
}

}  // namespace

TEST_SUITE("toric_hilb") {
  TEST_CASE("partitions") {
    const Partition l({3, 1});
    CHECK(l.size() == 4);
    CHECK(l.arm(0, 0) == 2);
    CHECK(l.leg(0, 0) == 1);
    CHECK(l.conjugate() == std::vector<int>{2, 1, 1});
    CHECK_THROWS(Partition({1, 2}));
    CHECK_THROWS(Partition({2, 0}));
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(5).front() == Partition({5}));
  }

  TEST_CASE("presets") {
    const auto p2 = preset("p2:3");
    CHECK(p2.surface.euler() == 3);
    CHECK(p2.surface.K2 == 9);
    CHECK(p2.surface.c2 == 3);
    CHECK(p2.bundle.L2 == 9);
    CHECK(p2.bundle.LK == -9);
    const auto q = preset("p1xp1:2,3");
    CHECK(q.surface.K2 == 8);
    CHECK(q.surface.c2 == 4);
    CHECK(q.bundle.L2 == 12);
    CHECK(q.bundle.LK == -10);
    const auto f = preset("hirzebruch:1:1,2");
    CHECK(f.surface.K2 == 8);
    CHECK(f.surface.c2 == 4);
    CHECK(f.bundle.L2 == 8);
    CHECK(f.bundle.LK == -8);
    for (const char* id : {"p2:1", "p1xp1:1,1", "hirzebruch:2:3,1"})
      CHECK_NOTHROW(validate(preset(id)));
    CHECK_THROWS_AS(preset("p3:1"), InvalidModel);
    CHECK_THROWS_AS(preset("p2:1,2"), InvalidModel);
  }

  TEST_CASE("model files round-trip") {
    const auto sb = preset("hirzebruch:1:1,2");
    const auto back = model_from_json_text(model_to_json_text(sb), "file");
    CHECK(back.surface.charts.size() == 4);
    CHECK(back.bundle.characters == sb.bundle.characters);
    CHECK(model_to_json_text(back) == model_to_json_text(sb));
    CHECK_THROWS_AS(model_from_json_text("{\"name\": 3}", "bad"), InvalidModel);
  }

  TEST_CASE("inconsistent models are rejected") {
    auto sb = preset("p2:2");
    sb.bundle.L2 = 5;
    CHECK_THROWS_AS(validate(sb), InvalidModel);
    sb = preset("p2:2");
    sb.surface.c2 = 4;
    CHECK_THROWS_AS(validate(sb), InvalidModel);
  }

  TEST_CASE("fixed-point census") {
    const auto p2 = preset("p2:1").surface;
    const auto p1 = preset("p1xp1:1,1").surface;
    CHECK(enumerate_fixed_points(p2, 0).size() == 1);
    CHECK(enumerate_fixed_points(p2, 2).size() == 9);
    CHECK(enumerate_fixed_points(p1, 3).size() == 40);
    for (const auto* s : {&p2, &p1}) {
      for (int n = 0; n <= 6; ++n) {
        const auto fps = enumerate_fixed_points(*s, n);
        CHECK(static_cast<long>(fps.size()) == tuple_count(s->euler(), n));
        CHECK(count_fixed_points(s->euler(), n) == fps.size());
      }
    }
  }

  TEST_CASE("enumeration is deterministic and without repeats") {
    const auto s = preset("p1xp1:1,1").surface;
    const auto a = enumerate_fixed_points(s, 4);
    const auto b = enumerate_fixed_points(s, 4);
    std::set<std::vector<Partition>> seen;
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].partitions == b[i].partitions);
      seen.insert(a[i].partitions);
      int total = 0;
      for (const auto& p : a[i].partitions) total += p.size();
      CHECK(total == 4);
    }
    CHECK(seen.size() == a.size());
  }

  TEST_CASE("tangent and tautological weights") {
    const auto s = standard_chart();
    EquivLineBundle L;
    L.characters = {{0, 0}};
    CHECK(as_set(tangent_character(s, single(s, 0, {1}))) == as_set({{1, 0}, {0, 1}}));
    CHECK(as_set(tangent_character(s, single(s, 0, {2}))) ==
          as_set({{0, 2}, {1, -1}, {0, 1}, {1, 0}}));
    HilbFixedPoint empty;
    empty.partitions.resize(1);
    CHECK(tangent_character(s, empty).empty());
    CHECK(taut_character(s, L, empty).empty());

    L.characters = {{3, -2}};
    CHECK(as_set(taut_character(s, L, single(s, 0, {1}))) == as_set({{3, -2}}));
    L.characters = {{0, 0}};
    CHECK(as_set(taut_character(s, L, single(s, 0, {2}))) == as_set({{0, 0}, {0, -1}}));
  }

  TEST_CASE("weight counts") {
    const auto sb = preset("p2:2");
    for (int n = 0; n <= 4; ++n)
      for (const auto& fp : enumerate_fixed_points(sb.surface, n)) {
        CHECK(tangent_character(sb.surface, fp).size() == static_cast<std::size_t>(2 * n));
        CHECK(taut_character(sb.surface, sb.bundle, fp).size() == static_cast<std::size_t>(n));
      }
  }

  TEST_CASE("Bialynicki-Birula index") {
    const auto s = standard_chart();
    const auto fp = single(s, 0, {1});
    CHECK(bb_index(s, fp, {1, 1}) == 0);
    CHECK(bb_index(s, fp, {-1, -1}) == 2);
    CHECK_THROWS_AS(bb_index(s, fp, {1, 0}), std::invalid_argument);

    const auto p2 = preset("p2:1").surface;
    std::multiset<int> idx;
    for (const auto& f : enumerate_fixed_points(p2, 1)) idx.insert(bb_index(p2, f, {1, 3}));
    CHECK(idx == std::multiset<int>{0, 1, 2});
  }

  TEST_CASE("chi_y from Bialynicki-Birula") {
    const auto p2 = preset("p2:1").surface;
    const auto p1 = preset("p1xp1:1,1").surface;
    const Laurent z2 = Laurent::monomial(1, 2), zm2 = Laurent::monomial(1, -2);
    CHECK(chi_y_bb(p2, 1) == zm2 + Laurent(1) + z2);
    CHECK(chi_y_bb(p1, 1) == zm2 + Laurent(2) + z2);
    CHECK(chi_y_bb(p2, 0) == Laurent(1));
    for (const auto* s : {&p2, &p1}) {
      // n = 1: normalized chi_{-y} of S from h00 = h22 = 1, h11 = c2 - 2.
      CHECK(chi_y_bb(*s, 1) == zm2 + Laurent(static_cast<long>(s->c2 - 2)) + z2);
      for (int n = 0; n <= 4; ++n) {
        const Laurent v = chi_y_bb(*s, n);
        CHECK(v.is_palindromic());
        CHECK(v.at_one() == Rat(static_cast<long>(count_fixed_points(s->euler(), n))));
        for (const Weight cov : {Weight{1, 100}, Weight{-37, 1000}, Weight{1009, -13}}) {
          Laurent sum;
          for (const auto& f : enumerate_fixed_points(*s, n))
            sum += Laurent::monomial(1, 2 * bb_index(*s, f, cov) - 2 * n);
          CHECK(sum == v);
        }
      }
    }
  }
}
