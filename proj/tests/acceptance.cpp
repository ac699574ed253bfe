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

// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Usage: acceptance <path to the refcurves executable>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "refcurves/errors.hpp"
#include "refcurves/geometry.hpp"
#include "refcurves/hilb.hpp"
#include "refcurves/localize.hpp"
#include "refcurves/refined.hpp"
#include "refcurves/special_series.hpp"
#include "refcurves/toric.hpp"
#include "refcurves/universal.hpp"

using namespace refcurves;

namespace {

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

EngineOptions options(bool paranoid = false) {
  EngineOptions o;
  o.paranoid = paranoid;
  return o;
}

// [q^n] prod_k (1 - q^k)^(-c) by brute force over bounded multiplicities.
long product_coefficient(int c, int n) {
  // Each factor 1/(1-q^k) contributes q^{k j}; c copies of every k.
  std::vector<long> series(static_cast<std::size_t>(n + 1), 0);
  series[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int copy = 0; copy < c; ++copy) {
      std::vector<long> next(series.size(), 0);
      for (int a = 0; a <= n; ++a)
        for (int j = 0; a + j * k <= n; ++j) next[a + j * k] += series[a];
      series = next;
    }
  return series[n];
}

struct Captured {
  int status;
  std::string out;
};

Captured capture(const std::string& command) {
  Captured c{-1, {}};
  FILE* pipe = ::popen(command.c_str(), "r");
  if (!pipe) return c;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) c.out.append(buf, got);
  c.status = ::pclose(pipe);
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "refcurves";
  int failures = 0;

  auto criterion = [&](int id, const std::string& name, const std::function<std::string()>& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = true;
    try {
      detail = body();
    } catch (const Failure& f) {
      pass = false;
      detail = f.what;
    } catch (const std::exception& e) {
      pass = false;
      detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !pass;
    std::printf("[%s] %d %s: %s (%.1fs)\n", pass ? "PASS" : "FAIL", id, name.c_str(),
                detail.c_str(), secs);
    std::fflush(stdout);
  };

  criterion(1, "chi_y localization equals Bialynicki-Birula", [] {
    for (const char* id : {"p2:1", "p1xp1:1,1"}) {
      const auto sb = preset(id);
      for (int n = 0; n <= 4; ++n) {
        const Laurent got =
            integrate_certified(sb, n, {IntegrandKind::chi_y}, 0, options()).coeff(0);
        require(got == chi_y_bb(sb.surface, n),
                std::string(id) + " n=" + std::to_string(n) + ": " + to_string(got));
      }
    }
    return std::string("P2 and P1xP1, n <= 4, exact");
  });

  criterion(2, "fixed-point census", [] {
    for (const char* id : {"p2:1", "p1xp1:1,1", "hirzebruch:1:1,1", "hirzebruch:2:1,1"}) {
      const auto s = preset(id).surface;
      for (int n = 0; n <= 6; ++n) {
        const auto got = enumerate_fixed_points(s, n).size();
        require(static_cast<long>(got) == product_coefficient(static_cast<int>(s.c2), n),
                s.name + " n=" + std::to_string(n));
      }
    }
    require(enumerate_fixed_points(preset("p2:1").surface, 2).size() == 9, "P2 n=2");
    return std::string("P2, P1xP1, F1, F2 for n <= 6 (P2 n=2 -> 9)");
  });

  criterion(3, "cancellation and specialization agreement", [] {
    int integrals = 0;
    for (bool paranoid : {false, true})
      for (const char* id : {"p2:2", "p1xp1:1,1", "hirzebruch:1:1,2"}) {
        const auto sb = preset(id);
        const int chiL = static_cast<int>(geometry_of(sb).chiL);
        for (int n = 0; n <= 3; ++n) {
          (void)integrate_certified(sb, n, {IntegrandKind::chi_y}, 0, options(paranoid));
          (void)integrate_certified(sb, n, {IntegrandKind::d_series}, 2, options(paranoid));
          (void)integrate_certified(sb, n, {IntegrandKind::chern_y1, 1, chiL}, chiL - 1,
                                    options(paranoid));
          (void)integrate_certified(sb, n, {IntegrandKind::eq7, 1, chiL}, chiL - 1,
                                    options(paranoid));
          integrals += 4;
        }
      }
    // The check is live: a perturbed chart must be caught.
    auto broken = preset("p2:1");
    broken.surface.charts[1].v = {2, 0};
    bool caught = false;
    try {
      (void)integrate_certified(broken, 1, {IntegrandKind::chi_y}, 0, options());
    } catch (const CancellationFailure&) {
      caught = true;
    }
    require(caught, "perturbed weights were not detected");
    return std::to_string(integrals) +
           " integrals certified with two and with three specializations; perturbed model "
           "rejected";
  });

  criterion(4, "one-node refined count at y = 1", [] {
    std::string detail;
    const std::vector<std::pair<const char*, long>> expected{
        {"p2:2", 3}, {"p2:3", 12}, {"p2:4", 27}, {"p1xp1:2,2", 12}};
    for (const auto& [id, want] : expected) {
      const auto sb = preset(id);
      const auto g = geometry_of(sb);
      require(g.c2 + 3 * g.L2 + 2 * g.LK == want, std::string(id) + ": pencil count");
      const LLSeries d = d_series(sb, required_n_max(1, 2), 1, options());
      const RefinedTable t = extract_refined(d, g, 1, id);
      require(t.N_at_y1(1) == want,
              std::string(id) + ": N^1(1) = " + to_string(t.N_at_y1(1)));
      detail += (detail.empty() ? "" : ", ") + std::string(id) + " -> " + std::to_string(want);
    }
    return detail;
  });

  criterion(5, "y = 1 pipeline equals the Chern integral", [] {
    int compared = 0;
    for (const char* id : {"p2:2", "p1xp1:1,1"}) {
      const auto sb = preset(id);
      const int chiL = static_cast<int>(geometry_of(sb).chiL);
      const LLSeries d = d_series(sb, 3, chiL - 1, options());
      for (int m = 0; m < chiL; ++m) {
        const LSeries p = p_series(d, chiL, m);
        for (int n = 0; n <= 3; ++n) {
          const Rat direct = chern_integral_y1(sb, n, m, options());
          require(p.coeff(n).at_one() == direct,
                  std::string(id) + " n=" + std::to_string(n) + " m=" + std::to_string(m));
          ++compared;
        }
      }
    }
    return std::to_string(compared) + " (n, m) pairs on P2 O(2) and P1xP1 O(1,1), n <= 3";
  });

  criterion(6, "vanishing, Laurent support and top-coefficient equality", [] {
    int tables = 0;
    for (const char* id : {"p2:2", "p2:3", "p1xp1:1,1", "p1xp1:2,2"}) {
      const auto sb = preset(id);
      const auto g = geometry_of(sb);
      for (int delta = 0; delta <= 2; ++delta) {
        const LLSeries d = d_series(sb, required_n_max(delta, 2), delta, options());
        const RefinedTable t = extract_refined(d, g, delta, id);
        for (const auto& c : check_proposition(t).checks)
          require(c.pass, std::string(id) + " delta=" + std::to_string(delta) + " " + c.name +
                              ": " + c.detail);
        require(t.N[delta] == t.M[delta], "M^delta != N^delta");
        ++tables;
      }
    }
    return std::to_string(tables) +
           " tables, delta <= 2, zero for delta < i <= delta + 2; the i = 0 slot is reported, "
           "not required to vanish";
  });

  criterion(7, "w(Q) inversion", [] {
    const LSeries w = functional_inverse_wq(12);
    const LSeries lhs = w + invert(w) - LSeries::constant(Var::Q, 12, Laurent::z_plus_z_inv());
    require(lhs == LSeries::monomial(Var::Q, -1, lhs.order(), Laurent(1)),
            "defining relation fails");
    const Laurent sigma = Laurent::z_plus_z_inv();
    require(w.coeff(1) == Laurent(1), "Q^1");
    require(w.coeff(2) == -sigma, "Q^2");
    require(w.coeff(3) == Laurent(1) + sigma * sigma, "Q^3");
    return std::string("relation exact through Q^12; Q - (z+1/z) Q^2 + (1 + (z+1/z)^2) Q^3");
  });

  criterion(8, "universal fit reproduces a held-out pair", [] {
    auto sample = [](const char* id) {
      const auto sb = preset(id);
      const auto g = geometry_of(sb);
      return FitSample{id, {g.L2, g.LK, g.K2, g.c2}, d_series(sb, 4, 2, options())};
    };
    const FitSample held = sample("p1xp1:1,2");
    const UniversalFit fit = universal_fit(
        {sample("p2:1"), sample("p2:2"), sample("p1xp1:1,1"), sample("hirzebruch:1:1,2")}, {held});
    require(fit.residual_ok, fit.residual_detail);
    require(universal_eval(fit, held.chern) == held.d, "held-out series differs");
    return std::string("p1xp1:1,2 exact through w^4 x^2");
  });

  criterion(9, "core suite is deterministic and fast", [&] {
    const auto start = std::chrono::steady_clock::now();
    const Captured a = capture("'" + cli + "' check --suite core --workers 1");
    const Captured b = capture("'" + cli + "' check --suite core --workers 2");
    const Captured c = capture("'" + cli + "' check --suite core --workers 2");
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    require(a.status == 0 && b.status == 0 && c.status == 0, "check exited nonzero");
    require(!a.out.empty() && a.out == b.out && b.out == c.out, "outputs differ");
    require(secs / 3 < 600, "slower than 10 minutes per run");
    char buf[96];
    std::snprintf(buf, sizeof buf, "exit 0, byte-identical across 3 runs, %.1fs per run",
                  secs / 3);
    return std::string(buf);
  });

  std::printf("%d/9 criteria passed\n", 9 - failures);
  return failures ? 1 : 0;
}
