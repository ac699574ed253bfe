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

#include "refcurves/checks.hpp"

#include <functional>
#include <stdexcept>
#include <string>

#include "refcurves/geometry.hpp"
#include "refcurves/hilb.hpp"
#include "refcurves/special_series.hpp"
#include "refcurves/toric.hpp"
#include "refcurves/universal.hpp"

namespace refcurves {

bool SuiteResult::ok() const {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

namespace {

// [q^n] prod_k (1 - q^k)^(-c), by repeated multiplication with 1/(1 - q^k).
std::vector<long> product_counts(int c, int n_max) {
  std::vector<long> a(static_cast<std::size_t>(n_max + 1), 0);
  a[0] = 1;
  for (int rep = 0; rep < c; ++rep)
    for (int k = 1; k <= n_max; ++k)
      for (int n = k; n <= n_max; ++n) a[n] += a[n - k];
  return a;
}

// [Q^n] w = (1/n) [w^{n-1}] (1 - sigma w + w^2)^n.
Laurent lagrange_coefficient(int n) {
  LSeries phi(Var::w, 0, n);
  phi.set(0, Laurent(1));
  if (n >= 1) phi.set(1, -Laurent::z_plus_z_inv());
  if (n >= 2) phi.set(2, Laurent(1));
  Laurent c = pow(phi, n).coeff(n - 1);
  c *= Rat(1, n);
  return c;
}

class Runner {
 public:
  Runner(std::ostream& out, SuiteResult& result) : out_(out), result_(result) {}

  void run(const std::string& name, const std::function<std::string()>& body) {
    CheckResult r{name, true, {}};
    try {
      r.detail = body();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = e.what();
    }
    out_ << (r.pass ? "pass  " : "FAIL  ") << r.name << ": " << r.detail << '\n' << std::flush;
    result_.results.push_back(std::move(r));
  }

 private:
  std::ostream& out_;
  SuiteResult& result_;
};

[[noreturn]] void fail(const std::string& what) { throw std::runtime_error(what); }

SurfaceBundle target(const char* id) {
  SurfaceBundle sb = preset(id);
  validate(sb);
  return sb;
}

void core_suite(Runner& run, const EngineOptions& opts, IntegralStore* store) {
  run.run("fixed-point census", [] {
    for (const char* id : {"p2:1", "p1xp1:1,1", "hirzebruch:1:1,2"}) {
      const SurfaceBundle sb = target(id);
      const auto want = product_counts(sb.surface.euler(), 6);
      for (int n = 0; n <= 6; ++n) {
        std::size_t streamed = 0;
        FixedPointStream s(sb.surface.euler(), n);
        HilbFixedPoint fp;
        while (s.next(fp)) ++streamed;
        if (static_cast<long>(streamed) != want[n])
          fail(sb.surface.name + " n=" + std::to_string(n) + ": " + std::to_string(streamed) +
               " fixed points, expected " + std::to_string(want[n]));
      }
    }
    return std::string("P2, P1xP1, F1 match prod (1-q^k)^-c2 for n <= 6");
  });

  run.run("chi_y against Bialynicki-Birula", [&] {
    for (const char* id : {"p2:1", "p1xp1:1,1"}) {
      const SurfaceBundle sb = target(id);
      for (int n = 0; n <= 4; ++n) {
        const LSeries v = integrate_certified(sb, n, {IntegrandKind::chi_y, 0, 0}, 0, opts);
        const Laurent want = chi_y_bb(sb.surface, n);
        if (!(v.coeff(0) == want))
          fail(sb.surface.name + " n=" + std::to_string(n) + ": " + to_string(v.coeff(0)) +
               " vs " + to_string(want));
      }
    }
    return std::string("P2 and P1xP1, n <= 4");
  });

  run.run("euler class tautology", [&] {
    const SurfaceBundle sb = target("p1xp1:1,1");
    for (int n = 0; n <= 3; ++n) {
      const LSeries v = integrate_certified(sb, n, {IntegrandKind::euler_class, 0, 0}, 0, opts);
      const auto want = static_cast<long>(count_fixed_points(sb.surface.euler(), n));
      if (!(v.coeff(0) == Laurent(want))) fail("n=" + std::to_string(n));
    }
    return std::string("P1xP1, n <= 3");
  });

  run.run("specialization independence", [&] {
    const SurfaceBundle sb = target("p2:1");
    const Specialization specs[] = {
        {Rat(1), Rat(7, 3)}, {Rat(-5, 2), Rat(11)}, {Rat(13, 17), Rat(-2, 9)}};
    for (int n = 0; n <= 3; ++n) {
      const Integrand in{IntegrandKind::d_series, 0, 0};
      const LSeries first = integrate_hilb(sb, n, in, 2, specs[0], opts.workers);
      for (const auto& s : specs)
        if (!(integrate_hilb(sb, n, in, 2, s, opts.workers) == first))
          fail("d-series integrand differs at n=" + std::to_string(n));
    }
    return std::string("P2 O(1) d-series integrand, n <= 3, three fixed specializations");
  });

  run.run("d-series anchors", [&] {
    const SurfaceBundle sb = target("p2:1");
    const LLSeries d = d_series(sb, 1, 1, opts, store);
    if (!(d.coeff(0) == LSeries::one(Var::x, 1))) fail("w^0 coefficient is not 1");
    if (d.coeff(1).coeff(0).at_one() != 2) fail("[w x^0] at y=1 is not 3d - d^2 = 2");
    if (!d.coeff(1).coeff(0).is_palindromic()) fail("[w x^0] is not palindromic");
    return std::string("P2 O(1): D_0 = 1, [w x^0] D at y=1 = 2, palindromic");
  });

  run.run("w(Q) inversion", [] {
    const int order = 12;
    const LSeries w = functional_inverse_wq(order);
    // w + 1/w - sigma = 1/Q
    const LSeries lhs = w + invert(w) - LSeries::constant(Var::Q, order, Laurent::z_plus_z_inv());
    const LSeries rhs = LSeries::monomial(Var::Q, -1, lhs.order(), Laurent(1));
    if (!(lhs == rhs)) fail("defining relation fails");
    for (int n = 1; n <= 3; ++n)
      if (!(w.coeff(n) == lagrange_coefficient(n)))
        fail("Q^" + std::to_string(n) + " differs from Lagrange inversion");
    return std::string("relation exact through order 12; Q^1..Q^3 match Lagrange inversion");
  });

  run.run("one-node counts", [&] {
    std::string detail;
    for (const char* id : {"p2:2", "p2:3", "p2:4", "p1xp1:2,2"}) {
      const SurfaceBundle sb = target(id);
      const auto g = geometry_of(sb);
      const LLSeries d = d_series(sb, required_n_max(1, 2), 1, opts, store);
      const RefinedTable t = extract_refined(d, g, 1, sb.id, sb.bundle.name);
      const Rat want(static_cast<long>(g.c2 + 3 * g.L2 + 2 * g.LK));
      if (t.N_at_y1(1) != want)
        fail(sb.id + ": N^1(1) = " + to_string(t.N_at_y1(1)) + ", expected " + to_string(want));
      if (!check_proposition(t).ok()) fail(sb.id + ": proposition checks fail");
      detail += (detail.empty() ? "" : ", ") + sb.id + " -> " + to_string(want);
    }
    return detail;
  });

  run.run("Chern integral two-path", [&] {
    std::string detail;
    for (const char* id : {"p2:2", "p1xp1:1,1"}) {
      const SurfaceBundle sb = target(id);
      const auto g = geometry_of(sb);
      const int chiL = static_cast<int>(g.chiL);
      const LLSeries d = d_series(sb, 3, chiL - 1, opts, store);
      for (int m = 0; m <= chiL - 1; ++m) {
        const LSeries p = p_series(d, chiL, m);
        for (int n = 0; n <= 3; ++n) {
          const Rat direct = chern_integral_y1(sb, n, m, opts);
          if (p.coeff(n).at_one() != direct)
            fail(sb.id + " n=" + std::to_string(n) + " m=" + std::to_string(m) + ": pipeline " +
                 to_string(p.coeff(n).at_one()) + ", direct " + to_string(direct));
        }
      }
      detail += (detail.empty() ? "" : ", ") + sb.id + " m <= " + std::to_string(chiL - 1);
    }
    return detail + ", n <= 3";
  });

  run.run("refined integral two-path", [&] {
    const SurfaceBundle sb = target("p2:2");
    const int chiL = static_cast<int>(geometry_of(sb).chiL);
    const LLSeries d = d_series(sb, 2, 1, opts, store);
    for (int delta = 0; delta <= 1; ++delta) {
      const int m = chiL - 1 - delta;
      const LSeries p = p_series(d, chiL, m);
      for (int n = 0; n <= 2; ++n) {
        const Eq7Value v = eq7_direct(sb, n, m, opts);
        if (!(v.integral == p.coeff(n)))
          fail("n=" + std::to_string(n) + " delta=" + std::to_string(delta) + ": direct " +
               to_string(v.integral) + ", pipeline " + to_string(p.coeff(n)));
        if (v.integral.at_one() != chern_integral_y1(sb, n, m, opts))
          fail("y=1 value differs from the Chern integral at n=" + std::to_string(n));
      }
    }
    return std::string("P2 O(2), n <= 2, delta <= 1");
  });

  run.run("proposition", [&] {
    std::string detail;
    for (const char* id : {"p2:2", "p1xp1:1,1", "p2:3"}) {
      const SurfaceBundle sb = target(id);
      const auto g = geometry_of(sb);
      for (int delta = 0; delta <= 2; ++delta) {
        const LLSeries d = d_series(sb, required_n_max(delta, 2), delta, opts, store);
        const RefinedTable t = extract_refined(d, g, delta, sb.id, sb.bundle.name);
        const PropositionReport r = check_proposition(t);
        for (const auto& c : r.checks)
          if (!c.pass)
            fail(sb.id + " delta=" + std::to_string(delta) + " " + c.name + ": " + c.detail);
      }
      detail += (detail.empty() ? "" : ", ") + sb.id;
    }
    return detail + " with delta <= 2";
  });

  run.run("universal fit", [&] {
    auto sample = [&](const char* id) {
      const SurfaceBundle sb = target(id);
      const auto g = geometry_of(sb);
      return FitSample{id, {g.L2, g.LK, g.K2, g.c2}, d_series(sb, 4, 2, opts, store)};
    };
    const UniversalFit fit = universal_fit(
        {sample("p2:1"), sample("p2:2"), sample("p1xp1:1,1"), sample("hirzebruch:1:1,2")},
        {sample("p1xp1:1,2")});
    if (!fit.residual_ok) fail(fit.residual_detail);
    return std::string("held-out p1xp1:1,2 reproduced through w^4 x^2");
  });
}

}  // namespace

SuiteResult run_suite(std::string_view name, const EngineOptions& opts, IntegralStore* store,
                      std::ostream& out) {
  SuiteResult result;
  Runner runner(out, result);
  if (name == "core") {
    core_suite(runner, opts, store);
  } else {
    throw std::invalid_argument("unknown suite: " + std::string(name));
  }
  std::size_t passed = 0;
  for (const auto& r : result.results) passed += r.pass;
  out << name << ": " << passed << "/" << result.results.size() << " checks passed"
      << (opts.paranoid ? " (three specializations per integral)" : "") << '\n';
  return result;
}

}  // namespace refcurves
