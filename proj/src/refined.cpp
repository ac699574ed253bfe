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

#include "refcurves/refined.hpp"

#include <algorithm>
#include <stdexcept>

#include "refcurves/errors.hpp"
#include "refcurves/special_series.hpp"

namespace refcurves {

namespace {

LSeries x_coefficient_series(const LLSeries& d, int delta, const LSeries& weight) {
  if (delta < 0) throw std::invalid_argument("delta must be non-negative");
  LSeries out(Var::w, 0, d.order());
  for (int n = 0; n <= d.order(); ++n) {
    const LSeries& dn = d.coeff(n);
    if (dn.order() < delta)
      throw TruncationError("D must be known through x^" + std::to_string(delta), delta);
    out.set(n, (dn.truncated(delta) * weight).coeff(delta));
  }
  return out;
}

}  // namespace

LSeries q_series(const LLSeries& d, int delta) {
  if (delta < 0) throw std::invalid_argument("delta must be non-negative");
  return x_coefficient_series(d, delta, pow(x_series(delta), delta + 1));
}

LSeries p_series(const LLSeries& d, int chiL, int m) {
  if (m < 0) throw std::invalid_argument("m must be non-negative");
  if (m > chiL - 1) throw std::invalid_argument("m exceeds chi(L) - 1");
  const int delta = chiL - 1 - m;
  return x_coefficient_series(
      d, delta, pow(x_series(delta), delta + 1) * pow(insertion_series(delta), m));
}

std::vector<Laurent> basis_coefficients(const LSeries& f, int g) {
  const int order = f.order();
  if (order < 0) return {};
  const LSeries w = functional_inverse_wq(order + 1);
  const LSeries unit = w.shifted(-1).truncated(order);
  const LSeries composed = substitute(renamed(f, Var::Q), w.truncated(order));
  const LSeries q = pow(unit, 1 - g) * composed;
  std::vector<Laurent> out;
  for (int i = 0; i <= order; ++i) out.push_back(q.coeff_or_zero(i));
  return out;
}

int required_n_max(int delta, int window) { return delta + window; }

RefinedTable extract_refined(const LLSeries& d, const SurfaceGeometry& geom, int delta,
                             std::string surface, std::string bundle) {
  if (delta < 0) throw std::invalid_argument("delta must be non-negative");
  if (delta > geom.chiL - 1)
    throw std::invalid_argument("delta exceeds chi(L) - 1 = " + std::to_string(geom.chiL - 1));
  const int minimum = required_n_max(delta, 1);
  if (d.order() < minimum)
    throw TruncationError("w-order too small to read N^i for i <= delta", minimum);

  RefinedTable t;
  t.surface = std::move(surface);
  t.bundle = std::move(bundle);
  t.delta = delta;
  t.m = static_cast<int>(geom.chiL) - 1 - delta;
  t.g = static_cast<int>(geom.h);
  t.n_max = d.order();
  t.x_order = d.coeff(0).order();
  t.N = basis_coefficients(q_series(d, delta), t.g);
  t.M = basis_coefficients(p_series(d, static_cast<int>(geom.chiL), t.m), t.g);
  return t;
}

bool PropositionReport::ok() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

PropositionReport check_proposition(const RefinedTable& table) {
  PropositionReport report;
  const int top = static_cast<int>(std::min(table.N.size(), table.M.size())) - 1;

  CheckResult vanish{"vanishing", true, {}};
  for (int i = table.delta + 1; i <= top; ++i) {
    if (!table.N[i].is_zero() || !table.M[i].is_zero()) {
      vanish.pass = false;
      vanish.detail = "nonzero entry at i = " + std::to_string(i);
      break;
    }
  }
  if (vanish.pass)
    vanish.detail = top > table.delta
                        ? "zero for i in [" + std::to_string(table.delta + 1) + ", " +
                              std::to_string(top) + "]"
                        : "no entries beyond delta";
  report.checks.push_back(vanish);

  CheckResult support{"laurent-support", true, {}};
  int lo = 0, hi = 0;
  bool any = false;
  for (int i = 0; i <= std::min(top, table.delta); ++i) {
    for (const Laurent* e : {&table.N[i], &table.M[i]}) {
      if (e->is_zero()) continue;
      lo = any ? std::min(lo, e->min_exponent()) : e->min_exponent();
      hi = any ? std::max(hi, e->max_exponent()) : e->max_exponent();
      any = true;
    }
  }
  support.detail = any ? "z-exponents within [" + std::to_string(lo) + ", " +
                             std::to_string(hi) + "]"
                       : "all entries zero";
  report.checks.push_back(support);

  CheckResult top_eq{"top-coefficient", true, {}};
  if (table.delta > top) {
    top_eq.pass = false;
    top_eq.detail = "table does not reach i = delta";
  } else if (!(table.N[table.delta] == table.M[table.delta])) {
    top_eq.pass = false;
    top_eq.detail = "M^delta = " + to_string(table.M[table.delta]) +
                    " differs from N^delta = " + to_string(table.N[table.delta]);
  } else {
    top_eq.detail = "M^delta = N^delta";
  }
  report.checks.push_back(top_eq);

  report.palindromic = table.delta <= top && table.N[table.delta].is_palindromic();
  return report;
}

}  // namespace refcurves
