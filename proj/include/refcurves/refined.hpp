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

#ifndef REFCURVES_REFINED_HPP
#define REFCURVES_REFINED_HPP

#include <string>
#include <vector>

#include "refcurves/geometry.hpp"
#include "refcurves/series.hpp"

namespace refcurves {

// Coeff_{x^delta}[D X_{-y}(x)^{delta+1}] as a series in w.
// Throws TruncationError if D is not known through x^delta.
LSeries q_series(const LLSeries& d, int delta);

// Coeff_{x^delta}[D X_{-y}(x)^{delta+1} ins(x)^m] with delta = chiL - 1 - m,
// ins(x) = (z^-1 - z e^{-x (z^-1 - z)}) / (z^-1 - z). Stored without the
// (-1)^n of the pair generating function.
LSeries p_series(const LLSeries& d, int chiL, int m);

// Coefficients c_i (i = 0..order) of (w(Q)/Q)^{1-g} f(w(Q)) = sum_i c_i Q^i.
std::vector<Laurent> basis_coefficients(const LSeries& f, int g);

// Smallest usable w-order for reading N^i, i <= delta, and checking the
// vanishing through i = delta + window.
int required_n_max(int delta, int window);

struct RefinedTable {
  std::string surface;
  std::string bundle;
  int delta = 0;
  int m = 0;
  int g = 0;
  int n_max = 0;
  int x_order = 0;
  // Indexed by i = 0..n_max. Entries with i > delta must vanish.
  std::vector<Laurent> N;
  std::vector<Laurent> M;

  Rat N_at_y1(int i) const { return N.at(static_cast<std::size_t>(i)).at_one(); }
};

// N from q_series(d, delta) and M from p_series(d, chiL, chiL - 1 - delta).
// Throws TruncationError if n_max < delta + 1 or the x-order is short,
// std::invalid_argument if delta > chiL - 1.
RefinedTable extract_refined(const LLSeries& d, const SurfaceGeometry& geom, int delta,
                             std::string surface = {}, std::string bundle = {});

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct PropositionReport {
  std::vector<CheckResult> checks;
  // Reported only.
  bool palindromic = false;

  bool ok() const;
};

// Vanishing outside 0 <= i <= delta, finite support, M^delta = N^delta.
PropositionReport check_proposition(const RefinedTable& table);

}  // namespace refcurves

#endif  // REFCURVES_REFINED_HPP
