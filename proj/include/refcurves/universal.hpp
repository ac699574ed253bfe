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

#ifndef REFCURVES_UNIVERSAL_HPP
#define REFCURVES_UNIVERSAL_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "refcurves/series.hpp"

namespace refcurves {

// (L^2, L.K, K^2, c2).
using ChernVector = std::array<std::int64_t, 4>;

struct FitSample {
  std::string id;
  ChernVector chern{};
  // D-series, w over x.
  LLSeries d;
};

struct UniversalFit {
  // log A_1 .. log A_4 with log D = sum_k chern[k] log A_k.
  std::array<LLSeries, 4> logA;
  std::vector<std::string> basis;
  std::vector<ChernVector> basis_chern;
  std::vector<std::string> held_out;
  bool residual_ok = false;
  // First mismatching coefficient of a held-out sample, if any.
  std::string residual_detail;
};

// Solves for the four log A_k from the first rank-4 subset of `basis`;
// remaining basis entries and `held_out` are checked for exact agreement.
// Throws std::invalid_argument on a rank-deficient basis or on series of
// different truncation.
UniversalFit universal_fit(const std::vector<FitSample>& basis,
                           const std::vector<FitSample>& held_out = {});

// exp(sum_k chern[k] log A_k).
LLSeries universal_eval(const UniversalFit& fit, const ChernVector& chern);

}  // namespace refcurves

#endif  // REFCURVES_UNIVERSAL_HPP
