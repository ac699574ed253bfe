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

#include "refcurves/universal.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace refcurves {

namespace {

using Matrix = std::array<std::array<Rat, 4>, 4>;

// Gauss-Jordan inverse; nullopt if singular.
std::optional<Matrix> inverse(Matrix a) {
  Matrix inv{};
  for (int i = 0; i < 4; ++i) inv[i][i] = 1;
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    while (pivot < 4 && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == 4) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rat p = a[col][col];
    for (int j = 0; j < 4; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (int r = 0; r < 4; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      const Rat f = a[r][col];
      for (int j = 0; j < 4; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

std::optional<Matrix> try_rows(const std::vector<ChernVector>& rows) {
  Matrix m{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = Rat(static_cast<long>(rows[i][j]));
  return inverse(m);
}

LLSeries combine(const std::array<LLSeries, 4>& parts, const std::array<Rat, 4>& weights) {
  LLSeries out = parts[0].scaled(weights[0]);
  for (int k = 1; k < 4; ++k) out += parts[k].scaled(weights[k]);
  return out;
}

std::string first_mismatch(const LLSeries& want, const LLSeries& got) {
  for (int n = 0; n <= want.order(); ++n) {
    const LSeries& a = want.coeff(n);
    const LSeries b = got.coeff_or_zero(n);
    for (int k = 0; k <= a.order(); ++k)
      if (!(a.coeff(k) == b.coeff_or_zero(k)))
        return "w^" + std::to_string(n) + " x^" + std::to_string(k) + ": expected " +
               to_string(a.coeff(k)) + ", fitted " + to_string(b.coeff_or_zero(k));
  }
  return {};
}

}  // namespace

UniversalFit universal_fit(const std::vector<FitSample>& basis,
                           const std::vector<FitSample>& held_out) {
  if (basis.size() < 4) throw std::invalid_argument("universal fit needs at least 4 samples");
  const int w_order = basis[0].d.order();
  const int x_order = basis[0].d.coeff(0).order();
  auto check_shape = [&](const FitSample& s) {
    if (s.d.order() != w_order || s.d.coeff(0).order() != x_order)
      throw std::invalid_argument("sample " + s.id + " has a different truncation");
  };
  for (const auto& s : basis) check_shape(s);
  for (const auto& s : held_out) check_shape(s);

  // Greedy choice of four independent Chern vectors, in input order.
  std::vector<std::size_t> chosen;
  std::optional<Matrix> inv;
  const std::size_t count = basis.size();
  for (std::size_t a = 0; a < count && !inv; ++a)
    for (std::size_t b = a + 1; b < count && !inv; ++b)
      for (std::size_t c = b + 1; c < count && !inv; ++c)
        for (std::size_t d = c + 1; d < count && !inv; ++d) {
          inv = try_rows({basis[a].chern, basis[b].chern, basis[c].chern, basis[d].chern});
          if (inv) chosen = {a, b, c, d};
        }
  if (!inv) throw std::invalid_argument("Chern vectors of the basis have rank below 4");

  std::array<LLSeries, 4> logD;
  for (int i = 0; i < 4; ++i) logD[i] = log(basis[chosen[i]].d);

  UniversalFit fit;
  for (int k = 0; k < 4; ++k) fit.logA[k] = combine(logD, (*inv)[k]);
  for (std::size_t i : chosen) {
    fit.basis.push_back(basis[i].id);
    fit.basis_chern.push_back(basis[i].chern);
  }

  fit.residual_ok = true;
  auto validate = [&](const FitSample& s) {
    fit.held_out.push_back(s.id);
    if (!fit.residual_ok) return;
    const std::string miss = first_mismatch(s.d, universal_eval(fit, s.chern));
    if (!miss.empty()) {
      fit.residual_ok = false;
      fit.residual_detail = s.id + " " + miss;
    }
  };
  for (std::size_t i = 0; i < count; ++i)
    if (std::find(chosen.begin(), chosen.end(), i) == chosen.end()) validate(basis[i]);
  for (const auto& s : held_out) validate(s);
  return fit;
}

LLSeries universal_eval(const UniversalFit& fit, const ChernVector& chern) {
  std::array<Rat, 4> weights;
  for (int k = 0; k < 4; ++k) weights[k] = Rat(static_cast<long>(chern[k]));
  return exp(combine(fit.logA, weights));
}

}  // namespace refcurves
