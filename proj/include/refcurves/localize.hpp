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

#ifndef REFCURVES_LOCALIZE_HPP
#define REFCURVES_LOCALIZE_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "refcurves/geometry.hpp"
#include "refcurves/series.hpp"
#include "refcurves/toric.hpp"

namespace refcurves {

// t1 = alpha u, t2 = beta u: collapses both torus parameters onto u.
struct Specialization {
  Rat alpha;
  Rat beta;
};

// The u-coefficient of a weight under the specialization.
// Throws DegenerateSpecialization on a zero pairing.
Rat weight_form(const Weight& w, const Specialization& spec);

// Seeded stream of small-height specializations (|num|, den <= 97).
// The salt separates streams of different integrals, so a result never
// depends on which other integrals were computed (or cached) first.
class SpecializationSource {
 public:
  SpecializationSource(std::uint64_t seed, const std::vector<std::uint64_t>& salt);
  Specialization next();

 private:
  std::mt19937_64 engine_;
};

enum class IntegrandKind {
  // X_{-y}(T S^[n]): the normalized chi_{-y} genus.
  chi_y,
  // X_{-y}(T) c_n(L^[n] (x) e^x) / X_{-y}(L^[n] (x) e^x).
  d_series,
  // c(T) c_n(L^[n] x O(1)) c(O(1))^chiL / c(L^[n] x O(1)) H^m over S^[n] x P^{chiL-1}.
  chern_y1,
  // The refined integrand over S^[n] x P^{chiL-1}, with the point insertions.
  eq7,
  // Top Chern class of the tangent bundle.
  euler_class,
  // c(T) with x marking cohomological degree.
  graded_chern,
};

std::string_view integrand_name(IntegrandKind k);

struct Integrand {
  IntegrandKind kind = IntegrandKind::chi_y;
  // Point insertions (chern_y1, eq7).
  int m = 0;
  // chi(L), the number of hyperplane directions (chern_y1, eq7).
  int chiL = 0;
};

// Sum over fixed points of numerator / Euler class under one specialization.
// Returns the u^0 coefficient: a series in x (H for chern_y1 and eq7) known
// through x_order. Throws DegenerateSpecialization, CancellationFailure.
LSeries integrate_hilb(const SurfaceBundle& sb, int n, const Integrand& integrand, int x_order,
                       const Specialization& spec, int workers = 1);

struct EngineOptions {
  std::uint64_t seed = 20260101;
  // Adds a third specialization.
  bool paranoid = false;
  // 0 means hardware concurrency.
  int workers = 0;
  bool verbose = false;
};

// integrate_hilb under two (three if paranoid) seeded specializations.
// Throws SpecializationMismatch if the values differ.
LSeries integrate_certified(const SurfaceBundle& sb, int n, const Integrand& integrand,
                            int x_order, const EngineOptions& opts);

// Persistence hook for per-n integrals; see cache.hpp.
struct IntegralKey {
  std::string model;
  int n = 0;
  std::string integrand;
  int x_order = 0;
};

class IntegralStore {
 public:
  virtual ~IntegralStore() = default;
  virtual std::optional<LSeries> load(const IntegralKey& key) = 0;
  virtual void store(const IntegralKey& key, const LSeries& value) = 0;
};

// D^{S,L}(x, y, w) = sum_n w^n int_{S^[n]} X(T) c_n(L^[n] e^x) / X(L^[n] e^x),
// through w^n_max and x^x_order.
LLSeries d_series(const SurfaceBundle& sb, int n_max, int x_order, const EngineOptions& opts,
                  IntegralStore* store = nullptr);

// Prefactor-free integral over S^[n] x P^{chiL-1} of
// c_n(L^[n] x O(1)) c(T) c(O(1))^chiL / c(L^[n] x O(1)) H^m.
Rat chern_integral_y1(const SurfaceBundle& sb, int n, int m, const EngineOptions& opts);

// The refined integral of the pair invariant over S^[n] x P^{chiL-1},
// evaluated directly on that space. `integral` is prefactor-free; the
// pair invariant carries the sign (-1)^vd with vd = n + chiL - 1.
struct Eq7Value {
  Laurent integral;
  int vd = 0;
  Laurent signed_value() const { return vd % 2 ? -integral : integral; }
};
Eq7Value eq7_direct(const SurfaceBundle& sb, int n, int m, const EngineOptions& opts);

}  // namespace refcurves

#endif  // REFCURVES_LOCALIZE_HPP
