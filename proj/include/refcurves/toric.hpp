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

#ifndef REFCURVES_TORIC_HPP
#define REFCURVES_TORIC_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "refcurves/rational.hpp"

namespace refcurves {

// Character of the two-dimensional torus, i.e. a point of Z^2.
struct Weight {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend Weight operator+(Weight p, Weight q) { return {p.a + q.a, p.b + q.b}; }
  friend Weight operator-(Weight p, Weight q) { return {p.a - q.a, p.b - q.b}; }
  friend Weight operator-(Weight p) { return {-p.a, -p.b}; }
  friend Weight operator*(std::int64_t k, Weight p) { return {k * p.a, k * p.b}; }
  friend bool operator==(Weight, Weight) = default;
  friend auto operator<=>(Weight, Weight) = default;
};

// Torus-fixed point of S with the tangent weights of its two coordinate
// directions.
struct Chart {
  Weight v;
  Weight w;
};

struct ToricSurfaceModel {
  std::string name;
  std::vector<Chart> charts;
  std::int64_t K2 = 0;
  std::int64_t c2 = 0;
  std::int64_t chiO = 1;

  int euler() const { return static_cast<int>(charts.size()); }
};

// Equivariant line bundle: the torus character of the fiber at each chart.
struct EquivLineBundle {
  std::string name;
  std::vector<Weight> characters;
  std::int64_t L2 = 0;
  std::int64_t LK = 0;
};

struct SurfaceBundle {
  ToricSurfaceModel surface;
  EquivLineBundle bundle;
  // Preset identifier or file path the pair was built from.
  std::string id;
};

// Smooth complete toric surface from its rays in counterclockwise order.
// Chern numbers are computed by localization.
ToricSurfaceModel surface_from_fan(std::string name, const std::vector<Weight>& rays);

// Line bundle O(sum_i coefficients[i] D_i) on the fan's surface.
EquivLineBundle bundle_from_divisor(std::string name, const std::vector<Weight>& rays,
                                    const std::vector<std::int64_t>& coefficients);

// p2:d, p1xp1:a,b, hirzebruch:a:c1,c2 (L = c1 F + c2 E with F a fiber and
// E the section of self-intersection a). Throws InvalidModel.
SurfaceBundle preset(std::string_view id);

// Preset id, or else a path to a JSON model file.
SurfaceBundle resolve_target(std::string_view target);

SurfaceBundle load_model(const std::filesystem::path& path);
SurfaceBundle model_from_json_text(std::string_view text, std::string id);
std::string model_to_json_text(const SurfaceBundle& sb);

// Intersection numbers recomputed from the weight data by localization.
struct LocalizedNumbers {
  Rat L2, LK, K2, c2;
};
LocalizedNumbers localized_numbers(const SurfaceBundle& sb);

// Checks chart count against c2 and the declared numbers against the
// localized ones. Throws InvalidModel.
void validate(const SurfaceBundle& sb);

}  // namespace refcurves

#endif  // REFCURVES_TORIC_HPP
