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

#include "refcurves/geometry.hpp"

#include "refcurves/errors.hpp"

namespace refcurves {

SurfaceGeometry geometry_from_numbers(std::int64_t L2, std::int64_t LK, std::int64_t K2,
                                      std::int64_t c2, std::int64_t chiO) {
  if ((L2 + LK) % 2 != 0 || (L2 - LK) % 2 != 0)
    throw InvalidModel("L^2 + L.K must be even");
  SurfaceGeometry g;
  g.L2 = L2;
  g.LK = LK;
  g.K2 = K2;
  g.c2 = c2;
  g.chiO = chiO;
  g.h = (L2 + LK) / 2 + 1;
  g.chiL = (L2 - LK) / 2 + chiO;
  return g;
}

SurfaceGeometry geometry_of(const SurfaceBundle& sb) {
  return geometry_from_numbers(sb.bundle.L2, sb.bundle.LK, sb.surface.K2, sb.surface.c2,
                               sb.surface.chiO);
}

}  // namespace refcurves
