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

#ifndef REFCURVES_GEOMETRY_HPP
#define REFCURVES_GEOMETRY_HPP

#include <cstdint>

#include "refcurves/toric.hpp"

namespace refcurves {

// Numerical data of (S, L) the pipeline consumes.
//   2h - 2 = L2 + LK,   chiL = (L2 - LK)/2 + chiO,   m + delta = chiL - 1.
struct SurfaceGeometry {
  std::int64_t L2 = 0;
  std::int64_t LK = 0;
  std::int64_t K2 = 0;
  std::int64_t c2 = 0;
  std::int64_t chiO = 1;
  std::int64_t h = 0;
  std::int64_t chiL = 0;

  // Noether: 12 chiO = K2 + c2.
  bool noether_holds() const { return 12 * chiO == K2 + c2; }
};

// Throws InvalidModel if the parities make h or chiL non-integral.
SurfaceGeometry geometry_of(const SurfaceBundle& sb);
SurfaceGeometry geometry_from_numbers(std::int64_t L2, std::int64_t LK, std::int64_t K2,
                                      std::int64_t c2, std::int64_t chiO);

}  // namespace refcurves

#endif  // REFCURVES_GEOMETRY_HPP
