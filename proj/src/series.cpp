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

#include "refcurves/series.hpp"

#include <string>

namespace refcurves {

std::string_view var_name(Var v) {
  switch (v) {
    case Var::w: return "w";
    case Var::x: return "x";
    case Var::Q: return "Q";
    case Var::u: return "u";
    case Var::H: return "H";
  }
  return "?";
}

Var parse_var(std::string_view name) {
  if (name == "w") return Var::w;
  if (name == "x") return Var::x;
  if (name == "Q") return Var::Q;
  if (name == "u") return Var::u;
  if (name == "H") return Var::H;
  throw SeriesError("unknown series variable: " + std::string(name));
}

}  // namespace refcurves
