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

#ifndef REFCURVES_SERIALIZE_HPP
#define REFCURVES_SERIALIZE_HPP

#include "json.hpp"
#include "refcurves/series.hpp"

namespace refcurves {

using Json = nlohmann::ordered_json;

// Canonical form {"var", "low", "order", "coeffs"} with rationals as "p/q"
// strings. A Laurent polynomial uses var "z" and lists its coefficients
// densely from its lowest to its highest exponent.
Json to_json(const Rat& r);
Json to_json(const Laurent& p);
Json to_json(const LSeries& s);
Json to_json(const LLSeries& s);

// Throw SeriesError on malformed input.
Rat rat_from_json(const Json& j);
Laurent laurent_from_json(const Json& j);
LSeries lseries_from_json(const Json& j);
LLSeries llseries_from_json(const Json& j);

}  // namespace refcurves

#endif  // REFCURVES_SERIALIZE_HPP
