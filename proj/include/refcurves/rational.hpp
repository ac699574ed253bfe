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

#ifndef REFCURVES_RATIONAL_HPP
#define REFCURVES_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace refcurves {

// Arbitrary-precision rational, always canonical (lowest terms, den > 0).
using Rat = mpq_class;

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rat& r);

// Accepts "p", "-p", "p/q"; the result is canonicalized.
// Throws std::invalid_argument on malformed input or a zero denominator.
Rat parse_rat(std::string_view text);

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

// Exact r^e for e >= 0.
Rat pow(const Rat& r, unsigned e);

Rat binomial(unsigned n, unsigned k);

}  // namespace refcurves

#endif  // REFCURVES_RATIONAL_HPP
