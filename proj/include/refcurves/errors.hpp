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

#ifndef REFCURVES_ERRORS_HPP
#define REFCURVES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace refcurves {

// Contract violations on series values: variable mismatch, coefficient
// requested outside the stored range, non-invertible leading term.
class SeriesError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A specialization (alpha, beta) pairs to zero with some weight.
class DegenerateSpecialization : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Negative powers of the localization variable survived the fixed-point sum.
class CancellationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two specializations produced different values for the same integral.
class SpecializationMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The requested truncation cannot support the requested output.
class TruncationError : public std::invalid_argument {
 public:
  TruncationError(const std::string& what, int minimum)
      : std::invalid_argument(what), minimum_(minimum) {}
  int minimum() const noexcept { return minimum_; }

 private:
  int minimum_;
};

class InvalidModel : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CacheCorruption : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace refcurves

#endif  // REFCURVES_ERRORS_HPP
