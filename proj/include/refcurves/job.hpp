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

#ifndef REFCURVES_JOB_HPP
#define REFCURVES_JOB_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace refcurves {

struct JobSpec {
  // d-series, refined, node-poly, universal-fit or check.
  std::string command;
  // Preset id or model file.
  std::string target;
  std::optional<int> delta;
  std::optional<int> m;
  std::optional<int> n_max;
  std::optional<int> x_order;
  // json, csv or table; empty picks the command's default.
  std::string format;
  std::optional<std::string> cache_dir;
  bool no_cache = false;
  std::uint64_t seed = 20260101;
  bool paranoid = false;
  int workers = 0;
  std::string suite = "core";
  bool verbose = false;
  // universal-fit; empty selects the built-in basis and held-out pair.
  std::vector<std::string> basis;
  std::vector<std::string> held_out;
};

enum ExitCode : int {
  kExitOk = 0,
  // Cancellation, specialization mismatch, failed proposition or fit check.
  kExitViolation = 1,
  // Bad arguments, unknown preset, insufficient truncation.
  kExitUsage = 2,
  kExitInternal = 3,
};

// Writes results to `out` and diagnostics to `err`.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

}  // namespace refcurves

#endif  // REFCURVES_JOB_HPP
