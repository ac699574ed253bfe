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

#ifndef REFCURVES_CHECKS_HPP
#define REFCURVES_CHECKS_HPP

#include <ostream>
#include <string_view>
#include <vector>

#include "refcurves/localize.hpp"
#include "refcurves/refined.hpp"

namespace refcurves {

struct SuiteResult {
  std::vector<CheckResult> results;
  bool ok() const;
};

// Known suites: "core". Throws std::invalid_argument otherwise. Each check
// line is written to `out` as it completes; the text depends only on the
// options' seed and paranoia, never on timing or worker count.
SuiteResult run_suite(std::string_view name, const EngineOptions& opts, IntegralStore* store,
                      std::ostream& out);

}  // namespace refcurves

#endif  // REFCURVES_CHECKS_HPP
