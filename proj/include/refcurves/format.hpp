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

#ifndef REFCURVES_FORMAT_HPP
#define REFCURVES_FORMAT_HPP

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "refcurves/geometry.hpp"
#include "refcurves/refined.hpp"
#include "refcurves/serialize.hpp"
#include "refcurves/universal.hpp"

namespace refcurves {

enum class Format { json, csv, table };

Format parse_format(std::string_view name);

// Columns padded to their widest cell, two spaces apart.
void write_aligned(std::ostream& out, const std::vector<std::vector<std::string>>& rows);

// RFC 4180 quoting where needed.
std::string csv_field(std::string_view s);

Json to_json(const SurfaceGeometry& g);
Json to_json(const RefinedTable& t, const PropositionReport& report);
Json to_json(const UniversalFit& fit);

void write_refined(std::ostream& out, const RefinedTable& t, const PropositionReport& report,
                   Format format);

}  // namespace refcurves

#endif  // REFCURVES_FORMAT_HPP
