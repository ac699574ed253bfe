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

#include "refcurves/format.hpp"

#include <algorithm>
#include <stdexcept>

namespace refcurves {

Format parse_format(std::string_view name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "table") return Format::table;
  throw std::invalid_argument("unknown format: " + std::string(name));
}

void write_aligned(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], row[c].size());
    }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line.append(width[c] - row[c].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + '"';
}

Json to_json(const SurfaceGeometry& g) {
  return Json{{"L2", g.L2}, {"LK", g.LK}, {"K2", g.K2}, {"c2", g.c2},
              {"chiO", g.chiO}, {"h", g.h}, {"chiL", g.chiL}};
}

Json to_json(const RefinedTable& t, const PropositionReport& report) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < t.N.size(); ++i)
    entries.push_back(Json{{"i", i},
                           {"N", to_json(t.N[i])},
                           {"M", to_json(t.M[i])},
                           {"N_text", to_string(t.N[i])},
                           {"M_text", to_string(t.M[i])},
                           {"N_at_y1", to_string(t.N_at_y1(static_cast<int>(i)))}});
  Json checks = Json::array();
  for (const auto& c : report.checks)
    checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return Json{{"surface", t.surface},
              {"bundle", t.bundle},
              {"delta", t.delta},
              {"m", t.m},
              {"g", t.g},
              {"truncation", Json{{"n_max", t.n_max}, {"x_order", t.x_order}}},
              {"entries", std::move(entries)},
              {"checks", std::move(checks)},
              {"palindromic", report.palindromic},
              {"ok", report.ok()}};
}

Json to_json(const UniversalFit& fit) {
  Json basis = Json::array();
  for (std::size_t i = 0; i < fit.basis.size(); ++i)
    basis.push_back(Json{{"id", fit.basis[i]},
                         {"chern", Json{fit.basis_chern[i][0], fit.basis_chern[i][1],
                                        fit.basis_chern[i][2], fit.basis_chern[i][3]}}});
  Json logA = Json::array();
  for (const auto& s : fit.logA) logA.push_back(to_json(s));
  return Json{{"basis", std::move(basis)},
              {"held_out", fit.held_out},
              {"residual_ok", fit.residual_ok},
              {"residual_detail", fit.residual_detail},
              {"logA", std::move(logA)}};
}

void write_refined(std::ostream& out, const RefinedTable& t, const PropositionReport& report,
                   Format format) {
  switch (format) {
    case Format::json:
      out << to_json(t, report).dump(2) << '\n';
      return;
    case Format::csv:
      out << "surface,bundle,delta,i,N_i,M_i,N_i_at_y1\n";
      for (std::size_t i = 0; i < t.N.size(); ++i)
        out << csv_field(t.surface) << ',' << csv_field(t.bundle) << ',' << t.delta << ',' << i
            << ',' << csv_field(to_string(t.N[i])) << ',' << csv_field(to_string(t.M[i])) << ','
            << to_string(t.N_at_y1(static_cast<int>(i))) << '\n';
      return;
    case Format::table: {
      out << t.surface << " " << t.bundle << "  delta=" << t.delta << " m=" << t.m
          << " g=" << t.g << " n_max=" << t.n_max << " x_order=" << t.x_order << "\n\n";
      std::vector<std::vector<std::string>> rows{{"i", "N_i(y)", "M_i(y)", "N_i(1)"}};
      for (std::size_t i = 0; i < t.N.size(); ++i)
        rows.push_back({std::to_string(i), to_string(t.N[i]), to_string(t.M[i]),
                        to_string(t.N_at_y1(static_cast<int>(i)))});
      write_aligned(out, rows);
      out << '\n';
      for (const auto& c : report.checks)
        out << (c.pass ? "pass  " : "FAIL  ") << c.name << ": " << c.detail << '\n';
      out << "note  palindromic N^delta: " << (report.palindromic ? "yes" : "no") << '\n';
      return;
    }
  }
}

}  // namespace refcurves
