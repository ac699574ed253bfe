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

#include "refcurves/toric.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "refcurves/errors.hpp"

namespace refcurves {

namespace {

struct DualBasis {
  Weight m1;  // dual to the first ray of the cone
  Weight m2;  // dual to the second
};

DualBasis dual_basis(Weight r1, Weight r2) {
  const std::int64_t det = r1.a * r2.b - r1.b * r2.a;
  if (det != 1)
    throw InvalidModel("cone is not smooth and positively oriented (det = " +
                       std::to_string(det) + ")");
  // Rows of the inverse of the matrix with columns r1, r2.
  return {{r2.b, -r2.a}, {-r1.b, r1.a}};
}

Rat pair(Weight w, const Rat& alpha, const Rat& beta) {
  return Rat(static_cast<long>(w.a)) * alpha + Rat(static_cast<long>(w.b)) * beta;
}

std::vector<std::int64_t> parse_ints(std::string_view text, char sep) {
  std::vector<std::int64_t> out;
  std::string item;
  std::stringstream ss{std::string(text)};
  while (std::getline(ss, item, sep)) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw InvalidModel("expected an integer, got '" + item + "'");
    }
    if (used != item.size()) throw InvalidModel("expected an integer, got '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::int64_t to_int(const Rat& r, const char* what) {
  if (r.get_den() != 1) throw InvalidModel(std::string(what) + " is not an integer");
  return r.get_num().get_si();
}

}  // namespace

ToricSurfaceModel surface_from_fan(std::string name, const std::vector<Weight>& rays) {
  if (rays.size() < 3) throw InvalidModel("a complete fan needs at least three rays");
  ToricSurfaceModel s;
  s.name = std::move(name);
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const auto d = dual_basis(rays[i], rays[(i + 1) % rays.size()]);
    s.charts.push_back({d.m1, d.m2});
  }
  SurfaceBundle tmp{s, {"O", std::vector<Weight>(rays.size()), 0, 0}, ""};
  const auto nums = localized_numbers(tmp);
  s.K2 = to_int(nums.K2, "K^2");
  s.c2 = to_int(nums.c2, "c2");
  return s;
}

EquivLineBundle bundle_from_divisor(std::string name, const std::vector<Weight>& rays,
                                    const std::vector<std::int64_t>& coefficients) {
  if (coefficients.size() != rays.size())
    throw InvalidModel("one divisor coefficient per ray is required");
  EquivLineBundle L;
  L.name = std::move(name);
  const std::size_t k = rays.size();
  for (std::size_t i = 0; i < k; ++i) {
    const auto d = dual_basis(rays[i], rays[(i + 1) % k]);
    // Local generator chi^m with <m, rho> = -a_rho; its fiber weight is -m.
    L.characters.push_back(coefficients[i] * d.m1 + coefficients[(i + 1) % k] * d.m2);
  }
  ToricSurfaceModel s = surface_from_fan("tmp", rays);
  const auto nums = localized_numbers({s, L, ""});
  L.L2 = to_int(nums.L2, "L^2");
  L.LK = to_int(nums.LK, "L.K");
  return L;
}

SurfaceBundle preset(std::string_view id) {
  const auto colon = id.find(':');
  if (colon == std::string_view::npos) throw InvalidModel("unknown preset: " + std::string(id));
  const auto family = id.substr(0, colon);
  const auto args = id.substr(colon + 1);
  SurfaceBundle sb;
  sb.id = std::string(id);
  if (family == "p2") {
    const auto d = parse_ints(args, ',');
    if (d.size() != 1) throw InvalidModel("p2 takes one degree: p2:d");
    const std::vector<Weight> rays{{1, 0}, {0, 1}, {-1, -1}};
    sb.surface = surface_from_fan("P2", rays);
    sb.bundle = bundle_from_divisor("O(" + std::to_string(d[0]) + ")", rays, {0, 0, d[0]});
  } else if (family == "p1xp1") {
    const auto ab = parse_ints(args, ',');
    if (ab.size() != 2) throw InvalidModel("p1xp1 takes a bidegree: p1xp1:a,b");
    const std::vector<Weight> rays{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    sb.surface = surface_from_fan("P1xP1", rays);
    sb.bundle = bundle_from_divisor(
        "O(" + std::to_string(ab[0]) + "," + std::to_string(ab[1]) + ")", rays,
        {0, 0, ab[0], ab[1]});
  } else if (family == "hirzebruch") {
    const auto colon2 = args.find(':');
    if (colon2 == std::string_view::npos)
      throw InvalidModel("hirzebruch takes a:c1,c2");
    const auto a = parse_ints(args.substr(0, colon2), ',');
    const auto c = parse_ints(args.substr(colon2 + 1), ',');
    if (a.size() != 1 || a[0] < 0 || c.size() != 2)
      throw InvalidModel("hirzebruch takes a:c1,c2 with a >= 0");
    const std::vector<Weight> rays{{1, 0}, {0, 1}, {-1, a[0]}, {0, -1}};
    sb.surface = surface_from_fan("F" + std::to_string(a[0]), rays);
    // D_1 is a fiber; D_4 is the section with D_4^2 = a.
    sb.bundle = bundle_from_divisor(
        std::to_string(c[0]) + "F+" + std::to_string(c[1]) + "E", rays, {c[0], 0, 0, c[1]});
  } else {
    throw InvalidModel("unknown preset family: " + std::string(family));
  }
  return sb;
}

SurfaceBundle resolve_target(std::string_view target) {
  const auto colon = target.find(':');
  if (colon != std::string_view::npos) {
    const auto family = target.substr(0, colon);
    if (family == "p2" || family == "p1xp1" || family == "hirzebruch") return preset(target);
  }
  return load_model(std::filesystem::path(std::string(target)));
}

LocalizedNumbers localized_numbers(const SurfaceBundle& sb) {
  const auto& charts = sb.surface.charts;
  if (sb.bundle.characters.size() != charts.size())
    throw InvalidModel("bundle needs one character per chart");
  // Any pairing nonzero on all chart weights computes the same numbers.
  for (long k = 2;; ++k) {
    const Rat alpha(1), beta(k * k + 1, k);
    bool ok = true;
    for (const auto& c : charts)
      ok = ok && !is_zero(pair(c.v, alpha, beta)) && !is_zero(pair(c.w, alpha, beta));
    if (!ok) continue;
    LocalizedNumbers out{0, 0, 0, 0};
    for (std::size_t i = 0; i < charts.size(); ++i) {
      const Rat v = pair(charts[i].v, alpha, beta);
      const Rat w = pair(charts[i].w, alpha, beta);
      const Rat mu = pair(sb.bundle.characters[i], alpha, beta);
      const Rat e = v * w;
      out.L2 += mu * mu / e;
      out.LK -= mu * (v + w) / e;
      out.K2 += (v + w) * (v + w) / e;
      out.c2 += 1;
    }
    return out;
  }
}

void validate(const SurfaceBundle& sb) {
  const auto& s = sb.surface;
  if (s.charts.empty()) throw InvalidModel("model has no charts");
  if (s.c2 != s.euler())
    throw InvalidModel("c2 = " + std::to_string(s.c2) + " but the model has " +
                       std::to_string(s.euler()) + " fixed points");
  const auto nums = localized_numbers(sb);
  auto check = [](const Rat& got, std::int64_t declared, const char* what) {
    if (got != Rat(static_cast<long>(declared)))
      throw InvalidModel(std::string(what) + " declared as " + std::to_string(declared) +
                         " but the weights give " + to_string(got));
  };
  check(nums.K2, s.K2, "K^2");
  check(nums.c2, s.c2, "c2");
  check(nums.L2, sb.bundle.L2, "L^2");
  check(nums.LK, sb.bundle.LK, "L.K");
  if ((sb.bundle.L2 - sb.bundle.LK) % 2 != 0)
    throw InvalidModel("L^2 - L.K must be even");
}

SurfaceBundle model_from_json_text(std::string_view text, std::string id) {
  using nlohmann::json;
  SurfaceBundle sb;
  sb.id = std::move(id);
  try {
    const json j = json::parse(text);
    auto weight = [](const json& a) {
      if (!a.is_array() || a.size() != 2) throw InvalidModel("weights are [a, b] pairs");
      return Weight{a[0].get<std::int64_t>(), a[1].get<std::int64_t>()};
    };
    sb.surface.name = j.at("name").get<std::string>();
    for (const auto& c : j.at("charts")) {
      const auto& t = c.at("tangent");
      if (!t.is_array() || t.size() != 2) throw InvalidModel("each chart has two tangent weights");
      sb.surface.charts.push_back({weight(t[0]), weight(t[1])});
      sb.bundle.characters.push_back(weight(c.at("character")));
    }
    sb.surface.K2 = j.at("chern").at("K2").get<std::int64_t>();
    sb.surface.c2 = j.at("chern").at("c2").get<std::int64_t>();
    sb.surface.chiO = j.value("chiO", std::int64_t{1});
    sb.bundle.name = j.value("bundle", std::string("L"));
    sb.bundle.L2 = j.at("intersection").at("L2").get<std::int64_t>();
    sb.bundle.LK = j.at("intersection").at("LK").get<std::int64_t>();
  } catch (const json::exception& e) {
    throw InvalidModel(std::string("model file: ") + e.what());
  }
  validate(sb);
  return sb;
}

SurfaceBundle load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidModel("cannot open model file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return model_from_json_text(ss.str(), path.string());
}

std::string model_to_json_text(const SurfaceBundle& sb) {
  using nlohmann::json;
  json j;
  j["name"] = sb.surface.name;
  j["bundle"] = sb.bundle.name;
  json charts = json::array();
  for (std::size_t i = 0; i < sb.surface.charts.size(); ++i) {
    const auto& c = sb.surface.charts[i];
    const auto& mu = sb.bundle.characters[i];
    charts.push_back({{"tangent", {{c.v.a, c.v.b}, {c.w.a, c.w.b}}},
                      {"character", {mu.a, mu.b}}});
  }
  j["charts"] = charts;
  j["chern"] = {{"K2", sb.surface.K2}, {"c2", sb.surface.c2}};
  j["chiO"] = sb.surface.chiO;
  j["intersection"] = {{"L2", sb.bundle.L2}, {"LK", sb.bundle.LK}};
  return j.dump();
}

}  // namespace refcurves
