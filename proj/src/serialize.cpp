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

#include "refcurves/serialize.hpp"

#include <algorithm>
#include <string>

#include "refcurves/errors.hpp"

namespace refcurves {

namespace {

template <class C>
Json series_json(const Series<C>& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"var", std::string(var_name(s.var()))},
              {"low", s.low()},
              {"order", s.order()},
              {"coeffs", std::move(coeffs)}};
}

void require(bool ok, const char* what) {
  if (!ok) throw SeriesError(std::string("malformed series JSON: ") + what);
}

struct Header {
  std::string var;
  int low;
  int order;
  const Json* coeffs;
};

Header header(const Json& j) {
  require(j.is_object(), "expected an object");
  for (const char* key : {"var", "low", "order", "coeffs"}) require(j.contains(key), key);
  require(j["var"].is_string(), "var");
  require(j["low"].is_number_integer() && j["order"].is_number_integer(), "low/order");
  require(j["coeffs"].is_array(), "coeffs");
  Header h{j["var"].get<std::string>(), j["low"].get<int>(), j["order"].get<int>(), &j["coeffs"]};
  require(h.coeffs->size() == static_cast<std::size_t>(std::max(0, h.order - h.low + 1)),
          "coefficient count does not match low/order");
  return h;
}

template <class C, class Decode>
Series<C> series_from(const Json& j, Decode decode, C zero) {
  const Header h = header(j);
  std::vector<C> coeffs;
  for (const auto& c : *h.coeffs) coeffs.push_back(decode(c));
  return Series<C>(parse_var(h.var), h.low, std::move(coeffs), h.order, std::move(zero));
}

}  // namespace

Json to_json(const Rat& r) { return to_string(r); }

Json to_json(const Laurent& p) {
  Json coeffs = Json::array();
  if (p.is_zero()) return Json{{"var", "z"}, {"low", 0}, {"order", -1}, {"coeffs", coeffs}};
  for (int k = p.min_exponent(); k <= p.max_exponent(); ++k) coeffs.push_back(to_json(p.coeff(k)));
  return Json{{"var", "z"},
              {"low", p.min_exponent()},
              {"order", p.max_exponent()},
              {"coeffs", std::move(coeffs)}};
}

Json to_json(const LSeries& s) { return series_json(s); }
Json to_json(const LLSeries& s) { return series_json(s); }

Rat rat_from_json(const Json& j) {
  require(j.is_string(), "rational must be a string");
  try {
    return parse_rat(j.get<std::string>());
  } catch (const std::exception&) {
    throw SeriesError("malformed series JSON: bad rational " + j.get<std::string>());
  }
}

Laurent laurent_from_json(const Json& j) {
  const Header h = header(j);
  require(h.var == "z", "Laurent polynomial must use var z");
  Laurent p;
  int k = h.low;
  for (const auto& c : *h.coeffs) p += Laurent::monomial(rat_from_json(c), k++);
  return p;
}

LSeries lseries_from_json(const Json& j) {
  return series_from<Laurent>(j, laurent_from_json, Laurent());
}

LLSeries llseries_from_json(const Json& j) {
  const Header h = header(j);
  // Inner zero prototype: the shape of the first coefficient.
  LSeries zero;
  if (!h.coeffs->empty()) {
    const LSeries first = lseries_from_json(h.coeffs->front());
    zero = LSeries(first.var(), 0, first.order());
  }
  return series_from<LSeries>(j, lseries_from_json, zero);
}

}  // namespace refcurves
