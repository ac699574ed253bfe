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

#include "refcurves/laurent.hpp"

#include <algorithm>

namespace refcurves {

namespace {

// Dense accumulator reused across products on the same thread.
struct Scratch {
  std::vector<Rat> slots;
  Rat tmp;
};

thread_local Scratch scratch;

}  // namespace

Laurent::Laurent(const Rat& c) {
  if (!refcurves::is_zero(c)) terms_.emplace_back(0, c);
}

Laurent Laurent::monomial(const Rat& c, int exponent) {
  Laurent p;
  if (!refcurves::is_zero(c)) p.terms_.emplace_back(exponent, c);
  return p;
}

Laurent Laurent::z_inv_minus_z() { return monomial(1, -1) - monomial(1, 1); }
Laurent Laurent::z_plus_z_inv() { return monomial(1, -1) + monomial(1, 1); }

int Laurent::min_exponent() const { return terms_.empty() ? 0 : terms_.front().first; }
int Laurent::max_exponent() const { return terms_.empty() ? 0 : terms_.back().first; }

Rat Laurent::coeff(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return Rat(0);
}

Rat Laurent::at_one() const {
  Rat s(0);
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

Laurent Laurent::mirrored() const {
  Laurent m;
  m.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    m.terms_.emplace_back(-it->first, it->second);
  return m;
}

std::optional<Laurent> Laurent::inverse() const {
  if (terms_.size() != 1) return std::nullopt;
  return monomial(1 / terms_[0].second, -terms_[0].first);
}

Laurent& Laurent::operator+=(const Laurent& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      Rat s = a->second + b->second;
      if (!refcurves::is_zero(s)) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Laurent operator-(Laurent a) {
  for (auto& t : a.terms_) t.second = -t.second;
  return a;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent& Laurent::operator*=(const Rat& c) {
  if (refcurves::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

void Laurent::add_product(const Laurent& a, const Laurent& b) {
  if (a.terms_.empty() || b.terms_.empty()) return;
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    *this += monomial(a.terms_[0].second * b.terms_[0].second,
                      a.terms_[0].first + b.terms_[0].first);
    return;
  }
  const int lo = a.min_exponent() + b.min_exponent();
  const int hi = a.max_exponent() + b.max_exponent();
  const int self_lo = terms_.empty() ? lo : std::min(lo, min_exponent());
  const int self_hi = terms_.empty() ? hi : std::max(hi, max_exponent());
  auto& slots = scratch.slots;
  const std::size_t width = static_cast<std::size_t>(self_hi - self_lo + 1);
  if (slots.size() < width) slots.resize(width);
  for (std::size_t i = 0; i < width; ++i) slots[i] = 0;
  for (const auto& [e, c] : terms_) slots[e - self_lo] = c;
  Rat& tmp = scratch.tmp;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      mpq_mul(tmp.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      Rat& s = slots[ea + eb - self_lo];
      mpq_add(s.get_mpq_t(), s.get_mpq_t(), tmp.get_mpq_t());
    }
  terms_.clear();
  for (std::size_t i = 0; i < width; ++i)
    if (!refcurves::is_zero(slots[i]))
      terms_.emplace_back(self_lo + static_cast<int>(i), slots[i]);
}

Laurent& Laurent::operator*=(const Laurent& o) {
  Laurent p;
  p.add_product(*this, o);
  return *this = std::move(p);
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent p;
  p.add_product(a, b);
  return p;
}

std::string to_string(const Laurent& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& t = p.terms();
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    const Rat& c = it->second;
    if (out.empty()) {
      out += to_string(c);
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
      out += to_string(Rat(abs(c)));
    }
    out += "*y^(" + std::to_string(it->first) + "/2)";
  }
  return out;
}

}  // namespace refcurves
