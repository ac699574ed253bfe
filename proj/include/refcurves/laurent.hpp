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

#ifndef REFCURVES_LAURENT_HPP
#define REFCURVES_LAURENT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "refcurves/rational.hpp"

namespace refcurves {

// Laurent polynomial in z = y^(1/2) with rational coefficients.
//
// Terms are kept sorted by exponent and no zero coefficient is ever stored,
// so structural equality is value equality.
class Laurent {
 public:
  using Term = std::pair<int, Rat>;

  Laurent() = default;
  Laurent(const Rat& c);  // NOLINT: constants embed implicitly
  Laurent(long c) : Laurent(Rat(c)) {}  // NOLINT

  static Laurent monomial(const Rat& c, int exponent);
  static Laurent z() { return monomial(1, 1); }
  static Laurent z_inv() { return monomial(1, -1); }
  // z^-1 - z, the factor that X_{-y} normalizes away.
  static Laurent z_inv_minus_z();
  // z + z^-1
  static Laurent z_plus_z_inv();

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
  }
  const std::vector<Term>& terms() const { return terms_; }
  int min_exponent() const;
  int max_exponent() const;
  Rat coeff(int exponent) const;

  // Value at z = 1, i.e. the y = 1 specialization.
  Rat at_one() const;
  // Image under z -> 1/z.
  Laurent mirrored() const;
  bool is_palindromic() const { return *this == mirrored(); }
  // Units of Q[z, 1/z] are the monomials c z^k.
  std::optional<Laurent> inverse() const;

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  Laurent& operator*=(const Rat& c);
  // *this += a * b without a temporary product.
  void add_product(const Laurent& a, const Laurent& b);

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend Laurent operator*(Laurent a, const Rat& c) { return a *= c; }
  friend Laurent operator-(Laurent a);
  friend bool operator==(const Laurent& a, const Laurent& b) = default;

 private:
  std::vector<Term> terms_;
};

// Renders as a sum of c*y^(k/2) terms in decreasing exponent, "0" if empty.
std::string to_string(const Laurent& p);

}  // namespace refcurves

#endif  // REFCURVES_LAURENT_HPP
