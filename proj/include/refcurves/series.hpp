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

#ifndef REFCURVES_SERIES_HPP
#define REFCURVES_SERIES_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "refcurves/errors.hpp"
#include "refcurves/laurent.hpp"
#include "refcurves/rational.hpp"

namespace refcurves {

// Formal variables. Nesting in the engine is fixed: u (localization) over
// x or H (cohomological) over Laurent polynomials in z; generating series
// in w or Q sit over x-series or directly over Laurent polynomials.
enum class Var : char { w, x, Q, u, H };

std::string_view var_name(Var v);
Var parse_var(std::string_view name);

template <class C>
class Series;

// Ring operations the series code needs from its coefficients.
template <class C>
struct CoeffRing;

template <>
struct CoeffRing<Rat> {
  static bool is_zero(const Rat& a) { return sgn(a) == 0; }
  static Rat one_like(const Rat&) { return Rat(1); }
  static std::optional<Rat> inverse(const Rat& a) {
    if (is_zero(a)) return std::nullopt;
    return Rat(1 / a);
  }
  static void add_product(Rat& acc, const Rat& a, const Rat& b) { acc += a * b; }
  static void scale(Rat& a, const Rat& r) { a *= r; }
};

template <>
struct CoeffRing<Laurent> {
  static bool is_zero(const Laurent& a) { return a.is_zero(); }
  static Laurent one_like(const Laurent&) { return Laurent(1); }
  static std::optional<Laurent> inverse(const Laurent& a) { return a.inverse(); }
  static void add_product(Laurent& acc, const Laurent& a, const Laurent& b) {
    acc.add_product(a, b);
  }
  static void scale(Laurent& a, const Rat& r) { a *= r; }
};

// Truncated power (or Laurent) series in one variable.
//
// Stores coefficients for exponents low..order; exponents below `low` are
// zero and exponents above `order` are unknown. Every operation carries the
// order through, so a result never claims a coefficient its inputs could not
// determine. `zero_` is the coefficient-ring zero; for nested series it
// records the inner variable and truncation.
template <class C>
class Series {
 public:
  using Coeff = C;
  using Ring = CoeffRing<C>;

  Series() = default;

  Series(Var var, int low, int order, C zero = C{})
      : var_(var), low_(low), order_(order), zero_(std::move(zero)) {
    coeffs_.assign(static_cast<std::size_t>(std::max(0, order - low + 1)), zero_);
  }

  Series(Var var, int low, std::vector<C> coeffs, int order, C zero = C{})
      : var_(var), low_(low), order_(order), zero_(std::move(zero)) {
    coeffs.resize(static_cast<std::size_t>(std::max(0, order - low + 1)), zero_);
    coeffs_ = std::move(coeffs);
  }

  static Series constant(Var var, int order, const C& c, C zero = C{}) {
    Series s(var, 0, order, std::move(zero));
    if (order >= 0) s.coeffs_[0] = c;
    return s;
  }

  static Series one(Var var, int order, C zero = C{}) {
    C unit = Ring::one_like(zero);
    return constant(var, order, unit, std::move(zero));
  }

  static Series monomial(Var var, int exponent, int order, const C& c, C zero = C{}) {
    Series s(var, std::min(exponent, 0), order, std::move(zero));
    if (exponent <= order) s.coeffs_[exponent - s.low_] = c;
    return s;
  }

  Var var() const { return var_; }
  int low() const { return low_; }
  int order() const { return order_; }
  const C& zero_coeff() const { return zero_; }
  const std::vector<C>& coeffs() const { return coeffs_; }

  // Exact coefficient; low <= k <= order is required.
  const C& coeff(int k) const {
    if (k < low_ || k > order_)
      throw SeriesError("coefficient " + std::to_string(k) + " outside stored range [" +
                        std::to_string(low_) + ", " + std::to_string(order_) + "] in " +
                        std::string(var_name(var_)));
    return coeffs_[k - low_];
  }

  // Like coeff() but exponents below `low` read as zero.
  C coeff_or_zero(int k) const {
    if (k < low_ && k <= order_) return zero_;
    return coeff(k);
  }

  void set(int k, C value) {
    if (k < low_ || k > order_) (void)coeff(k);
    coeffs_[k - low_] = std::move(value);
  }

  // Lowest exponent with a nonzero coefficient.
  std::optional<int> valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!Ring::is_zero(coeffs_[i])) return low_ + static_cast<int>(i);
    return std::nullopt;
  }

  bool is_zero() const { return !valuation().has_value(); }

  Series truncated(int order) const {
    if (order >= order_) return *this;
    Series s(var_, low_, order, zero_);
    for (int k = low_; k <= order; ++k) s.coeffs_[k - low_] = coeffs_[k - low_];
    return s;
  }

  // Multiplication by var^k.
  Series shifted(int k) const {
    Series s = *this;
    s.low_ += k;
    s.order_ += k;
    return s;
  }

  Series scaled(const Rat& r) const {
    Series s = *this;
    for (auto& c : s.coeffs_) Ring::scale(c, r);
    return s;
  }

  Series times(const C& c) const {
    Series s(var_, low_, order_, zero_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!Ring::is_zero(coeffs_[i])) Ring::add_product(s.coeffs_[i], coeffs_[i], c);
    return s;
  }

  Series& operator+=(const Series& o) { return accumulate(o, false); }
  Series& operator-=(const Series& o) { return accumulate(o, true); }

  // *this += a * b, truncating *this to the order the product supports.
  void add_product(const Series& a, const Series& b) {
    check_var(a);
    check_var(b);
    const int ord = std::min(order_, product_order(a, b));
    const int lo = a.low_ + b.low_;
    if (lo < low_) extend_low(lo);
    if (ord < order_) *this = truncated(ord);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (Ring::is_zero(a.coeffs_[i])) continue;
      const int ea = a.low_ + static_cast<int>(i);
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        const int e = ea + b.low_ + static_cast<int>(j);
        if (e > ord) break;
        if (Ring::is_zero(b.coeffs_[j])) continue;
        Ring::add_product(coeffs_[e - low_], a.coeffs_[i], b.coeffs_[j]);
      }
    }
  }

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator-(const Series& a) { return a.scaled(Rat(-1)); }
  friend Series operator*(const Series& a, const Series& b) {
    a.check_var(b);
    const int ord = product_order(a, b);
    Series p(a.var_, a.low_ + b.low_, ord, a.zero_);
    p.add_product(a, b);
    return p;
  }
  Series& operator*=(const Series& o) { return *this = *this * o; }

  // Same variable, same order, equal coefficients (missing ones read as zero).
  friend bool operator==(const Series& a, const Series& b) {
    if (a.var_ != b.var_ || a.order_ != b.order_) return false;
    for (int k = std::min(a.low_, b.low_); k <= a.order_; ++k)
      if (!(a.coeff_or_zero(k) == b.coeff_or_zero(k))) return false;
    return true;
  }

  // Order of validity of a*b, using valuations rather than stored lows.
  static int product_order(const Series& a, const Series& b) {
    const int va = a.valuation().value_or(a.order_ + 1);
    const int vb = b.valuation().value_or(b.order_ + 1);
    return std::min(a.order_ + vb, b.order_ + va);
  }

 private:
  void check_var(const Series& o) const {
    if (o.var_ != var_)
      throw SeriesError("variable mismatch: " + std::string(var_name(var_)) + " vs " +
                        std::string(var_name(o.var_)));
  }

  void extend_low(int lo) {
    std::vector<C> c(static_cast<std::size_t>(low_ - lo), zero_);
    c.insert(c.end(), std::make_move_iterator(coeffs_.begin()),
             std::make_move_iterator(coeffs_.end()));
    coeffs_ = std::move(c);
    low_ = lo;
  }

  Series& accumulate(const Series& o, bool negate) {
    check_var(o);
    const int ord = std::min(order_, o.order_);
    if (o.low_ < low_ && o.low_ <= ord) extend_low(o.low_);
    if (ord < order_) *this = truncated(ord);
    for (int k = std::max(o.low_, low_); k <= ord; ++k) {
      const C& c = o.coeffs_[k - o.low_];
      if (Ring::is_zero(c)) continue;
      if (negate) {
        C neg = c;
        Ring::scale(neg, Rat(-1));
        coeffs_[k - low_] += neg;
      } else {
        coeffs_[k - low_] += c;
      }
    }
    return *this;
  }

  Var var_ = Var::w;
  int low_ = 0;
  int order_ = -1;
  std::vector<C> coeffs_;
  C zero_{};
};

template <class C>
struct CoeffRing<Series<C>> {
  using S = Series<C>;
  static bool is_zero(const S& a) { return a.is_zero(); }
  static S one_like(const S& zero) {
    return S::one(zero.var(), zero.order(), zero.zero_coeff());
  }
  static std::optional<S> inverse(const S& a);
  static void add_product(S& acc, const S& a, const S& b) { acc.add_product(a, b); }
  static void scale(S& a, const Rat& r) { a = a.scaled(r); }
};

// Multiplicative inverse. The lowest nonzero coefficient must be a unit of
// the coefficient ring; a valuation v shifts the result to start at -v.
template <class C>
Series<C> invert(const Series<C>& a) {
  using Ring = CoeffRing<C>;
  const auto v = a.valuation();
  if (!v) throw SeriesError("cannot invert a series with no known nonzero coefficient");
  const auto lead_inv = Ring::inverse(a.coeff(*v));
  if (!lead_inv) throw SeriesError("leading coefficient is not invertible");
  const int n = a.order() - *v;  // unit part known through this order
  std::vector<C> b(static_cast<std::size_t>(n + 1), a.zero_coeff());
  b[0] = *lead_inv;
  for (int k = 1; k <= n; ++k) {
    C acc = a.zero_coeff();
    for (int j = 1; j <= k; ++j) {
      const C& aj = a.coeff(*v + j);
      if (Ring::is_zero(aj)) continue;
      Ring::add_product(acc, aj, b[k - j]);
    }
    C term = a.zero_coeff();
    Ring::add_product(term, acc, *lead_inv);
    Ring::scale(term, Rat(-1));
    b[k] = std::move(term);
  }
  return Series<C>(a.var(), -*v, std::move(b), n - *v, a.zero_coeff());
}

template <class C>
std::optional<Series<C>> CoeffRing<Series<C>>::inverse(const Series<C>& a) {
  try {
    return invert(a);
  } catch (const SeriesError&) {
    return std::nullopt;
  }
}

// exp(a) for a with vanishing non-positive part: k f_k = sum_j j a_j f_{k-j}.
template <class C>
Series<C> exp(const Series<C>& a) {
  using Ring = CoeffRing<C>;
  for (int k = a.low(); k <= std::min(0, a.order()); ++k)
    if (!Ring::is_zero(a.coeff(k)))
      throw SeriesError("exp needs a series with zero constant term");
  const int n = a.order();
  Series<C> f = Series<C>::one(a.var(), n, a.zero_coeff());
  for (int k = 1; k <= n; ++k) {
    C acc = a.zero_coeff();
    for (int j = 1; j <= k; ++j) {
      if (j < a.low()) continue;
      const C& aj = a.coeff(j);
      if (Ring::is_zero(aj)) continue;
      C t = aj;
      Ring::scale(t, Rat(j));
      Ring::add_product(acc, t, f.coeff(k - j));
    }
    Ring::scale(acc, Rat(1, k));
    f.set(k, std::move(acc));
  }
  return f;
}

// log(a) for a = 1 + (positive part): k g_k = k a_k - sum_{j<k} j g_j a_{k-j}.
template <class C>
Series<C> log(const Series<C>& a) {
  using Ring = CoeffRing<C>;
  for (int k = a.low(); k < 0 && k <= a.order(); ++k)
    if (!Ring::is_zero(a.coeff(k))) throw SeriesError("log needs a power series");
  if (a.order() < 0 || !(a.coeff_or_zero(0) == Ring::one_like(a.zero_coeff())))
    throw SeriesError("log needs constant term 1");
  const int n = a.order();
  Series<C> g(a.var(), 0, n, a.zero_coeff());
  for (int k = 1; k <= n; ++k) {
    C acc = a.coeff_or_zero(k);
    Ring::scale(acc, Rat(k));
    for (int j = 1; j < k; ++j) {
      const C& ak = a.coeff_or_zero(k - j);
      if (Ring::is_zero(ak)) continue;
      C t = g.coeff(j);
      Ring::scale(t, Rat(-j));
      Ring::add_product(acc, t, ak);
    }
    Ring::scale(acc, Rat(1, k));
    g.set(k, std::move(acc));
  }
  return g;
}

template <class C>
Series<C> pow(const Series<C>& a, int e) {
  if (e < 0) return pow(invert(a), -e);
  if (e == 0) return Series<C>::one(a.var(), a.order(), a.zero_coeff());
  Series<C> base = a;
  std::optional<Series<C>> out;
  while (e) {
    if (e & 1) out = out ? *out * base : base;
    e >>= 1;
    if (e) base = base * base;
  }
  return *out;
}

// host(value): replaces the variable of `host` by the series `value`.
// `value` must have positive valuation so that finitely many host
// coefficients determine each result coefficient. If value = c v^l + ...,
// unknown host terms of degree > order contribute O(v^{(order+1) l}).
template <class C>
Series<C> substitute(const Series<C>& host, const Series<C>& value) {
  using Ring = CoeffRing<C>;
  const auto vval = value.valuation();
  for (int k = value.low(); k <= std::min(0, value.order()); ++k)
    if (!Ring::is_zero(value.coeff(k)))
      throw SeriesError("substituted series must have zero constant term");
  const int lv = vval.value_or(value.order() + 1);
  const int bound = (host.order() + 1) * lv - 1;
  const int lo = std::min(0, host.low()) * lv;
  Series<C> result(value.var(), lo, bound, value.zero_coeff());
  const auto hval = host.valuation();
  if (!hval) return result.truncated(std::min(bound, value.order()));
  if (*hval < 0 && !vval) throw SeriesError("negative powers of a zero series");
  const Series<C> inv = *hval < 0 ? invert(value) : value;
  Series<C> pos = Series<C>::one(value.var(), bound, value.zero_coeff());
  Series<C> neg = pos;
  for (int k = 0; k <= host.order(); ++k) {
    if (k > 0) pos = pos * value;
    if (k >= host.low() && !Ring::is_zero(host.coeff(k))) result += pos.times(host.coeff(k));
  }
  for (int k = -1; k >= host.low(); --k) {
    neg = neg * inv;
    if (!Ring::is_zero(host.coeff(k))) result += neg.times(host.coeff(k));
  }
  return result;
}

// Coefficientwise image under f; the zero prototype maps through f as well.
template <class C, class F>
auto map_coeffs(const Series<C>& s, F f) -> Series<std::decay_t<decltype(f(s.zero_coeff()))>> {
  using D = std::decay_t<decltype(f(s.zero_coeff()))>;
  std::vector<D> out;
  out.reserve(s.coeffs().size());
  for (const auto& c : s.coeffs()) out.push_back(f(c));
  return Series<D>(s.var(), s.low(), std::move(out), s.order(), f(s.zero_coeff()));
}

// Same coefficients, different variable name.
template <class C>
Series<C> renamed(const Series<C>& s, Var var) {
  return Series<C>(var, s.low(), s.coeffs(), s.order(), s.zero_coeff());
}

// The x-series (or H-series) of Laurent coefficients used everywhere.
using LSeries = Series<Laurent>;
// A series whose coefficients are LSeries: D-series in w over x, or the
// localization numerators in u over x.
using LLSeries = Series<LSeries>;

inline Series<Rat> at_y1(const LSeries& s) {
  return map_coeffs(s, [](const Laurent& c) { return c.at_one(); });
}

}  // namespace refcurves

#endif  // REFCURVES_SERIES_HPP
