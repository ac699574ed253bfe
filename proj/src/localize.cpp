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

#include "refcurves/localize.hpp"

#include <exception>
#include <iostream>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <thread>

#include "refcurves/errors.hpp"
#include "refcurves/hilb.hpp"
#include "refcurves/special_series.hpp"

namespace refcurves {

namespace {

Rat pairing(const Weight& w, const Specialization& spec) {
  return Rat(static_cast<long>(w.a)) * spec.alpha + Rat(static_cast<long>(w.b)) * spec.beta;
}

}  // namespace

Rat weight_form(const Weight& w, const Specialization& spec) {
  Rat r = pairing(w, spec);
  if (is_zero(r))
    throw DegenerateSpecialization("weight (" + std::to_string(w.a) + "," + std::to_string(w.b) +
                                   ") pairs to zero with (" + to_string(spec.alpha) + "," +
                                   to_string(spec.beta) + ")");
  return r;
}

SpecializationSource::SpecializationSource(std::uint64_t seed,
                                           const std::vector<std::uint64_t>& salt) {
  std::vector<std::uint32_t> words{static_cast<std::uint32_t>(seed),
                                   static_cast<std::uint32_t>(seed >> 32)};
  for (auto s : salt) {
    words.push_back(static_cast<std::uint32_t>(s));
    words.push_back(static_cast<std::uint32_t>(s >> 32));
  }
  std::seed_seq seq(words.begin(), words.end());
  engine_.seed(seq);
}

Specialization SpecializationSource::next() {
  // Plain modular reduction of the raw engine output keeps the stream
  // identical across standard library implementations.
  auto draw = [this] {
    const auto bits = engine_();
    const long num = 1 + static_cast<long>(bits % 97);
    const long den = 1 + static_cast<long>((bits >> 16) % 97);
    Rat r(num, den);
    r.canonicalize();
    return (bits >> 63) ? Rat(-r) : r;
  };
  Rat alpha = draw();
  Rat beta = draw();
  return {alpha, beta};
}

std::string_view integrand_name(IntegrandKind k) {
  switch (k) {
    case IntegrandKind::chi_y: return "chi_y";
    case IntegrandKind::d_series: return "d_series";
    case IntegrandKind::chern_y1: return "chern_y1";
    case IntegrandKind::eq7: return "eq7";
    case IntegrandKind::euler_class: return "euler_class";
    case IntegrandKind::graded_chern: return "graded_chern";
  }
  return "?";
}

namespace {

int resolve_workers(int w) {
  if (w > 0) return w;
  const unsigned h = std::thread::hardware_concurrency();
  return h ? static_cast<int>(h) : 1;
}

bool has_hyperplane(IntegrandKind k) {
  return k == IntegrandKind::chern_y1 || k == IntegrandKind::eq7;
}

// Per-weight factors of the integrand as u-series over x-series, memoized by
// the specialized weight value. Values recur across fixed points, and the
// map is shared by the workers of one integral.
class FactorTable {
 public:
  FactorTable(const Integrand& in, int u_order, int x_order)
      : kind_(in.kind),
        u_order_(u_order),
        x_order_(x_order),
        xvar_(has_hyperplane(in.kind) ? Var::H : Var::x),
        zero_(xvar_, 0, x_order) {
    if (kind_ == IntegrandKind::chi_y || kind_ == IntegrandKind::d_series ||
        kind_ == IntegrandKind::eq7)
      xi_ = x_series(u_order).coeffs();
    if (kind_ == IntegrandKind::d_series || kind_ == IntegrandKind::eq7) {
      // g(v) = v / X(v)
      const auto psi = inverse_x_series(u_order + x_order).coeffs();
      taut_coeffs_.push_back(Laurent());
      for (int j = 1; j <= u_order + x_order; ++j) taut_coeffs_.push_back(psi[j - 1]);
    } else if (kind_ == IntegrandKind::chern_y1) {
      // g(v) = v / (1 + v)
      taut_coeffs_.push_back(Laurent());
      for (int j = 1; j <= u_order + x_order; ++j) taut_coeffs_.push_back(Laurent(j % 2 ? 1 : -1));
    }
    if (kind_ == IntegrandKind::chern_y1) {
      const LSeries one_plus_h =
          LSeries::one(Var::H, x_order) + LSeries::monomial(Var::H, 1, x_order, Laurent(1));
      global_ = pow(one_plus_h, in.chiL).shifted(in.m).truncated(x_order);
    } else if (kind_ == IntegrandKind::eq7) {
      const int delta = in.chiL - 1 - in.m;
      const LSeries xh = renamed(x_series(x_order), Var::H);
      const LSeries ins = renamed(insertion_series(x_order), Var::H);
      global_ = (pow(xh, delta + 1) * pow(ins, in.m)).shifted(in.m).truncated(x_order);
    }
  }

  const LSeries& zero() const { return zero_; }
  bool has_taut() const { return !taut_coeffs_.empty(); }
  const std::optional<LSeries>& global() const { return global_; }

  const LLSeries& tangent(const Rat& c) { return lookup(tangent_cache_, c, true); }
  const LLSeries& taut(const Rat& a) { return lookup(taut_cache_, a, false); }

 private:
  const LLSeries& lookup(std::map<Rat, LLSeries>& cache, const Rat& key, bool tangent) {
    {
      std::shared_lock lock(mutex_);
      auto it = cache.find(key);
      if (it != cache.end()) return it->second;
    }
    LLSeries built = tangent ? build_tangent(key) : build_taut(key);
    std::unique_lock lock(mutex_);
    return cache.emplace(key, std::move(built)).first->second;
  }

  LSeries constant(const Laurent& c) const { return LSeries::constant(xvar_, x_order_, c); }

  LLSeries build_tangent(const Rat& c) const {
    LLSeries f(Var::u, 0, u_order_, zero_);
    switch (kind_) {
      case IntegrandKind::chi_y:
      case IntegrandKind::d_series:
      case IntegrandKind::eq7: {
        Rat c_pow(1);
        for (int i = 0; i <= u_order_; ++i) {
          f.set(i, constant(xi_[i] * c_pow));
          c_pow *= c;
        }
        break;
      }
      case IntegrandKind::chern_y1:
        f.set(0, constant(Laurent(1)));
        if (u_order_ >= 1) f.set(1, constant(Laurent(c)));
        break;
      case IntegrandKind::euler_class:
        if (u_order_ >= 1) f.set(1, constant(Laurent(c)));
        break;
      case IntegrandKind::graded_chern:
        f.set(0, constant(Laurent(1)));
        if (u_order_ >= 1) f.set(1, LSeries::monomial(xvar_, 1, x_order_, Laurent(c)));
        break;
    }
    return f;
  }

  // g(a u + x) = sum_j g_j (a u + x)^j; [u^i x^k] = g_{i+k} C(i+k, i) a^i.
  LLSeries build_taut(const Rat& a) const {
    LLSeries f(Var::u, 0, u_order_, zero_);
    Rat a_pow(1);
    for (int i = 0; i <= u_order_; ++i) {
      LSeries coeff(xvar_, 0, x_order_);
      for (int k = 0; k <= x_order_; ++k) {
        const Laurent& g = taut_coeffs_[i + k];
        if (g.is_zero()) continue;
        coeff.set(k, g * (a_pow * binomial(i + k, i)));
      }
      f.set(i, std::move(coeff));
      a_pow *= a;
    }
    return f;
  }

  IntegrandKind kind_;
  int u_order_;
  int x_order_;
  Var xvar_;
  LSeries zero_;
  std::vector<Laurent> xi_;
  std::vector<Laurent> taut_coeffs_;
  std::optional<LSeries> global_;
  std::shared_mutex mutex_;
  std::map<Rat, LLSeries> tangent_cache_;
  std::map<Rat, LLSeries> taut_cache_;
};

void check_integrand(const Integrand& in, int x_order) {
  if (!has_hyperplane(in.kind)) return;
  if (in.chiL < 1) throw std::invalid_argument("chi(L) must be positive");
  if (in.m < 0 || in.m > in.chiL - 1)
    throw std::invalid_argument("insertion count m must lie in [0, chi(L) - 1]");
  if (x_order < in.chiL - 1)
    throw TruncationError("hyperplane order must reach chi(L) - 1", in.chiL - 1);
}

// Rejects the specialization up front if a tangent weight pairs to zero.
// Tautological weights may vanish (the trivial character does): their
// factors are power series in the shifted root and need no division.
std::size_t check_specialization(const SurfaceBundle& sb, int n, const Specialization& spec) {
  std::size_t count = 0;
  FixedPointStream stream(sb.surface.euler(), n);
  HilbFixedPoint fp;
  std::vector<Weight> weights;
  while (stream.next(fp)) {
    ++count;
    weights.clear();
    for (std::size_t i = 0; i < fp.partitions.size(); ++i)
      append_tangent_weights(sb.surface.charts[i], fp.partitions[i], weights);
    for (const auto& w : weights) (void)weight_form(w, spec);
  }
  return count;
}

}  // namespace

LSeries integrate_hilb(const SurfaceBundle& sb, int n, const Integrand& integrand, int x_order,
                       const Specialization& spec, int workers) {
  if (n < 0 || x_order < 0) throw std::invalid_argument("n and x_order must be non-negative");
  if (sb.bundle.characters.size() != sb.surface.charts.size())
    throw InvalidModel("bundle needs one character per chart");
  check_integrand(integrand, x_order);
  (void)check_specialization(sb, n, spec);

  const int u_order = 2 * n;
  FactorTable table(integrand, u_order, x_order);
  const int nworkers = resolve_workers(workers);
  std::vector<LLSeries> partial(static_cast<std::size_t>(nworkers),
                                LLSeries(Var::u, -u_order, 0, table.zero()));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(nworkers));

  auto work = [&](int t) {
    try {
      FixedPointStream stream(sb.surface.euler(), n);
      HilbFixedPoint fp;
      std::vector<Weight> tangent, taut;
      for (std::size_t index = 0; stream.next(fp); ++index) {
        if (static_cast<int>(index % static_cast<std::size_t>(nworkers)) != t) continue;
        tangent.clear();
        taut.clear();
        for (std::size_t i = 0; i < fp.partitions.size(); ++i) {
          append_tangent_weights(sb.surface.charts[i], fp.partitions[i], tangent);
          append_taut_weights(sb.surface.charts[i], sb.bundle.characters[i], fp.partitions[i],
                              taut);
        }
        LLSeries num = LLSeries::one(Var::u, u_order, table.zero());
        Rat euler(1);
        for (const auto& w : tangent) {
          const Rat c = weight_form(w, spec);
          euler *= c;
          num = (num * table.tangent(c)).truncated(u_order);
        }
        if (table.has_taut())
          for (const auto& w : taut)
            num = (num * table.taut(pairing(w, spec))).truncated(u_order);
        if (table.global()) num = num.times(*table.global());
        partial[t] += num.scaled(Rat(1 / euler)).shifted(-u_order);
      }
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };

  if (nworkers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < nworkers; ++t) threads.emplace_back(work, t);
    for (auto& th : threads) th.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  LLSeries total = partial[0];
  for (std::size_t t = 1; t < partial.size(); ++t) total += partial[t];
  for (int k = -u_order; k < 0; ++k)
    if (!total.coeff(k).is_zero())
      throw CancellationFailure("u^" + std::to_string(k) + " survives the fixed-point sum (" +
                                std::string(integrand_name(integrand.kind)) + ", n = " +
                                std::to_string(n) + ")");
  return total.coeff(0);
}

LSeries integrate_certified(const SurfaceBundle& sb, int n, const Integrand& integrand,
                            int x_order, const EngineOptions& opts) {
  const std::size_t wanted = opts.paranoid ? 3 : 2;
  SpecializationSource source(
      opts.seed, {static_cast<std::uint64_t>(integrand.kind), static_cast<std::uint64_t>(n),
                  static_cast<std::uint64_t>(x_order), static_cast<std::uint64_t>(integrand.m),
                  static_cast<std::uint64_t>(integrand.chiL)});
  std::vector<Specialization> used;
  std::optional<LSeries> first;
  for (int attempt = 0; used.size() < wanted; ++attempt) {
    if (attempt > 1000) throw DegenerateSpecialization("no valid specialization found");
    const Specialization spec = source.next();
    bool proportional = false;
    for (const auto& u : used) proportional |= (u.alpha * spec.beta == u.beta * spec.alpha);
    if (proportional) continue;
    LSeries value;
    try {
      value = integrate_hilb(sb, n, integrand, x_order, spec, opts.workers);
    } catch (const DegenerateSpecialization&) {
      continue;
    }
    if (!first) {
      first = std::move(value);
    } else if (!(value == *first)) {
      throw SpecializationMismatch(std::string(integrand_name(integrand.kind)) + " at n = " +
                                   std::to_string(n) + " differs between specializations");
    }
    used.push_back(spec);
  }
  if (opts.verbose)
    std::clog << "[localize] " << sb.id << " " << integrand_name(integrand.kind) << " n=" << n
              << " fixed points=" << count_fixed_points(sb.surface.euler(), n)
              << " specializations=" << used.size() << "\n";
  return *first;
}

LLSeries d_series(const SurfaceBundle& sb, int n_max, int x_order, const EngineOptions& opts,
                  IntegralStore* store) {
  if (n_max < 0 || x_order < 0) throw std::invalid_argument("n_max and x_order must be >= 0");
  const LSeries zero(Var::x, 0, x_order);
  LLSeries d(Var::w, 0, n_max, zero);
  const std::string model = store ? model_to_json_text(sb) : std::string();
  for (int n = 0; n <= n_max; ++n) {
    const IntegralKey key{model, n, "d_series", x_order};
    auto cached = [&]() -> std::optional<LSeries> {
      if (!store) return std::nullopt;
      auto hit = store->load(key);
      if (hit && (hit->var() != Var::x || hit->order() != x_order)) return std::nullopt;
      return hit;
    };
    if (auto hit = cached()) {
      d.set(n, std::move(*hit));
      continue;
    }
    LSeries value = integrate_certified(sb, n, {IntegrandKind::d_series, 0, 0}, x_order, opts);
    if (store) store->store(key, value);
    d.set(n, std::move(value));
  }
  return d;
}

Rat chern_integral_y1(const SurfaceBundle& sb, int n, int m, const EngineOptions& opts) {
  const auto g = geometry_of(sb);
  const int chiL = static_cast<int>(g.chiL);
  const Integrand in{IntegrandKind::chern_y1, m, chiL};
  const LSeries r = integrate_certified(sb, n, in, chiL - 1, opts);
  const Laurent& top = r.coeff(chiL - 1);
  if (!top.is_constant()) throw std::logic_error("Chern integral picked up a z-dependence");
  return top.coeff(0);
}

Eq7Value eq7_direct(const SurfaceBundle& sb, int n, int m, const EngineOptions& opts) {
  const auto g = geometry_of(sb);
  const int chiL = static_cast<int>(g.chiL);
  const Integrand in{IntegrandKind::eq7, m, chiL};
  const LSeries r = integrate_certified(sb, n, in, chiL - 1, opts);
  return {r.coeff(chiL - 1), n + chiL - 1};
}

}  // namespace refcurves
