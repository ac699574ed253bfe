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

#include "refcurves/job.hpp"

#include <cstdlib>
#include <memory>

#include "refcurves/cache.hpp"
#include "refcurves/checks.hpp"
#include "refcurves/errors.hpp"
#include "refcurves/format.hpp"
#include "refcurves/geometry.hpp"
#include "refcurves/localize.hpp"
#include "refcurves/refined.hpp"
#include "refcurves/serialize.hpp"
#include "refcurves/universal.hpp"

namespace refcurves {

namespace {

class Context {
 public:
  Context(const JobSpec& job, std::ostream& err) {
    opts_.seed = job.seed;
    opts_.paranoid = job.paranoid;
    opts_.workers = job.workers;
    opts_.verbose = job.verbose;
    std::optional<std::string> dir = job.cache_dir;
    if (const char* env = std::getenv("REFINED_CURVES_CACHE"); env && *env) {
      if (dir && *dir != env)
        err << "note: REFINED_CURVES_CACHE overrides --cache-dir " << *dir << '\n';
      dir = env;
    }
    if (dir && !job.no_cache) {
      disk_ = std::make_unique<DiskCache>(*dir);
      recovering_ = std::make_unique<RecoveringStore>(*disk_);
    }
  }

  const EngineOptions& opts() const { return opts_; }
  IntegralStore* store() { return recovering_.get(); }

 private:
  EngineOptions opts_;
  std::unique_ptr<DiskCache> disk_;
  std::unique_ptr<RecoveringStore> recovering_;
};

SurfaceBundle load_target(const JobSpec& job) {
  if (job.target.empty()) throw std::invalid_argument(job.command + " needs a surface target");
  SurfaceBundle sb = resolve_target(job.target);
  validate(sb);
  return sb;
}

Format format_or(const JobSpec& job, Format fallback) {
  return job.format.empty() ? fallback : parse_format(job.format);
}

int d_series_job(const JobSpec& job, Context& ctx, std::ostream& out) {
  const SurfaceBundle sb = load_target(job);
  const int n_max = job.n_max.value_or(2);
  const int x_order = job.x_order.value_or(2);
  const LLSeries d = d_series(sb, n_max, x_order, ctx.opts(), ctx.store());
  switch (format_or(job, Format::json)) {
    case Format::json:
      out << Json{{"surface", sb.id},
                  {"geometry", to_json(geometry_of(sb))},
                  {"seed", job.seed},
                  {"series", to_json(d)}}
                 .dump(2)
          << '\n';
      break;
    case Format::csv:
      out << "surface,n,k,coefficient\n";
      for (int n = 0; n <= n_max; ++n)
        for (int k = 0; k <= x_order; ++k)
          out << csv_field(sb.id) << ',' << n << ',' << k << ','
              << csv_field(to_string(d.coeff(n).coeff(k))) << '\n';
      break;
    case Format::table: {
      std::vector<std::vector<std::string>> rows{{"n", "k", "[w^n x^k] D"}};
      for (int n = 0; n <= n_max; ++n)
        for (int k = 0; k <= x_order; ++k)
          rows.push_back({std::to_string(n), std::to_string(k), to_string(d.coeff(n).coeff(k))});
      write_aligned(out, rows);
      break;
    }
  }
  return kExitOk;
}

int refined_job(const JobSpec& job, Context& ctx, std::ostream& out) {
  if (job.delta.has_value() == job.m.has_value())
    throw std::invalid_argument("refined takes exactly one of --delta and --m");
  const SurfaceBundle sb = load_target(job);
  const SurfaceGeometry geom = geometry_of(sb);
  const int delta = job.delta ? *job.delta : static_cast<int>(geom.chiL) - 1 - *job.m;
  if (delta < 0 || delta > geom.chiL - 1)
    throw std::invalid_argument("need 0 <= delta <= chi(L) - 1 = " +
                                std::to_string(geom.chiL - 1));
  const int minimum = required_n_max(delta, 1);
  const int n_max = job.n_max.value_or(required_n_max(delta, 2));
  if (n_max < minimum)
    throw TruncationError("--n-max " + std::to_string(n_max) + " cannot resolve delta = " +
                              std::to_string(delta),
                          minimum);
  const int x_order = job.x_order.value_or(delta);
  if (x_order < delta) throw TruncationError("--x-order must reach delta", delta);
  const LLSeries d = d_series(sb, n_max, x_order, ctx.opts(), ctx.store());
  const RefinedTable table = extract_refined(d, geom, delta, sb.id, sb.bundle.name);
  const PropositionReport report = check_proposition(table);
  write_refined(out, table, report, format_or(job, Format::table));
  return report.ok() ? kExitOk : kExitViolation;
}

// N^delta_delta read two ways: from the q-series and from the diagonal
// coefficient [x^delta Q^delta] of (w(Q)/Q)^{1-g} D(x, w(Q)).
int node_poly_job(const JobSpec& job, Context& ctx, std::ostream& out) {
  if (!job.delta) throw std::invalid_argument("node-poly needs --delta");
  const int top = *job.delta;
  if (top < 0) throw std::invalid_argument("delta must be non-negative");
  const SurfaceBundle sb = load_target(job);
  const SurfaceGeometry geom = geometry_of(sb);
  const int g = static_cast<int>(geom.h);
  const int n_max = job.n_max.value_or(top);
  if (n_max < top) throw TruncationError("--n-max must reach delta", top);
  const LLSeries d = d_series(sb, n_max, top, ctx.opts(), ctx.store());

  bool agree = true;
  std::vector<std::vector<std::string>> rows{{"delta", "N^delta(y)", "at y=1", "palindromic"}};
  Json entries = Json::array();
  for (int delta = 0; delta <= top; ++delta) {
    const Laurent via_q = basis_coefficients(q_series(d, delta), g)[delta];
    LSeries diagonal(Var::w, 0, n_max);
    for (int n = 0; n <= n_max; ++n) diagonal.set(n, d.coeff(n).coeff(delta));
    const Laurent via_diag = basis_coefficients(diagonal, g)[delta];
    if (!(via_q == via_diag)) agree = false;
    rows.push_back({std::to_string(delta), to_string(via_q), to_string(via_q.at_one()),
                    via_q.is_palindromic() ? "yes" : "no"});
    entries.push_back(Json{{"delta", delta},
                           {"N", to_json(via_q)},
                           {"N_text", to_string(via_q)},
                           {"N_at_y1", to_string(via_q.at_one())},
                           {"palindromic", via_q.is_palindromic()},
                           {"diagonal_agrees", via_q == via_diag}});
  }
  switch (format_or(job, Format::table)) {
    case Format::json:
      out << Json{{"surface", sb.id}, {"g", g}, {"entries", entries}, {"ok", agree}}.dump(2)
          << '\n';
      break;
    case Format::csv:
      out << "surface,bundle,delta,N_delta,N_delta_at_y1\n";
      for (const auto& e : entries)
        out << csv_field(sb.id) << ',' << csv_field(sb.bundle.name) << ','
            << e["delta"].get<int>() << ',' << csv_field(e["N_text"].get<std::string>()) << ','
            << e["N_at_y1"].get<std::string>() << '\n';
      break;
    case Format::table:
      out << sb.id << "  g=" << g << " n_max=" << n_max << "\n\n";
      write_aligned(out, rows);
      out << '\n'
          << (agree ? "pass  " : "FAIL  ") << "diagonal of the substituted D-series "
          << (agree ? "agrees" : "disagrees") << '\n';
      break;
  }
  return agree ? kExitOk : kExitViolation;
}

const std::vector<std::string> kDefaultBasis{"p2:1", "p2:2", "p1xp1:1,1", "hirzebruch:1:1,2"};
const std::vector<std::string> kDefaultHeldOut{"p1xp1:1,2"};

FitSample sample_for(const std::string& id, int n_max, int x_order, Context& ctx) {
  SurfaceBundle sb = resolve_target(id);
  validate(sb);
  const auto g = geometry_of(sb);
  return {id, {g.L2, g.LK, g.K2, g.c2}, d_series(sb, n_max, x_order, ctx.opts(), ctx.store())};
}

int universal_fit_job(const JobSpec& job, Context& ctx, std::ostream& out) {
  const int n_max = job.n_max.value_or(4);
  const int x_order = job.x_order.value_or(2);
  std::vector<FitSample> basis, held;
  for (const auto& id : job.basis.empty() ? kDefaultBasis : job.basis)
    basis.push_back(sample_for(id, n_max, x_order, ctx));
  for (const auto& id : job.basis.empty() && job.held_out.empty() ? kDefaultHeldOut : job.held_out)
    held.push_back(sample_for(id, n_max, x_order, ctx));
  const UniversalFit fit = universal_fit(basis, held);
  switch (format_or(job, Format::json)) {
    case Format::json:
      out << to_json(fit).dump(2) << '\n';
      break;
    case Format::csv:
      out << "role,id,L2,LK,K2,c2\n";
      for (std::size_t i = 0; i < fit.basis.size(); ++i) {
        const auto& c = fit.basis_chern[i];
        out << "basis," << csv_field(fit.basis[i]) << ',' << c[0] << ',' << c[1] << ',' << c[2]
            << ',' << c[3] << '\n';
      }
      for (const auto& id : fit.held_out) out << "held_out," << csv_field(id) << ",,,,\n";
      break;
    case Format::table: {
      std::vector<std::vector<std::string>> rows{{"role", "id", "L2", "LK", "K2", "c2"}};
      for (std::size_t i = 0; i < fit.basis.size(); ++i) {
        const auto& c = fit.basis_chern[i];
        rows.push_back({"basis", fit.basis[i], std::to_string(c[0]), std::to_string(c[1]),
                        std::to_string(c[2]), std::to_string(c[3])});
      }
      for (const auto& id : fit.held_out) rows.push_back({"held-out", id, "", "", "", ""});
      write_aligned(out, rows);
      out << '\n'
          << (fit.residual_ok ? "pass  held-out samples reproduced through w^"
                              : "FAIL  held-out mismatch at ")
          << (fit.residual_ok ? std::to_string(n_max) + " x^" + std::to_string(x_order)
                              : fit.residual_detail)
          << '\n';
      break;
    }
  }
  return fit.residual_ok ? kExitOk : kExitViolation;
}

int check_job(const JobSpec& job, Context& ctx, std::ostream& out) {
  const SuiteResult r = run_suite(job.suite, ctx.opts(), ctx.store(), out);
  return r.ok() ? kExitOk : kExitViolation;
}

}  // namespace

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  try {
    Context ctx(job, err);
    if (job.command == "d-series") return d_series_job(job, ctx, out);
    if (job.command == "refined") return refined_job(job, ctx, out);
    if (job.command == "node-poly") return node_poly_job(job, ctx, out);
    if (job.command == "universal-fit") return universal_fit_job(job, ctx, out);
    if (job.command == "check") return check_job(job, ctx, out);
    err << "error: unknown command " << job.command << '\n';
    return kExitUsage;
  } catch (const TruncationError& e) {
    err << "error: " << e.what() << " (minimum " << e.minimum() << ")\n";
    return kExitUsage;
  } catch (const CancellationFailure& e) {
    err << "violation: cancellation: " << e.what() << '\n';
    return kExitViolation;
  } catch (const SpecializationMismatch& e) {
    err << "violation: specializations disagree: " << e.what() << '\n';
    return kExitViolation;
  } catch (const DegenerateSpecialization& e) {
    err << "error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const CacheCorruption& e) {
    err << "error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace refcurves
