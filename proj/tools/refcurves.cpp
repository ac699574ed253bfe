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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "refcurves/job.hpp"

int main(int argc, char** argv) {
  refcurves::JobSpec job;
  CLI::App app{"Refined curve-counting invariants of toric surfaces"};
  app.require_subcommand(1);

  auto common = [&job](CLI::App* sub, bool with_target) {
    if (with_target)
      sub->add_option("target", job.target,
                      "preset (p2:d, p1xp1:a,b, hirzebruch:a:c1,c2) or model file")
          ->required();
    sub->add_option("--n-max", job.n_max, "highest power of w");
    sub->add_option("--x-order", job.x_order, "highest power of x");
    sub->add_option("--format", job.format, "json, csv or table")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    sub->add_option("--cache-dir", job.cache_dir, "directory for cached integrals");
    sub->add_flag("--no-cache", job.no_cache, "ignore any cache directory");
    sub->add_option("--seed", job.seed, "seed for the specialization draws");
    sub->add_flag("--paranoid", job.paranoid, "certify every integral with three specializations");
    sub->add_option("--workers", job.workers, "worker threads (0 = all cores)")
        ->check(CLI::NonNegativeNumber);
    sub->add_flag("-v,--verbose", job.verbose, "log fixed-point counts to stderr");
  };

  auto* d = app.add_subcommand("d-series", "the D-series through w^n-max, x^x-order");
  common(d, true);

  auto* refined = app.add_subcommand("refined", "N^i(y) and M^i(y) for one delta");
  common(refined, true);
  auto* delta_opt = refined->add_option("--delta", job.delta, "number of nodes");
  auto* m_opt = refined->add_option("--m", job.m, "number of point insertions");
  delta_opt->excludes(m_opt);

  auto* node = app.add_subcommand("node-poly", "N^delta(y) for delta = 0..--delta");
  common(node, true);
  node->add_option("--delta", job.delta, "highest node count")->required();

  auto* fit = app.add_subcommand("universal-fit", "fit the four universal series");
  common(fit, false);
  fit->add_option("--basis", job.basis,
                  "basis targets (default p2:1 p2:2 p1xp1:1,1 hirzebruch:1:1,2)");
  fit->add_option("--held-out", job.held_out, "targets checked against the fit");

  auto* check = app.add_subcommand("check", "run a self-check suite");
  common(check, false);
  check->add_option("--suite", job.suite, "suite name")->check(CLI::IsMember({"core"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : refcurves::kExitUsage;
  }
  job.command = app.get_subcommands().front()->get_name();
  return refcurves::run(job, std::cout, std::cerr);
}
