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

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "refcurves/job.hpp"
#include "refcurves/serialize.hpp"

using namespace refcurves;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_job(JobSpec job) {
  job.workers = job.workers ? job.workers : 1;
  std::ostringstream out, err;
  const int code = run(job, out, err);
  return {code, out.str(), err.str()};
}

JobSpec job(std::string command, std::string target = {}) {
  JobSpec j;
  j.command = std::move(command);
  j.target = std::move(target);
  return j;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("d-series of a point") {
    JobSpec j = job("d-series", "p2:1");
    j.n_max = 0;
    const Outcome o = run_job(j);
    REQUIRE(o.code == kExitOk);
    const LLSeries d = llseries_from_json(Json::parse(o.out)["series"]);
    CHECK(d.order() == 0);
    CHECK(d.coeff(0) == LSeries::one(Var::x, 2));
  }

  TEST_CASE("refined table") {
    JobSpec j = job("refined", "p2:2");
    j.delta = 1;
    j.n_max = 4;
    const Outcome o = run_job(j);
    CHECK(o.code == kExitOk);
    std::istringstream lines(o.out);
    std::string line;
    bool found = false;
    while (std::getline(lines, line)) {
      std::istringstream cells(line);
      std::string i, n_val;
      cells >> i >> n_val;
      if (i == "1") {
        found = true;
        CHECK(n_val == "3*y^(0/2)");
        CHECK(line.substr(line.find_last_not_of(' ')) == "3");
      }
    }
    CHECK(found);

    j.format = "json";
    const Json parsed = Json::parse(run_job(j).out);
    CHECK(parsed["entries"][1]["N_at_y1"] == "3");
    CHECK(parsed["ok"] == true);

    j.format = "csv";
    const std::string csv = run_job(j).out;
    CHECK(csv.rfind("surface,bundle,delta,i,N_i,M_i,N_i_at_y1\n", 0) == 0);
    CHECK(csv.find("p2:2,O(2),1,1,3*y^(0/2),3*y^(0/2),3\n") != std::string::npos);
  }

  TEST_CASE("m and delta are interchangeable") {
    JobSpec a = job("refined", "p2:2");
    a.delta = 1;
    JobSpec b = job("refined", "p2:2");
    b.m = 4;
    CHECK(run_job(a).out == run_job(b).out);
    JobSpec both = a;
    both.m = 4;
    CHECK(run_job(both).code == kExitUsage);
    JobSpec none = job("refined", "p2:2");
    CHECK(run_job(none).code == kExitUsage);
  }

  TEST_CASE("underspecified truncation reports the minimum") {
    JobSpec j = job("refined", "p2:3");
    j.delta = 2;
    j.n_max = 2;
    const Outcome o = run_job(j);
    CHECK(o.code == kExitUsage);
    CHECK(o.err.find("minimum 3") != std::string::npos);
  }

  TEST_CASE("bad targets") {
    CHECK(run_job(job("d-series", "p7:1")).code == kExitUsage);
    CHECK(run_job(job("d-series", "/nonexistent/model.json")).code == kExitUsage);
    CHECK(run_job(job("frobnicate", "p2:1")).code == kExitUsage);
  }

  TEST_CASE("node polynomials") {
    JobSpec j = job("node-poly", "p2:4");
    j.delta = 2;
    j.format = "json";
    const Outcome o = run_job(j);
    REQUIRE(o.code == kExitOk);
    const Json parsed = Json::parse(o.out);
    CHECK(parsed["entries"][1]["N_at_y1"] == "27");
    CHECK(parsed["entries"][2]["N_at_y1"] == "225");
    CHECK(parsed["ok"] == true);
  }

  TEST_CASE("universal fit") {
    JobSpec j = job("universal-fit");
    j.n_max = 2;
    j.x_order = 1;
    const Outcome o = run_job(j);
    CHECK(o.code == kExitOk);
    CHECK(Json::parse(o.out)["residual_ok"] == true);
  }

  TEST_CASE("output does not depend on workers, seed or cache") {
    const fs::path dir = fs::temp_directory_path() / "refcurves-cli-cache";
    fs::remove_all(dir);
    JobSpec j = job("refined", "p1xp1:2,2");
    j.delta = 2;
    const std::string base = run_job(j).out;
    j.workers = 3;
    CHECK(run_job(j).out == base);
    j.seed = 99;
    CHECK(run_job(j).out == base);
    j.cache_dir = dir.string();
    CHECK(run_job(j).out == base);
    CHECK(!fs::is_empty(dir));
    CHECK(run_job(j).out == base);
    j.no_cache = true;
    CHECK(run_job(j).out == base);
    fs::remove_all(dir);
  }

  TEST_CASE("environment overrides the cache directory") {
    const fs::path env_dir = fs::temp_directory_path() / "refcurves-env-cache";
    const fs::path flag_dir = fs::temp_directory_path() / "refcurves-flag-cache";
    fs::remove_all(env_dir);
    fs::remove_all(flag_dir);
    ::setenv("REFINED_CURVES_CACHE", env_dir.c_str(), 1);
    JobSpec j = job("d-series", "p2:1");
    j.n_max = 1;
    j.cache_dir = flag_dir.string();
    const Outcome o = run_job(j);
    ::unsetenv("REFINED_CURVES_CACHE");
    CHECK(o.code == kExitOk);
    CHECK(fs::exists(env_dir));
    CHECK(!fs::exists(flag_dir));
    CHECK(o.err.find("overrides") != std::string::npos);
    fs::remove_all(env_dir);
  }
}
