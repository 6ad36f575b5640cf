// Copyright 2026 sosdec contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

// Runs the CLI and captures stdout; stderr is folded in so error text from
// failing invocations is also visible to assertions.
RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(SOSDEC_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  char buf[4096];
  std::size_t nread;
  while ((nread = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, nread);
  int status = pclose(pipe);
  res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

TEST_CASE("cli: formulas tables and discrepancy notes") {
  auto r = run_cli("formulas --kmax 7 --Nmax 6");
  REQUIRE(r.code == 0);
  REQUIRE(contains(r.out, "  6  9536  4768"));
  REQUIRE(contains(r.out, "  7  223232  111616"));
  REQUIRE(contains(r.out, "9356 transposes two digits"));
  REQUIRE(contains(r.out, "233232 transposes two digits"));
  REQUIRE(contains(r.out, "  6  32  32  126  126"));
}

TEST_CASE("cli: formulas csv and json formats") {
  auto csv = run_cli("formulas --kmax 4 --format csv");
  REQUIRE(csv.code == 0);
  REQUIRE(csv.out.rfind("k,deg_o,deg_so\n", 0) == 0);
  REQUIRE(contains(csv.out, "\n2,4,2\n"));
  REQUIRE(contains(csv.out, "\n4,80,40\n"));

  auto js = run_cli("formulas --kmax 6 --Nmax 6 --format json");
  REQUIRE(js.code == 0);
  auto doc = nlohmann::json::parse(js.out);
  REQUIRE(doc["o_table"].size() == 5);
  REQUIRE(doc["o_table"][4]["k"] == 6);
  REQUIRE(doc["o_table"][4]["deg_o"] == "9536");
  REQUIRE(doc["sos_table"][3]["N"] == 6);
  REQUIRE(doc["sos_table"][3]["deg_sos1"] == "32");
  REQUIRE(doc["sos_table"][3]["secant_j2"] == "126");
  REQUIRE(doc["notes"].size() == 1);  // the k=6 note; k=7 is outside kmax
}

TEST_CASE("cli: degree run is correct and byte-stable") {
  auto r1 = run_cli("degree --n 2 --d 1 --k 2");
  REQUIRE(r1.code == 0);
  REQUIRE(contains(r1.out, "slice_dim=1"));
  REQUIRE(contains(r1.out, "count=4"));
  REQUIRE(contains(r1.out, "status=ok"));

  auto r2 = run_cli("degree --n 2 --d 1 --k 2");
  REQUIRE(r2.code == 0);
  REQUIRE(r1.out == r2.out);

  auto js = run_cli("degree --n 2 --d 1 --k 2 --format json");
  REQUIRE(js.code == 0);
  auto doc = nlohmann::json::parse(js.out);
  REQUIRE(doc["count"] == 4);
  REQUIRE(doc["status"] == "ok");
  REQUIRE(doc["n"] == 2);
  REQUIRE(doc["primes"].size() == 2);
  REQUIRE(doc["primes"][0] == 2147483647);
}

TEST_CASE("cli: degree honors the pair budget") {
  auto r = run_cli("degree --n 2 --d 1 --k 2 --budget-pairs 1");
  REQUIRE(r.code == 1);
  REQUIRE(contains(r.out, "status=budget_exceeded"));
}

TEST_CASE("cli: gram count") {
  auto r = run_cli("gram-count --n 2 --d 2 --k 2");
  REQUIRE(r.code == 0);
  REQUIRE(contains(r.out, "count=1"));
  REQUIRE(contains(r.out, "status=ok"));

  // k equal to the full rank leaves no minor equations
  auto full = run_cli("gram-count --n 1 --d 1 --k 2");
  REQUIRE(full.code == 2);
  REQUIRE(contains(full.out, "no minors"));
}

TEST_CASE("cli: tangent trials") {
  auto r = run_cli("tangent --n 3 --d 2 --k 2 --trials 2");
  REQUIRE(r.code == 0);
  REQUIRE(contains(r.out, "nullity=1 expected=1 generic=yes"));
  REQUIRE(contains(r.out, "summary: pass (2/2 generic)"));
}

TEST_CASE("cli: cone intersection verdicts") {
  auto origin = run_cli("intersect --n 2 --d 2 --k 1");
  REQUIRE(origin.code == 0);
  REQUIRE(contains(origin.out, "only at the origin"));

  auto meets = run_cli("intersect --n 2 --d 2 --k 3");
  REQUIRE(meets.code == 0);
  REQUIRE(contains(meets.out, "positive-dimensional"));
}

TEST_CASE("cli: lemma grid") {
  auto r = run_cli("lemma-grid --dmax 2 --nmax 3");
  REQUIRE(r.code == 0);
  REQUIRE(contains(r.out, "cells checked: 12"));
  REQUIRE(contains(r.out, "strict inequality holds everywhere: yes"));
  REQUIRE(contains(r.out, "status: ok"));
}

TEST_CASE("cli: sos2 transform and classify") {
  auto t = run_cli("sos2 --g \"x0^2 - x1^2\" --h \"2*x0*x1\" --lambda 2 --component plus");
  REQUIRE(t.code == 0);
  REQUIRE(contains(t.out, "g' = 5/4*x0^2 + 3/2*i*x0*x1 - 5/4*x1^2"));
  REQUIRE(contains(t.out, "verified: g'^2 + h'^2 == g^2 + h^2: yes"));

  auto c = run_cli("sos2 --g x0 --h x1 --gp x1 --hp x0");
  REQUIRE(c.code == 0);
  REQUIRE(contains(c.out, "component=minus lambda=i"));

  auto reject = run_cli("sos2 --n 1 --g x0 --h x0");
  REQUIRE(reject.code == 2);
  REQUIRE(contains(reject.out, "n >= 2 required"));
}

TEST_CASE("cli: instance generate and validate round-trip") {
  const std::string path = "/tmp/sosdec_cli_test_inst.json";
  const std::string bad_path = "/tmp/sosdec_cli_test_inst_bad.json";

  auto gen = run_cli("instance --n 2 --d 1 --k 2 --seed 7 --out " + path);
  REQUIRE(gen.code == 0);

  auto ok = run_cli("instance --in " + path);
  REQUIRE(ok.code == 0);
  REQUIRE(contains(ok.out, "instance ok: n=2 d=1 k=2 seed=7"));

  // stored polynomial no longer matches the matrix
  std::ifstream in(path);
  auto doc = nlohmann::json::parse(in);
  std::string f = doc["f"];
  f[0] = f[0] == '9' ? '8' : static_cast<char>(f[0] + 1);
  doc["f"] = f;
  std::ofstream bad(bad_path);
  bad << doc.dump(2) << "\n";
  bad.close();

  auto fail = run_cli("instance --in " + bad_path);
  REQUIRE(fail.code == 2);
  REQUIRE(contains(fail.out, "stored f does not match A"));

  std::remove(path.c_str());
  std::remove(bad_path.c_str());
}

TEST_CASE("cli: unknown arguments are rejected") {
  auto r = run_cli("degree --n 2 --d 1 --k 2 --no-such-flag");
  REQUIRE(r.code != 0);
}

}  // namespace
