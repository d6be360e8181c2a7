// Copyright 2026 the charsum authors
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

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "charsum/sweep.hpp"

using namespace charsum;

namespace {

BoundReport sample_row() {
  BoundReport r;
  r.theorem = "pv";
  r.p = 7;
  r.n = 2;
  r.modulus = "3:0:1";
  r.chi_exponent = 5;
  r.twist = 11;
  r.box = "0:3,1:2";
  r.eps = 0.25;
  r.lhs = 1.5;
  r.rhs = 30.0;
  r.ratio = 0.05;
  r.holds = Holds::True;
  return r;
}

}  // namespace

TEST_SUITE("report and sweep") {

TEST_CASE("csv header and row layout") {
  std::ostringstream os;
  emit_csv({sample_row()}, os);
  std::istringstream in(os.str());
  std::string header, row;
  std::getline(in, header);
  CHECK(header == "theorem,p,n,modulus,chi_exp,a,box,r,eps,lhs,rhs,ratio,holds");
  std::getline(in, row);
  CHECK(row == "pv,7,2,3:0:1,5,11,\"0:3,1:2\",,0.25,1.5,30,0.05,true");
}

TEST_CASE("empty table is header-only") {
  std::ostringstream os;
  emit_csv({}, os);
  CHECK(os.str() == "theorem,p,n,modulus,chi_exp,a,box,r,eps,lhs,rhs,ratio,holds\n");
}

TEST_CASE("fmt12 pins the real format") {
  CHECK(fmt12(0.25) == "0.25");
  CHECK(fmt12(30.0) == "30");
  CHECK(fmt12(1.0 / 3.0) == "0.333333333333");
  CHECK(fmt12(1e-30) == "1e-30");
}

TEST_CASE("json mirrors the csv fields") {
  std::ostringstream os;
  emit_json({sample_row()}, os);
  auto arr = nlohmann::json::parse(os.str());
  REQUIRE(arr.is_array());
  REQUIRE(arr.size() == 1);
  const auto& j = arr[0];
  CHECK(j.at("theorem") == "pv");
  CHECK(j.at("p") == 7);
  CHECK(j.at("chi_exp") == 5);
  CHECK(j.at("a") == 11);
  CHECK(j.at("box") == "0:3,1:2");
  CHECK(j.at("r").is_null());
  CHECK(j.at("eps") == "0.25");
  CHECK(j.at("lhs") == "1.5");
  CHECK(j.at("holds") == "true");
}

TEST_CASE("config parsing and validation") {
  SweepConfig c = parse_sweep_config_json(R"({
    "primes": [7, 11],
    "degrees": [1],
    "chi_exponents": "random:3",
    "twists": [0, 1],
    "boxes": ["0:3"],
    "checks": ["pv", "weil"],
    "weil_count": 4,
    "format": "json"
  })");
  CHECK(c.primes == std::vector<u64>{7, 11});
  CHECK(c.chi_random == 3);
  CHECK(!c.chi_all);
  CHECK(c.twist_list == std::vector<u64>{0, 1});
  CHECK(c.format == "json");

  CHECK_THROWS_AS(parse_sweep_config_json("{"), Error);
  CHECK_THROWS_AS(parse_sweep_config_json("{}"), Error);  // primes required
  CHECK_THROWS_AS(parse_sweep_config_json(
                      R"({"primes":[7],"degrees":[1],"checks":["nope"]})"),
                  Error);
  CHECK_THROWS_AS(parse_sweep_config_json(
                      R"({"primes":[7],"degrees":[1],"format":"xml"})"),
                  Error);
  try {
    parse_sweep_config_json("{}");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConfigInvalid);
  }
}

TEST_CASE("sweep runs assertable checks clean") {
  SweepConfig c;
  c.primes = {7, 11};
  c.degrees = {1};
  c.boxes = {"0:3", "1:4"};
  c.checks = {"pv", "triangle", "weil", "ps"};
  c.weil_count = 5;
  c.ps_g_count = 2;
  c.output = "/dev/null";
  std::vector<BoundReport> rows = run_sweep(c);
  CHECK(!rows.empty());
  for (const auto& row : rows) {
    CHECK(row.holds != Holds::False);
    CHECK(std::isfinite(row.lhs));
    CHECK(std::isfinite(row.rhs));
    if (row.rhs > 0)
      CHECK(row.ratio == doctest::Approx(row.lhs / row.rhs).epsilon(1e-9));
  }
  // pv rows really enforce lhs <= rhs
  for (const auto& row : rows)
    if (row.theorem == "pv")
      CHECK(row.lhs <= row.rhs * (1 + 1e-9) + 1e-9);
}

TEST_CASE("sweep output is deterministic") {
  SweepConfig c;
  c.primes = {13};
  c.degrees = {1, 2};
  c.chi_all = false;
  c.chi_random = 4;
  c.twist_all = false;
  c.twist_random = 3;
  c.boxes = {"0:5", "0:3,1:2"};
  c.checks = {"pv", "triangle", "chang_energy", "konyagin_energy"};
  c.format = "csv";

  std::string out1 = std::string(std::tmpnam(nullptr)) + "_sweep1.csv";
  std::string out2 = std::string(std::tmpnam(nullptr)) + "_sweep2.csv";
  c.output = out1;
  run_sweep(c);
  c.output = out2;
  run_sweep(c);
  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  std::string a = slurp(out1), b = slurp(out2);
  CHECK(!a.empty());
  CHECK(a == b);
  std::remove(out1.c_str());
  std::remove(out2.c_str());
}

TEST_CASE("dimension-mismatched boxes are skipped per field") {
  SweepConfig c;
  c.primes = {7};
  c.degrees = {1, 2};
  c.chi_all = false;
  c.chi_list = {1};
  c.twist_all = false;
  c.twist_list = {0};
  c.boxes = {"0:3"};  // one-dimensional only
  c.checks = {"pv"};
  c.output = "/dev/null";
  std::vector<BoundReport> rows = run_sweep(c);
  for (const auto& row : rows) CHECK(row.n == 1);
  CHECK(!rows.empty());
}

}  // TEST_SUITE
