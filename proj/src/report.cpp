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

#include "charsum/report.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include <nlohmann/json.hpp>

#include "charsum/errors.hpp"

namespace charsum {

std::string fmt12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

namespace {

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

std::string opt_u64(const std::optional<u64>& v) {
  return v ? std::to_string(*v) : std::string();
}

}  // namespace

void emit_csv(const std::vector<BoundReport>& table, std::ostream& os) {
  os << "theorem,p,n,modulus,chi_exp,a,box,r,eps,lhs,rhs,ratio,holds\n";
  for (const auto& row : table) {
    os << row.theorem << ',' << row.p << ',' << row.n << ','
       << csv_quote(row.modulus) << ',' << opt_u64(row.chi_exponent) << ','
       << opt_u64(row.twist) << ',' << csv_quote(row.box) << ','
       << opt_u64(row.r) << ',' << (row.eps ? fmt12(*row.eps) : std::string())
       << ',' << fmt12(row.lhs) << ',' << fmt12(row.rhs) << ','
       << fmt12(row.ratio) << ',' << holds_string(row.holds) << '\n';
  }
}

void emit_json(const std::vector<BoundReport>& table, std::ostream& os) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& row : table) {
    nlohmann::json j;
    j["theorem"] = row.theorem;
    j["p"] = row.p;
    j["n"] = row.n;
    j["modulus"] = row.modulus;
    if (row.chi_exponent) j["chi_exp"] = *row.chi_exponent;
    else j["chi_exp"] = nullptr;
    if (row.twist) j["a"] = *row.twist;
    else j["a"] = nullptr;
    j["box"] = row.box;
    if (row.r) j["r"] = *row.r;
    else j["r"] = nullptr;
    if (row.eps) j["eps"] = fmt12(*row.eps);
    else j["eps"] = nullptr;
    j["lhs"] = fmt12(row.lhs);
    j["rhs"] = fmt12(row.rhs);
    j["ratio"] = fmt12(row.ratio);
    j["holds"] = holds_string(row.holds);
    arr.push_back(std::move(j));
  }
  os << arr.dump(2) << '\n';
}

void emit(const std::vector<BoundReport>& table, const std::string& format,
          const std::string& path) {
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (path != "-") {
    file.open(path, std::ios::binary);
    if (!file) fail(ErrorCode::IoFailure, "cannot open " + path);
    os = &file;
  }
  if (format == "csv") emit_csv(table, *os);
  else if (format == "json") emit_json(table, *os);
  else fail(ErrorCode::ConfigInvalid, "format must be csv or json");
  os->flush();
  if (os->fail()) fail(ErrorCode::IoFailure, "write failed: " + path);
}

}  // namespace charsum
