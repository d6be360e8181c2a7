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

#pragma once

#include <string>
#include <vector>

#include "charsum/theorems.hpp"

namespace charsum {

// Declarative sweep over (p, n, chi, a, box) tuples. Every case either
// satisfies the selected check's preconditions or is emitted with
// holds = na; a false row on an assertable check aborts the run.
struct SweepConfig {
  std::vector<u64> primes;
  std::vector<u32> degrees;
  std::vector<u64> seeds{0};      // modulus seeds

  bool chi_all = true;            // all nontrivial exponents
  u64 chi_random = 0;             // "random:k"
  std::vector<u64> chi_list;

  bool twist_all = true;          // all twist encodings
  u64 twist_random = 0;
  std::vector<u64> twist_list;

  std::vector<std::string> boxes; // "N1:H1,..."; dimension-mismatched
                                  // entries are skipped per field
  bool auto_box_thm7 = false;     // H_j = ceil(p^{1/4+eps}), N_j = 0

  std::vector<std::string> checks;

  u64 r = 2;
  double eps = 0.25;
  double delta = 0.05;
  double tau = 0.05;
  u64 weil_count = 20;            // random root multisets per character
  u64 ps_g_count = 5;             // generating elements sampled for ps

  std::string output = "-";
  std::string format = "csv";
};

SweepConfig parse_sweep_config_json(const std::string& json_text);
SweepConfig load_sweep_config(const std::string& path);

// Runs the sweep, emits the table to config.output, then enforces the
// assertable checks (pv, triangle, weil, ps, chang_energy): a false row
// prints a reproduction command line and throws AssertionFailed.
std::vector<BoundReport> run_sweep(const SweepConfig& config);

}  // namespace charsum
