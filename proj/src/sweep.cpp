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

#include "charsum/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "charsum/energy.hpp"
#include "charsum/parallel.hpp"

namespace charsum {

namespace {

using json = nlohmann::json;

constexpr u64 kAllLimit = 1 << 20;

u64 case_seed(u64 p, u32 n, u64 salt) {
  u64 h = 0x9e3779b97f4a7c15ull ^ salt;
  h ^= p + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  h ^= n + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

std::vector<u64> sample_distinct(u64 lo, u64 hi, u64 count, u64 seed) {
  // [lo, hi) without replacement; deterministic and compiler-independent.
  std::mt19937_64 gen(seed);
  std::set<u64> picked;
  u64 range = hi - lo;
  count = std::min(count, range);
  while (picked.size() < count) picked.insert(lo + gen() % range);
  return {picked.begin(), picked.end()};
}

bool parse_selector(const json& j, const char* key, bool& all, u64& random_k,
                    std::vector<u64>& list) {
  if (!j.contains(key)) return false;
  const json& v = j.at(key);
  all = false;
  random_k = 0;
  list.clear();
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (s == "all") {
      all = true;
    } else if (s.rfind("random:", 0) == 0) {
      random_k = std::stoull(s.substr(7));
    } else {
      fail(ErrorCode::ConfigInvalid, std::string(key) + ": " + s);
    }
  } else if (v.is_array()) {
    for (const auto& e : v) list.push_back(e.get<u64>());
  } else {
    fail(ErrorCode::ConfigInvalid, std::string(key) + " must be string or list");
  }
  return true;
}

struct Case {
  std::function<BoundReport()> run;
  std::string repro;
  bool assertable = false;
};

std::string base_repro(const Field& f) {
  std::ostringstream os;
  os << "--p " << f.p() << " --n " << f.n() << " --modulus-coeffs \""
     << f.modulus_string() << "\"";
  return os.str();
}

}  // namespace

SweepConfig parse_sweep_config_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const std::exception& e) {
    fail(ErrorCode::ConfigInvalid, std::string("bad JSON: ") + e.what());
  }
  SweepConfig c;
  try {
    if (!j.contains("primes") || !j.contains("degrees"))
      fail(ErrorCode::ConfigInvalid, "primes and degrees are required");
    c.primes = j.at("primes").get<std::vector<u64>>();
    c.degrees = j.at("degrees").get<std::vector<u32>>();
    if (j.contains("seeds")) c.seeds = j.at("seeds").get<std::vector<u64>>();
    parse_selector(j, "chi_exponents", c.chi_all, c.chi_random, c.chi_list);
    parse_selector(j, "twists", c.twist_all, c.twist_random, c.twist_list);
    if (j.contains("boxes"))
      c.boxes = j.at("boxes").get<std::vector<std::string>>();
    if (j.contains("auto_box") && j.at("auto_box").get<std::string>() == "thm7")
      c.auto_box_thm7 = true;
    if (j.contains("checks"))
      c.checks = j.at("checks").get<std::vector<std::string>>();
    if (j.contains("r")) c.r = j.at("r").get<u64>();
    if (j.contains("eps")) c.eps = j.at("eps").get<double>();
    if (j.contains("delta")) c.delta = j.at("delta").get<double>();
    if (j.contains("tau")) c.tau = j.at("tau").get<double>();
    if (j.contains("weil_count")) c.weil_count = j.at("weil_count").get<u64>();
    if (j.contains("ps_g_count")) c.ps_g_count = j.at("ps_g_count").get<u64>();
    if (j.contains("output")) c.output = j.at("output").get<std::string>();
    if (j.contains("format")) c.format = j.at("format").get<std::string>();
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(ErrorCode::ConfigInvalid, e.what());
  }
  if (c.format != "csv" && c.format != "json")
    fail(ErrorCode::ConfigInvalid, "format must be csv or json");
  static const std::set<std::string> known = {
      "pv",          "triangle", "burgess2",     "burgess3",
      "dl",          "chang3",   "thm6",         "thm7",
      "weil",        "ps",       "chang_energy", "konyagin_energy"};
  for (const auto& ch : c.checks) {
    if (!known.count(ch)) fail(ErrorCode::ConfigInvalid, "unknown check " + ch);
  }
  return c;
}

SweepConfig load_sweep_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ConfigInvalid, "cannot read config " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_sweep_config_json(ss.str());
}

std::vector<BoundReport> run_sweep(const SweepConfig& config) {
  std::vector<Case> cases;

  for (u64 p : config.primes) {
    for (u32 n : config.degrees) {
      for (u64 seed : config.seeds) {
        FieldPtr field = make_field(p, n, find_irreducible(p, n, seed));
        const u64 q = field->q();

        std::vector<u64> chis;
        if (!config.chi_list.empty()) {
          for (u64 e : config.chi_list)
            if (e % (q - 1) != 0) chis.push_back(e % (q - 1));
        } else if (config.chi_random > 0) {
          chis = sample_distinct(1, q - 1, config.chi_random,
                                 case_seed(p, n, 0xC41));
        } else {
          if (q - 2 > kAllLimit)
            fail(ErrorCode::ConfigInvalid,
                 "chi_exponents=all infeasible for this q; use random:k");
          for (u64 e = 1; e < q - 1; ++e) chis.push_back(e);
        }

        std::vector<u64> twists;
        if (!config.twist_list.empty()) {
          for (u64 a : config.twist_list)
            if (a < q) twists.push_back(a);
        } else if (config.twist_random > 0) {
          twists = sample_distinct(0, q, config.twist_random,
                                   case_seed(p, n, 0xADD));
        } else {
          if (q > kAllLimit)
            fail(ErrorCode::ConfigInvalid,
                 "twists=all infeasible for this q; use random:k");
          for (u64 a = 0; a < q; ++a) twists.push_back(a);
        }

        std::vector<BoxDomain> boxes;
        for (const auto& spec : config.boxes) {
          if (static_cast<u32>(std::count(spec.begin(), spec.end(), ',')) + 1 !=
              n)
            continue;
          boxes.push_back(parse_box(field, spec));
        }
        if (config.auto_box_thm7) {
          u64 h = static_cast<u64>(
              std::ceil(std::pow(static_cast<double>(p), 0.25 + config.eps)));
          if (h >= 1 && h < p) {
            boxes.push_back(make_box(field, std::vector<u64>(n, 0),
                                     std::vector<u64>(n, h)));
          }
        }

        const std::string repro_base = base_repro(*field);

        for (const auto& check : config.checks) {
          auto sum_repro = [&](u64 e, u64 a, const BoxDomain& box) {
            std::ostringstream os;
            os << "charsum sum " << repro_base << " --chi-exp " << e
               << " --a-enc " << a << " --box \"" << box.to_string() << "\"";
            return os.str();
          };

          if (check == "pv" || check == "triangle") {
            for (u64 e : chis) {
              for (u64 a : twists) {
                for (const auto& box : boxes) {
                  bool triangle = check == "triangle";
                  cases.push_back(Case{
                      [field, e, a, box, triangle]() {
                        MultChar chi = make_mult_char(field, e);
                        AddCharParam tw{field->from_encoding(a)};
                        if (!triangle)
                          return polya_vinogradov_check(chi, tw, box);
                        SumResult s = partial_gauss_sum(chi, tw, box);
                        BoundReport rep;
                        rep.theorem = "triangle";
                        rep.p = field->p();
                        rep.n = field->n();
                        rep.modulus = field->modulus_string();
                        rep.chi_exponent = e;
                        rep.twist = a;
                        rep.box = box.to_string();
                        rep.lhs = s.magnitude;
                        rep.rhs = static_cast<double>(s.term_count);
                        rep.ratio = rep.rhs > 0 ? rep.lhs / rep.rhs : 0.0;
                        rep.holds = rep.lhs <= rep.rhs * (1.0 + 1e-9)
                                        ? Holds::True
                                        : Holds::False;
                        return rep;
                      },
                      sum_repro(e, a, box), true});
                }
              }
            }
          } else if (check == "burgess2" && n == 1) {
            for (u64 e : chis) {
              for (const auto& box : boxes) {
                u64 r = config.r;
                cases.push_back(Case{
                    [field, e, box, r]() {
                      return report_burgess_pure(make_mult_char(field, e), box,
                                                 r);
                    },
                    sum_repro(e, 0, box), false});
              }
            }
          } else if (check == "burgess3" && n == 1) {
            for (u64 e : chis) {
              for (u64 a : twists) {
                if (a == 0) continue;
                for (const auto& box : boxes) {
                  u64 r = config.r;
                  cases.push_back(Case{
                      [field, e, a, box, r]() {
                        return report_burgess_mixed(
                            make_mult_char(field, e),
                            AddCharParam{field->from_encoding(a)}, box, r);
                      },
                      sum_repro(e, a, box), false});
                }
              }
            }
          } else if (check == "dl" || check == "chang3") {
            for (u64 e : chis) {
              for (const auto& box : boxes) {
                bool is_dl = check == "dl";
                double delta = config.delta, tau = config.tau,
                       eps = config.eps;
                cases.push_back(Case{
                    [field, e, box, is_dl, delta, tau, eps]() {
                      MultChar chi = make_mult_char(field, e);
                      return is_dl ? report_dl(chi, box, delta, eps)
                                   : report_chang3(chi, box, tau, eps);
                    },
                    sum_repro(e, 0, box), false});
              }
            }
          } else if (check == "thm6" || check == "thm7") {
            for (u64 e : chis) {
              for (u64 a : twists) {
                for (const auto& box : boxes) {
                  bool is6 = check == "thm6";
                  double eps = config.eps;
                  cases.push_back(Case{
                      [field, e, a, box, is6, eps]() {
                        MultChar chi = make_mult_char(field, e);
                        AddCharParam tw{field->from_encoding(a)};
                        return is6 ? report_thm6(chi, tw, box, eps)
                                   : report_thm7(chi, tw, box, eps);
                      },
                      sum_repro(e, a, box), false});
                }
              }
            }
          } else if (check == "weil") {
            for (u64 e : chis) {
              MultChar chi = make_mult_char(field, e);
              if (chi.order <= 1) continue;
              std::mt19937_64 gen(case_seed(p, n, 0x3e11 + e));
              for (u64 i = 0; i < config.weil_count; ++i) {
                // non-d-th-power multiset, m <= 6 distinct roots
                RootMultiset rm;
                u64 m = 1 + gen() % 6;
                std::set<u64> used;
                while (used.size() < m && used.size() < q) used.insert(gen() % q);
                bool some_nondiv = false;
                for (u64 enc : used) {
                  u64 mult = 1 + gen() % 4;
                  rm.roots.push_back({field->from_encoding(enc), mult});
                  if (mult % chi.order != 0) some_nondiv = true;
                }
                if (!some_nondiv) rm.roots.back().second += 1;
                std::ostringstream rs;
                for (std::size_t k = 0; k < rm.roots.size(); ++k) {
                  if (k) rs << ',';
                  rs << rm.roots[k].first.encode() << '^' << rm.roots[k].second;
                }
                std::string repro = "charsum weil " + repro_base +
                                    " --chi-exp " + std::to_string(e) +
                                    " --roots \"" + rs.str() + "\"";
                cases.push_back(Case{
                    [field, e, rm]() {
                      return report_weil(make_mult_char(field, e), rm);
                    },
                    repro, true});
              }
            }
          } else if (check == "ps") {
            std::vector<FieldElement> gens;
            for (u64 enc = 1; enc < q && gens.size() < config.ps_g_count;
                 ++enc) {
              FieldElement g = field->from_encoding(enc);
              if (field->is_generating_element(g)) gens.push_back(g);
            }
            std::vector<u64> as;
            if (p <= 101) {
              for (u64 a = 0; a < p; ++a) as.push_back(a);
            } else {
              as = sample_distinct(0, p, 8, case_seed(p, n, 0x95));
            }
            for (u64 e : chis) {
              for (const auto& g : gens) {
                for (u64 a : as) {
                  std::string repro =
                      "charsum ps " + repro_base + " --chi-exp " +
                      std::to_string(e) + " --g-enc " +
                      std::to_string(g.encode()) + " --a " + std::to_string(a);
                  cases.push_back(Case{
                      [field, e, g, a]() {
                        return report_ps(make_mult_char(field, e), g, a);
                      },
                      repro, true});
                }
              }
            }
          } else if (check == "chang_energy" || check == "konyagin_energy") {
            for (const auto& box : boxes) {
              bool chang = check == "chang_energy";
              std::string repro = "charsum energy " + repro_base + " --box \"" +
                                  box.to_string() + "\" --check " +
                                  (chang ? "chang" : "konyagin");
              cases.push_back(Case{
                  [box, chang]() {
                    return chang ? check_chang_energy(box)
                                 : check_konyagin_energy(box);
                  },
                  repro, chang});
            }
          }
        }
      }
    }
  }

  std::vector<BoundReport> rows(cases.size());
  parallel_for(cases.size(), [&](std::size_t i) { rows[i] = cases[i].run(); });

  emit(rows, config.format, config.output);

  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (cases[i].assertable && rows[i].holds == Holds::False) {
      std::cerr << "assertion failed: " << rows[i].theorem
                << " row; reproduce with:\n  " << cases[i].repro << "\n";
      fail(ErrorCode::AssertionFailed,
           rows[i].theorem + " bound violated (lhs=" + fmt12(rows[i].lhs) +
               " rhs=" + fmt12(rows[i].rhs) + ")");
    }
  }
  return rows;
}

}  // namespace charsum
