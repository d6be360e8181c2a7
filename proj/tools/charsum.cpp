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

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "charsum/energy.hpp"
#include "charsum/sweep.hpp"

namespace {

using namespace charsum;
using json = nlohmann::json;

struct FieldArgs {
  u64 p = 0;
  u32 n = 1;
  u64 seed = 0;
  std::string modulus_file;
  std::string modulus_coeffs;  // "c0:c1:..." ascending
};

void add_field_options(CLI::App* cmd, FieldArgs& args) {
  cmd->add_option("--p", args.p, "characteristic (odd prime)")->required();
  cmd->add_option("--n", args.n, "extension degree");
  cmd->add_option("--seed", args.seed, "modulus search seed");
  cmd->add_option("--modulus", args.modulus_file,
                  "field description file (JSON: p, n, modulus, basis)");
  cmd->add_option("--modulus-coeffs", args.modulus_coeffs,
                  "modulus coefficients c0:c1:... ascending");
}

std::vector<u64> parse_u64_list(const std::string& s, char sep) {
  std::vector<u64> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep)) {
    if (part.empty()) continue;
    out.push_back(std::stoull(part));
  }
  return out;
}

struct LoadedField {
  FieldPtr field;
  std::vector<std::vector<u64>> basis;  // empty = power basis
};

LoadedField load_field(const FieldArgs& args) {
  LoadedField out;
  std::optional<std::vector<u64>> modulus;
  if (!args.modulus_file.empty()) {
    std::ifstream in(args.modulus_file);
    if (!in) fail(ErrorCode::IoFailure, "cannot read " + args.modulus_file);
    json j;
    try {
      in >> j;
      if (j.at("p").get<u64>() != args.p || j.at("n").get<u32>() != args.n)
        fail(ErrorCode::ConfigInvalid, "field file does not match --p/--n");
      modulus = j.at("modulus").get<std::vector<u64>>();
      if (j.contains("basis"))
        out.basis = j.at("basis").get<std::vector<std::vector<u64>>>();
    } catch (const Error&) {
      throw;
    } catch (const std::exception& e) {
      fail(ErrorCode::ConfigInvalid, std::string("field file: ") + e.what());
    }
  } else if (!args.modulus_coeffs.empty()) {
    modulus = parse_u64_list(args.modulus_coeffs, ':');
  } else if (args.seed != 0) {
    modulus = find_irreducible(args.p, args.n, args.seed);
  }
  out.field = make_field(args.p, args.n, std::move(modulus));
  return out;
}

FieldElement parse_element(const Field& f, const std::string& coeffs_csv,
                           std::optional<u64> enc) {
  if (enc) return f.from_encoding(*enc);
  std::vector<u64> c = parse_u64_list(coeffs_csv, ',');
  c.resize(f.n(), 0);
  return f.from_coeffs(std::move(c));
}

int cmd_field(const FieldArgs& args, const std::string& out_path) {
  LoadedField lf = load_field(args);
  const Field& f = *lf.field;
  json j;
  j["p"] = f.p();
  j["n"] = f.n();
  j["q"] = f.q();
  j["modulus"] = f.modulus();
  j["generator"] = f.generator().coeffs;
  j["generator_encoding"] = f.generator().encode();
  if (!lf.basis.empty()) j["basis"] = lf.basis;
  if (out_path.empty() || out_path == "-") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream os(out_path);
    if (!os) fail(ErrorCode::IoFailure, "cannot write " + out_path);
    os << j.dump(2) << "\n";
  }
  return 0;
}

void print_sum(const SumResult& s, const std::string& format) {
  if (format == "csv") {
    std::cout << "p,n,chi_exp,a,box,re,im,magnitude,terms\n"
              << s.p << ',' << s.n << ',' << s.chi_exponent << ','
              << s.twist_encoding << ",\"" << s.box << "\","
              << fmt12(s.value.real()) << ',' << fmt12(s.value.imag()) << ','
              << fmt12(s.magnitude) << ',' << s.term_count << "\n";
  } else {
    json j;
    j["p"] = s.p;
    j["n"] = s.n;
    j["chi_exp"] = s.chi_exponent;
    j["a"] = s.twist_encoding;
    j["box"] = s.box;
    j["re"] = fmt12(s.value.real());
    j["im"] = fmt12(s.value.imag());
    j["magnitude"] = fmt12(s.magnitude);
    j["terms"] = s.term_count;
    std::cout << j.dump(2) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"partial Gaussian sums, multiplicative energy and character-sum "
               "bound verification over F_{p^n}"};
  app.require_subcommand(1);

  // field
  FieldArgs field_args;
  std::string field_out;
  auto* field_cmd = app.add_subcommand("field", "construct and print a field");
  add_field_options(field_cmd, field_args);
  field_cmd->add_option("--out", field_out, "output path (default stdout)");

  // sum
  FieldArgs sum_args;
  u64 sum_chi = 1;
  std::string sum_a;
  std::optional<u64> sum_a_enc;
  std::string sum_box;
  std::string sum_format = "json";
  auto* sum_cmd = app.add_subcommand("sum", "partial Gaussian sum over a box");
  add_field_options(sum_cmd, sum_args);
  sum_cmd->add_option("--chi-exp", sum_chi, "character exponent")->required();
  sum_cmd->add_option("--a", sum_a, "twist coefficients c0,c1,...");
  sum_cmd->add_option("--a-enc", sum_a_enc, "twist canonical encoding");
  sum_cmd->add_option("--box", sum_box, "box N1:H1,N2:H2,...")->required();
  sum_cmd->add_option("--format", sum_format, "csv|json");

  // weil
  FieldArgs weil_args;
  u64 weil_chi = 1;
  std::string weil_roots;
  auto* weil_cmd =
      app.add_subcommand("weil", "complete sum of chi(f) with bound check");
  add_field_options(weil_cmd, weil_args);
  weil_cmd->add_option("--chi-exp", weil_chi, "character exponent")->required();
  weil_cmd
      ->add_option("--roots", weil_roots,
                   "z1^m1,z2^m2,... (z = canonical encodings)")
      ->required();

  // ps
  FieldArgs ps_args;
  u64 ps_chi = 1;
  std::string ps_g;
  std::optional<u64> ps_g_enc;
  u64 ps_a = 0;
  auto* ps_cmd = app.add_subcommand(
      "ps", "complete line sum chi(g+t) e_p(at) with bound check");
  add_field_options(ps_cmd, ps_args);
  ps_cmd->add_option("--chi-exp", ps_chi, "character exponent")->required();
  ps_cmd->add_option("--g", ps_g, "generating element coefficients c0,c1,...");
  ps_cmd->add_option("--g-enc", ps_g_enc, "generating element encoding");
  ps_cmd->add_option("--a", ps_a, "prime-field twist residue");

  // energy
  FieldArgs en_args;
  std::string en_box;
  std::string en_algorithm = "fast";
  std::string en_check;
  auto* en_cmd =
      app.add_subcommand("energy", "multiplicative energy of a box");
  add_field_options(en_cmd, en_args);
  en_cmd->add_option("--box", en_box, "box N1:H1,...")->required();
  en_cmd->add_option("--algorithm", en_algorithm, "oracle|fast");
  en_cmd->add_option("--check", en_check, "chang|konyagin");

  // verify
  FieldArgs ver_args;
  std::string ver_out = "-";
  auto* ver_cmd = app.add_subcommand(
      "verify", "run the assertable bound battery on one field");
  add_field_options(ver_cmd, ver_args);
  ver_cmd->add_option("--out", ver_out, "report path (default stdout)");

  // sweep
  std::string sweep_config;
  auto* sweep_cmd = app.add_subcommand("sweep", "run a configured sweep");
  sweep_cmd->add_option("--config", sweep_config, "JSON config file")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*field_cmd) return cmd_field(field_args, field_out);

    if (*sum_cmd) {
      LoadedField lf = load_field(sum_args);
      MultChar chi = make_mult_char(lf.field, sum_chi);
      AddCharParam a{parse_element(*lf.field, sum_a, sum_a_enc)};
      BoxDomain box = parse_box(lf.field, sum_box, lf.basis);
      print_sum(partial_gauss_sum(chi, a, box), sum_format);
      return 0;
    }

    if (*weil_cmd) {
      LoadedField lf = load_field(weil_args);
      MultChar chi = make_mult_char(lf.field, weil_chi);
      RootMultiset rm;
      std::stringstream ss(weil_roots);
      std::string part;
      while (std::getline(ss, part, ',')) {
        auto caret = part.find('^');
        u64 enc = std::stoull(part.substr(0, caret));
        u64 mult = caret == std::string::npos
                       ? 1
                       : std::stoull(part.substr(caret + 1));
        rm.roots.push_back({lf.field->from_encoding(enc), mult});
      }
      BoundedSum s = weil_sum(chi, rm);
      json j;
      j["magnitude"] = fmt12(s.sum.magnitude);
      j["re"] = fmt12(s.sum.value.real());
      j["im"] = fmt12(s.sum.value.imag());
      j["rhs"] = fmt12(s.rhs);
      j["holds"] = s.holds;
      std::cout << j.dump(2) << "\n";
      return s.holds ? 0 : 2;
    }

    if (*ps_cmd) {
      LoadedField lf = load_field(ps_args);
      MultChar chi = make_mult_char(lf.field, ps_chi);
      FieldElement g = parse_element(*lf.field, ps_g, ps_g_enc);
      BoundedSum s = ps_sum(chi, g, ps_a);
      json j;
      j["magnitude"] = fmt12(s.sum.magnitude);
      j["re"] = fmt12(s.sum.value.real());
      j["im"] = fmt12(s.sum.value.imag());
      j["rhs"] = fmt12(s.rhs);
      j["holds"] = s.holds;
      std::cout << j.dump(2) << "\n";
      return s.holds ? 0 : 2;
    }

    if (*en_cmd) {
      LoadedField lf = load_field(en_args);
      BoxDomain box = parse_box(lf.field, en_box, lf.basis);
      if (!en_check.empty()) {
        BoundReport rep = en_check == "chang" ? check_chang_energy(box)
                          : en_check == "konyagin"
                              ? check_konyagin_energy(box)
                              : throw Error(ErrorCode::ConfigInvalid,
                                            "--check must be chang|konyagin");
        emit_csv({rep}, std::cout);
        return rep.holds == Holds::False ? 2 : 0;
      }
      EnergyResult e = en_algorithm == "oracle"
                           ? energy_oracle(box_elements(box))
                           : energy_fast(box_elements(box));
      json j;
      j["energy"] = e.count;
      j["set_size"] = e.set_size;
      j["algorithm"] = e.algorithm;
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (*ver_cmd) {
      LoadedField lf = load_field(ver_args);
      const Field& f = *lf.field;
      SweepConfig cfg;
      cfg.primes = {f.p()};
      cfg.degrees = {f.n()};
      cfg.seeds = {ver_args.seed};
      cfg.chi_all = false;
      cfg.chi_random = 12;
      cfg.twist_all = false;
      cfg.twist_random = 6;
      cfg.checks = {"pv", "triangle", "weil", "ps", "chang_energy",
                    "konyagin_energy"};
      cfg.weil_count = 25;
      cfg.output = ver_out;
      // deterministic boxes: a small one, a long one, a near-maximal one
      std::mt19937_64 gen(0xbeefcafe ^ f.p() ^ (u64(f.n()) << 32));
      for (int b = 0; b < 3; ++b) {
        std::ostringstream os;
        for (u32 j = 0; j < f.n(); ++j) {
          u64 h = 1 + gen() % (f.p() - 1);
          u64 nmax = f.p() - 1 - h;
          u64 off = nmax ? gen() % nmax : 0;
          if (j) os << ',';
          os << off << ':' << h;
        }
        cfg.boxes.push_back(os.str());
      }
      std::vector<BoundReport> rows = run_sweep(cfg);
      std::cerr << "verify: " << rows.size()
                << " rows emitted, all assertable bounds hold\n";
      return 0;
    }

    if (*sweep_cmd) {
      run_sweep(load_sweep_config(sweep_config));
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::AssertionFailed: return 2;
      case ErrorCode::IoFailure: return 1;
      default: return 3;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
