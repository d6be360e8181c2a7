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
//
// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion is self-contained and uses independent routes
// (FFT cross-check, four-loop oracles, byte comparison) where possible.

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "charsum/energy.hpp"
#include "charsum/sweep.hpp"

using namespace charsum;

namespace {

struct Failure {
  std::string detail;
};

void require(bool ok, const std::string& detail) {
  if (!ok) throw Failure{detail};
}

// The shared verification field set: p in {3,5,7,11,13}, n in {1,2,3}.
std::vector<FieldPtr>& field_set() {
  static std::vector<FieldPtr> fields = [] {
    std::vector<FieldPtr> out;
    for (u64 p : {3, 5, 7, 11, 13})
      for (u32 n : {1, 2, 3}) out.push_back(make_field(p, n));
    return out;
  }();
  return fields;
}

BoxDomain random_box(const FieldPtr& f, std::mt19937_64& gen) {
  u32 n = f->n();
  u64 p = f->p();
  std::vector<u64> N(n), H(n);
  for (u32 j = 0; j < n; ++j) {
    H[j] = 1 + gen() % (p - 1);
    N[j] = gen() % (p - H[j]);
  }
  return make_box(f, N, H);
}

std::vector<FieldElement> random_subset(const FieldPtr& f, u64 max_size,
                                        std::mt19937_64& gen) {
  u64 cap = std::min<u64>(max_size, f->q() - 1);
  u64 size = 1 + gen() % cap;
  std::set<u64> chosen;
  while (chosen.size() < size) chosen.insert(1 + gen() % (f->q() - 1));
  std::vector<FieldElement> A;
  for (u64 e : chosen) A.push_back(f->from_encoding(e));
  return A;
}

// --- criterion 1: complete Gauss sums have magnitude sqrt(q) -------------
//
// Independent route: for a fixed twist a the sums over all character
// exponents e are the DFT of v_j = psi_a(g^j) along the generator cycle,
// computed here with FFTW rather than the production accumulation.
void criterion1() {
  for (const auto& f : field_set()) {
    const u64 q = f->q();
    const u64 N = q - 1;
    const double rq = std::sqrt(static_cast<double>(q));
    fftw_complex* in =
        static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * N));
    fftw_complex* out =
        static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * N));
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(N), in, out,
                                      FFTW_BACKWARD, FFTW_ESTIMATE);
    const FieldElement g = f->generator();
    std::mt19937_64 gen(q * 11 + 1);
    for (u64 a_enc = 1; a_enc < q; ++a_enc) {
      FieldElement x = f->from_encoding(a_enc);  // a g^0
      for (u64 j = 0; j < N; ++j) {
        Complex v = f->root_p(f->trace(x));
        in[j][0] = v.real();
        in[j][1] = v.imag();
        x = f->mul(x, g);
      }
      fftw_execute(plan);
      // X_e = sum_j exp(2 pi i e j / (q-1)) psi_a(g^j) = G(chi_e, a)
      for (u64 e = 1; e < N; ++e) {
        double mag = std::hypot(out[e][0], out[e][1]);
        require(std::abs(mag - rq) < 1e-6 * rq,
                "q=" + std::to_string(q) + " e=" + std::to_string(e) +
                    " a=" + std::to_string(a_enc) +
                    " |G|=" + std::to_string(mag));
      }
      // spot-check the production path against the FFT on one exponent
      u64 e = 1 + gen() % (N - 1);
      Complex direct = gauss_sum(make_mult_char(f, e),
                                 AddCharParam{f->from_encoding(a_enc)});
      require(std::abs(direct - Complex(out[e][0], out[e][1])) < 1e-6 * rq,
              "production/FFT mismatch at q=" + std::to_string(q));
    }
    fftw_destroy_plan(plan);
    fftw_free(in);
    fftw_free(out);
  }
}

// --- criterion 2: orthogonality of both character families ---------------
void criterion2() {
  for (const auto& f : field_set()) {
    const u64 q = f->q();
    for (u64 e = 1; e < q - 1; ++e) {
      MultChar chi = make_mult_char(f, e);
      ComplexKahan acc;
      for (u64 enc = 1; enc < q; ++enc)
        acc.add(eval_mult_char(chi, f->from_encoding(enc)));
      require(std::abs(acc.value()) < 1e-9 * q,
              "mult orthogonality q=" + std::to_string(q) +
                  " e=" + std::to_string(e));
    }
    for (u64 a_enc = 1; a_enc < q; ++a_enc) {
      AddCharParam a{f->from_encoding(a_enc)};
      ComplexKahan acc;
      for (u64 enc = 0; enc < q; ++enc)
        acc.add(eval_add_char(a, f->from_encoding(enc)));
      require(std::abs(acc.value()) < 1e-9 * q,
              "add orthogonality q=" + std::to_string(q) +
                  " a=" + std::to_string(a_enc));
    }
  }
}

// --- criterion 3: fast energy == oracle energy, product == ratio ---------
void criterion3() {
  std::mt19937_64 gen(0xE4E26);
  for (const auto& f : field_set()) {
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<FieldElement> A = random_subset(f, 64, gen);
      u64 fast = energy_fast(A).count;
      u64 oracle = energy_oracle(A).count;
      require(fast == oracle, "fast != oracle at q=" + std::to_string(f->q()));
      // ratio energy: sum over u of nu(u)^2 with nu(u) = #{x/y = u}
      RepCounts nu = ratio_rep_counts(A, A);
      u128 ratio_energy = 0;
      for (const auto& [u, c] : nu)
        ratio_energy += static_cast<u128>(c) * c;
      require(ratio_energy == fast,
              "ratio energy != product energy at q=" + std::to_string(f->q()));
    }
  }
}

// --- criterion 4: energy range and the frozen {1,2,3} value --------------
void criterion4() {
  std::mt19937_64 gen(0xE4E44);
  for (const auto& f : field_set()) {
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<FieldElement> A = random_subset(f, 40, gen);
      u64 k = A.size();
      u64 e = energy_fast(A).count;
      require(e >= k * k && e <= k * k * k, "range at q=" + std::to_string(f->q()));
    }
  }
  // fresh four-loop enumeration, no library counting involved
  auto f7 = make_field(7, 1);
  std::vector<FieldElement> A;
  for (u64 enc : {1, 2, 3}) A.push_back(f7->from_encoding(enc));
  u64 direct = 0;
  for (const auto& x1 : A)
    for (const auto& x2 : A)
      for (const auto& x3 : A)
        for (const auto& x4 : A)
          if (f7->mul(x1, x2) == f7->mul(x3, x4)) ++direct;
  require(direct == 19, "four-loop count " + std::to_string(direct));
  require(energy_oracle(A).count == 19, "oracle disagrees with 19");
  require(energy_fast(A).count == 19, "fast disagrees with 19");
}

// --- criterion 5: explicit energy constant on every admissible box -------
void criterion5() {
  for (u64 p : {53, 101, 199}) {
    double gate = 0.5 * (std::sqrt(static_cast<double>(p)) - 1.0);
    u64 h_max = static_cast<u64>(std::ceil(gate)) - 1;  // strict inequality
    while (static_cast<double>(h_max) >= gate) --h_max;
    for (u32 n : {1, 2, 3}) {
      auto f = make_field(p, n);
      // every admissible side shape, three offsets per axis
      std::vector<u64> shape(n, 1);
      for (;;) {
        u64 card = 1;
        for (u64 h : shape) card *= h;
        if (card <= 10000) {
          std::vector<u64> pick(n, 0);
          for (;;) {
            std::vector<u64> N(n);
            for (u32 j = 0; j < n; ++j) {
              u64 room = p - 1 - shape[j];
              N[j] = pick[j] == 0 ? 0 : (pick[j] == 1 ? room / 2 : room);
            }
            BoundReport rep = check_chang_energy(make_box(f, N, shape));
            require(rep.holds == Holds::True,
                    "p=" + std::to_string(p) + " n=" + std::to_string(n) +
                        " box=" + rep.box + " holds=" +
                        holds_string(rep.holds));
            u32 j = 0;
            while (j < n && pick[j] == 2) pick[j++] = 0;
            if (j == n) break;
            ++pick[j];
          }
        }
        u32 j = 0;
        while (j < n && shape[j] == h_max) shape[j++] = 1;
        if (j == n) break;
        ++shape[j];
      }
    }
  }
}

// --- criterion 6: Weil bound on random non-power multisets ---------------
void criterion6() {
  for (u64 p : {3, 5, 7, 11}) {
    for (u32 n : {1, 2, 3}) {
      auto f = make_field(p, n);
      const u64 q = f->q();
      std::mt19937_64 gen(q * 31 + 7);
      int done = 0;
      while (done < 500) {
        u64 e = 1 + gen() % (q - 2);
        MultChar chi = make_mult_char(f, e);
        if (chi.order <= 1) continue;
        u64 m = 1 + gen() % 6;
        std::set<u64> used;
        while (used.size() < m && used.size() < q) used.insert(gen() % q);
        RootMultiset rm;
        bool some_nondiv = false;
        for (u64 enc : used) {
          u64 mult = 1 + gen() % 4;
          if (mult % chi.order != 0) some_nondiv = true;
          rm.roots.push_back({f->from_encoding(enc), mult});
        }
        if (!some_nondiv) rm.roots.back().second += 1;
        BoundedSum b = weil_sum(chi, rm);
        require(b.holds, "weil violated q=" + std::to_string(q) +
                             " e=" + std::to_string(e));
        ++done;
      }
    }
  }
}

// --- criterion 7: shifted-sum bound, exhaustive over small fields --------
void criterion7() {
  const std::vector<std::pair<u64, u32>> fields = {
      {3, 2}, {5, 2}, {7, 2}, {11, 2}, {13, 2}, {3, 3}, {5, 3}, {7, 3}};
  for (auto [p, n] : fields) {
    auto f = make_field(p, n);
    const u64 q = f->q();
    const double rhs = static_cast<double>(n) * std::sqrt(static_cast<double>(p));
    for (u64 g_enc = 1; g_enc < q; ++g_enc) {
      FieldElement g = f->from_encoding(g_enc);
      if (!f->is_generating_element(g)) continue;
      for (u64 e = 1; e < q - 1; ++e) {
        MultChar chi = make_mult_char(f, e);
        for (u64 a = 0; a < p; ++a) {
          BoundedSum b = ps_sum(chi, g, a);
          require(b.holds && b.sum.magnitude <= rhs * (1 + 1e-9) + 1e-9,
                  "q=" + std::to_string(q) + " g=" + std::to_string(g_enc) +
                      " e=" + std::to_string(e) + " a=" + std::to_string(a));
        }
      }
    }
  }
}

// --- criterion 8: completion and triangle bounds on random cases ---------
void criterion8() {
  std::mt19937_64 gen(0x9B8);
  const auto& fields = field_set();
  for (int trial = 0; trial < 10000; ++trial) {
    const auto& f = fields[gen() % fields.size()];
    u64 q = f->q();
    u64 e = 1 + gen() % (q - 2);
    u64 a_enc = gen() % q;
    BoxDomain box = random_box(f, gen);
    MultChar chi = make_mult_char(f, e);
    AddCharParam a{f->from_encoding(a_enc)};
    BoundReport rep = polya_vinogradov_check(chi, a, box);
    require(rep.holds == Holds::True,
            "pv q=" + std::to_string(q) + " box=" + box.to_string());
    SumResult s = partial_gauss_sum(chi, a, box);
    require(s.magnitude <=
                static_cast<double>(s.term_count) * (1 + 1e-9) + 1e-9,
            "triangle q=" + std::to_string(q) + " box=" + box.to_string());
  }
}

// --- criterion 9: ratio sweep, reproducible bytes ------------------------
void criterion9() {
  SweepConfig c;
  c.primes = {101, 199, 401, 1009};
  c.degrees = {2};
  c.chi_all = false;
  c.chi_random = 20;
  c.twist_all = false;
  c.twist_random = 3;
  c.auto_box_thm7 = true;
  c.eps = 0.25;
  c.checks = {"pv", "triangle", "thm7"};
  c.format = "csv";

  std::string out1 = std::string(std::tmpnam(nullptr)) + "_acc9a.csv";
  std::string out2 = std::string(std::tmpnam(nullptr)) + "_acc9b.csv";
  c.output = out1;
  std::vector<BoundReport> rows = run_sweep(c);  // throws on any false row
  c.output = out2;
  run_sweep(c);

  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  std::string bytes1 = slurp(out1), bytes2 = slurp(out2);
  std::remove(out1.c_str());
  std::remove(out2.c_str());
  require(!bytes1.empty() && bytes1 == bytes2, "sweep output not reproducible");

  std::map<u64, std::set<u64>> chis_per_prime;
  for (const auto& row : rows) {
    if (row.theorem != "thm7") continue;
    if (row.holds == Holds::NA && row.rhs == 0.0) continue;  // gated rows
    require(std::isfinite(row.ratio) && row.rhs > 0,
            "non-finite thm7 ratio at p=" + std::to_string(row.p));
    chis_per_prime[row.p].insert(*row.chi_exponent);
  }
  for (u64 p : c.primes)
    require(chis_per_prime[p].size() >= 20,
            "fewer than 20 characters at p=" + std::to_string(p));
}

// --- criterion 10: partition additivity ----------------------------------
void criterion10() {
  std::mt19937_64 gen(0xADD10);
  const auto& fields = field_set();
  for (int trial = 0; trial < 1000; ++trial) {
    const auto& f = fields[gen() % fields.size()];
    u64 q = f->q();
    u64 e = gen() % (q - 1);
    u64 a_enc = gen() % q;
    BoxDomain box = random_box(f, gen);
    MultChar chi = make_mult_char(f, e);
    AddCharParam a{f->from_encoding(a_enc)};
    SumResult whole = partial_gauss_sum(chi, a, box);
    u64 max_side = 1 + gen() % *std::max_element(box.sides.begin(),
                                                 box.sides.end());
    ComplexKahan acc;
    for (const auto& part : split(box, max_side))
      acc.add(partial_gauss_sum(chi, a, part).value);
    double tol = 1e-9 * static_cast<double>(box.cardinality());
    require(std::abs(acc.value() - whole.value) <= tol,
            "split mismatch q=" + std::to_string(q) + " box=" +
                box.to_string());
  }
}

struct Criterion {
  const char* label;
  void (*fn)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"1 gauss-sum magnitude", criterion1},
      {"2 orthogonality", criterion2},
      {"3 energy oracle equivalence", criterion3},
      {"4 energy range", criterion4},
      {"5 energy explicit constant", criterion5},
      {"6 weil bound", criterion6},
      {"7 shifted-sum bound", criterion7},
      {"8 completion and triangle bounds", criterion8},
      {"9 ratio sweep reproducibility", criterion9},
      {"10 partition additivity", criterion10},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    try {
      c.fn();
      std::printf("criterion %s: PASS\n", c.label);
    } catch (const Failure& f) {
      std::printf("criterion %s: FAIL (%s)\n", c.label, f.detail.c_str());
      ++failures;
    } catch (const std::exception& e) {
      std::printf("criterion %s: FAIL (exception: %s)\n", c.label, e.what());
      ++failures;
    }
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
