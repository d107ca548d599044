// Copyright 2026 The msaa Authors
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

#pragma once

#include <cstdint>
#include <random>

#include "msaa/formula.hpp"
#include "msaa/lin2.hpp"

namespace msaa {

// Seeded generator with unbiased bounded draws built directly on raw
// mt19937_64 output. The standard pins the engine's sequence but not the
// distributions, so rolling our own sampling keeps generated instances
// byte-identical across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform in [0, bound), bound >= 1; rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t bound) {
    for (;;) {
      const std::uint64_t x = next();
      const std::uint64_t r = x % bound;
      if (x - r <= std::uint64_t(0) - bound) return r;
    }
  }

  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool coin() { return next() & 1u; }

 private:
  std::mt19937_64 eng_;
};

// Uniform random CNF: m clauses, widths uniform in [1, width_max], distinct
// variables per clause (sorted ascending), uniform signs.
CnfFormula gen_random_cnf(int n, int m, int width_max, std::uint64_t seed);

// Uniform random XOR system: supports of size uniform in [1, arity_max],
// weights uniform in [1, weight_max], right-hand sides uniform.
Lin2System gen_random_lin2(int n, int m, int arity_max, long long weight_max,
                           std::uint64_t seed);

// Appends extra_vars fresh variables, each constrained by the contradicting
// unit pair (x), (!x). Adds exactly extra_vars to both the satisfiable
// optimum and the average, so above-average answers are unchanged for every k.
CnfFormula pad_contradicting_units(const CnfFormula& f, int extra_vars);

// Construction data for the hardness instance built from a 3-CNF.
struct Theorem1Meta {
  int n_input = 0;    // input variables, x-block 1..n_input
  int m_input = 0;    // input clauses
  int c = 0;          // density bound, m_input <= c * n_input
  int n_prime = 0;    // output variables: 2 * c * n_input
  int clause_len = 0; // every output clause has this width, ceil(log2 n')
  int m_prime = 0;    // output clauses: 2^{clause_len + 1}
  int c1_size = 0;    // forcing block, 2^{clause_len} - 1
  int c2_size = 0;    // embedded input clauses, m_input
  int c3_size = 0;    // coverage block over the y-tail
};

struct Theorem1Result {
  CnfFormula formula;  // clauses ordered C1, C2, C3
  Theorem1Meta meta;
};

// Embeds a width-3 CNF with distinct clauses into an instance whose every
// clause has width ceil(log2 n'), such that the output's average is exactly
// m' - 2 and the input is satisfiable iff the output can beat its average by
// 2 (i.e. be fully satisfied). Variables keep the input indices; fresh
// y-variables occupy n_input+1 .. n_prime. Throws InfeasibleError naming the
// violated size requirement when the blocks cannot be built.
Theorem1Result gen_theorem1(const CnfFormula& f, int c);

}  // namespace msaa
