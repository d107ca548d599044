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

#include "msaa/generator.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "msaa/errors.hpp"

namespace msaa {

namespace {

std::vector<int> sample_distinct(Rng& rng, int n, int count) {
  std::vector<int> vars;
  vars.reserve(static_cast<std::size_t>(count));
  while (static_cast<int>(vars.size()) < count) {
    const int v = rng.range(1, n);
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) {
      vars.push_back(v);
    }
  }
  std::sort(vars.begin(), vars.end());
  return vars;
}

}  // namespace

CnfFormula gen_random_cnf(int n, int m, int width_max, std::uint64_t seed) {
  if (n < 1 || m < 0 || width_max < 1 || width_max > n) {
    throw InfeasibleError("gen_random_cnf needs n >= 1 and 1 <= width_max <= n");
  }
  Rng rng(seed);
  CnfFormula f;
  f.num_vars = n;
  f.clauses.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const int w = rng.range(1, width_max);
    Clause c;
    for (int v : sample_distinct(rng, n, w)) {
      c.lits.push_back(Literal{v, rng.coin()});
    }
    f.clauses.push_back(std::move(c));
  }
  return f;
}

Lin2System gen_random_lin2(int n, int m, int arity_max, long long weight_max,
                           std::uint64_t seed) {
  if (n < 1 || m < 0 || arity_max < 1 || arity_max > n || weight_max < 1) {
    throw InfeasibleError(
        "gen_random_lin2 needs n >= 1, 1 <= arity_max <= n, weight_max >= 1");
  }
  Rng rng(seed);
  Lin2System s;
  s.num_vars = n;
  s.equations.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    Lin2Equation e;
    e.support = sample_distinct(rng, n, rng.range(1, arity_max));
    e.rhs = rng.coin() ? +1 : -1;
    e.weight = static_cast<long>(
        1 + static_cast<long long>(rng.below(static_cast<std::uint64_t>(weight_max))));
    s.equations.push_back(std::move(e));
  }
  return s;
}

CnfFormula pad_contradicting_units(const CnfFormula& f, int extra_vars) {
  if (extra_vars < 0) {
    throw std::invalid_argument("extra_vars must be >= 0");
  }
  CnfFormula out = f;
  for (int i = 1; i <= extra_vars; ++i) {
    const int v = f.num_vars + i;
    out.clauses.push_back(Clause{{Literal{v, false}}});
    out.clauses.push_back(Clause{{Literal{v, true}}});
  }
  out.num_vars = f.num_vars + extra_vars;
  return out;
}

Theorem1Result gen_theorem1(const CnfFormula& f, int c) {
  const int n = f.num_vars;
  const int m = f.num_clauses();
  if (c < 1) throw InfeasibleError("density parameter c must be >= 1");
  std::set<std::vector<Literal>> distinct;
  for (const Clause& cl : f.clauses) {
    if (cl.width() != 3) {
      throw InfeasibleError("every input clause must have exactly 3 literals, "
                            "found width " + std::to_string(cl.width()));
    }
    std::vector<Literal> key = cl.lits;
    std::sort(key.begin(), key.end());
    if (!distinct.insert(std::move(key)).second) {
      throw InfeasibleError("input clauses must be distinct");
    }
  }
  if (m > c * n) {
    throw InfeasibleError("clause density violated: m <= c*n requires " +
                          std::to_string(m) + " <= " + std::to_string(c * n));
  }

  Theorem1Meta meta;
  meta.n_input = n;
  meta.m_input = m;
  meta.c = c;
  meta.n_prime = 2 * c * n;
  const int np = meta.n_prime;
  const int ell = np <= 1 ? 0 : std::bit_width(static_cast<unsigned>(np - 1));
  meta.clause_len = ell;
  if (ell < 3) {
    throw InfeasibleError("clause length ceil(log2 n') = " +
                          std::to_string(ell) + " must be >= 3");
  }
  if (ell > 24) {
    throw InfeasibleError("clause length ceil(log2 n') = " +
                          std::to_string(ell) + " is beyond desk scale");
  }
  meta.m_prime = 1 << (ell + 1);
  meta.c1_size = (1 << ell) - 1;
  meta.c2_size = m;
  meta.c3_size = meta.m_prime - meta.c1_size - meta.c2_size;
  if (meta.c3_size < 0) {
    throw InfeasibleError("too many input clauses: m <= 2^len + 1 requires " +
                          std::to_string(m) +
                          " <= " + std::to_string((1 << ell) + 1));
  }
  const int tail = np - n - ell;  // y-variables available for the C3 block
  if (tail < ell) {
    throw InfeasibleError("y-tail too short: n' - n - len >= len requires " +
                          std::to_string(tail) + " >= " + std::to_string(ell));
  }
  // Enough distinct all-positive width-len clauses: C(tail, len) >= |C3|.
  {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(tail),
                 static_cast<unsigned long>(ell));
    if (binom < meta.c3_size) {
      throw InfeasibleError("not enough distinct tail clauses: C(" +
                            std::to_string(tail) + "," + std::to_string(ell) +
                            ") >= " + std::to_string(meta.c3_size) +
                            " violated");
    }
  }
  // The cyclic windows (offsets i..i+len-1) only reach every tail variable
  // when there are at least tail - len + 1 of them.
  if (meta.c3_size < tail - ell + 1) {
    throw InfeasibleError("C3 cannot cover the y-tail: |C3| >= T - len + 1 "
                          "requires " + std::to_string(meta.c3_size) + " >= " +
                          std::to_string(tail - ell + 1));
  }

  CnfFormula out;
  out.num_vars = np;

  // C1: complete set on y_1..y_len minus the all-negative clause (the last
  // pattern in sign-lexicographic order).
  std::vector<int> y_core;
  for (int i = 1; i <= ell; ++i) y_core.push_back(n + i);
  CnfFormula cs = complete_set(y_core);
  out.clauses.assign(cs.clauses.begin(), cs.clauses.end() - 1);

  // C2: each input clause extended with !y_4..!y_len (empty tail for len 3).
  for (const Clause& cl : f.clauses) {
    Clause ext = cl;
    for (int i = 4; i <= ell; ++i) ext.lits.push_back(Literal{n + i, true});
    out.clauses.push_back(std::move(ext));
  }

  // C3: all-positive width-len clauses over the tail y_{len+1}..y_{n'-n},
  // cyclic sliding windows first (covering every tail variable), then
  // lexicographic fill, all distinct.
  std::set<std::vector<int>> c3_sets;
  std::vector<std::vector<int>> c3;
  auto push_c3 = [&](std::vector<int> vars) {
    std::sort(vars.begin(), vars.end());
    if (c3_sets.insert(vars).second) c3.push_back(std::move(vars));
  };
  const int tail_first = n + ell + 1;
  for (int i = 0; i < std::min(meta.c3_size, tail); ++i) {
    std::vector<int> vars;
    for (int j = 0; j < ell; ++j) {
      vars.push_back(tail_first + (i + j) % tail);
    }
    push_c3(std::move(vars));
  }
  if (static_cast<int>(c3.size()) < meta.c3_size) {
    // Combinations of tail offsets in lexicographic order.
    std::vector<int> comb(static_cast<std::size_t>(ell));
    for (int i = 0; i < ell; ++i) comb[static_cast<std::size_t>(i)] = i;
    for (;;) {
      std::vector<int> vars;
      for (int off : comb) vars.push_back(tail_first + off);
      push_c3(std::move(vars));
      if (static_cast<int>(c3.size()) >= meta.c3_size) break;
      int i = ell - 1;
      while (i >= 0 && comb[static_cast<std::size_t>(i)] == tail - ell + i) --i;
      if (i < 0) break;
      ++comb[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < ell; ++j) {
        comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
  }
  if (static_cast<int>(c3.size()) != meta.c3_size) {
    throw InfeasibleError("could not build " + std::to_string(meta.c3_size) +
                          " distinct C3 clauses");
  }
  for (const std::vector<int>& vars : c3) {
    Clause cl;
    for (int v : vars) cl.lits.push_back(Literal{v, false});
    out.clauses.push_back(std::move(cl));
  }

  return Theorem1Result{std::move(out), meta};
}

}  // namespace msaa
