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

#include "msaa/reduction.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "msaa/errors.hpp"

namespace msaa {

namespace {

// 2^w - 1 terms per clause; wider clauses would blow up the term map.
constexpr int kMaxExpansionWidth = 24;

void add_term(TermMap& t, std::vector<int> key, const mpz_class& coeff) {
  auto [it, inserted] = t.terms.try_emplace(std::move(key), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) t.terms.erase(it);
  }
}

}  // namespace

TermMap expand_clause(const Clause& c, int r) {
  const int w = c.width();
  if (r < w) {
    throw std::invalid_argument("expansion width " + std::to_string(r) +
                                " below clause width " + std::to_string(w));
  }
  if (w > kMaxExpansionWidth) {
    throw BudgetError("clause width " + std::to_string(w) +
                      " exceeds the multilinear expansion limit of " +
                      std::to_string(kMaxExpansionWidth));
  }
  mpz_class scale = 1;
  scale <<= static_cast<unsigned>(r - w);  // 2^{r-w}

  TermMap t;
  t.width_bound = r;
  for (std::uint32_t subset = 1; subset < (1u << w); ++subset) {
    std::vector<int> key;
    key.reserve(static_cast<std::size_t>(std::popcount(subset)));
    int neg_lits = 0;
    for (int j = 0; j < w; ++j) {
      if ((subset >> j) & 1u) {
        const Literal& l = c.lits[static_cast<std::size_t>(j)];
        key.push_back(l.var);
        neg_lits += l.negated;
      }
    }
    std::sort(key.begin(), key.end());
    // coefficient = -2^{r-w} * prod d_i, with d_i = -1 for negated literals
    const bool positive = neg_lits & 1;
    add_term(t, std::move(key), positive ? scale : mpz_class(-scale));
  }
  return t;
}

TermMap build_H(const CnfFormula& f) {
  TermMap h;
  h.width_bound = std::max(1, f.max_clause_width());
  for (const Clause& c : f.clauses) {
    TermMap part = expand_clause(c, h.width_bound);
    for (auto& [key, coeff] : part.terms) {
      add_term(h, key, coeff);
    }
  }
  return h;
}

mpz_class eval_H(const TermMap& t, const Assignment& a) {
  mpz_class total = 0;
  for (const auto& [key, coeff] : t.terms) {
    if (key.back() > a.num_vars()) {
      throw std::invalid_argument("assignment covers " +
                                  std::to_string(a.num_vars()) +
                                  " variables, term mentions variable " +
                                  std::to_string(key.back()));
    }
    int prod = 1;
    for (int v : key) prod *= a[v];
    if (prod > 0) {
      total += coeff;
    } else {
      total -= coeff;
    }
  }
  return total;
}

CnfToLin2 cnf_to_lin2(const CnfFormula& f, long long k) {
  if (k < 0) throw std::invalid_argument("parameter k must be >= 0");
  TermMap h = build_H(f);
  CnfToLin2 out;
  out.r_used = h.width_bound;
  out.k2 = mpz_class(static_cast<long>(k)) << (out.r_used - 1);
  out.system.num_vars = f.num_vars;
  out.system.equations.reserve(h.terms.size());
  for (auto& [key, coeff] : h.terms) {
    Lin2Equation e;
    e.support = key;
    e.rhs = sgn(coeff) > 0 ? +1 : -1;
    e.weight = abs(coeff);
    out.system.equations.push_back(std::move(e));
  }
  return out;
}

}  // namespace msaa
