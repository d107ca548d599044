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

#include <gmpxx.h>

#include <map>
#include <vector>

#include "msaa/formula.hpp"
#include "msaa/lin2.hpp"

namespace msaa {

// Multilinear polynomial over {-1,+1} variables, keyed by the (nonempty,
// sorted) variable set of each monomial. The constant term always cancels in
// the clause expansion and is never stored; zero coefficients are dropped.
//
// For a formula the polynomial H satisfies, at every assignment,
//   H(x) = 2^{width_bound} * excess(f, x).
struct TermMap {
  std::map<std::vector<int>, mpz_class> terms;
  int width_bound = 1;  // the scaling width r, >= every clause width

  std::size_t size() const { return terms.size(); }
  friend bool operator==(const TermMap&, const TermMap&) = default;
};

// Expansion of one clause: the polynomial 2^{r - w} * [1 - prod(1 + d_i x_i)]
// over the clause's variables, where w is the clause width and d_i is +1 for
// a positive literal, -1 for a negated one. Each nonempty subset S of the
// clause variables contributes coefficient -2^{r-w} * prod_{i in S} d_i,
// giving 2^w - 1 terms. Requires r >= w.
TermMap expand_clause(const Clause& c, int r);

// Sum of expand_clause over all clauses with r = the formula's maximum
// clause width (1 for an empty formula). Associative and order-independent.
TermMap build_H(const CnfFormula& f);

// Evaluates the polynomial at the assignment, exactly.
mpz_class eval_H(const TermMap& t, const Assignment& a);

struct CnfToLin2 {
  Lin2System system;  // one equation per term: weight |c_S|, rhs sign(c_S)
  mpz_class k2;       // k * 2^{width_bound - 1}
  int r_used = 1;     // the scaling width
};

// Rewrites the above-average CNF question as a weighted XOR system: an
// assignment has CNF excess >= k iff its system excess is >= k2. The output
// has pairwise-distinct supports (merge-rule stable by construction), and
// twice its excess equals eval_H(build_H(f), x) at every assignment.
CnfToLin2 cnf_to_lin2(const CnfFormula& f, long long k);

}  // namespace msaa
