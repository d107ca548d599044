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

#include <optional>
#include <span>
#include <string>

#include "msaa/formula.hpp"
#include "msaa/search.hpp"

namespace msaa {

// Exact expected number of satisfied clauses when variables 1..t carry the
// given values and the rest are uniform: a satisfied clause counts 1, a fully
// falsified one 0, and a clause with u unassigned literals 1 - 2^{-u}.
DyadicRational conditional_expectation(const CnfFormula& f,
                                       std::span<const std::int8_t> prefix);

// Greedy rounding of the conditional expectation, variable by variable in
// index order, ties resolved to TRUE (-1). The result always satisfies at
// least asat(f) clauses.
Assignment derandomized_assignment(const CnfFormula& f);

enum class Answer { yes, no, unknown };
enum class Mechanism {
  trivial_k0,             // k = 0, the average is always attainable
  threshold_certificate,  // kernel large enough to guarantee YES
  kernel_exhaustion,      // exhaustive search over the reduced kernel
  budget_exceeded,        // kernel too large to exhaust
};

struct DecisionOutcome {
  Answer answer = Answer::unknown;
  Mechanism mechanism = Mechanism::budget_exceeded;
  int kernel_vars = 0;  // live variables of the reduced kernel (0 if unused)
  mpz_class k2;         // k * 2^{r_used-1}
  int r_used = 1;
  std::optional<mpz_class> twice_excess_max;  // kernel exhaustion only
  std::optional<Assignment> witness;
  // Witness over kernel variables only (original formula too large to
  // re-exhaust); non-kernel variables are reported as +1.
  bool witness_kernel_only = false;
};

// Decides whether some assignment satisfies at least asat(f) + k clauses.
//   1. k = 0: YES, witnessed by the derandomized assignment.
//   2. Rewrite as a weighted XOR system, reduce to the rule-stable kernel.
//   3. Kernel big enough: YES by the threshold certificate (no witness).
//   4. Kernel within budget: exhaust it; YES iff max twice-excess reaches
//      k * 2^{r_used}. A YES re-exhausts the original formula for a CNF
//      witness when n fits the budget, otherwise reports the kernel witness.
//   5. Otherwise UNKNOWN.
// YES and NO are always sound; UNKNOWN only ever means "budget exceeded".
DecisionOutcome decide_above_average(const CnfFormula& f, long long k,
                                     const SearchOptions& opts = {});

enum class Regime { fpt_xp, hard, intermediate, small_n };

// Where the instance's clause width sits relative to the tractability
// thresholds in n: width at most log2 log2 n - log2 log2 log2 n is solvable
// here (fpt-xp), width at least log2 log2 n is the hard band, and anything
// between is unresolved. Iterated logs degenerate below n = 16.
struct RegimeReport {
  int r_max = 0;
  int n = 0;
  int ceil_log2_n = 0;       // exact, via bit arithmetic
  double log2_log2_n = 0.0;  // NaN when undefined
  double fpt_bound = 0.0;    // log2 log2 n - log2 log2 log2 n; NaN if undefined
  Regime regime = Regime::small_n;
};

RegimeReport classify_regime(const CnfFormula& f);

const char* to_string(Answer a);
const char* to_string(Mechanism m);
const char* to_string(Regime r);

}  // namespace msaa
