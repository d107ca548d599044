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

#include "msaa/formula.hpp"
#include "msaa/lin2.hpp"

namespace msaa {

// Exhaustive scans over the assignment space. The OpenMP versions partition
// the code range into chunks and merge deterministically, so value and
// witness are identical to the serial references for any thread count.
//
// Assignments are encoded as integer codes with variable 1 in the most
// significant bit and bit=1 meaning TRUE (-1). Scanning codes in ascending
// order therefore visits assignments in lexicographic order with FALSE (+1)
// before TRUE (-1), and the first maximizer found is the lexicographically
// least one.

struct SearchOptions {
  int budget_bits = 24;  // refuse scans beyond 2^budget_bits assignments
  int threads = 0;       // 0 = OpenMP default
};

struct MaxSatResult {
  long long max_satisfied = 0;
  Assignment witness;  // lexicographically least maximizer
};

struct MaxExcessResult {
  mpz_class twice_excess;  // max over assignments of lin2_excess_twice
  Assignment witness;      // lex-least maximizer; non-live variables +1
};

// Exact maximum of count_satisfied over all 2^n assignments.
MaxSatResult oracle_max_sat(const CnfFormula& f, const SearchOptions& opts = {});

// Serial reference implementation kept for testing and benchmarking.
MaxSatResult oracle_max_sat_serial(const CnfFormula& f, int budget_bits = 24);

// Exact maximum of lin2_excess_twice over assignments to the live variables;
// non-live variables are fixed to +1 (they cannot affect the excess).
MaxExcessResult brute_force_max_excess(const Lin2System& s,
                                       const SearchOptions& opts = {});

// Serial reference implementation kept for testing and benchmarking.
MaxExcessResult brute_force_max_excess_serial(const Lin2System& s,
                                              int budget_bits = 24);

}  // namespace msaa
