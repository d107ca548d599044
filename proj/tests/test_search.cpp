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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "msaa/errors.hpp"
#include "msaa/generator.hpp"
#include "msaa/search.hpp"
#include "test_oracles.hpp"

using namespace msaa;

TEST_CASE("oracle_max_sat basics") {
  CnfFormula pair;  // (x1) and (!x1)
  pair.num_vars = 1;
  pair.clauses.push_back(Clause{{{1, false}}});
  pair.clauses.push_back(Clause{{{1, true}}});
  CHECK(oracle_max_sat(pair).max_satisfied == 1);

  CHECK(oracle_max_sat(complete_set({1, 2, 3})).max_satisfied == 7);

  CnfFormula empty;
  const MaxSatResult r = oracle_max_sat(empty);
  CHECK(r.max_satisfied == 0);
  CHECK(r.witness == Assignment(0));

  CnfFormula wide;
  wide.num_vars = 30;
  CHECK_THROWS_AS(oracle_max_sat(wide, {.budget_bits = 24}), BudgetError);
}

TEST_CASE("oracle witness is the lexicographically least maximizer") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 1 + static_cast<int>(seed % 9);
    const CnfFormula f =
        gen_random_cnf(n, 2 + static_cast<int>(seed % 12), std::min(3, n), seed);
    const auto naive = testing::naive_max_sat(f);
    const MaxSatResult got = oracle_max_sat(f);
    CHECK(got.max_satisfied == naive.best);
    CHECK(got.witness == naive.witness);
  }
}

TEST_CASE("parallel scans match the serial references exactly") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const CnfFormula f = gen_random_cnf(13, 25, 4, seed);
    const MaxSatResult serial = oracle_max_sat_serial(f);
    for (int threads : {1, 2, 3, 8}) {
      const MaxSatResult par = oracle_max_sat(f, {.threads = threads});
      CHECK(par.max_satisfied == serial.max_satisfied);
      CHECK(par.witness == serial.witness);
    }

    const Lin2System s = gen_random_lin2(13, 20, 4, 9, seed);
    const MaxExcessResult sref = brute_force_max_excess_serial(s);
    for (int threads : {1, 2, 3, 8}) {
      const MaxExcessResult par = brute_force_max_excess(s, {.threads = threads});
      CHECK(par.twice_excess == sref.twice_excess);
      CHECK(par.witness == sref.witness);
    }
  }
}

TEST_CASE("weights beyond 64 bits take the exact path and agree") {
  Lin2System s;
  s.num_vars = 4;
  const mpz_class big = mpz_class(1) << 80;
  s.equations.push_back(Lin2Equation{{1, 2}, +1, big});
  s.equations.push_back(Lin2Equation{{2, 3}, -1, big + 3});
  s.equations.push_back(Lin2Equation{{1, 4}, +1, 5});
  const auto naive = testing::naive_max_excess(s);
  const MaxExcessResult serial = brute_force_max_excess_serial(s);
  const MaxExcessResult par = brute_force_max_excess(s, {.threads = 4});
  CHECK(serial.twice_excess == naive.best);
  CHECK(serial.witness == naive.witness);
  CHECK(par.twice_excess == naive.best);
  CHECK(par.witness == naive.witness);
}
