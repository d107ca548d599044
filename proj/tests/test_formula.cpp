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
#include "msaa/formula.hpp"
#include "msaa/generator.hpp"
#include "test_oracles.hpp"

using namespace msaa;

TEST_CASE("parse_dimacs basics") {
  const CnfFormula f = parse_dimacs("p cnf 2 1\n1 -2 0\n");
  CHECK(f.num_vars == 2);
  REQUIRE(f.num_clauses() == 1);
  CHECK(f.clauses[0].lits == std::vector<Literal>{{1, false}, {2, true}});
}

TEST_CASE("parse_dimacs tolerates comments, blank lines and split clauses") {
  const CnfFormula f = parse_dimacs(
      "c header comment\np cnf 3 2\nc between\n1 2\n 3 0\n\n  -1\t-3 0\nc trailing\n");
  REQUIRE(f.num_clauses() == 2);
  CHECK(f.clauses[0].width() == 3);
  CHECK(f.clauses[1].lits == std::vector<Literal>{{1, true}, {3, true}});
}

TEST_CASE("parse_dimacs complete set file") {
  const CnfFormula f =
      parse_dimacs("p cnf 2 4\n1 2 0\n1 -2 0\n-1 2 0\n-1 -2 0\n");
  CHECK(f == complete_set({1, 2}));
}

TEST_CASE("parse_dimacs error paths") {
  CHECK_THROWS_AS(parse_dimacs(""), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p dnf 1 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf x 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\n1 -1 0\n"), ParseError);  // tautology
  CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\n1 1 0\n"), ParseError);   // duplicate
  CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\n2 0\n"), ParseError);     // range
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n0\n"), ParseError);       // empty clause
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 2\n1 0\n"), ParseError);     // count low
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 0\n2 0\n"), ParseError);  // count high
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2\n"), ParseError);     // unterminated
}

TEST_CASE("lenient mode dedupes duplicate literals with a diagnostic") {
  std::vector<std::string> diags;
  const CnfFormula f =
      parse_dimacs("p cnf 2 1\n1 1 2 0\n", {.lenient_duplicate_literals = true},
                   &diags);
  CHECK(f.clauses[0].width() == 2);
  REQUIRE(diags.size() == 1);
  CHECK(diags[0].find("duplicate") != std::string::npos);
  // tautologies stay fatal even in lenient mode
  CHECK_THROWS_AS(
      parse_dimacs("p cnf 1 1\n1 -1 0\n", {.lenient_duplicate_literals = true}),
      ParseError);
}

TEST_CASE("serialize_dimacs") {
  CnfFormula f;
  f.num_vars = 2;
  f.clauses.push_back(Clause{{{1, false}, {2, true}}});
  CHECK(serialize_dimacs(f) == "p cnf 2 1\n1 -2 0\n");

  CnfFormula empty;
  empty.num_vars = 3;
  CHECK(serialize_dimacs(empty) == "p cnf 3 0\n");
}

TEST_CASE("parse/serialize round trip on random formulas") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const CnfFormula f = gen_random_cnf(8, 12, 4, seed);
    const std::string text = serialize_dimacs(f);
    CHECK(parse_dimacs(text) == f);
    CHECK(serialize_dimacs(parse_dimacs(text)) == text);
  }
}

TEST_CASE("asat") {
  CnfFormula f;
  f.num_vars = 3;
  f.clauses.push_back(Clause{{{1, false}, {2, false}, {3, false}}});
  CHECK(asat(f) == DyadicRational(mpz_class(7), 3));

  CHECK(asat(complete_set({1, 2})) == DyadicRational(3));
  CHECK(asat(CnfFormula{}) == DyadicRational(0));
}

TEST_CASE("count_satisfied and excess") {
  CnfFormula unit;  // (x1)
  unit.num_vars = 1;
  unit.clauses.push_back(Clause{{{1, false}}});
  Assignment t(1, -1), f1(1, +1);
  CHECK(count_satisfied(unit, t) == 1);
  CHECK(count_satisfied(unit, f1) == 0);
  CHECK(excess(unit, t) == DyadicRational(mpz_class(1), 1));
  CHECK(excess(unit, f1) == DyadicRational(mpz_class(-1), 1));

  CnfFormula pair;  // (x1) and (!x1)
  pair.num_vars = 1;
  pair.clauses.push_back(Clause{{{1, false}}});
  pair.clauses.push_back(Clause{{{1, true}}});
  CHECK(count_satisfied(pair, t) == 1);
  CHECK(count_satisfied(pair, f1) == 1);

  const CnfFormula cs = complete_set({1, 2});
  Assignment a = testing::first_assignment(2);
  do {
    CHECK(count_satisfied(cs, a) == 3);
    CHECK(excess(cs, a).is_zero());
  } while (testing::next_assignment(a));

  CHECK_THROWS_AS(count_satisfied(unit, Assignment(2)), std::invalid_argument);
}

TEST_CASE("complete_set shapes") {
  const CnfFormula one = complete_set({1});
  REQUIRE(one.num_clauses() == 2);
  CHECK(one.clauses[0].lits == std::vector<Literal>{{1, false}});
  CHECK(one.clauses[1].lits == std::vector<Literal>{{1, true}});

  const CnfFormula two = complete_set({1, 2});
  CHECK(two.num_clauses() == 4);

  // 3 variables: average 7, and no assignment beats it
  const CnfFormula three = complete_set({1, 2, 3});
  CHECK(three.num_clauses() == 8);
  CHECK(asat(three) == DyadicRational(7));
  CHECK(testing::naive_max_sat(three).best == 7);

  CHECK_THROWS_AS(complete_set({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(complete_set({}), std::invalid_argument);
}

TEST_CASE("asat equals the average satisfied count, exhaustively") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int n = 1 + static_cast<int>(seed % 10);
    const CnfFormula f =
        gen_random_cnf(n, 3 + static_cast<int>(seed % 10), std::min(4, n), seed);
    DyadicRational sum;
    Assignment a = testing::first_assignment(n);
    do {
      sum += DyadicRational(count_satisfied(f, a));
    } while (testing::next_assignment(a));
    CHECK(sum.scaled_pow2(-n) == asat(f));
  }
}

TEST_CASE("parser rejects garbage with ParseError, never crashes") {
  msaa::Rng rng(1234);
  const std::string alphabet = "pcnf 0123456789-\n\t";
  for (int i = 0; i < 300; ++i) {
    std::string text;
    const std::size_t len = rng.below(60);
    for (std::size_t j = 0; j < len; ++j) {
      text += alphabet[static_cast<std::size_t>(rng.below(alphabet.size()))];
    }
    try {
      const CnfFormula f = parse_dimacs(text);
      CHECK(serialize_dimacs(f).size() > 0);  // parsed: must round-trip
      CHECK(parse_dimacs(serialize_dimacs(f)) == f);
    } catch (const ParseError&) {
      // expected for most inputs
    }
  }
}

TEST_CASE("unions of complete sets have zero excess everywhere") {
  CnfFormula f = complete_set({1, 3});
  const CnfFormula g = complete_set({2, 3, 4});
  f.num_vars = 4;
  f.clauses.insert(f.clauses.end(), g.clauses.begin(), g.clauses.end());
  Assignment a = testing::first_assignment(4);
  do {
    CHECK(excess(f, a).is_zero());
  } while (testing::next_assignment(a));
}
