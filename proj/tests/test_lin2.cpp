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
#include "msaa/lin2.hpp"
#include "msaa/search.hpp"
#include "test_oracles.hpp"

using namespace msaa;

namespace {

Lin2System make(int num_vars,
                std::vector<std::tuple<std::vector<int>, int, long>> eqs) {
  Lin2System s;
  s.num_vars = num_vars;
  for (auto& [sup, rhs, w] : eqs) {
    s.equations.push_back(Lin2Equation{sup, rhs, mpz_class(w)});
  }
  return s;
}

// Every assignment over the full variable range agrees pointwise.
void check_pointwise_equal(const Lin2System& a, const Lin2System& b) {
  REQUIRE(a.num_vars == b.num_vars);
  Assignment x = testing::first_assignment(a.num_vars);
  do {
    CHECK(lin2_excess_twice(a, x) == lin2_excess_twice(b, x));
  } while (testing::next_assignment(x));
}

}  // namespace

TEST_CASE("lin2_excess_twice") {
  const Lin2System s = make(2, {{{1, 2}, +1, 1}});
  Assignment both_true(2, -1);
  CHECK(lin2_excess_twice(s, both_true) == 1);
  Assignment mixed(2, +1);
  mixed.set(1, -1);
  CHECK(lin2_excess_twice(s, mixed) == -1);

  // contradicting pair of weight 2: zero excess everywhere
  const Lin2System pair = make(1, {{{1}, +1, 2}, {{1}, -1, 2}});
  Assignment t(1, -1), f(1, +1);
  CHECK(lin2_excess_twice(pair, t) == 0);
  CHECK(lin2_excess_twice(pair, f) == 0);

  CHECK_THROWS_AS(lin2_excess_twice(s, Assignment(1)), std::invalid_argument);
}

TEST_CASE("excess parity matches total weight") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Lin2System s = gen_random_lin2(6, 10, 3, 5, seed);
    const mpz_class w = s.total_weight();
    Assignment a = testing::first_assignment(6);
    do {
      mpz_class diff = lin2_excess_twice(s, a) - w;
      CHECK(mpz_even_p(diff.get_mpz_t()));
    } while (testing::next_assignment(a));
  }
}

TEST_CASE("merge rule") {
  SUBCASE("opposite sides difference") {
    const Lin2System s = make(2, {{{1, 2}, +1, 3}, {{1, 2}, -1, 5}});
    const auto [out, trace] = merge_rule(s);
    CHECK(out == make(2, {{{1, 2}, -1, 2}}));
    CHECK(replay_trace(s, trace) == out);
  }
  SUBCASE("same side sums") {
    const Lin2System s = make(1, {{{1}, +1, 2}, {{1}, +1, 3}});
    const auto [out, trace] = merge_rule(s);
    CHECK(out == make(1, {{{1}, +1, 5}}));
    CHECK(replay_trace(s, trace) == out);
  }
  SUBCASE("exact cancellation deletes") {
    const Lin2System s = make(1, {{{1}, +1, 2}, {{1}, -1, 2}});
    const auto [out, trace] = merge_rule(s);
    CHECK(out.equations.empty());
    CHECK(replay_trace(s, trace) == out);
  }
  SUBCASE("no duplicate supports afterwards, pointwise preserving") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const Lin2System s = gen_random_lin2(5, 12, 3, 4, seed);
      const auto [out, trace] = merge_rule(s);
      std::set<std::vector<int>> sups;
      for (const Lin2Equation& e : out.equations) {
        CHECK(sups.insert(e.support).second);
        CHECK(e.weight >= 1);
      }
      check_pointwise_equal(s, out);
      CHECK(replay_trace(s, trace) == out);
      // idempotent
      CHECK(merge_rule(out).first == out);
    }
  }
}

TEST_CASE("rank rule") {
  SUBCASE("single equation collapses to first variable") {
    const Lin2System s = make(3, {{{1, 2, 3}, +1, 1}});
    const auto [out, trace] = rank_rule(s);
    CHECK(out == make(3, {{{1}, +1, 1}}));
    CHECK(testing::naive_max_excess(s).best == 1);
    CHECK(testing::naive_max_excess(out).best == 1);
    CHECK(replay_trace(s, trace) == out);
  }
  SUBCASE("dependent third column folds in") {
    const Lin2System s = make(3, {{{1, 2}, +1, 1}, {{2, 3}, -1, 1}});
    const auto [out, trace] = rank_rule(s);
    CHECK(out == make(3, {{{1, 2}, +1, 1}, {{2}, -1, 1}}));
    CHECK(testing::naive_max_excess(s).best == 2);
    CHECK(testing::naive_max_excess(out).best == 2);
    CHECK(replay_trace(s, trace) == out);
  }
  SUBCASE("full rank system unchanged") {
    const Lin2System s = make(2, {{{1}, +1, 1}, {{2}, +1, 1}});
    const auto [out, trace] = rank_rule(s);
    CHECK(out == s);
    CHECK(trace.empty());
  }
  SUBCASE("live count equals input rank; supports stay nonempty") {
    for (std::uint64_t seed = 100; seed < 140; ++seed) {
      const Lin2System s = gen_random_lin2(7, 9, 3, 3, seed);
      const std::size_t rank = gf2_column_basis(s).size();
      const auto [out, trace] = rank_rule(s);
      CHECK(out.live_vars().size() == rank);
      for (const Lin2Equation& e : out.equations) CHECK(!e.support.empty());
      CHECK(testing::naive_max_excess(s).best ==
            testing::naive_max_excess(out).best);
      CHECK(replay_trace(s, trace) == out);
    }
  }
}

TEST_CASE("reduce_fixpoint") {
  SUBCASE("already reduced is unchanged") {
    const Lin2System s = make(2, {{{1}, +1, 1}, {{2}, +1, 1}});
    const auto [out, trace] = reduce_fixpoint(s);
    CHECK(out == s);
    CHECK(trace.empty());
  }
  SUBCASE("triangle") {
    const Lin2System s =
        make(3, {{{1, 2}, +1, 1}, {{1, 3}, +1, 1}, {{2, 3}, +1, 1}});
    const auto [out, trace] = reduce_fixpoint(s);
    CHECK(out.live_vars() == std::vector<int>{1, 2});
    CHECK(testing::naive_max_excess(s).best ==
          testing::naive_max_excess(out).best);
    CHECK(replay_trace(s, trace) == out);
  }
  SUBCASE("annihilating pair leaves an empty system") {
    const Lin2System s = make(2, {{{1, 2}, +1, 1}, {{1, 2}, -1, 1}});
    const auto [out, trace] = reduce_fixpoint(s);
    CHECK(out.equations.empty());
    CHECK(testing::naive_max_excess(out).best == 0);
  }
  SUBCASE("stable under both rules, excess preserved") {
    for (std::uint64_t seed = 200; seed < 260; ++seed) {
      const Lin2System s = gen_random_lin2(8, 10, 3, 4, seed);
      const auto [out, trace] = reduce_fixpoint(s);
      CHECK(merge_rule(out).second.empty());
      CHECK(rank_rule(out).second.empty());
      CHECK(out.live_vars().size() <=
            std::min<std::size_t>(static_cast<std::size_t>(s.num_vars),
                                  s.equations.size()));
      CHECK(testing::naive_max_excess(s).best ==
            testing::naive_max_excess(out).best);
      CHECK(replay_trace(s, trace) == out);
    }
  }
}

TEST_CASE("threshold_yes") {
  const Lin2System s = make(3, {{{1}, +1, 1}, {{2}, +1, 1}, {{3}, +1, 1}});
  CHECK(threshold_yes(s, 1));   // 3 >= (2-1)*1 + 1
  CHECK(!threshold_yes(s, 2));  // 3 < (4-1)*1 + 1
  CHECK(testing::naive_max_excess(s).best == 3);  // excess 3/2 >= 1

  CHECK(!threshold_yes(Lin2System{}, 1));

  // caller contract: rule-stable systems only
  const Lin2System dup = make(1, {{{1}, +1, 1}, {{1}, +1, 1}});
  CHECK_THROWS_AS(threshold_yes(dup, 1), std::logic_error);
  const Lin2System dep = make(2, {{{1, 2}, +1, 1}});
  CHECK_THROWS_AS(threshold_yes(dep, 1), std::logic_error);
  CHECK_THROWS_AS(threshold_yes(s, 0), std::invalid_argument);
}

TEST_CASE("threshold desk check: certificate implies reachable excess") {
  int fired = 0;
  for (std::uint64_t seed = 300; fired < 40 && seed < 600; ++seed) {
    const Lin2System raw = gen_random_lin2(10, 14, 2, 2, seed);
    const auto [s, trace] = reduce_fixpoint(raw);
    if (s.equations.empty()) continue;
    for (long k2 = 1; k2 <= 2; ++k2) {
      if (!threshold_yes(s, k2)) continue;
      ++fired;
      CHECK(testing::naive_max_excess(s).best >= 2 * k2);
    }
  }
  CHECK(fired >= 40);
}

TEST_CASE("brute_force_max_excess") {
  SUBCASE("single satisfiable equation, lex-least witness") {
    const Lin2System s = make(2, {{{1, 2}, +1, 1}});
    const MaxExcessResult r = brute_force_max_excess(s);
    CHECK(r.twice_excess == 1);
    CHECK(r.witness == Assignment(2, +1));  // (+1,+1) preferred over (-1,-1)
  }
  SUBCASE("unmerged contradiction") {
    const Lin2System s = make(1, {{{1}, +1, 1}, {{1}, -1, 2}});
    CHECK(brute_force_max_excess(s).twice_excess == 1);
  }
  SUBCASE("empty system") {
    Lin2System s;
    s.num_vars = 3;
    const MaxExcessResult r = brute_force_max_excess(s);
    CHECK(r.twice_excess == 0);
    CHECK(r.witness == Assignment(3, +1));
  }
  SUBCASE("budget enforced") {
    Lin2System s;
    s.num_vars = 30;
    std::vector<int> sup;
    for (int v = 1; v <= 30; ++v) sup.push_back(v);
    s.equations.push_back(Lin2Equation{sup, +1, 1});
    CHECK_THROWS_AS(brute_force_max_excess(s, {.budget_bits = 24}),
                    BudgetError);
  }
  SUBCASE("non-live variables forced to +1, agrees with naive oracle") {
    for (std::uint64_t seed = 700; seed < 740; ++seed) {
      const Lin2System s = gen_random_lin2(7, 5, 3, 6, seed);
      const MaxExcessResult r = brute_force_max_excess(s);
      const auto naive = testing::naive_max_excess(s);
      CHECK(r.twice_excess == naive.best);
      CHECK(r.witness == naive.witness);
    }
  }
}

TEST_CASE("lin2 text format") {
  const Lin2System s = parse_lin2("p lin2 2 1\n3 -1 1 2 0\n");
  CHECK(s == make(2, {{{1, 2}, -1, 3}}));

  CHECK_THROWS_AS(parse_lin2("p lin2 1 1\n0 1 1 0\n"), ParseError);   // weight
  CHECK_THROWS_AS(parse_lin2("p lin2 1 1\n1 2 1 0\n"), ParseError);   // rhs
  CHECK_THROWS_AS(parse_lin2("p lin2 1 1\n1 1 0\n"), ParseError);     // empty
  CHECK_THROWS_AS(parse_lin2("p lin2 1 1\n1 1 1\n"), ParseError);     // no 0
  CHECK_THROWS_AS(parse_lin2("p lin2 1 2\n1 1 1 0\n"), ParseError);   // count
  CHECK_THROWS_AS(parse_lin2("p lin2 1 1\n1 1 2 0\n"), ParseError);   // range
  CHECK_THROWS_AS(parse_lin2("1 1 1 0\n"), ParseError);               // header

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Lin2System r = gen_random_lin2(9, 11, 4, 100, seed);
    const std::string text = serialize_lin2(r);
    CHECK(parse_lin2(text) == r);
    CHECK(serialize_lin2(parse_lin2(text)) == text);
  }
}

TEST_CASE("lin2 parser rejects garbage with ParseError, never crashes") {
  Rng rng(4321);
  const std::string alphabet = "plin2 0123456789-\n\t";
  for (int i = 0; i < 300; ++i) {
    std::string text;
    const std::size_t len = rng.below(60);
    for (std::size_t j = 0; j < len; ++j) {
      text += alphabet[static_cast<std::size_t>(rng.below(alphabet.size()))];
    }
    try {
      const Lin2System s = parse_lin2(text);
      CHECK(parse_lin2(serialize_lin2(s)) == s);
    } catch (const ParseError&) {
    }
  }
}

TEST_CASE("huge weights survive the text format and the merge rule") {
  const mpz_class big = mpz_class("123456789012345678901234567890");
  Lin2System s;
  s.num_vars = 1;
  s.equations.push_back(Lin2Equation{{1}, +1, big});
  s.equations.push_back(Lin2Equation{{1}, +1, 1});
  const std::string text = serialize_lin2(s);
  CHECK(parse_lin2(text) == s);
  const auto [merged, trace] = merge_rule(s);
  CHECK(merged.equations[0].weight == big + 1);
}
