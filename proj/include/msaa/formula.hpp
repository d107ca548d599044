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
#include <string>
#include <string_view>
#include <vector>

#include "msaa/dyadic.hpp"

namespace msaa {

// Truth values follow the multiplicative convention used throughout this
// toolkit: TRUE is -1 and FALSE is +1. Products of values then express XOR
// directly, so CNF and linear-system code share one encoding.

struct Literal {
  int var = 0;  // 1-based variable index
  bool negated = false;

  int dimacs() const { return negated ? -var : var; }
  static Literal from_dimacs(int lit) {
    return Literal{lit < 0 ? -lit : lit, lit < 0};
  }
  // A positive literal holds iff its variable is TRUE (-1).
  bool satisfied_by(std::int8_t value) const {
    return negated ? value == +1 : value == -1;
  }
  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

// Nonempty; no two literals share a variable (no duplicates, no tautologies).
struct Clause {
  std::vector<Literal> lits;

  int width() const { return static_cast<int>(lits.size()); }
  friend bool operator==(const Clause&, const Clause&) = default;
};

struct CnfFormula {
  int num_vars = 0;
  std::vector<Clause> clauses;  // duplicate clauses allowed, each counted

  int num_clauses() const { return static_cast<int>(clauses.size()); }
  int max_clause_width() const;
  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

// Total assignment over variables 1..n, entries in {-1, +1}.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(int num_vars, std::int8_t fill = +1)
      : vals_(static_cast<std::size_t>(num_vars), fill) {}

  int num_vars() const { return static_cast<int>(vals_.size()); }
  std::int8_t operator[](int var) const {
    return vals_[static_cast<std::size_t>(var - 1)];
  }
  void set(int var, std::int8_t value) {
    vals_[static_cast<std::size_t>(var - 1)] = value;
  }
  bool is_true(int var) const { return (*this)[var] == -1; }
  const std::vector<std::int8_t>& values() const { return vals_; }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<std::int8_t> vals_;
};

struct ParseOptions {
  // Drop repeated literals inside a clause instead of rejecting, reporting
  // each dropped literal through the diagnostics sink. Tautological clauses
  // are rejected either way.
  bool lenient_duplicate_literals = false;
};

// DIMACS CNF reader. Comment lines starting with 'c' are ignored anywhere,
// tokens are whitespace-separated and clauses may span lines.
CnfFormula parse_dimacs(std::string_view text, const ParseOptions& opts = {},
                        std::vector<std::string>* diagnostics = nullptr);

// Inverse of parse_dimacs: parse(serialize(f)) == f, byte-stable.
std::string serialize_dimacs(const CnfFormula& f);

// Expected number of clauses satisfied by a uniform random assignment,
// sum over clauses of (1 - 2^{-width}). Exact.
DyadicRational asat(const CnfFormula& f);

// Number of clauses with at least one satisfied literal.
long long count_satisfied(const CnfFormula& f, const Assignment& a);

// count_satisfied(f, a) - asat(f), exact.
DyadicRational excess(const CnfFormula& f, const Assignment& a);

// All 2^t sign patterns over the given distinct variables, one clause per
// pattern, ordered lexicographically in signs (all-positive first, the
// all-negative pattern last). Every assignment falsifies exactly one clause.
CnfFormula complete_set(const std::vector<int>& vars);

}  // namespace msaa
