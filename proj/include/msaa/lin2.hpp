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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "msaa/formula.hpp"

namespace msaa {

// One weighted XOR constraint over {-1,+1} variables:
//   prod_{i in support} x_i = rhs, with positive integral weight.
struct Lin2Equation {
  std::vector<int> support;  // nonempty, sorted ascending, distinct
  int rhs = +1;              // -1 or +1
  mpz_class weight = 1;      // >= 1

  // Signed coefficient weight * rhs; twice the excess is the sum of these
  // times the support products.
  mpz_class coefficient() const { return rhs < 0 ? -weight : weight; }
  friend bool operator==(const Lin2Equation&, const Lin2Equation&) = default;
};

struct Lin2System {
  int num_vars = 0;
  std::vector<Lin2Equation> equations;

  int num_equations() const { return static_cast<int>(equations.size()); }
  mpz_class total_weight() const;
  // Variables appearing in at least one support, ascending.
  std::vector<int> live_vars() const;
  // Largest support size (0 for an empty system).
  int max_arity() const;
  friend bool operator==(const Lin2System&, const Lin2System&) = default;
};

// Audit log of rule applications. replay_trace applies a trace mechanically
// to the original system and must reproduce the rule output exactly.
struct MergeGroup {
  std::vector<int> equation_indices;  // >= 2 input equations, same support
  std::vector<int> support;
  int rhs = +1;          // survivor, meaningless when deleted
  mpz_class weight = 0;  // survivor weight
  bool deleted = false;  // weights cancelled to zero
};

struct TraceStep {
  enum class Rule { merge, rank };
  Rule rule = Rule::merge;
  std::vector<MergeGroup> groups;  // merge steps
  std::vector<int> basis_vars;     // rank steps: chosen independent columns
  std::vector<int> deleted_vars;   // rank steps: removed from every support
};

struct ReductionTrace {
  std::vector<TraceStep> steps;
  bool empty() const { return steps.empty(); }
};

Lin2System replay_trace(const Lin2System& input, const ReductionTrace& trace);

// Twice the excess of the assignment: sum of weight*rhs*prod(support values).
// Equals (satisfied weight) - (unsatisfied weight); exact.
mpz_class lin2_excess_twice(const Lin2System& s, const Assignment& a);

// Collapses equations sharing a support: equal right-hand sides add weights,
// opposite ones cancel, a zero result deletes the equation. Pointwise
// excess-preserving. Output keeps first-occurrence order.
std::pair<Lin2System, ReductionTrace> merge_rule(const Lin2System& s);

// Deletes every variable outside a GF(2) column basis of the incidence
// matrix (rows = equations, columns = variables). The basis is the
// lexicographically first maximal independent column set, found by greedy
// left-to-right elimination. Preserves maximum excess; never empties a
// support; variable indices are not renumbered.
std::pair<Lin2System, ReductionTrace> rank_rule(const Lin2System& s);

// Alternates merge_rule and rank_rule (merge first) until neither changes
// the system. Terminates: every productive step drops an equation or a live
// variable.
std::pair<Lin2System, ReductionTrace> reduce_fixpoint(const Lin2System& s);

// Greedy lowest-index GF(2) column basis of the incidence matrix; the result
// size is the matrix rank.
std::vector<int> gf2_column_basis(const Lin2System& s);

// Kernel certificate: a rule-stable system with n' live variables answers
// YES whenever n' >= (2*k2 - 1)*r + 1, where r is the largest support size.
// Throws std::logic_error if the system is not rule-stable.
bool threshold_yes(const Lin2System& s, const mpz_class& k2);

// Text format: header "p lin2 <num_vars> <num_eqs>", one equation per line
// as "<weight> <rhs> <var>... 0", comment lines start with 'c'.
Lin2System parse_lin2(std::string_view text);
std::string serialize_lin2(const Lin2System& s);

}  // namespace msaa
