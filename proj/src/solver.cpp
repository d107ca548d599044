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

#include "msaa/solver.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "msaa/reduction.hpp"

namespace msaa {

DyadicRational conditional_expectation(const CnfFormula& f,
                                       std::span<const std::int8_t> prefix) {
  if (prefix.size() > static_cast<std::size_t>(f.num_vars)) {
    throw std::invalid_argument("prefix longer than the variable count");
  }
  for (std::int8_t v : prefix) {
    if (v != -1 && v != +1) {
      throw std::invalid_argument("prefix values must be -1 or +1");
    }
  }
  const int t = static_cast<int>(prefix.size());
  DyadicRational expected;
  for (const Clause& c : f.clauses) {
    bool satisfied = false;
    unsigned unassigned = 0;
    for (const Literal& l : c.lits) {
      if (l.var > t) {
        ++unassigned;
      } else if (l.satisfied_by(prefix[static_cast<std::size_t>(l.var - 1)])) {
        satisfied = true;
        break;
      }
    }
    if (satisfied) {
      expected += DyadicRational(1);
    } else if (unassigned > 0) {
      expected += DyadicRational::one_minus_pow2(unassigned);
    }
    // all literals assigned and falsified: contributes 0
  }
  return expected;
}

Assignment derandomized_assignment(const CnfFormula& f) {
  std::vector<std::int8_t> prefix;
  prefix.reserve(static_cast<std::size_t>(f.num_vars));
  for (int v = 1; v <= f.num_vars; ++v) {
    prefix.push_back(-1);
    const DyadicRational if_true = conditional_expectation(f, prefix);
    prefix.back() = +1;
    const DyadicRational if_false = conditional_expectation(f, prefix);
    if (if_true >= if_false) prefix.back() = -1;
  }
  Assignment a(f.num_vars);
  for (int v = 1; v <= f.num_vars; ++v) {
    a.set(v, prefix[static_cast<std::size_t>(v - 1)]);
  }
  return a;
}

DecisionOutcome decide_above_average(const CnfFormula& f, long long k,
                                     const SearchOptions& opts) {
  if (k < 0) throw std::invalid_argument("parameter k must be >= 0");
  DecisionOutcome out;
  if (k == 0) {
    out.answer = Answer::yes;
    out.mechanism = Mechanism::trivial_k0;
    out.r_used = std::max(1, f.max_clause_width());
    out.k2 = 0;
    out.witness = derandomized_assignment(f);
    return out;
  }

  CnfToLin2 reduced = cnf_to_lin2(f, k);
  auto [kernel, trace] = reduce_fixpoint(reduced.system);
  out.r_used = reduced.r_used;
  out.k2 = reduced.k2;
  out.kernel_vars = static_cast<int>(kernel.live_vars().size());

  if (threshold_yes(kernel, out.k2)) {
    out.answer = Answer::yes;
    out.mechanism = Mechanism::threshold_certificate;
    return out;
  }

  if (out.kernel_vars <= opts.budget_bits) {
    const MaxExcessResult best = brute_force_max_excess(kernel, opts);
    out.mechanism = Mechanism::kernel_exhaustion;
    out.twice_excess_max = best.twice_excess;
    // CNF excess >= k iff twice the system excess reaches k * 2^{r_used}.
    const mpz_class needed = out.k2 * 2;
    if (best.twice_excess >= needed) {
      out.answer = Answer::yes;
      if (f.num_vars <= opts.budget_bits) {
        out.witness = oracle_max_sat(f, opts).witness;
      } else {
        out.witness = best.witness;
        out.witness_kernel_only = true;
      }
    } else {
      out.answer = Answer::no;
    }
    return out;
  }

  out.answer = Answer::unknown;
  out.mechanism = Mechanism::budget_exceeded;
  return out;
}

RegimeReport classify_regime(const CnfFormula& f) {
  RegimeReport rep;
  rep.r_max = f.max_clause_width();
  rep.n = f.num_vars;
  const auto un = static_cast<unsigned>(std::max(1, rep.n));
  rep.ceil_log2_n = rep.n <= 1 ? 0 : std::bit_width(un - 1);

  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double log_n = rep.n >= 1 ? std::log2(static_cast<double>(rep.n)) : nan;
  rep.log2_log2_n = rep.n >= 2 ? std::log2(log_n) : nan;
  rep.fpt_bound =
      rep.n >= 3 && rep.log2_log2_n > 0.0
          ? rep.log2_log2_n - std::log2(rep.log2_log2_n)
          : nan;

  if (rep.n < 16) {
    rep.regime = Regime::small_n;
  } else if (rep.r_max <= rep.fpt_bound) {
    rep.regime = Regime::fpt_xp;
  } else if (rep.r_max >= rep.log2_log2_n) {
    rep.regime = Regime::hard;
  } else {
    rep.regime = Regime::intermediate;
  }
  return rep;
}

const char* to_string(Answer a) {
  switch (a) {
    case Answer::yes:
      return "YES";
    case Answer::no:
      return "NO";
    case Answer::unknown:
      return "UNKNOWN";
  }
  return "?";
}

const char* to_string(Mechanism m) {
  switch (m) {
    case Mechanism::trivial_k0:
      return "trivial-k0";
    case Mechanism::threshold_certificate:
      return "threshold-certificate";
    case Mechanism::kernel_exhaustion:
      return "kernel-exhaustion";
    case Mechanism::budget_exceeded:
      return "budget-exceeded";
  }
  return "?";
}

const char* to_string(Regime r) {
  switch (r) {
    case Regime::fpt_xp:
      return "fpt-xp";
    case Regime::hard:
      return "hard";
    case Regime::intermediate:
      return "intermediate";
    case Regime::small_n:
      return "small-n";
  }
  return "?";
}

}  // namespace msaa
