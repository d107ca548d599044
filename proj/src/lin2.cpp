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

#include "msaa/lin2.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "msaa/errors.hpp"

namespace msaa {

mpz_class Lin2System::total_weight() const {
  mpz_class w = 0;
  for (const Lin2Equation& e : equations) w += e.weight;
  return w;
}

std::vector<int> Lin2System::live_vars() const {
  std::set<int> live;
  for (const Lin2Equation& e : equations) {
    live.insert(e.support.begin(), e.support.end());
  }
  return std::vector<int>(live.begin(), live.end());
}

int Lin2System::max_arity() const {
  int r = 0;
  for (const Lin2Equation& e : equations) {
    r = std::max(r, static_cast<int>(e.support.size()));
  }
  return r;
}

mpz_class lin2_excess_twice(const Lin2System& s, const Assignment& a) {
  if (a.num_vars() != s.num_vars) {
    throw std::invalid_argument("assignment covers " +
                                std::to_string(a.num_vars()) +
                                " variables, system has " +
                                std::to_string(s.num_vars));
  }
  mpz_class total = 0;
  for (const Lin2Equation& e : s.equations) {
    int prod = e.rhs;
    for (int v : e.support) prod *= a[v];
    // prod is now rhs * product; +1 means satisfied.
    if (prod > 0) {
      total += e.weight;
    } else {
      total -= e.weight;
    }
  }
  return total;
}

std::pair<Lin2System, ReductionTrace> merge_rule(const Lin2System& s) {
  // Group equation indices by support, first-occurrence order.
  std::map<std::vector<int>, std::size_t> group_of;
  std::vector<std::vector<int>> groups;
  for (int i = 0; i < s.num_equations(); ++i) {
    const auto& sup = s.equations[static_cast<std::size_t>(i)].support;
    auto [it, inserted] = group_of.try_emplace(sup, groups.size());
    if (inserted) groups.emplace_back();
    groups[it->second].push_back(i);
  }

  Lin2System out;
  out.num_vars = s.num_vars;
  TraceStep step;
  step.rule = TraceStep::Rule::merge;
  bool changed = false;
  for (const std::vector<int>& idx : groups) {
    const Lin2Equation& first = s.equations[static_cast<std::size_t>(idx[0])];
    if (idx.size() == 1) {
      out.equations.push_back(first);
      continue;
    }
    changed = true;
    mpz_class net = 0;  // weight on rhs=+1 minus weight on rhs=-1
    for (int i : idx) {
      const Lin2Equation& e = s.equations[static_cast<std::size_t>(i)];
      if (e.rhs > 0) {
        net += e.weight;
      } else {
        net -= e.weight;
      }
    }
    MergeGroup g;
    g.equation_indices = idx;
    g.support = first.support;
    if (net == 0) {
      g.deleted = true;
    } else {
      g.rhs = sgn(net) > 0 ? +1 : -1;
      g.weight = abs(net);
      out.equations.push_back(Lin2Equation{first.support, g.rhs, g.weight});
    }
    step.groups.push_back(std::move(g));
  }

  ReductionTrace trace;
  if (changed) trace.steps.push_back(std::move(step));
  return {std::move(out), std::move(trace)};
}

namespace {

// Bit-packed column vectors over the equations (rows).
struct Gf2Column {
  std::vector<std::uint64_t> bits;
  int pivot = -1;  // lowest set row

  bool any() const {
    for (std::uint64_t w : bits) {
      if (w != 0) return true;
    }
    return false;
  }
  void find_pivot() {
    pivot = -1;
    for (std::size_t w = 0; w < bits.size(); ++w) {
      if (bits[w] != 0) {
        pivot = static_cast<int>(w * 64) + __builtin_ctzll(bits[w]);
        return;
      }
    }
  }
  bool test(int row) const {
    return (bits[static_cast<std::size_t>(row) / 64] >>
            (static_cast<std::size_t>(row) % 64)) &
           1u;
  }
  void operator^=(const Gf2Column& o) {
    for (std::size_t w = 0; w < bits.size(); ++w) bits[w] ^= o.bits[w];
  }
};

}  // namespace

std::vector<int> gf2_column_basis(const Lin2System& s) {
  const std::vector<int> live = s.live_vars();
  const std::size_t words =
      (static_cast<std::size_t>(s.num_equations()) + 63) / 64;
  std::vector<Gf2Column> basis;
  std::vector<int> chosen;
  for (int var : live) {
    Gf2Column col;
    col.bits.assign(words, 0);
    for (int row = 0; row < s.num_equations(); ++row) {
      const auto& sup = s.equations[static_cast<std::size_t>(row)].support;
      if (std::binary_search(sup.begin(), sup.end(), var)) {
        col.bits[static_cast<std::size_t>(row) / 64] |=
            1ull << (static_cast<std::size_t>(row) % 64);
      }
    }
    for (const Gf2Column& b : basis) {
      if (col.test(b.pivot)) col ^= b;
    }
    if (col.any()) {
      col.find_pivot();
      basis.push_back(std::move(col));
      chosen.push_back(var);
    }
  }
  return chosen;
}

std::pair<Lin2System, ReductionTrace> rank_rule(const Lin2System& s) {
  const std::vector<int> live = s.live_vars();
  const std::vector<int> basis = gf2_column_basis(s);
  std::vector<int> deleted;
  std::set_difference(live.begin(), live.end(), basis.begin(), basis.end(),
                      std::back_inserter(deleted));
  if (deleted.empty()) return {s, ReductionTrace{}};

  Lin2System out;
  out.num_vars = s.num_vars;
  out.equations.reserve(s.equations.size());
  for (const Lin2Equation& e : s.equations) {
    Lin2Equation r;
    r.rhs = e.rhs;
    r.weight = e.weight;
    std::set_difference(e.support.begin(), e.support.end(), deleted.begin(),
                        deleted.end(), std::back_inserter(r.support));
    // A support inside the deleted set would mean a nonzero row expressible
    // by zero basis columns; the greedy basis rules that out.
    if (r.support.empty()) {
      throw std::logic_error("rank rule emptied a support");
    }
    out.equations.push_back(std::move(r));
  }

  TraceStep step;
  step.rule = TraceStep::Rule::rank;
  step.basis_vars = basis;
  step.deleted_vars = std::move(deleted);
  ReductionTrace trace;
  trace.steps.push_back(std::move(step));
  return {std::move(out), std::move(trace)};
}

std::pair<Lin2System, ReductionTrace> reduce_fixpoint(const Lin2System& s) {
  Lin2System cur = s;
  ReductionTrace all;
  for (;;) {
    auto [merged, mt] = merge_rule(cur);
    auto [ranked, rt] = rank_rule(merged);
    const bool changed = !mt.empty() || !rt.empty();
    for (TraceStep& st : mt.steps) all.steps.push_back(std::move(st));
    for (TraceStep& st : rt.steps) all.steps.push_back(std::move(st));
    cur = std::move(ranked);
    if (!changed) break;
  }
  return {std::move(cur), std::move(all)};
}

Lin2System replay_trace(const Lin2System& input, const ReductionTrace& trace) {
  Lin2System cur = input;
  for (const TraceStep& step : trace.steps) {
    if (step.rule == TraceStep::Rule::merge) {
      std::map<int, const MergeGroup*> survivor_at;
      std::set<int> consumed;
      for (const MergeGroup& g : step.groups) {
        survivor_at[g.equation_indices[0]] = &g;
        for (std::size_t j = 1; j < g.equation_indices.size(); ++j) {
          consumed.insert(g.equation_indices[j]);
        }
      }
      Lin2System next;
      next.num_vars = cur.num_vars;
      for (int i = 0; i < cur.num_equations(); ++i) {
        if (consumed.count(i)) continue;
        auto it = survivor_at.find(i);
        if (it == survivor_at.end()) {
          next.equations.push_back(cur.equations[static_cast<std::size_t>(i)]);
        } else if (!it->second->deleted) {
          next.equations.push_back(
              Lin2Equation{it->second->support, it->second->rhs,
                           it->second->weight});
        }
      }
      cur = std::move(next);
    } else {
      Lin2System next;
      next.num_vars = cur.num_vars;
      for (const Lin2Equation& e : cur.equations) {
        Lin2Equation r;
        r.rhs = e.rhs;
        r.weight = e.weight;
        std::set_difference(e.support.begin(), e.support.end(),
                            step.deleted_vars.begin(),
                            step.deleted_vars.end(),
                            std::back_inserter(r.support));
        next.equations.push_back(std::move(r));
      }
      cur = std::move(next);
    }
  }
  return cur;
}

bool threshold_yes(const Lin2System& s, const mpz_class& k2) {
  if (k2 < 1) throw std::invalid_argument("threshold parameter must be >= 1");
  // Caller contract: the system is stable under both rules. Merge-stable
  // means pairwise-distinct supports; rank-stable means full column rank.
  std::set<std::vector<int>> supports;
  for (const Lin2Equation& e : s.equations) {
    if (!supports.insert(e.support).second) {
      throw std::logic_error("threshold_yes: system not merge-rule stable");
    }
  }
  const std::size_t live = s.live_vars().size();
  if (gf2_column_basis(s).size() != live) {
    throw std::logic_error("threshold_yes: system not rank-rule stable");
  }
  const mpz_class lhs = static_cast<long>(live);
  const mpz_class rhs = (2 * k2 - 1) * s.max_arity() + 1;
  return lhs >= rhs;
}

Lin2System parse_lin2(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_header = false;
  long long n = 0, m = 0;
  Lin2System s;
  long long eq_count = 0;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank
    if (first[0] == 'c') continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (!have_header) {
      std::string kind;
      if (first != "p" || !(ls >> kind) || kind != "lin2" || !(ls >> n >> m) ||
          n < 0 || m < 0) {
        throw ParseError(where +
                         "malformed header: expected 'p lin2 <vars> <eqs>'");
      }
      have_header = true;
      s.num_vars = static_cast<int>(n);
      continue;
    }
    Lin2Equation e;
    // "<weight> <rhs> <var>... 0", weight is an arbitrary-precision decimal.
    try {
      e.weight = mpz_class(first);
    } catch (const std::invalid_argument&) {
      throw ParseError(where + "malformed weight '" + first + "'");
    }
    if (e.weight < 1) {
      throw ParseError(where + "weight must be positive, got " + first);
    }
    long long rhs = 0;
    if (!(ls >> rhs) || (rhs != 1 && rhs != -1)) {
      throw ParseError(where + "right-hand side must be 1 or -1");
    }
    e.rhs = static_cast<int>(rhs);
    long long v = 0;
    bool terminated = false;
    while (ls >> v) {
      if (v == 0) {
        terminated = true;
        break;
      }
      if (v < 1 || v > n) {
        throw ParseError(where + "variable " + std::to_string(v) +
                         " out of range 1.." + std::to_string(n));
      }
      e.support.push_back(static_cast<int>(v));
    }
    if (!terminated) throw ParseError(where + "missing terminating 0");
    if (e.support.empty()) throw ParseError(where + "empty support");
    std::sort(e.support.begin(), e.support.end());
    if (std::adjacent_find(e.support.begin(), e.support.end()) !=
        e.support.end()) {
      throw ParseError(where + "duplicate variable in support");
    }
    s.equations.push_back(std::move(e));
    ++eq_count;
  }
  if (!have_header) throw ParseError("missing 'p lin2' header");
  if (eq_count != m) {
    throw ParseError("equation count mismatch: header declares " +
                     std::to_string(m) + ", found " + std::to_string(eq_count));
  }
  return s;
}

std::string serialize_lin2(const Lin2System& s) {
  std::ostringstream out;
  out << "p lin2 " << s.num_vars << ' ' << s.equations.size() << '\n';
  for (const Lin2Equation& e : s.equations) {
    out << e.weight.get_str() << ' ' << e.rhs;
    for (int v : e.support) out << ' ' << v;
    out << " 0\n";
  }
  return out.str();
}

}  // namespace msaa
