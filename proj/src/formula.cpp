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

#include "msaa/formula.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <unordered_set>

#include "msaa/errors.hpp"

namespace msaa {

namespace {

constexpr int kMaxCompleteSetVars = 26;  // 2^t clauses; keep desk-scale

// Strips comment lines and splits the rest into whitespace-separated tokens.
std::vector<std::string_view> tokenize_dimacs(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string_view::npos) continue;
    if (line[start] == 'c') continue;
    while (start < line.size()) {
      std::size_t end = line.find_first_of(" \t\r", start);
      if (end == std::string_view::npos) end = line.size();
      if (end > start) tokens.push_back(line.substr(start, end - start));
      start = line.find_first_not_of(" \t\r", end);
      if (start == std::string_view::npos) break;
    }
  }
  return tokens;
}

long long parse_int_token(std::string_view tok, const char* what) {
  long long value = 0;
  const auto [ptr, ec] =
      std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(std::string("expected ") + what + ", got '" +
                     std::string(tok) + "'");
  }
  return value;
}

}  // namespace

int CnfFormula::max_clause_width() const {
  int w = 0;
  for (const Clause& c : clauses) w = std::max(w, c.width());
  return w;
}

CnfFormula parse_dimacs(std::string_view text, const ParseOptions& opts,
                        std::vector<std::string>* diagnostics) {
  const std::vector<std::string_view> tokens = tokenize_dimacs(text);
  std::size_t i = 0;
  if (tokens.size() < 4 || tokens[0] != "p" || tokens[1] != "cnf") {
    throw ParseError("malformed header: expected 'p cnf <vars> <clauses>'");
  }
  const long long n = parse_int_token(tokens[2], "variable count");
  const long long m = parse_int_token(tokens[3], "clause count");
  if (n < 0 || m < 0 || n > INT32_MAX || m > INT32_MAX) {
    throw ParseError("malformed header: counts out of range");
  }
  i = 4;

  CnfFormula f;
  f.num_vars = static_cast<int>(n);
  f.clauses.reserve(static_cast<std::size_t>(m));

  Clause current;
  std::unordered_set<int> seen_vars;
  bool in_clause = false;
  while (i < tokens.size()) {
    const long long lit = parse_int_token(tokens[i], "literal");
    ++i;
    if (lit == 0) {
      if (current.lits.empty()) {
        throw ParseError("empty clause at clause " +
                         std::to_string(f.clauses.size() + 1));
      }
      f.clauses.push_back(std::move(current));
      current = Clause{};
      seen_vars.clear();
      in_clause = false;
      continue;
    }
    in_clause = true;
    const long long var = lit < 0 ? -lit : lit;
    if (var > n) {
      throw ParseError("literal " + std::to_string(lit) +
                       " exceeds declared variable count " + std::to_string(n));
    }
    const Literal l = Literal::from_dimacs(static_cast<int>(lit));
    if (seen_vars.count(l.var)) {
      const bool tautology =
          std::any_of(current.lits.begin(), current.lits.end(),
                      [&](const Literal& p) {
                        return p.var == l.var && p.negated != l.negated;
                      });
      if (tautology) {
        throw ParseError("tautological clause: variable " +
                         std::to_string(l.var) + " appears with both signs");
      }
      if (!opts.lenient_duplicate_literals) {
        throw ParseError("duplicate literal " + std::to_string(lit) +
                         " in clause " + std::to_string(f.clauses.size() + 1));
      }
      if (diagnostics) {
        diagnostics->push_back("clause " +
                               std::to_string(f.clauses.size() + 1) +
                               ": dropped duplicate literal " +
                               std::to_string(lit));
      }
      continue;
    }
    seen_vars.insert(l.var);
    current.lits.push_back(l);
  }
  if (in_clause) throw ParseError("unterminated clause at end of input");
  if (f.clauses.size() != static_cast<std::size_t>(m)) {
    throw ParseError("clause count mismatch: header declares " +
                     std::to_string(m) + ", found " +
                     std::to_string(f.clauses.size()));
  }
  return f;
}

std::string serialize_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const Clause& c : f.clauses) {
    for (const Literal& l : c.lits) out << l.dimacs() << ' ';
    out << "0\n";
  }
  return out.str();
}

DyadicRational asat(const CnfFormula& f) {
  DyadicRational total;
  for (const Clause& c : f.clauses) {
    total += DyadicRational::one_minus_pow2(static_cast<unsigned>(c.width()));
  }
  return total;
}

long long count_satisfied(const CnfFormula& f, const Assignment& a) {
  if (a.num_vars() != f.num_vars) {
    throw std::invalid_argument("assignment covers " +
                                std::to_string(a.num_vars()) +
                                " variables, formula has " +
                                std::to_string(f.num_vars));
  }
  long long count = 0;
  for (const Clause& c : f.clauses) {
    for (const Literal& l : c.lits) {
      if (l.satisfied_by(a[l.var])) {
        ++count;
        break;
      }
    }
  }
  return count;
}

DyadicRational excess(const CnfFormula& f, const Assignment& a) {
  return DyadicRational(count_satisfied(f, a)) - asat(f);
}

CnfFormula complete_set(const std::vector<int>& vars) {
  const int t = static_cast<int>(vars.size());
  if (t < 1) throw std::invalid_argument("complete_set needs >= 1 variable");
  if (t > kMaxCompleteSetVars) {
    throw BudgetError("complete_set on " + std::to_string(t) +
                      " variables would emit 2^" + std::to_string(t) +
                      " clauses");
  }
  std::unordered_set<int> distinct;
  int max_var = 0;
  for (int v : vars) {
    if (v < 1) throw std::invalid_argument("variable indices must be >= 1");
    if (!distinct.insert(v).second) {
      throw std::invalid_argument("duplicate variable index " +
                                  std::to_string(v));
    }
    max_var = std::max(max_var, v);
  }

  CnfFormula f;
  f.num_vars = max_var;
  const std::uint64_t patterns = 1ull << t;
  f.clauses.reserve(patterns);
  for (std::uint64_t code = 0; code < patterns; ++code) {
    Clause c;
    c.lits.reserve(vars.size());
    for (int j = 0; j < t; ++j) {
      const bool neg = (code >> (t - 1 - j)) & 1u;
      c.lits.push_back(Literal{vars[static_cast<std::size_t>(j)], neg});
    }
    f.clauses.push_back(std::move(c));
  }
  return f;
}

}  // namespace msaa
