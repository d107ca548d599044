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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "msaa/errors.hpp"
#include "msaa/generator.hpp"
#include "msaa/reduction.hpp"
#include "msaa/solver.hpp"

using json = nlohmann::ordered_json;

namespace {

// Exit-code contract: 0 YES/success, 1 NO, 2 input error, 3 budget/unknown.
constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

constexpr std::uint64_t kDefaultSeed = 1;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw msaa::ParseError("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

msaa::CnfFormula load_cnf(const std::string& path, bool lenient) {
  std::vector<std::string> diags;
  const msaa::CnfFormula f = msaa::parse_dimacs(
      read_input(path), {.lenient_duplicate_literals = lenient}, &diags);
  for (const std::string& d : diags) std::cerr << "warning: " << d << '\n';
  return f;
}

std::string dyadic_field(const msaa::DyadicRational& q) {
  return q.decimal_str() + " (" + q.fraction_str() + ")";
}

json dyadic_json(const msaa::DyadicRational& q) {
  return json{{"decimal", q.decimal_str()}, {"fraction", q.fraction_str()}};
}

std::string witness_line(const msaa::Assignment& a) {
  std::string line = "v";
  for (int v = 1; v <= a.num_vars(); ++v) {
    line += ' ';
    line += std::to_string(a.is_true(v) ? v : -v);
  }
  line += " 0";
  return line;
}

json witness_json(const msaa::Assignment& a) {
  json arr = json::array();
  for (int v = 1; v <= a.num_vars(); ++v) arr.push_back(a.is_true(v) ? v : -v);
  return arr;
}

std::string real_field(double x) {
  if (std::isnan(x)) return "n/a";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

json real_json(double x) {
  if (std::isnan(x)) return nullptr;
  return x;
}

void emit(const json& doc, bool as_json, const std::string& text) {
  if (as_json) {
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

struct CommonOpts {
  std::string input = "-";
  bool json_mode = false;
  bool lenient = false;
};

void add_common(CLI::App* cmd, CommonOpts* o) {
  cmd->add_option("input", o->input, "DIMACS CNF file, or - for stdin");
  cmd->add_flag("--json", o->json_mode, "emit one JSON document");
  cmd->add_flag("--lenient", o->lenient,
                "drop duplicate literals inside clauses with a warning");
}

int cmd_stats(const CommonOpts& o) {
  const msaa::CnfFormula f = load_cnf(o.input, o.lenient);
  const msaa::DyadicRational avg = msaa::asat(f);
  const msaa::RegimeReport rep = msaa::classify_regime(f);
  std::ostringstream text;
  text << "n = " << f.num_vars << '\n'
       << "m = " << f.num_clauses() << '\n'
       << "r_max = " << rep.r_max << '\n'
       << "asat = " << dyadic_field(avg) << '\n'
       << "regime = " << to_string(rep.regime) << '\n'
       << "ceil_log2_n = " << rep.ceil_log2_n << '\n'
       << "log2_log2_n = " << real_field(rep.log2_log2_n) << '\n'
       << "fpt_bound = " << real_field(rep.fpt_bound) << '\n';
  const json doc{{"command", "stats"},
                 {"n", f.num_vars},
                 {"m", f.num_clauses()},
                 {"r_max", rep.r_max},
                 {"asat", dyadic_json(avg)},
                 {"regime", to_string(rep.regime)},
                 {"ceil_log2_n", rep.ceil_log2_n},
                 {"log2_log2_n", real_json(rep.log2_log2_n)},
                 {"fpt_bound", real_json(rep.fpt_bound)}};
  emit(doc, o.json_mode, text.str());
  return kExitYes;
}

int cmd_solve(const CommonOpts& o) {
  const msaa::CnfFormula f = load_cnf(o.input, o.lenient);
  const msaa::Assignment a = msaa::derandomized_assignment(f);
  const long long satisfied = msaa::count_satisfied(f, a);
  const msaa::DyadicRational avg = msaa::asat(f);
  const msaa::DyadicRational gain = msaa::excess(f, a);
  std::ostringstream text;
  text << "n = " << f.num_vars << '\n'
       << "m = " << f.num_clauses() << '\n'
       << "asat = " << dyadic_field(avg) << '\n'
       << "satisfied = " << satisfied << '\n'
       << "excess = " << dyadic_field(gain) << '\n'
       << witness_line(a) << '\n';
  const json doc{{"command", "solve"},
                 {"n", f.num_vars},
                 {"m", f.num_clauses()},
                 {"asat", dyadic_json(avg)},
                 {"satisfied", satisfied},
                 {"excess", dyadic_json(gain)},
                 {"assignment", witness_json(a)}};
  emit(doc, o.json_mode, text.str());
  return kExitYes;
}

int cmd_decide(const CommonOpts& o, long long k, int budget, int threads) {
  const msaa::CnfFormula f = load_cnf(o.input, o.lenient);
  const msaa::DecisionOutcome out = msaa::decide_above_average(
      f, k, {.budget_bits = budget, .threads = threads});
  std::ostringstream text;
  text << "k = " << k << '\n'
       << "r_used = " << out.r_used << '\n'
       << "k2 = " << out.k2.get_str() << '\n'
       << "kernel_vars = " << out.kernel_vars << '\n'
       << "answer = " << to_string(out.answer) << '\n'
       << "mechanism = " << to_string(out.mechanism) << '\n';
  json doc{{"command", "decide"},
           {"k", k},
           {"r_used", out.r_used},
           {"k2", out.k2.get_str()},
           {"kernel_vars", out.kernel_vars},
           {"answer", to_string(out.answer)},
           {"mechanism", to_string(out.mechanism)}};
  if (out.twice_excess_max) {
    text << "twice_excess_max = " << out.twice_excess_max->get_str() << '\n';
    doc["twice_excess_max"] = out.twice_excess_max->get_str();
  }
  if (out.witness) {
    text << "witness_scope = " << (out.witness_kernel_only ? "kernel" : "full")
         << '\n'
         << witness_line(*out.witness) << '\n';
    doc["witness_scope"] = out.witness_kernel_only ? "kernel" : "full";
    doc["witness"] = witness_json(*out.witness);
  }
  emit(doc, o.json_mode, text.str());
  switch (out.answer) {
    case msaa::Answer::yes:
      return kExitYes;
    case msaa::Answer::no:
      return kExitNo;
    case msaa::Answer::unknown:
      return kExitBudget;
  }
  return kExitInputError;
}

int cmd_reduce(const CommonOpts& o, long long k, bool kernel) {
  const msaa::CnfFormula f = load_cnf(o.input, o.lenient);
  const msaa::CnfToLin2 red = msaa::cnf_to_lin2(f, k);
  std::ostringstream text;
  text << "c cnf->lin2: n=" << f.num_vars << " m=" << f.num_clauses()
       << " r_used=" << red.r_used << '\n'
       << "c k2 = k * 2^(r_used-1); k=" << k << " -> k2=" << red.k2.get_str()
       << '\n';
  json doc{{"command", "reduce"},
           {"n", f.num_vars},
           {"m", f.num_clauses()},
           {"r_used", red.r_used},
           {"k", k},
           {"k2", red.k2.get_str()},
           {"system", msaa::serialize_lin2(red.system)}};
  if (kernel) {
    const auto [fixed, trace] = msaa::reduce_fixpoint(red.system);
    int merges = 0, ranks = 0;
    std::size_t merged_eqs = 0, deleted_vars = 0;
    for (const msaa::TraceStep& st : trace.steps) {
      if (st.rule == msaa::TraceStep::Rule::merge) {
        ++merges;
        for (const msaa::MergeGroup& g : st.groups) {
          merged_eqs += g.equation_indices.size();
        }
      } else {
        ++ranks;
        deleted_vars += st.deleted_vars.size();
      }
    }
    text << "c kernel: equations=" << fixed.num_equations()
         << " live_vars=" << fixed.live_vars().size() << '\n'
         << "c trace: steps=" << trace.steps.size() << " merge=" << merges
         << " rank=" << ranks << " merged_eqs=" << merged_eqs
         << " deleted_vars=" << deleted_vars << '\n'
         << msaa::serialize_lin2(fixed);
    doc["kernel"] = msaa::serialize_lin2(fixed);
    doc["trace"] = json{{"steps", trace.steps.size()},
                        {"merge_steps", merges},
                        {"rank_steps", ranks},
                        {"merged_equations", merged_eqs},
                        {"deleted_vars", deleted_vars}};
  } else {
    text << msaa::serialize_lin2(red.system);
  }
  emit(doc, o.json_mode, text.str());
  return kExitYes;
}

int cmd_oracle(const CommonOpts& o, long long k, bool has_k, int budget,
               int threads) {
  const msaa::CnfFormula f = load_cnf(o.input, o.lenient);
  const msaa::MaxSatResult best =
      msaa::oracle_max_sat(f, {.budget_bits = budget, .threads = threads});
  const msaa::DyadicRational avg = msaa::asat(f);
  std::ostringstream text;
  text << "max_satisfied = " << best.max_satisfied << '\n'
       << "asat = " << dyadic_field(avg) << '\n'
       << witness_line(best.witness) << '\n';
  json doc{{"command", "oracle"},
           {"max_satisfied", best.max_satisfied},
           {"asat", dyadic_json(avg)},
           {"witness", witness_json(best.witness)}};
  bool yes = true;
  if (has_k) {
    yes = msaa::DyadicRational(best.max_satisfied) >=
          avg + msaa::DyadicRational(k);
    text << "k = " << k << '\n' << "answer = " << (yes ? "YES" : "NO") << '\n';
    doc["k"] = k;
    doc["answer"] = yes ? "YES" : "NO";
  }
  emit(doc, o.json_mode, text.str());
  return yes ? kExitYes : kExitNo;
}

int cmd_gen_theorem1(const CommonOpts& o, int c) {
  const msaa::CnfFormula f = load_cnf(o.input, o.lenient);
  const msaa::Theorem1Result r = msaa::gen_theorem1(f, c);
  const json meta{
      {"n_input", r.meta.n_input},
      {"m_input", r.meta.m_input},
      {"c", r.meta.c},
      {"n_prime", r.meta.n_prime},
      {"clause_len", r.meta.clause_len},
      {"m_prime", r.meta.m_prime},
      {"c1_size", r.meta.c1_size},
      {"c2_size", r.meta.c2_size},
      {"c3_size", r.meta.c3_size},
      {"x_block", json::array({1, r.meta.n_input})},
      {"y_block", json::array({r.meta.n_input + 1, r.meta.n_prime})}};
  std::ostringstream text;
  text << "c theorem1 meta " << meta.dump() << '\n'
       << msaa::serialize_dimacs(r.formula);
  const json doc{{"command", "gen"},
                 {"kind", "theorem1"},
                 {"meta", meta},
                 {"dimacs", msaa::serialize_dimacs(r.formula)}};
  emit(doc, o.json_mode, text.str());
  return kExitYes;
}

int cmd_gen_pad(const CommonOpts& o, int extra) {
  const msaa::CnfFormula f = load_cnf(o.input, o.lenient);
  const msaa::CnfFormula g = msaa::pad_contradicting_units(f, extra);
  const json doc{{"command", "gen"},
                 {"kind", "pad-units"},
                 {"extra_vars", extra},
                 {"dimacs", msaa::serialize_dimacs(g)}};
  emit(doc, o.json_mode, msaa::serialize_dimacs(g));
  return kExitYes;
}

int cmd_gen_random_cnf(bool json_mode, int n, int m, int width,
                       std::uint64_t seed) {
  const msaa::CnfFormula f = msaa::gen_random_cnf(n, m, width, seed);
  const json doc{{"command", "gen"},
                 {"kind", "random-cnf"},
                 {"seed", seed},
                 {"dimacs", msaa::serialize_dimacs(f)}};
  emit(doc, json_mode, msaa::serialize_dimacs(f));
  return kExitYes;
}

int cmd_gen_random_lin2(bool json_mode, int n, int m, int arity,
                        long long max_weight, std::uint64_t seed) {
  const msaa::Lin2System s =
      msaa::gen_random_lin2(n, m, arity, max_weight, seed);
  const json doc{{"command", "gen"},
                 {"kind", "random-lin2"},
                 {"seed", seed},
                 {"lin2", msaa::serialize_lin2(s)}};
  emit(doc, json_mode, msaa::serialize_lin2(s));
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MaxSat against its average: exact asat, derandomized "
               "assignments, weighted-XOR kernelization, above-average "
               "decisions"};
  app.require_subcommand(1);

  CommonOpts stats_o, solve_o, decide_o, reduce_o, oracle_o, t1_o, pad_o;
  long long k_decide = 0, k_reduce = 1, k_oracle = 0;
  int budget_decide = 24, budget_oracle = 24;
  int threads_decide = 0, threads_oracle = 0;
  bool kernel_flag = false;

  CLI::App* stats = app.add_subcommand(
      "stats", "formula sizes, exact asat and the width regime");
  add_common(stats, &stats_o);

  CLI::App* solve = app.add_subcommand(
      "solve", "derandomized assignment meeting the average");
  add_common(solve, &solve_o);

  CLI::App* decide =
      app.add_subcommand("decide", "can asat(F)+k clauses be satisfied?");
  add_common(decide, &decide_o);
  decide->add_option("-k", k_decide, "above-average parameter")->required();
  decide->add_option("--budget", budget_decide,
                     "largest kernel exhausted, in bits");
  decide->add_option("--threads", threads_decide, "search threads (0 = all)");

  CLI::App* reduce = app.add_subcommand(
      "reduce", "emit the equivalent weighted XOR system");
  add_common(reduce, &reduce_o);
  reduce->add_option("-k", k_reduce, "parameter used for the k2 conversion");
  reduce->add_flag("--kernel", kernel_flag,
                   "emit the merge+rank fixpoint kernel with a trace summary");

  CLI::App* oracle = app.add_subcommand(
      "oracle", "exhaustive ground truth (small n only)");
  add_common(oracle, &oracle_o);
  CLI::Option* k_opt = oracle->add_option(
      "-k", k_oracle, "also answer the above-average question");
  oracle->add_option("--budget", budget_oracle, "exhaustion budget, in bits");
  oracle->add_option("--threads", threads_oracle, "search threads (0 = all)");

  CLI::App* gen = app.add_subcommand("gen", "instance generators");
  gen->require_subcommand(1);

  CLI::App* t1 = gen->add_subcommand(
      "theorem1",
      "embed a width-3 CNF into an instance solvable above average iff the "
      "input is satisfiable");
  add_common(t1, &t1_o);
  int density = 2;
  t1->add_option("-c,--density", density, "density bound, needs m <= c*n");

  CLI::App* pad = gen->add_subcommand(
      "pad-units", "append contradicting unit-clause pairs on fresh variables");
  add_common(pad, &pad_o);
  int extra = 1;
  pad->add_option("--extra", extra, "number of fresh variables");

  bool rcnf_json = false, rlin_json = false;
  int g_n = 10, g_m = 20, g_width = 3, g_arity = 3;
  long long g_weight = 5;
  std::uint64_t g_seed = kDefaultSeed;

  CLI::App* rcnf = gen->add_subcommand("random-cnf", "seeded random CNF");
  rcnf->add_option("-n", g_n, "variables");
  rcnf->add_option("-m", g_m, "clauses");
  rcnf->add_option("--width", g_width, "maximum clause width");
  rcnf->add_option("--seed", g_seed, "generator seed");
  rcnf->add_flag("--json", rcnf_json, "emit one JSON document");

  CLI::App* rlin =
      gen->add_subcommand("random-lin2", "seeded random XOR system");
  rlin->add_option("-n", g_n, "variables");
  rlin->add_option("-m", g_m, "equations");
  rlin->add_option("--arity", g_arity, "maximum support size");
  rlin->add_option("--max-weight", g_weight, "maximum weight");
  rlin->add_option("--seed", g_seed, "generator seed");
  rlin->add_flag("--json", rlin_json, "emit one JSON document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help/usage text
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (*stats) return cmd_stats(stats_o);
    if (*solve) return cmd_solve(solve_o);
    if (*decide)
      return cmd_decide(decide_o, k_decide, budget_decide, threads_decide);
    if (*reduce) return cmd_reduce(reduce_o, k_reduce, kernel_flag);
    if (*oracle)
      return cmd_oracle(oracle_o, k_oracle, !k_opt->empty(), budget_oracle,
                        threads_oracle);
    if (*t1) return cmd_gen_theorem1(t1_o, density);
    if (*pad) return cmd_gen_pad(pad_o, extra);
    if (*rcnf) return cmd_gen_random_cnf(rcnf_json, g_n, g_m, g_width, g_seed);
    if (*rlin)
      return cmd_gen_random_lin2(rlin_json, g_n, g_m, g_arity, g_weight,
                                 g_seed);
  } catch (const msaa::BudgetError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
