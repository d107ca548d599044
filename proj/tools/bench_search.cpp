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

// Times the OpenMP assignment-space scans against the serial references and
// checks that both return identical results.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "msaa/generator.hpp"
#include "msaa/search.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

template <typename F>
double timed(const F& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return seconds_since(start);
}

}  // namespace

int main(int argc, char** argv) {
  int n = 22;
  if (argc > 1) n = std::atoi(argv[1]);
  if (n < 4 || n > 28) {
    std::fprintf(stderr, "usage: %s [n between 4 and 28]\n", argv[0]);
    return 2;
  }

  const msaa::CnfFormula f = msaa::gen_random_cnf(n, 3 * n, 3, 1);
  const msaa::Lin2System s = msaa::gen_random_lin2(n, 2 * n, 3, 5, 2);
  const msaa::SearchOptions par{.budget_bits = n, .threads = 0};

  std::printf("scan of 2^%d assignments\n", n);

  msaa::MaxSatResult sat_serial, sat_par;
  const double t1 = timed([&] { sat_serial = msaa::oracle_max_sat_serial(f, n); });
  const double t2 = timed([&] { sat_par = msaa::oracle_max_sat(f, par); });
  const bool sat_ok = sat_serial.max_satisfied == sat_par.max_satisfied &&
                      sat_serial.witness == sat_par.witness;
  std::printf("max-sat   (m=%3d): serial %8.3fs  parallel %8.3fs  speedup %5.2fx  %s\n",
              f.num_clauses(), t1, t2, t1 / t2, sat_ok ? "match" : "MISMATCH");

  msaa::MaxExcessResult exc_serial, exc_par;
  const double t3 =
      timed([&] { exc_serial = msaa::brute_force_max_excess_serial(s, n); });
  const double t4 = timed([&] { exc_par = msaa::brute_force_max_excess(s, par); });
  const bool exc_ok = exc_serial.twice_excess == exc_par.twice_excess &&
                      exc_serial.witness == exc_par.witness;
  std::printf("max-excess(m=%3d): serial %8.3fs  parallel %8.3fs  speedup %5.2fx  %s\n",
              s.num_equations(), t3, t4, t3 / t4, exc_ok ? "match" : "MISMATCH");

  return sat_ok && exc_ok ? 0 : 1;
}
