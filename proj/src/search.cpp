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

#include "msaa/search.hpp"

#include <bit>
#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "msaa/errors.hpp"

namespace msaa {

namespace {

constexpr int kMaxScanBits = 62;

int default_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void check_budget(int nbits, int budget_bits, const char* what) {
  if (nbits > budget_bits || nbits > kMaxScanBits) {
    throw BudgetError(std::string(what) + ": " + std::to_string(nbits) +
                      " variables exceed the exhaustive-search budget of " +
                      std::to_string(std::min(budget_bits, kMaxScanBits)));
  }
}

template <typename Value>
struct ScanBest {
  Value value{};
  std::uint64_t code = 0;
};

// Ascending scan keeps the first occurrence of the maximum, i.e. the
// smallest code in the range.
template <typename Value, typename Eval>
ScanBest<Value> scan_range(std::uint64_t lo, std::uint64_t hi,
                           const Eval& eval) {
  ScanBest<Value> best{eval(lo), lo};
  for (std::uint64_t code = lo + 1; code < hi; ++code) {
    Value v = eval(code);
    if (v > best.value) {
      best.value = std::move(v);
      best.code = code;
    }
  }
  return best;
}

// Chunked parallel scan. Chunk results are merged in ascending chunk order
// with strict improvement, so the global winner is the smallest maximizing
// code regardless of thread count or chunk boundaries.
template <typename Value, typename Eval>
ScanBest<Value> scan_all(std::uint64_t total, int threads, const Eval& eval) {
  const int t = threads > 0 ? threads : default_threads();
  if (t <= 1 || total < 1024) return scan_range<Value>(0, total, eval);
  const std::uint64_t nchunks =
      std::min<std::uint64_t>(total, static_cast<std::uint64_t>(t) * 8);
  std::vector<ScanBest<Value>> bests(nchunks);
#ifdef _OPENMP
#pragma omp parallel for num_threads(t) schedule(dynamic)
#endif
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(nchunks); ++i) {
    const std::uint64_t lo =
        total / nchunks * static_cast<std::uint64_t>(i) +
        std::min<std::uint64_t>(static_cast<std::uint64_t>(i), total % nchunks);
    const std::uint64_t hi =
        lo + total / nchunks +
        (static_cast<std::uint64_t>(i) < total % nchunks ? 1 : 0);
    bests[static_cast<std::size_t>(i)] = scan_range<Value>(lo, hi, eval);
  }
  ScanBest<Value> best = std::move(bests[0]);
  for (std::size_t i = 1; i < bests.size(); ++i) {
    if (bests[i].value > best.value) best = std::move(bests[i]);
  }
  return best;
}

struct ClauseMasks {
  std::uint64_t pos = 0;
  std::uint64_t neg = 0;
};

// Variable i maps to bit (n - i): variable 1 is the most significant bit.
std::vector<ClauseMasks> cnf_masks(const CnfFormula& f) {
  std::vector<ClauseMasks> masks;
  masks.reserve(f.clauses.size());
  const int n = f.num_vars;
  for (const Clause& c : f.clauses) {
    ClauseMasks m;
    for (const Literal& l : c.lits) {
      const std::uint64_t bit = 1ull << (n - l.var);
      if (l.negated) {
        m.neg |= bit;
      } else {
        m.pos |= bit;
      }
    }
    masks.push_back(m);
  }
  return masks;
}

Assignment cnf_witness(const CnfFormula& f, std::uint64_t code) {
  Assignment a(f.num_vars, +1);
  for (int v = 1; v <= f.num_vars; ++v) {
    if ((code >> (f.num_vars - v)) & 1u) a.set(v, -1);
  }
  return a;
}

long long count_from_masks(const std::vector<ClauseMasks>& masks,
                           std::uint64_t full, std::uint64_t code) {
  long long count = 0;
  const std::uint64_t off = ~code & full;
  for (const ClauseMasks& m : masks) {
    count += ((m.pos & code) | (m.neg & off)) != 0;
  }
  return count;
}

struct Lin2Scan {
  std::vector<int> live;
  std::vector<std::uint64_t> masks;     // per equation, over live bit layout
  std::vector<long long> coeffs_i64;    // fast path
  std::vector<mpz_class> coeffs_mpz;    // exact path
  bool fits_i64 = false;
};

Lin2Scan lin2_prepare(const Lin2System& s, int budget_bits) {
  Lin2Scan prep;
  prep.live = s.live_vars();
  const int nbits = static_cast<int>(prep.live.size());
  check_budget(nbits, budget_bits, "brute_force_max_excess");
  std::vector<int> bit_of(static_cast<std::size_t>(s.num_vars) + 1, -1);
  for (int j = 0; j < nbits; ++j) {
    bit_of[static_cast<std::size_t>(prep.live[static_cast<std::size_t>(j)])] =
        nbits - 1 - j;
  }
  mpz_class magnitude = 0;
  for (const Lin2Equation& e : s.equations) {
    std::uint64_t mask = 0;
    for (int v : e.support) {
      mask |= 1ull << bit_of[static_cast<std::size_t>(v)];
    }
    prep.masks.push_back(mask);
    prep.coeffs_mpz.push_back(e.coefficient());
    magnitude += e.weight;
  }
  // The running sum is bounded by the total weight; stay on 64-bit arithmetic
  // whenever that bound fits comfortably.
  prep.fits_i64 = magnitude < (mpz_class(1) << 62);
  if (prep.fits_i64) {
    for (const mpz_class& c : prep.coeffs_mpz) {
      prep.coeffs_i64.push_back(mpz_get_si(c.get_mpz_t()));
    }
  }
  return prep;
}

Assignment lin2_witness(const Lin2System& s, const std::vector<int>& live,
                        std::uint64_t code) {
  Assignment a(s.num_vars, +1);
  const int nbits = static_cast<int>(live.size());
  for (int j = 0; j < nbits; ++j) {
    if ((code >> (nbits - 1 - j)) & 1u) {
      a.set(live[static_cast<std::size_t>(j)], -1);
    }
  }
  return a;
}

}  // namespace

MaxSatResult oracle_max_sat_serial(const CnfFormula& f, int budget_bits) {
  check_budget(f.num_vars, budget_bits, "oracle_max_sat");
  const auto masks = cnf_masks(f);
  const std::uint64_t full =
      f.num_vars == 0 ? 0 : (~0ull >> (64 - f.num_vars));
  const auto best = scan_range<long long>(
      0, 1ull << f.num_vars,
      [&](std::uint64_t code) { return count_from_masks(masks, full, code); });
  return MaxSatResult{best.value, cnf_witness(f, best.code)};
}

MaxSatResult oracle_max_sat(const CnfFormula& f, const SearchOptions& opts) {
  check_budget(f.num_vars, opts.budget_bits, "oracle_max_sat");
  const auto masks = cnf_masks(f);
  const std::uint64_t full =
      f.num_vars == 0 ? 0 : (~0ull >> (64 - f.num_vars));
  const auto best = scan_all<long long>(
      1ull << f.num_vars, opts.threads,
      [&](std::uint64_t code) { return count_from_masks(masks, full, code); });
  return MaxSatResult{best.value, cnf_witness(f, best.code)};
}

MaxExcessResult brute_force_max_excess_serial(const Lin2System& s,
                                              int budget_bits) {
  const Lin2Scan prep = lin2_prepare(s, budget_bits);
  const int nbits = static_cast<int>(prep.live.size());
  if (prep.fits_i64) {
    const auto best = scan_range<long long>(
        0, 1ull << nbits, [&](std::uint64_t code) {
          long long v = 0;
          for (std::size_t j = 0; j < prep.masks.size(); ++j) {
            const long long c = prep.coeffs_i64[j];
            v += (std::popcount(prep.masks[j] & code) & 1) ? -c : c;
          }
          return v;
        });
    return MaxExcessResult{mpz_class(static_cast<long>(best.value)),
                           lin2_witness(s, prep.live, best.code)};
  }
  const auto best =
      scan_range<mpz_class>(0, 1ull << nbits, [&](std::uint64_t code) {
        mpz_class v = 0;
        for (std::size_t j = 0; j < prep.masks.size(); ++j) {
          if (std::popcount(prep.masks[j] & code) & 1) {
            v -= prep.coeffs_mpz[j];
          } else {
            v += prep.coeffs_mpz[j];
          }
        }
        return v;
      });
  return MaxExcessResult{best.value, lin2_witness(s, prep.live, best.code)};
}

MaxExcessResult brute_force_max_excess(const Lin2System& s,
                                       const SearchOptions& opts) {
  const Lin2Scan prep = lin2_prepare(s, opts.budget_bits);
  const int nbits = static_cast<int>(prep.live.size());
  if (prep.fits_i64) {
    const auto best = scan_all<long long>(
        1ull << nbits, opts.threads, [&](std::uint64_t code) {
          long long v = 0;
          for (std::size_t j = 0; j < prep.masks.size(); ++j) {
            const long long c = prep.coeffs_i64[j];
            v += (std::popcount(prep.masks[j] & code) & 1) ? -c : c;
          }
          return v;
        });
    return MaxExcessResult{mpz_class(static_cast<long>(best.value)),
                           lin2_witness(s, prep.live, best.code)};
  }
  const auto best =
      scan_all<mpz_class>(1ull << nbits, opts.threads, [&](std::uint64_t code) {
        mpz_class v = 0;
        for (std::size_t j = 0; j < prep.masks.size(); ++j) {
          if (std::popcount(prep.masks[j] & code) & 1) {
            v -= prep.coeffs_mpz[j];
          } else {
            v += prep.coeffs_mpz[j];
          }
        }
        return v;
      });
  return MaxExcessResult{best.value, lin2_witness(s, prep.live, best.code)};
}

}  // namespace msaa
