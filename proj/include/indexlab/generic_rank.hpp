#pragma once

#include <cstdint>

#include "indexlab/poly.hpp"

namespace indexlab {

enum class RankMode { symbolic, montecarlo };

// The maximal rank of a polynomial matrix over the rational function field
// is attained on a Zariski-open set, so
//   - symbolic elimination gives the exact generic rank, and
//   - the best rank seen over random integer substitutions is a certified
//     lower bound, wrong with probability at most `failure_bound`
//     (Schwartz-Zippel, compounded over the trials).
struct RankCertificate {
  std::size_t value = 0;
  RankMode mode = RankMode::symbolic;
  unsigned trials = 0;     // 0 in symbolic mode
  std::uint64_t box = 0;   // sample box radius
  Rat failure_bound = 0;   // 0 in symbolic mode
};

// Symbolic pivots are polynomials, so elimination cost can explode; refuse
// matrices that are both large and many-variabled unless forced.
struct SymbolicGuard {
  std::size_t max_dim = 64;
  std::size_t max_vars = 8;
  bool force = false;
};

RankCertificate generic_rank(const PolyMatrix& m, RankMode mode,
                             std::uint64_t seed, unsigned trials = 3,
                             std::uint64_t box = 1'000'000'000ULL,
                             const SymbolicGuard& guard = {});

} // namespace indexlab
