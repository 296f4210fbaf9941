#include "indexlab/generic_rank.hpp"

#include <algorithm>

#include "indexlab/bareiss.hpp"
#include "indexlab/rng.hpp"

namespace indexlab {

namespace {

constexpr std::uint64_t kMinBox = 1'000'000;

// Fraction-free elimination with full pivoting.  The pivot is chosen to keep
// the remaining block sparse: fewest terms first, then the Markowitz fill
// count, then the lowest degree.  Row and column swaps leave every
// intermediate entry a minor of the input, so the division by the previous
// pivot stays exact.
std::size_t symbolic_rank(const PolyMatrix& m) {
  const std::size_t rows = m.rows, cols = m.cols;
  std::vector<std::vector<Poly>> a(rows, std::vector<Poly>(cols, Poly(m.nvars())));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m.at(i, j);

  Poly prev = Poly::constant(m.nvars(), 1);
  std::size_t r = 0;
  while (r < rows && r < cols) {
    std::vector<std::size_t> row_nnz(rows, 0), col_nnz(cols, 0);
    for (std::size_t i = r; i < rows; ++i)
      for (std::size_t j = r; j < cols; ++j)
        if (!a[i][j].is_zero()) { ++row_nnz[i]; ++col_nnz[j]; }

    std::size_t pi = rows, pj = cols;
    std::size_t best_terms = 0, best_fill = 0;
    long best_deg = 0;
    for (std::size_t i = r; i < rows; ++i)
      for (std::size_t j = r; j < cols; ++j) {
        const Poly& e = a[i][j];
        if (e.is_zero()) continue;
        std::size_t terms = e.nterms();
        std::size_t fill = (row_nnz[i] - 1) * (col_nnz[j] - 1);
        long deg = e.total_degree();
        bool better = pi == rows || terms < best_terms ||
                      (terms == best_terms &&
                       (fill < best_fill || (fill == best_fill && deg < best_deg)));
        if (better) {
          pi = i;
          pj = j;
          best_terms = terms;
          best_fill = fill;
          best_deg = deg;
        }
      }
    if (pi == rows) break;  // remaining block is zero

    std::swap(a[r], a[pi]);
    if (pj != r)
      for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][r], a[i][pj]);

    const Poly& piv = a[r][r];
    const long lo = static_cast<long>(r) + 1, hi = static_cast<long>(rows);
#pragma omp parallel for schedule(dynamic) if (hi - lo > 2)
    for (long li = lo; li < hi; ++li) {
      auto& row = a[static_cast<std::size_t>(li)];
      Poly head = row[r];
      row[r] = Poly(m.nvars());
      for (std::size_t j = r + 1; j < cols; ++j) {
        if (row[j].is_zero() && head.is_zero()) continue;
        Poly t = piv * row[j];
        if (!head.is_zero()) t -= head * a[r][j];
        row[j] = prev.is_constant_one() ? std::move(t) : t.divexact(prev);
      }
    }
    prev = piv;
    ++r;
  }
  return r;
}

} // namespace

RankCertificate generic_rank(const PolyMatrix& m, RankMode mode,
                             std::uint64_t seed, unsigned trials,
                             std::uint64_t box, const SymbolicGuard& guard) {
  RankCertificate cert;
  if (m.rows == 0 || m.cols == 0) {
    cert.mode = mode;
    return cert;
  }

  if (mode == RankMode::symbolic) {
    if (!guard.force &&
        std::max(m.rows, m.cols) > guard.max_dim && m.nvars() > guard.max_vars)
      throw error("symbolic rank refused: " + std::to_string(m.rows) + "x" +
                  std::to_string(m.cols) + " with " +
                  std::to_string(m.nvars()) + " indeterminates (force to override)");
    cert.value = symbolic_rank(m);
    cert.mode = RankMode::symbolic;
    return cert;
  }

  check(trials >= 1, "montecarlo rank needs at least one trial");
  check(box >= kMinBox, "montecarlo sample box below threshold 10^6");

  const long maxdeg = std::max(0L, m.max_entry_degree());
  std::size_t best = 0;
  const long n_trials = static_cast<long>(trials);
#pragma omp parallel for schedule(dynamic) reduction(max : best)
  for (long t = 0; t < n_trials; ++t) {
    Rng rng(Rng::mix(seed, static_cast<std::uint64_t>(t)));
    std::vector<Int> point(m.nvars());
    for (auto& x : point) x = rng.symmetric(box);
    std::size_t rk = rank(m.eval(point));
    best = std::max(best, rk);
  }

  cert.value = best;
  cert.mode = RankMode::montecarlo;
  cert.trials = trials;
  cert.box = box;
  if (maxdeg == 0) {
    cert.failure_bound = 0;  // constant matrix: the evaluation is exact
  } else {
    Rat per_trial = Rat(Int(std::min(m.rows, m.cols)) * maxdeg,
                        Int(2) * Int(box) + 1);
    per_trial.canonicalize();
    if (per_trial >= 1) throw error("montecarlo failure bound is vacuous; enlarge the box");
    Rat bound = 1;
    for (unsigned t = 0; t < trials; ++t) bound *= per_trial;
    cert.failure_bound = bound;
  }
  return cert;
}

} // namespace indexlab
