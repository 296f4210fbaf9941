// Benchmark: the parallel fraction-free elimination against its serial run
// and the plain Gaussian reference on random integer matrices, plus the
// Monte-Carlo generic-rank trials, which parallelize per trial.
#include <omp.h>

#include <chrono>
#include <cstdio>

#include "indexlab/bareiss.hpp"
#include "indexlab/generic_rank.hpp"
#include "indexlab/reference.hpp"
#include "indexlab/rng.hpp"

using namespace indexlab;

namespace {

RationalMatrix random_matrix(Rng& rng, std::size_t n, long box) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.at(i, j) = Rat(static_cast<long>(rng.below(2 * box + 1)) - box);
  return m;
}

template <typename Fn>
double time_ms(Fn&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                   t0)
      .count();
}

} // namespace

int main(int argc, char** argv) {
  std::size_t max_n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 96;
  Rng rng(2718281828ULL);
  std::printf("%6s %14s %16s %16s %10s\n", "n", "gauss ref (ms)",
              "bareiss 1t (ms)", "bareiss omp (ms)", "speedup");
  for (std::size_t n = 24; n <= max_n; n += 24) {
    RationalMatrix m = random_matrix(rng, n, 100);
    std::size_t r_ref = 0, r_serial = 0, r_par = 0;
    double t_ref = time_ms([&] { r_ref = reference::rank_gauss(m); });
    set_parallel_elimination(false);
    double t_serial = time_ms([&] { r_serial = rank(m); });
    set_parallel_elimination(true);
    double t_par = time_ms([&] { r_par = rank(m); });
    if (r_ref != r_serial || r_serial != r_par) {
      std::fprintf(stderr, "rank mismatch at n=%zu\n", n);
      return 1;
    }
    std::printf("%6zu %14.1f %16.1f %16.1f %9.2fx\n", n, t_ref, t_serial, t_par,
                t_serial / t_par);
  }

  std::printf("\nMonte-Carlo generic rank, 8 trials, linear entries in 4 vars\n");
  std::printf("%6s %16s %16s %10s\n", "n", "serial (ms)", "parallel (ms)", "speedup");
  for (std::size_t n = 32; n <= std::min<std::size_t>(max_n, 96); n += 32) {
    PolyMatrix m(n, n, default_var_names(4));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Poly p(4);
        for (std::size_t v = 0; v < 4; ++v) {
          long c = static_cast<long>(rng.below(19)) - 9;
          if (c != 0) p += Poly::constant(4, Rat(c)) * Poly::variable(4, v);
        }
        m.at(i, j) = std::move(p);
      }
    std::size_t r1 = 0, r2 = 0;
    set_parallel_elimination(false);
    omp_set_num_threads(1);
    double t1 = time_ms([&] { r1 = generic_rank(m, RankMode::montecarlo, 99, 8).value; });
    set_parallel_elimination(true);
    omp_set_num_threads(omp_get_num_procs());
    double t2 = time_ms([&] { r2 = generic_rank(m, RankMode::montecarlo, 99, 8).value; });
    if (r1 != r2) {
      std::fprintf(stderr, "rank mismatch at n=%zu\n", n);
      return 1;
    }
    std::printf("%6zu %16.1f %16.1f %9.2fx\n", n, t1, t2, t1 / t2);
  }
  return 0;
}
