#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "indexlab/matrix.hpp"

namespace indexlab {

// Fraction-free (Bareiss) elimination over the integers.  Rational input is
// integerized row by row; row operations keep every intermediate entry an
// integer minor of the input, so no fraction arithmetic happens inside the
// elimination loop.  The row-update loop is data-parallel and runs under
// OpenMP when the remaining block is large enough; results are identical to
// the serial path.

// Global switch, mainly for the benchmark driver.
void set_parallel_elimination(bool on);
bool parallel_elimination();

struct Echelon {
  std::vector<std::vector<Int>> m;      // echelon rows (integer)
  std::vector<std::size_t> pivot_cols;  // one per nonzero row
  std::size_t rank = 0;
  std::size_t cols = 0;
};

// Echelon form of an integer matrix (consumed).
Echelon bareiss_echelon(std::vector<std::vector<Int>> m, std::size_t cols);

// Clears denominators row by row.
std::vector<std::vector<Int>> integerize(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

// Basis of { v : m v = 0 }; size cols - rank.
std::vector<std::vector<Rat>> kernel_basis(const RationalMatrix& m);

// Some x with a x = b, or nullopt when inconsistent.
std::optional<std::vector<Rat>> solve(const RationalMatrix& a, const std::vector<Rat>& b);

// Factors a fixed set of coordinate vectors once (as columns) and answers
// membership / coordinate queries against their span.
class SpanSolver {
public:
  SpanSolver() = default;
  explicit SpanSolver(const std::vector<std::vector<Rat>>& columns);

  std::size_t space_dim() const { return space_dim_; }
  std::size_t rank() const { return rank_; }

  // coordinates x with sum_k x_k col_k = v, or nullopt if v is outside the span
  std::optional<std::vector<Rat>> coords(const std::vector<Rat>& v) const;
  bool contains(const std::vector<Rat>& v) const;

private:
  std::size_t space_dim_ = 0, ncols_ = 0, rank_ = 0;
  // echelon of [B | I]: the left block solves, the right block transforms
  std::vector<std::vector<Int>> rows_;
  std::vector<std::size_t> pivot_cols_;
};

// Maintains a row-reduced spanning set incrementally; used for greedy basis
// extension in fixed coordinate order.
class IncrementalSpan {
public:
  explicit IncrementalSpan(std::size_t dim) : dim_(dim) {}
  // true (and absorbed) when v is independent of the current span
  bool add(std::vector<Rat> v);
  bool contains(std::vector<Rat> v) const;
  std::size_t rank() const { return rows_.size(); }

private:
  void reduce(std::vector<Rat>& v) const;
  std::size_t dim_;
  std::vector<std::vector<Rat>> rows_;       // reduced rows
  std::vector<std::size_t> pivots_;
};

} // namespace indexlab
