#include "indexlab/bareiss.hpp"

#include <atomic>
#include <utility>

namespace indexlab {

namespace {

std::atomic<bool> g_parallel{true};

// Pivot with the smallest absolute value keeps the integer growth of the
// remaining block down.  Deterministic: ties break to the lowest row.
std::size_t pick_pivot(const std::vector<std::vector<Int>>& m, std::size_t r,
                       std::size_t c) {
  std::size_t best = m.size();
  for (std::size_t i = r; i < m.size(); ++i) {
    if (m[i][c] == 0) continue;
    if (best == m.size() ||
        mpz_cmpabs(m[i][c].get_mpz_t(), m[best][c].get_mpz_t()) < 0)
      best = i;
  }
  return best;
}

// One-step fraction-free elimination.  Pivots are chosen among the first
// `pivot_limit` columns only; the full row width is updated.  Every
// intermediate entry is a minor of the integer input, so the division by the
// previous pivot is exact (Sylvester identity); this also covers rows whose
// entry in the pivot column is already zero.
Echelon eliminate(std::vector<std::vector<Int>> m, std::size_t cols,
                  std::size_t pivot_limit) {
  Echelon out;
  out.cols = cols;
  const std::size_t rows = m.size();
  Int prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_limit && r < rows; ++c) {
    std::size_t p = pick_pivot(m, r, c);
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    const std::vector<Int>& pivot_row = m[r];
    const Int& piv = pivot_row[c];
    // threads only pay off once the minors are genuinely multi-limb
    const bool par = g_parallel.load(std::memory_order_relaxed) &&
                     rows - r >= 4 && cols - c >= 8 &&
                     mpz_size(prev.get_mpz_t()) >= 8;
    const long lo = static_cast<long>(r) + 1;
    const long hi = static_cast<long>(rows);
#pragma omp parallel for schedule(static) if (par)
    for (long li = lo; li < hi; ++li) {
      auto& row = m[static_cast<std::size_t>(li)];
      Int head;
      std::swap(head, row[c]);
      Int t;
      for (std::size_t j = c + 1; j < cols; ++j) {
        t = piv * row[j];
        if (head != 0) t -= head * pivot_row[j];
        mpz_divexact(row[j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = piv;
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  out.m = std::move(m);
  return out;
}

// Solve the echelon system over the first nvars columns against a rational
// rhs (one entry per echelon row); free variables are set to zero.  Rows
// beyond the rank must be consistent, else nullopt.
std::optional<std::vector<Rat>> back_substitute(
    const std::vector<std::vector<Int>>& rows,
    const std::vector<std::size_t>& pivot_cols, std::size_t rank,
    std::size_t nvars, const std::vector<Rat>& rhs) {
  std::vector<Rat> x(nvars, Rat(0));
  for (std::size_t k = rank; k-- > 0;) {
    std::size_t p = pivot_cols[k];
    Rat acc = rhs[k];
    for (std::size_t j = p + 1; j < nvars; ++j)
      if (rows[k][j] != 0 && x[j] != 0) acc -= Rat(rows[k][j]) * x[j];
    x[p] = acc / Rat(rows[k][p]);
  }
  for (std::size_t k = rank; k < rows.size(); ++k) {
    Rat acc = rhs[k];
    for (std::size_t j = 0; j < nvars; ++j)
      if (rows[k][j] != 0 && x[j] != 0) acc -= Rat(rows[k][j]) * x[j];
    if (acc != 0) return std::nullopt;
  }
  return x;
}

} // namespace

void set_parallel_elimination(bool on) { g_parallel.store(on); }
bool parallel_elimination() { return g_parallel.load(); }

std::vector<std::vector<Int>> integerize(const RationalMatrix& m) {
  std::vector<std::vector<Int>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int l(1);
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den_mpz_t());
    out[i].resize(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rat& q = m.at(i, j);
      out[i][j] = q.get_num() * (l / q.get_den());
    }
  }
  return out;
}

Echelon bareiss_echelon(std::vector<std::vector<Int>> m, std::size_t cols) {
  return eliminate(std::move(m), cols, cols);
}

std::size_t rank(const RationalMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return bareiss_echelon(integerize(m), m.cols()).rank;
}

std::vector<std::vector<Rat>> kernel_basis(const RationalMatrix& m) {
  const std::size_t n = m.cols();
  if (n == 0) return {};
  Echelon e = m.rows() ? bareiss_echelon(integerize(m), n) : Echelon{{}, {}, 0, n};
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : e.pivot_cols) is_pivot[p] = true;

  std::vector<std::vector<Rat>> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> x(n, Rat(0));
    x[f] = 1;
    for (std::size_t k = e.rank; k-- > 0;) {
      std::size_t p = e.pivot_cols[k];
      if (p > f) continue;
      Rat acc = 0;
      for (std::size_t j = p + 1; j < n; ++j)
        if (e.m[k][j] != 0 && x[j] != 0) acc -= Rat(e.m[k][j]) * x[j];
      x[p] = acc / Rat(e.m[k][p]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<std::vector<Rat>> solve(const RationalMatrix& a, const std::vector<Rat>& b) {
  check(b.size() == a.rows(), "solve: rhs length mismatch");
  const std::size_t n = a.cols();
  RationalMatrix aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n) = b[i];
  }
  Echelon e = eliminate(integerize(aug), n + 1, n);
  std::vector<Rat> rhs(e.m.size());
  for (std::size_t k = 0; k < e.m.size(); ++k) rhs[k] = Rat(e.m[k][n]);
  return back_substitute(e.m, e.pivot_cols, e.rank, n, rhs);
}

SpanSolver::SpanSolver(const std::vector<std::vector<Rat>>& columns) {
  ncols_ = columns.size();
  space_dim_ = columns.empty() ? 0 : columns.front().size();
  for (const auto& c : columns)
    check(c.size() == space_dim_, "SpanSolver: ragged columns");
  RationalMatrix aug(space_dim_, ncols_ + space_dim_);
  for (std::size_t i = 0; i < space_dim_; ++i) {
    for (std::size_t k = 0; k < ncols_; ++k) aug.at(i, k) = columns[k][i];
    aug.at(i, ncols_ + i) = 1;
  }
  Echelon e = eliminate(integerize(aug), ncols_ + space_dim_, ncols_);
  rank_ = e.rank;
  pivot_cols_ = e.pivot_cols;
  rows_ = std::move(e.m);
}

std::optional<std::vector<Rat>> SpanSolver::coords(const std::vector<Rat>& v) const {
  check(v.size() == space_dim_, "SpanSolver: vector dimension mismatch");
  std::vector<Rat> rhs(rows_.size(), Rat(0));
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Rat acc = 0;
    for (std::size_t i = 0; i < space_dim_; ++i)
      if (v[i] != 0 && rows_[k][ncols_ + i] != 0)
        acc += Rat(rows_[k][ncols_ + i]) * v[i];
    rhs[k] = acc;
  }
  return back_substitute(rows_, pivot_cols_, rank_, ncols_, rhs);
}

bool SpanSolver::contains(const std::vector<Rat>& v) const {
  return coords(v).has_value();
}

bool IncrementalSpan::add(std::vector<Rat> v) {
  check(v.size() == dim_, "IncrementalSpan: dimension mismatch");
  reduce(v);
  std::size_t p = dim_;
  for (std::size_t j = 0; j < dim_; ++j)
    if (v[j] != 0) { p = j; break; }
  if (p == dim_) return false;
  Rat inv = v[p];
  for (Rat& x : v) x /= inv;
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool IncrementalSpan::contains(std::vector<Rat> v) const {
  reduce(v);
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

void IncrementalSpan::reduce(std::vector<Rat>& v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rat& c = v[pivots_[k]];
    if (c == 0) continue;
    Rat f = c;
    for (std::size_t j = 0; j < dim_; ++j)
      if (rows_[k][j] != 0) v[j] -= f * rows_[k][j];
  }
}

} // namespace indexlab
