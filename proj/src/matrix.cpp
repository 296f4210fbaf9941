#include "indexlab/matrix.hpp"

namespace indexlab {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    check(r.size() == cols_, "ragged initializer for RationalMatrix");
    for (long x : r) a_.emplace_back(x);
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::zero(std::size_t rows, std::size_t cols) {
  return RationalMatrix(rows, cols);
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Rat RationalMatrix::trace() const {
  check(is_square(), "trace of a non-square matrix");
  Rat t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

bool RationalMatrix::is_zero() const {
  for (const Rat& x : a_)
    if (x != 0) return false;
  return true;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& o) {
  check(rows_ == o.rows_ && cols_ == o.cols_, "matrix shape mismatch in +");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& o) {
  check(rows_ == o.rows_ && cols_ == o.cols_, "matrix shape mismatch in -");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rat& c) {
  for (Rat& x : a_) x *= c;
  return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  check(a.cols() == b.rows(), "matrix shape mismatch in *");
  RationalMatrix c(a.rows(), b.cols());
  Rat acc, tmp;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        const Rat& x = a.at(i, k);
        if (x == 0) continue;
        tmp = x * b.at(k, j);
        acc += tmp;
      }
      c.at(i, j) = acc;
    }
  return c;
}

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b) {
  return a * b - b * a;
}

std::vector<Rat> mat_vec(const RationalMatrix& a, const std::vector<Rat>& x) {
  check(a.cols() == x.size(), "matrix/vector shape mismatch");
  std::vector<Rat> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Rat acc = 0;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a.at(i, j) != 0) acc += a.at(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

std::vector<Rat> vec(const RationalMatrix& m) {
  std::vector<Rat> v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) v.push_back(m.at(i, j));
  return v;
}

RationalMatrix unvec(const std::vector<Rat>& v, std::size_t rows, std::size_t cols) {
  check(v.size() == rows * cols, "unvec size mismatch");
  RationalMatrix m(rows, cols);
  std::size_t k = 0;
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = v[k++];
  return m;
}

bool is_nilpotent_matrix(const RationalMatrix& x) {
  check(x.is_square(), "nilpotency of a non-square matrix");
  if (x.rows() == 0) return true;
  RationalMatrix p = x;
  std::size_t e = 1;
  while (e < x.rows()) {
    if (p.is_zero()) return true;
    p = p * p;
    e *= 2;
  }
  return p.is_zero();
}

} // namespace indexlab
