#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "indexlab/rational.hpp"

namespace indexlab {

// Dense matrix of exact rationals, row-major.  The universal carrier for
// algebra elements, action maps and bilinear forms.
class RationalMatrix {
public:
  RationalMatrix() : rows_(0), cols_(0) {}
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix zero(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  const std::vector<Rat>& entries() const { return a_; }

  RationalMatrix transpose() const;
  Rat trace() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  RationalMatrix& operator+=(const RationalMatrix& o);
  RationalMatrix& operator-=(const RationalMatrix& o);
  RationalMatrix& operator*=(const Rat& c);

  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(RationalMatrix a, const Rat& c) { return a *= c; }
  friend RationalMatrix operator*(const Rat& c, RationalMatrix a) { return a *= c; }
  friend RationalMatrix operator-(RationalMatrix a) { return a *= Rat(-1); }
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

private:
  std::size_t rows_, cols_;
  std::vector<Rat> a_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

// [a,b] = ab - ba
RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b);

std::vector<Rat> mat_vec(const RationalMatrix& a, const std::vector<Rat>& x);

// Column-major flattening used to treat a matrix as a coordinate vector.
std::vector<Rat> vec(const RationalMatrix& m);
RationalMatrix unvec(const std::vector<Rat>& v, std::size_t rows, std::size_t cols);

// x^k = 0 for some k, decided exactly via repeated squaring up to the size.
bool is_nilpotent_matrix(const RationalMatrix& x);

} // namespace indexlab
