#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "indexlab/matrix.hpp"

namespace indexlab {

// Sparse multivariate polynomial over the rationals.  Exponent vectors are
// packed into fixed-width byte fields so that term comparison is a handful
// of word compares; terms are kept sorted (lexicographic in the variables),
// leading term last.  Degrees stay small at the input (the action matrices
// handed to the rank engine are linear in the covector coordinates) but grow
// to minors of those inputs during fraction-free elimination.
class Poly {
public:
  static constexpr std::size_t kKeyWords = 16;
  static constexpr std::size_t kMaxVars = 8 * kKeyWords;   // one byte each
  static constexpr std::uint32_t kMaxExp = 255;
  using Key = std::array<std::uint64_t, kKeyWords>;
  using Exps = std::vector<std::uint32_t>;

  Poly() : nvars_(0) {}
  explicit Poly(std::size_t nvars);

  static Poly constant(std::size_t nvars, const Rat& c);
  static Poly variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant_one() const;
  std::size_t nterms() const { return t_.size(); }
  long total_degree() const;  // -1 for the zero polynomial

  void add_term(const Exps& e, const Rat& c);
  template <typename Fn>  // fn(const Exps&, const Rat&), ascending order
  void for_each_term(Fn&& fn) const {
    Exps e(nvars_);
    for (const auto& [k, c] : t_) {
      unpack(k, e);
      fn(const_cast<const Exps&>(e), c);
    }
  }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.t_ == b.t_;
  }

  // Exact division; throws if the quotient is not a polynomial.
  Poly divexact(const Poly& d) const;

  Rat eval(const std::vector<Int>& point) const;

  std::string to_string(const std::vector<std::string>& names) const;

private:
  static void pack(const Exps& e, Key& k);
  void unpack(const Key& k, Exps& e) const;
  static long key_degree(const Key& k);
  void accumulate(const Key& k, const Rat& c);

  std::size_t nvars_;
  std::vector<std::pair<Key, Rat>> t_;  // ascending keys, nonzero coefficients
};

struct PolyMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::string> var_names;
  std::vector<Poly> entries;  // row-major

  PolyMatrix() = default;
  PolyMatrix(std::size_t r, std::size_t c, std::vector<std::string> names);

  Poly& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  const Poly& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

  std::size_t nvars() const { return var_names.size(); }
  long max_entry_degree() const;
  RationalMatrix eval(const std::vector<Int>& point) const;
};

// n indeterminate names "x1".."xn"
std::vector<std::string> default_var_names(std::size_t n);

} // namespace indexlab
