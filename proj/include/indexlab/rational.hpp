#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <string_view>

namespace indexlab {

// Exact arithmetic throughout: arbitrary-precision integers and rationals.
// mpq_class values are kept canonical (reduced, positive denominator).
using Int = mpz_class;
using Rat = mpq_class;

class error : public std::runtime_error {
public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

inline void check(bool cond, const std::string& msg) {
  if (!cond) throw error(msg);
}

// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rat& q);
Rat rat_from_string(std::string_view s);

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

} // namespace indexlab
