#include "indexlab/rational.hpp"

namespace indexlab {

std::string to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat rat_from_string(std::string_view s) {
  check(!s.empty(), "empty rational literal");
  Rat q;
  if (q.set_str(std::string(s), 10) != 0)
    throw error("malformed rational literal: " + std::string(s));
  check(q.get_den() != 0, "zero denominator in rational literal");
  q.canonicalize();
  return q;
}

} // namespace indexlab
