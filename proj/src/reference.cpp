#include "indexlab/reference.hpp"

namespace indexlab::reference {

std::size_t rank_gauss(RationalMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (m.at(i, c) != 0) { p = i; break; }
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m.at(r, j), m.at(p, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m.at(i, c) == 0) continue;
      Rat f = m.at(i, c) / m.at(r, c);
      m.at(i, c) = 0;
      for (std::size_t j = c + 1; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  return r;
}

} // namespace indexlab::reference
