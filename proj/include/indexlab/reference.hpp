#pragma once

#include <cstddef>

#include "indexlab/matrix.hpp"

namespace indexlab::reference {

// Serial reference: plain Gaussian elimination with exact fraction
// arithmetic.  Deliberately shares no code with the Bareiss engine; the test
// suite checks the two against each other and the benchmark compares their
// running times.
std::size_t rank_gauss(RationalMatrix m);

} // namespace indexlab::reference
