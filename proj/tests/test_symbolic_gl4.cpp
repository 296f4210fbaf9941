#include "doctest.h"

#include "indexlab/liealg.hpp"
#include "indexlab/pairs.hpp"

using namespace indexlab;

// Exact-elimination cross-check of the largest coadjoint computation in the
// unit tier.  Slow (minutes): the pivotal minors of the 16x16 covector
// matrix are dense degree-12 polynomials in 16 indeterminates.
TEST_CASE("gl4: symbolic coadjoint index equals the rank" * doctest::timeout(1200)) {
  RunConfig sym;
  sym.mode = Mode::symbolic;
  IndexReport r = index_of_algebra(gl(4), sym);
  CHECK(r.index == 4);
  CHECK(r.max_orbit_dim == 12);
  CHECK(r.exact);
}
