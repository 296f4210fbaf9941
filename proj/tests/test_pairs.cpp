#include "doctest.h"

#include "indexlab/pairs.hpp"
#include "indexlab/rng.hpp"

using namespace indexlab;

namespace {

RunConfig mc_cfg(std::uint64_t seed) {
  RunConfig c;
  c.mode = Mode::montecarlo;
  c.seed = seed;
  return c;
}

// dim q_{xi,0} - dim q_{xi,1} for the coadjoint stabilizer of a covector
// supported on g1
std::pair<std::size_t, std::size_t> graded_coadjoint_stabilizer_dims(
    const SymmetricPair& pair, const std::vector<Rat>& xi_on_g1) {
  std::vector<RationalMatrix> adapted = pair.g0_basis;
  adapted.insert(adapted.end(), pair.g1_basis.begin(), pair.g1_basis.end());
  MatrixLieAlgebra q(pair.g.ambient(), adapted, pair.label() + ".adapted");
  std::vector<Rat> xi(q.dim(), Rat(0));
  for (std::size_t i = 0; i < xi_on_g1.size(); ++i)
    xi[pair.g0_basis.size() + i] = xi_on_g1[i];
  MatrixLieAlgebra stab = stabilizer(coadjoint_rep(q), xi);
  auto [even, odd] = sigma_split(pair.sigma, stab.basis());
  return {even.size(), odd.size()};
}

} // namespace

TEST_CASE("classical algebra dimensions") {
  CHECK(so(antidiag_symmetric(3)).dim() == 3);
  CHECK(so(antidiag_symmetric(7)).dim() == 21);
  CHECK(sp(antidiag_skew(4)).dim() == 10);
  CHECK(sp(antidiag_skew(6)).dim() == 21);
  CHECK(borel_gl(4).dim() == 10);
  CHECK(sl(3).dim() == 8);
  CHECK_THROWS_AS(so(antidiag_skew(4)), error);
  CHECK_THROWS_AS(sp(antidiag_symmetric(4)), error);
}

TEST_CASE("outer pairs: eigenspace dimensions and certification") {
  SymmetricPair p3 = outer_pair(3, FormKind::symmetric);
  CHECK(p3.g0_coords.size() == 3);
  CHECK(p3.g1_coords.size() == 6);
  p3.certify();

  SymmetricPair p4 = outer_pair(4, FormKind::skew);
  CHECK(p4.g0_coords.size() == 10);
  CHECK(p4.g1_coords.size() == 6);
  p4.certify();

  // the center of gl sits in g1 for outer pairs
  RationalMatrix id = RationalMatrix::identity(3);
  CHECK(p3.sigma.apply(id) == -id);
}

TEST_CASE("inner pairs: eigenspace dimensions") {
  SymmetricPair sp4 = inner_pair(PairFamily::sp_gl, 2, 0);
  CHECK(sp4.g0_coords.size() == 4);
  CHECK(sp4.g1_coords.size() == 6);
  sp4.certify();

  SymmetricPair so8 = inner_pair(PairFamily::so_gl, 4, 0);
  CHECK(so8.g0_coords.size() == 16);
  CHECK(so8.g1_coords.size() == 12);
  so8.certify();

  SymmetricPair gl7 = inner_pair(PairFamily::gl_glpq, 3, 4);
  CHECK(gl7.g0_coords.size() == 25);
  CHECK(gl7.g1_coords.size() == 24);
  gl7.certify();

  SymmetricPair so7 = inner_pair(PairFamily::so_sopq, 3, 4);
  CHECK(so7.g0_coords.size() == 3 + 6);
  CHECK(so7.g1_coords.size() == 12);
  so7.certify();

  SymmetricPair sp6 = inner_pair(PairFamily::sp_sppq, 1, 2);
  CHECK(sp6.g0_coords.size() == 3 + 10);
  CHECK(sp6.g1_coords.size() == 8);
  sp6.certify();
}

TEST_CASE("isotropy representation: certification and stabilizer of zero") {
  SymmetricPair p = outer_pair(3, FormKind::symmetric);
  Representation iso = isotropy_rep(p);
  CHECK(iso.module_dim == 6);  // S^2 of k^3
  iso.certify();
  CHECK(stabilizer(iso, std::vector<Rat>(6, Rat(0))).dim() == 3);

  SymmetricPair q = inner_pair(PairFamily::sp_gl, 2, 0);
  Representation iso2 = isotropy_rep(q);
  CHECK(iso2.module_dim == 6);
  iso2.certify();
}

TEST_CASE("symmetric ranks match the table") {
  CHECK(symmetric_rank(outer_pair(4, FormKind::symmetric), mc_cfg(1)) == 4);
  CHECK(symmetric_rank(outer_pair(4, FormKind::skew), mc_cfg(2)) == 2);
  CHECK(symmetric_rank(inner_pair(PairFamily::sp_gl, 3, 0), mc_cfg(3)) == 3);
  CHECK(symmetric_rank(inner_pair(PairFamily::so_gl, 4, 0), mc_cfg(4)) == 2);
  CHECK(symmetric_rank(inner_pair(PairFamily::gl_glpq, 2, 3), mc_cfg(5)) == 2);
  CHECK(symmetric_rank(inner_pair(PairFamily::so_sopq, 2, 3), mc_cfg(6)) == 2);
  CHECK(symmetric_rank(inner_pair(PairFamily::sp_sppq, 1, 2), mc_cfg(7)) == 1);
}

TEST_CASE("reductive algebras: coadjoint index equals adjoint index") {
  for (const auto& alg : {gl(3), so(antidiag_symmetric(5)), sp(antidiag_skew(4))}) {
    IndexReport co = index_of(coadjoint_rep(alg), mc_cfg(11));
    IndexReport ad = index_of(adjoint_rep(alg), mc_cfg(12));
    CHECK(co.index == ad.index);
  }
}

TEST_CASE("graded centralizer at e = 0 recovers the pair") {
  SymmetricPair p = inner_pair(PairFamily::sp_gl, 2, 0);
  GradedCentralizer gc =
      graded_centralizer(p, RationalMatrix::zero(4, 4));
  CHECK(gc.ge0_basis.size() == p.g0_coords.size());
  CHECK(gc.ge1_basis.size() == p.g1_coords.size());
  CHECK(gc.dim_ge() == p.g.dim());
}

TEST_CASE("induced Z2-grading of coadjoint stabilizers (dimension identity)") {
  Rng rng(616);
  std::vector<SymmetricPair> pairs;
  pairs.push_back(outer_pair(3, FormKind::symmetric));
  pairs.push_back(outer_pair(4, FormKind::skew));
  pairs.push_back(inner_pair(PairFamily::sp_gl, 2, 0));
  pairs.push_back(inner_pair(PairFamily::gl_glpq, 2, 2));
  for (const auto& pair : pairs) {
    long lhs = static_cast<long>(pair.g0_coords.size()) -
               static_cast<long>(pair.g1_coords.size());
    for (int t = 0; t < 21; ++t) {
      std::vector<Rat> xi(pair.g1_coords.size());
      for (auto& x : xi) x = Rat(static_cast<long>(rng.below(11)) - 5);
      auto [d0, d1] = graded_coadjoint_stabilizer_dims(pair, xi);
      CHECK(static_cast<long>(d0) - static_cast<long>(d1) == lhs);
    }
  }
}

TEST_CASE("family codes round-trip") {
  for (PairFamily f : {PairFamily::gl_so, PairFamily::gl_sp, PairFamily::sp_gl,
                       PairFamily::so_gl, PairFamily::gl_glpq,
                       PairFamily::so_sopq, PairFamily::sp_sppq})
    CHECK(family_from_code(family_code(f)) == f);
  CHECK_THROWS_AS(family_from_code("e8/whatever"), error);
}
