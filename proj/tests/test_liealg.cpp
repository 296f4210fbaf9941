#include "doctest.h"

#include "indexlab/liealg.hpp"
#include "indexlab/pairs.hpp"
#include "indexlab/reference.hpp"
#include "indexlab/rng.hpp"

using namespace indexlab;

namespace {

std::vector<Rat> unit(std::size_t n, std::size_t k) {
  std::vector<Rat> v(n, Rat(0));
  v[k] = 1;
  return v;
}

std::vector<Rat> random_coords(Rng& rng, std::size_t n, long box = 5) {
  std::vector<Rat> v(n);
  for (auto& x : v) x = Rat(static_cast<long>(rng.below(2 * box + 1)) - box);
  return v;
}

RunConfig mc_cfg(std::uint64_t seed) {
  RunConfig c;
  c.mode = Mode::montecarlo;
  c.seed = seed;
  return c;
}

RunConfig sym_cfg() {
  RunConfig c;
  c.mode = Mode::symbolic;
  return c;
}

// coordinates of xi(x) = tr(F x) in the dual basis, F the subdiagonal-ones
// matrix, for the upper-triangular algebra of gl4
std::vector<Rat> borel4_subdiagonal_covector(const MatrixLieAlgebra& b4) {
  RationalMatrix f(4, 4);
  for (std::size_t i = 0; i + 1 < 4; ++i) f.at(i + 1, i) = 1;
  std::vector<Rat> xi(b4.dim());
  for (std::size_t k = 0; k < b4.dim(); ++k) xi[k] = (f * b4.basis()[k]).trace();
  return xi;
}

} // namespace

TEST_CASE("bracket: textbook gl2 commutator and antisymmetry") {
  MatrixLieAlgebra g = gl(2);
  // basis order: E11, E12, E21, E22
  auto c = g.bracket(unit(4, 1), unit(4, 2));  // [E12, E21] = E11 - E22
  CHECK(g.element(c) == RationalMatrix{{1, 0}, {0, -1}});

  Rng rng(4);
  for (int t = 0; t < 20; ++t) {
    auto x = random_coords(rng, 4), y = random_coords(rng, 4);
    auto xy = g.bracket(x, y), yx = g.bracket(y, x);
    for (std::size_t i = 0; i < 4; ++i) CHECK(xy[i] == -yx[i]);
    auto xx = g.bracket(x, x);
    for (const Rat& v : xx) CHECK(v == 0);
  }
}

TEST_CASE("closure certification rejects a non-closed basis") {
  // span{E12, E21} in gl2 is not a subalgebra
  RationalMatrix e12{{0, 1}, {0, 0}}, e21{{0, 0}, {1, 0}};
  MatrixLieAlgebra bad(2, {e12, e21}, "bad");
  CHECK_THROWS_AS(bad.certify_closure(), error);
}

TEST_CASE("dual is an involution and negates traces") {
  Representation rep = adjoint_rep(gl(2));
  Representation dd = dual(dual(rep));
  for (std::size_t k = 0; k < rep.action.size(); ++k) {
    CHECK(dd.action[k] == rep.action[k]);
    CHECK(dual(rep).action[k].trace() == -rep.action[k].trace());
  }
  Representation triv = trivial_rep(gl(2), 3);
  for (const auto& a : dual(triv).action) CHECK(a.is_zero());
}

TEST_CASE("stabilizer: zero vector and gl2 on k^2") {
  MatrixLieAlgebra g = gl(2);
  Representation std2{g, 2, g.basis()};
  CHECK(stabilizer(std2, {Rat(0), Rat(0)}).dim() == 4);
  MatrixLieAlgebra st = stabilizer(std2, {Rat(1), Rat(0)});
  CHECK(st.dim() == 2);
  for (const auto& b : st.basis()) {
    CHECK(b.at(0, 0) == 0);  // kills e1
    CHECK(b.at(1, 0) == 0);
  }
}

TEST_CASE("tangent space and rank-nullity") {
  MatrixLieAlgebra g = gl(3);
  Representation std3{g, 3, g.basis()};
  CHECK(tangent_space(std3, {Rat(0), Rat(0), Rat(0)}).empty());
  CHECK(tangent_space(std3, {Rat(1), Rat(2), Rat(0)}).size() == 3);

  Rng rng(11);
  for (int t = 0; t < 30; ++t) {
    auto v = random_coords(rng, 3);
    CHECK(tangent_space(std3, v).size() + stabilizer_coords(std3, v).size() == 9);
  }
}

TEST_CASE("quotient module: v = 0 and dense-orbit point") {
  MatrixLieAlgebra g = gl(2);
  Representation std2{g, 2, g.basis()};
  Representation at0 = quotient_module(std2, {Rat(0), Rat(0)});
  CHECK(at0.module_dim == 2);
  CHECK(at0.algebra.dim() == 4);

  Representation dense = quotient_module(std2, {Rat(1), Rat(0)});
  CHECK(dense.module_dim == 0);
}

TEST_CASE("index: trivial module, standard gl_n, coadjoint gl_n") {
  MatrixLieAlgebra g2 = gl(2);
  CHECK(index_of(trivial_rep(g2, 1), mc_cfg(3)).index == 1);

  Representation std2{g2, 2, g2.basis()};
  IndexReport r = index_of(std2, mc_cfg(5));
  CHECK(r.index == 0);
  CHECK(r.exact);

  // symbolic cross-check at n = 4 lives in its own (slow) test binary
  for (std::size_t n = 1; n <= 3; ++n) {
    IndexReport sym = index_of_algebra(gl(n), sym_cfg());
    CHECK(sym.index == n);
    CHECK(sym.exact);
  }
  for (std::size_t n = 1; n <= 4; ++n)
    CHECK(index_of_algebra(gl(n), mc_cfg(7 + n)).index == n);
  // abelian algebra: index = dimension
  CHECK(index_of_algebra(diagonal_torus(3), sym_cfg()).index == 3);
}

TEST_CASE("Borel of gl4: coadjoint index 2, 4-dimensional abelian stabilizer") {
  MatrixLieAlgebra b4 = borel_gl(4);
  CHECK(b4.dim() == 10);

  IndexReport r = index_of_algebra(b4, sym_cfg());
  CHECK(r.index == 2);

  auto xi = borel4_subdiagonal_covector(b4);
  MatrixLieAlgebra stab = stabilizer(coadjoint_rep(b4), xi);
  CHECK(stab.dim() == 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(commutator(stab.basis()[i], stab.basis()[j]).is_zero());
  CHECK(index_of_algebra(stab, sym_cfg()).index == 4);
}

TEST_CASE("coadjoint evenness: ind q_xi - ind q is even") {
  Rng rng(2024);
  for (const auto& alg : {gl(3), borel_gl(3), borel_gl(4)}) {
    IndexReport base = index_of_algebra(alg, sym_cfg());
    Representation coad = coadjoint_rep(alg);
    for (int t = 0; t < 5; ++t) {
      auto xi = random_coords(rng, alg.dim());
      MatrixLieAlgebra stab = stabilizer(coad, xi);
      IndexReport r = index_of_algebra(stab, sym_cfg());
      CHECK((r.index - base.index) % 2 == 0);
    }
  }
}

TEST_CASE("check_vinberg: v = 0 gives equality") {
  MatrixLieAlgebra g = gl(2);
  Representation std2{g, 2, g.basis()};
  VinbergReport rep = check_vinberg(std2, {Rat(0), Rat(0)}, mc_cfg(1));
  CHECK(rep.verdict == Comparison::equal_certified);
  CHECK(rep.lhs.index == rep.rhs.index);
}

TEST_CASE("sl2 x sl2 on R3 (x) R1: equality fails at (x^3+y^3) (x) u") {
  Representation v8 = tensor_product(sl2_irrep(3), sl2_irrep(1));
  CHECK(v8.module_dim == 8);
  CHECK(v8.algebra.dim() == 6);
  v8.certify();

  std::vector<Rat> v(8, Rat(0));
  v[0] = 1;  // x^3 (x) u
  v[6] = 1;  // y^3 (x) u

  // nilpotency certificate: the second-factor torus contracts v
  std::vector<Rat> h(6, Rat(0));
  h[4] = 1;
  CHECK(nilpotent_by_weight_certificate(v8, v, h));

  CHECK(stabilizer_coords(v8, v).size() == 1);
  Representation quo = quotient_module(v8, v);
  CHECK(quo.module_dim == 3);
  for (const auto& a : quo.action) CHECK(a.is_zero());

  VinbergReport rep = check_vinberg(v8, v, mc_cfg(17));
  CHECK(rep.lhs.index == 2);
  CHECK(rep.rhs.index == 3);
  CHECK(rep.quotient_dim == 3);
  CHECK(rep.quotient_action_trivial);
  CHECK(rep.verdict == Comparison::unequal_certified);
}

TEST_CASE("m copies of the dual standard gl2 module") {
  MatrixLieAlgebra g = gl(2);
  Representation std2{g, 2, g.basis()};
  Representation four = m_copies(dual(std2), 4);
  CHECK(four.module_dim == 8);
  CHECK(index_of(four, mc_cfg(23)).index == 4);  // 4*2 - dim gl2

  Representation sum = direct_sum(std2, dual(std2));
  CHECK(sum.module_dim == 4);
}

TEST_CASE("large reducible modules have good index behaviour (gl2, m = 2, 3)") {
  MatrixLieAlgebra g = gl(2);
  Representation std2{g, 2, g.basis()};
  Rng rng(808);
  for (std::size_t m : {2UL, 3UL}) {
    Representation rep = m_copies(dual(std2), m);
    std::size_t expected = 2 * m - 4;
    for (int t = 0; t < 25; ++t) {
      auto v = random_coords(rng, rep.module_dim, 3);
      VinbergReport r = check_vinberg(rep, v, mc_cfg(900 + t));
      CHECK(r.verdict == Comparison::equal_certified);
      CHECK(r.lhs.index == expected);
      CHECK(r.rhs.index == expected);
    }
  }
}

TEST_CASE("sl2 triples: standard example and rejections") {
  MatrixLieAlgebra s = sl2_algebra();
  Sl2Triple t = sl2_complete(s, unit(3, 0));
  CHECK(s.element(t.h) == RationalMatrix{{1, 0}, {0, -1}});
  CHECK(s.element(t.f) == RationalMatrix{{0, 0}, {1, 0}});

  CHECK_THROWS_AS(sl2_complete(s, std::vector<Rat>(3, Rat(0))), error);
  CHECK_THROWS_AS(sl2_complete(s, unit(3, 1)), error);  // h is not nilpotent

  // regular nilpotent of gl3: completion certified internally
  MatrixLieAlgebra g3 = gl(3);
  RationalMatrix e(3, 3);
  e.at(0, 1) = 1;
  e.at(1, 2) = 1;
  auto ec = g3.coords_of(e);
  REQUIRE(ec.has_value());
  Sl2Triple t3 = sl2_complete(g3, *ec);
  RationalMatrix h3 = g3.element(t3.h);
  CHECK(h3.trace() == 0);
  CHECK(commutator(h3, e) == Rat(2) * e);
}

TEST_CASE("is_nilpotent on matrices") {
  RationalMatrix upper{{0, 5, 1}, {0, 0, -2}, {0, 0, 0}};
  CHECK(is_nilpotent_matrix(upper));
  CHECK_FALSE(is_nilpotent_matrix(RationalMatrix::identity(3)));
}

TEST_CASE("sl2 irreducibles: standard module and Casimir scalar") {
  Representation r1 = sl2_irrep(1);
  MatrixLieAlgebra s = sl2_algebra();
  for (std::size_t k = 0; k < 3; ++k) CHECK(r1.action[k] == s.basis()[k]);

  for (std::size_t d = 0; d <= 4; ++d) {
    Representation rd = sl2_irrep(d);
    RationalMatrix cas = rd.action[0] * rd.action[2] + rd.action[2] * rd.action[0];
    RationalMatrix h2 = rd.action[1] * rd.action[1];
    cas += Rat(1, 2) * h2;
    Rat scalar = Rat(static_cast<long>(d * (d + 2))) / 2;
    RationalMatrix expected = scalar * RationalMatrix::identity(d + 1);
    CHECK(cas == expected);
  }
}

TEST_CASE("covector matrix agrees with a directly assembled dual action") {
  Rng rng(5150);
  for (const auto& rep : {adjoint_rep(gl(3)), coadjoint_rep(borel_gl(3)),
                          isotropy_rep(outer_pair(3, FormKind::symmetric))}) {
    PolyMatrix m = dual_action_matrix(rep);
    for (int t = 0; t < 5; ++t) {
      std::vector<Int> xi(rep.module_dim);
      std::vector<Rat> xi_q(rep.module_dim);
      for (std::size_t i = 0; i < xi.size(); ++i) {
        long v = static_cast<long>(rng.below(19)) - 9;
        xi[i] = v;
        xi_q[i] = v;
      }
      RationalMatrix direct(rep.module_dim, rep.algebra.dim());
      for (std::size_t k = 0; k < rep.algebra.dim(); ++k) {
        auto col = mat_vec(-rep.action[k].transpose(), xi_q);
        for (std::size_t r = 0; r < rep.module_dim; ++r) direct.at(r, k) = col[r];
      }
      CHECK(m.eval(xi) == direct);
      CHECK(rank(direct) == reference::rank_gauss(direct));
    }
  }
}

TEST_CASE("Vinberg inequality holds on random representations") {
  Rng rng(31415);
  MatrixLieAlgebra g = gl(2);
  Representation std2{g, 2, g.basis()};
  std::vector<Representation> reps = {std2, adjoint_rep(g), dual(std2),
                                      direct_sum(std2, adjoint_rep(g))};
  for (const auto& rep : reps) {
    for (int t = 0; t < 10; ++t) {
      auto v = random_coords(rng, rep.module_dim, 4);
      VinbergReport r = check_vinberg(rep, v, mc_cfg(rng.next()));
      CHECK(r.rhs.index >= r.lhs.index);  // never violated, any verdict
    }
  }
}
