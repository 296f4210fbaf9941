#include "doctest.h"

#include <sstream>

#include "indexlab/gnib.hpp"
#include "indexlab/json_io.hpp"

using namespace indexlab;

namespace {

RunConfig cfg_auto(std::uint64_t seed) {
  RunConfig c;
  c.seed = seed;
  return c;
}

RunConfig cfg_mc(std::uint64_t seed) {
  RunConfig c;
  c.mode = Mode::montecarlo;
  c.seed = seed;
  return c;
}

} // namespace

TEST_CASE("gnib_at: zero orbit and the symmetric-space families") {
  for (const auto& rep : enumerate_orbit_reps(PairFamily::gl_so, 5, 0)) {
    OrbitVerdict v = gnib_at(rep, cfg_auto(3));
    CHECK(v.status == VerdictStatus::equal_certified);
    CHECK(v.index_upper == 5);
    REQUIRE(v.witness_fixed_dim.has_value());
    CHECK(*v.witness_fixed_dim == 5);  // the adapted covector is optimal
    CHECK(v.index_upper >= v.rank_target);
  }
  for (const auto& rep : enumerate_orbit_reps(PairFamily::sp_gl, 3, 0)) {
    OrbitVerdict v = gnib_at(rep, cfg_auto(4));
    CHECK(v.status == VerdictStatus::equal_certified);
    REQUIRE(v.witness_fixed_dim.has_value());
    CHECK(*v.witness_fixed_dim == 3);
  }
  for (const auto& rep : enumerate_orbit_reps(PairFamily::gl_sp, 2, 0)) {
    OrbitVerdict v = gnib_at(rep, cfg_auto(5));
    CHECK(v.status == VerdictStatus::equal_certified);
    REQUIRE(v.witness_fixed_dim.has_value());
    CHECK(*v.witness_fixed_dim == 2);
  }
  for (const auto& rep : enumerate_orbit_reps(PairFamily::so_gl, 3, 0)) {
    OrbitVerdict v = gnib_at(rep, cfg_auto(6));
    CHECK(v.status == VerdictStatus::equal_certified);
    REQUIRE(v.witness_fixed_dim.has_value());
    CHECK(*v.witness_fixed_dim == 1);  // rank of (so6, gl3)
  }
}

TEST_CASE("gnib_check: affirmative and negative sweeps") {
  PairReport good = gnib_check(PairFamily::gl_so, 4, 0, cfg_auto(7));
  CHECK(good.overall == PairReport::Overall::gnib);
  CHECK(good.rank == 4);

  PairReport sp6 = gnib_check(PairFamily::sp_gl, 3, 0, cfg_auto(8));
  CHECK(sp6.overall == PairReport::Overall::gnib);

  PairReport bad = gnib_check(PairFamily::gl_glpq, 4, 4, cfg_auto(9));
  CHECK(bad.overall == PairReport::Overall::no_gnib);
  bool some_unequal = false;
  for (const auto& v : bad.orbits) {
    CHECK(v.index_upper >= v.rank_target);  // never below the certified bound
    some_unequal |= v.status == VerdictStatus::unequal_certified;
  }
  CHECK(some_unequal);
}

TEST_CASE("monotone certification: symbolic never downgrades a verdict") {
  auto reps = enumerate_orbit_reps(PairFamily::sp_gl, 2, 0);
  for (const auto& rep : reps) {
    OrbitVerdict mc = gnib_at(rep, cfg_mc(10));
    RunConfig sym;
    sym.mode = Mode::symbolic;
    OrbitVerdict sy = gnib_at(rep, sym);
    if (mc.status != VerdictStatus::inconclusive) {
      CHECK(mc.status == sy.status);
    } else {
      CHECK(sy.status != VerdictStatus::inconclusive);
    }
  }
}

TEST_CASE("delta certificates") {
  DeltaCertificate gl7 =
      delta_certificate(ClassicalType::gl, Partition::parse("3,3,1"), cfg_auto(11));
  CHECK(gl7.no_gnib);
  CHECK(gl7.report.delta == 1);

  DeltaCertificate so8 =
      delta_certificate(ClassicalType::so, Partition::parse("3,3,1,1"), cfg_auto(12));
  CHECK(so8.no_gnib);
  CHECK(so8.report.delta == 1);

  // the two no-GNIB routes agree: the glued pair carries an orbit whose
  // index exceeds the rank by exactly delta
  PairReport sweep = gnib_check(PairFamily::gl_glpq, 3, 4, cfg_auto(13));
  bool matches = false;
  for (const auto& v : sweep.orbits)
    if (v.status == VerdictStatus::unequal_certified)
      matches |= v.index_upper == sweep.rank + 1;
  CHECK(matches);
}

TEST_CASE("doubled-minimal orbit spoils (so8, so4 x so4), decoration-sensitively") {
  PairReport r = gnib_check(PairFamily::so_sopq, 4, 4, cfg_auto(21));
  CHECK(r.overall == PairReport::Overall::no_gnib);
  CHECK_FALSE(r.gib_corollary);
  std::size_t bad = 0, good_same_type = 0;
  for (const auto& v : r.orbits) {
    if (v.orbit_id.rfind("(3,3,1,1)", 0) != 0) continue;
    if (v.status == VerdictStatus::unequal_certified) {
      CHECK(v.index_upper == r.rank + 1);  // the height-4 excess is 1
      ++bad;
    } else {
      ++good_same_type;
    }
  }
  CHECK(bad >= 1);
  CHECK(good_same_type >= 1);  // other decorations of the type stay good
}

TEST_CASE("charbonnel_check on textbook cases") {
  CharbonnelReport a =
      charbonnel_check(ClassicalType::gl, Partition::parse("2,2"), cfg_auto(14));
  CHECK(a.ind_centralizer == 4);
  CHECK(a.rank_g == 4);
  CHECK(a.equal);

  CharbonnelReport b =
      charbonnel_check(ClassicalType::so, Partition::parse("3,3,1"), cfg_auto(15));
  CHECK(b.ind_centralizer == 3);
  CHECK(b.equal);

  CharbonnelReport c =
      charbonnel_check(ClassicalType::gl, Partition::parse("1,1,1"), cfg_auto(16));
  CHECK(c.ind_centralizer == 3);  // e = 0, the full algebra
  CHECK(c.equal);
}

TEST_CASE("report renderers carry the table columns") {
  PairReport r = gnib_check(PairFamily::gl_so, 3, 0, cfg_auto(17));
  std::string md = to_markdown(r);
  CHECK(md.find("| orbit | rank | index | status | mode | ms |") != std::string::npos);
  CHECK(md.find("GNIB") != std::string::npos);
  std::string csv = to_csv(r);
  CHECK(csv.rfind("orbit,rank,index,status,mode,ms", 0) == 0);

  json j = to_json(r);
  CHECK(j.at("overall") == "GNIB");
  CHECK(j.at("orbits").size() == r.orbits.size());
  CHECK(j.dump().find("\"ms\":") == std::string::npos);  // wall-clock stays out of JSON
}

TEST_CASE("representation JSON round-trips") {
  Representation rep = isotropy_rep(make_pair(PairFamily::sp_gl, 2, 0));
  json j = to_json(rep);
  Representation back = representation_from_json(j);
  CHECK(back.module_dim == rep.module_dim);
  CHECK(back.algebra.basis() == rep.algebra.basis());
  for (std::size_t k = 0; k < rep.action.size(); ++k)
    CHECK(back.action[k] == rep.action[k]);

  IndexReport before = index_of(rep, cfg_mc(18));
  IndexReport after = index_of(back, cfg_mc(18));
  CHECK(before.index == after.index);
}

TEST_CASE("regular orbit of (gl_n, so_n): the centralizer is entirely odd") {
  for (std::size_t n : {3UL, 5UL}) {
    for (const auto& rep : enumerate_orbit_reps(PairFamily::gl_so, n, 0)) {
      if (rep.jordan_type.parts.size() != 1) continue;  // the regular orbit
      GradedCentralizer gc = graded_centralizer(rep.realize(), rep.e);
      CHECK(gc.dim_ge() == n);
      CHECK(gc.ge0_basis.empty());
      CHECK(gc.ge1_basis.size() == n);
    }
  }
}

TEST_CASE("gl-centralizer dimension matches the cyclic-basis count, all families") {
  struct Case { PairFamily f; std::size_t p, q; };
  for (const Case& c : {Case{PairFamily::gl_sp, 2, 0}, Case{PairFamily::sp_gl, 2, 0},
                        Case{PairFamily::so_gl, 3, 0}, Case{PairFamily::so_sopq, 2, 3},
                        Case{PairFamily::gl_glpq, 2, 2}}) {
    for (const auto& rep : enumerate_orbit_reps(c.f, c.p, c.q)) {
      std::size_t expected = 0;
      for (std::size_t a : rep.jordan_type.parts)
        for (std::size_t b : rep.jordan_type.parts) expected += std::min(a, b);
      MatrixLieAlgebra ambient = gl(rep.e.rows());
      auto coords = ambient.coords_of(rep.e);
      REQUIRE(coords.has_value());
      CHECK(kernel_basis(ambient.ad_of(*coords)).size() == expected);
    }
  }
}

TEST_CASE("symbolic results are seed-independent") {
  RunConfig a, b;
  a.mode = b.mode = Mode::symbolic;
  a.seed = 1;
  b.seed = 999;
  IndexReport ra = index_of_algebra(borel_gl(4), a);
  IndexReport rb = index_of_algebra(borel_gl(4), b);
  CHECK(ra.index == rb.index);
  CHECK(ra.max_orbit_dim == rb.max_orbit_dim);
}

TEST_CASE("reproduce: unknown ids are rejected") {
  CHECK_THROWS_AS(reproduce("no-such-id", cfg_auto(1)), error);
}

TEST_CASE("identical seeds give identical pair-report JSON") {
  json a = to_json(gnib_check(PairFamily::so_gl, 2, 0, cfg_mc(77)));
  json b = to_json(gnib_check(PairFamily::so_gl, 2, 0, cfg_mc(77)));
  CHECK(a.dump() == b.dump());
}

TEST_CASE("pair and orbit serialization carry the declared fields") {
  SymmetricPair pair = make_pair(PairFamily::sp_gl, 2, 0);
  json pj = to_json(pair);
  CHECK(pj.at("family") == "sp/gln");
  CHECK(pj.at("params").at("p") == 2);
  CHECK(pj.at("g1").size() == pair.g1_basis.size());
  CHECK(pj.at("sigma").at("kind") == "inner-by-conjugation");
  CHECK(algebra_from_json(pj.at("g0")).dim() == 4);

  for (const auto& rep : enumerate_orbit_reps(PairFamily::gl_glpq, 2, 1)) {
    json rj = to_json(rep);
    CHECK(rj.at("partition") == rep.jordan_type.to_string());
    if (rep.diagram.has_value())
      CHECK(rj.at("decoration").size() == rep.diagram->rows.size());
    CHECK(matrix_from_json(rj.at("e")) == rep.e);
  }
  json oj = to_json(enumerate_orbit_reps(PairFamily::gl_so, 3, 0).back());
  CHECK(oj.contains("form"));
}

TEST_CASE("sl2 completion fails inside an algebra without a lowering element") {
  RationalMatrix e12{{0, 1}, {0, 0}};
  MatrixLieAlgebra line(2, {e12}, "line");
  CHECK_THROWS_AS(sl2_complete(line, {Rat(1)}), error);
}

TEST_CASE("montecarlo preconditions are enforced") {
  PolyMatrix m(1, 1, default_var_names(1));
  m.at(0, 0) = Poly::variable(1, 0);
  CHECK_THROWS_AS(generic_rank(m, RankMode::montecarlo, 0, 0), error);
}

TEST_CASE("quotient at zero reproduces the original action") {
  MatrixLieAlgebra g = gl(2);
  Representation std2{g, 2, g.basis()};
  Representation q = quotient_module(std2, {Rat(0), Rat(0)});
  REQUIRE(q.action.size() == std2.action.size());
  for (std::size_t k = 0; k < q.action.size(); ++k)
    CHECK(q.action[k] == std2.action[k]);
}
