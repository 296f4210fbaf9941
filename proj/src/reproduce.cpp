#include <fstream>
#include <mutex>

#include "indexlab/gnib.hpp"
#include "indexlab/json_io.hpp"
#include "indexlab/rng.hpp"

#ifndef INDEXLAB_DATA_DIR
#define INDEXLAB_DATA_DIR "data"
#endif

namespace indexlab {

namespace {

std::string g_data_dir = INDEXLAB_DATA_DIR;

const json& expected_data() {
  static json data;
  static std::once_flag once;
  std::call_once(once, [] {
    std::string path = g_data_dir + "/expected.json";
    std::ifstream in(path);
    check(in.good(), "cannot open expected-outcome data: " + path);
    in >> data;
  });
  return data;
}

std::vector<Rat> random_coords(Rng& rng, std::size_t n, long box) {
  std::vector<Rat> v(n);
  for (auto& x : v) x = Rat(static_cast<long>(rng.below(2 * box + 1)) - box);
  return v;
}

std::vector<Rat> borel4_covector(const MatrixLieAlgebra& b4) {
  RationalMatrix f(4, 4);
  for (std::size_t i = 0; i + 1 < 4; ++i) f.at(i + 1, i) = 1;
  std::vector<Rat> xi(b4.dim());
  for (std::size_t k = 0; k < b4.dim(); ++k) xi[k] = (f * b4.basis()[k]).trace();
  return xi;
}

ReproduceResult run_borel_gl4(const RunConfig& cfg) {
  const json& exp = expected_data().at("borel-gl4");
  MatrixLieAlgebra b4 = borel_gl(4);
  IndexReport ind = index_of_algebra(b4, cfg);

  auto xi = borel4_covector(b4);
  MatrixLieAlgebra stab = stabilizer(coadjoint_rep(b4), xi);
  bool abelian = true;
  for (const auto& x : stab.basis())
    for (const auto& y : stab.basis())
      abelian &= commutator(x, y).is_zero();
  IndexReport stab_ind = index_of_algebra(stab, cfg);

  json details{{"index", ind.index},
               {"exact", ind.exact},
               {"stabilizer_dim", stab.dim()},
               {"stabilizer_abelian", abelian},
               {"stabilizer_index", stab_ind.index}};
  bool pass = ind.exact && ind.index == exp.at("index").get<std::size_t>() &&
              stab.dim() == exp.at("stabilizer_dim").get<std::size_t>() &&
              abelian == exp.at("stabilizer_abelian").get<bool>() &&
              stab_ind.exact &&
              stab_ind.index == exp.at("stabilizer_index").get<std::size_t>();
  return {"borel-gl4", pass, std::move(details)};
}

ReproduceResult run_sl2xsl2(const RunConfig& cfg) {
  const json& exp = expected_data().at("sl2xsl2");
  Representation rep = tensor_product(sl2_irrep(3), sl2_irrep(1));
  std::vector<Rat> v(8, Rat(0));
  v[0] = 1;
  v[6] = 1;
  std::vector<Rat> h(6, Rat(0));
  h[4] = 1;
  bool nilpotent = nilpotent_by_weight_certificate(rep, v, h);
  VinbergReport vr = check_vinberg(rep, v, cfg);

  json details{{"nilpotency_certificate", nilpotent},
               {"lhs", vr.lhs.index},
               {"rhs", vr.rhs.index},
               {"quotient_dim", vr.quotient_dim},
               {"quotient_trivial", vr.quotient_action_trivial},
               {"verdict", vr.verdict == Comparison::equal_certified
                               ? "equal-certified"
                               : vr.verdict == Comparison::unequal_certified
                                     ? "unequal-certified"
                                     : "inconclusive"}};
  bool pass = nilpotent && vr.lhs.index == exp.at("lhs").get<std::size_t>() &&
              vr.rhs.index == exp.at("rhs").get<std::size_t>() &&
              vr.quotient_dim == exp.at("quotient_dim").get<std::size_t>() &&
              vr.quotient_action_trivial == exp.at("quotient_trivial").get<bool>() &&
              details.at("verdict") == exp.at("verdict");
  return {"sl2xsl2", pass, std::move(details)};
}

ReproduceResult run_mv_gib(const RunConfig& cfg) {
  const json& exp = expected_data().at("mV-gib");
  MatrixLieAlgebra g = gl(2);
  Representation std2{g, 2, g.basis()};
  const std::size_t samples = exp.at("samples_each").get<std::size_t>();
  Rng rng(Rng::mix(cfg.seed, 0x6d76));
  json per_m = json::array();
  bool pass = true;
  for (std::size_t m : exp.at("copies").get<std::vector<std::size_t>>()) {
    Representation rep = m_copies(dual(std2), m);
    std::size_t expect_index = 2 * m - 4;
    std::size_t good = 0;
    for (std::size_t t = 0; t < samples; ++t) {
      auto v = random_coords(rng, rep.module_dim, 5);
      VinbergReport vr = check_vinberg(rep, v, cfg.with_seed(rng.next()));
      if (vr.verdict == Comparison::equal_certified &&
          vr.lhs.index == expect_index && vr.rhs.index == expect_index)
        ++good;
    }
    pass &= good == samples;
    per_m.push_back(json{{"m", m}, {"samples", samples}, {"good", good},
                         {"index", expect_index}});
  }
  return {"mV-gib", pass, json{{"per_m", std::move(per_m)}}};
}

ReproduceResult run_sum_gib(const RunConfig& cfg) {
  const json& exp = expected_data().at("sum-gib");
  MatrixLieAlgebra g = gl(2);
  Representation std2{g, 2, g.basis()};
  // V = 2 copies of the dual standard module has GIB with full-dimensional
  // generic orbits, so any W (x) V inherits GIB
  Representation v = m_copies(dual(std2), 2);
  Representation rep = direct_sum(adjoint_rep(g), v);
  const std::size_t samples = exp.at("samples").get<std::size_t>();
  const std::size_t expect_index = exp.at("index").get<std::size_t>();
  Rng rng(Rng::mix(cfg.seed, 0x5567));
  std::size_t good = 0;
  for (std::size_t t = 0; t < samples; ++t) {
    auto w = random_coords(rng, rep.module_dim, 4);
    VinbergReport vr = check_vinberg(rep, w, cfg.with_seed(rng.next()));
    if (vr.verdict == Comparison::equal_certified && vr.lhs.index == expect_index &&
        vr.rhs.index == expect_index)
      ++good;
  }
  json details{{"samples", samples}, {"good", good}, {"index", expect_index}};
  return {"sum-gib", good == samples, std::move(details)};
}

ReproduceResult run_rank1(const RunConfig& cfg) {
  const json& exp = expected_data().at("rank1-orbits");
  const std::size_t n_min = exp.at("n_min").get<std::size_t>();
  const std::size_t n_max = exp.at("n_max").get<std::size_t>();
  json rows = json::array();
  bool pass = true;
  struct Fam { PairFamily f; const char* key; };
  for (std::size_t n = n_min; n <= n_max; ++n) {
    for (const Fam& fam : {Fam{PairFamily::gl_glpq, "gl"},
                           Fam{PairFamily::sp_sppq, "sp"},
                           Fam{PairFamily::so_sopq, "so"}}) {
      PairReport r = gnib_check(fam.f, n - 1, 1, cfg);
      std::size_t nonzero = 0;
      for (const auto& rep : enumerate_orbit_reps(fam.f, n - 1, 1))
        if (!rep.e.is_zero()) ++nonzero;
      bool row_ok = nonzero == exp.at(fam.key).get<std::size_t>() &&
                    r.overall == PairReport::Overall::gnib &&
                    r.rank == exp.at("rank").get<std::size_t>();
      pass &= row_ok;
      rows.push_back(json{{"pair", r.label},
                          {"nonzero_orbits", nonzero},
                          {"overall", overall_name(r.overall)},
                          {"rank", r.rank},
                          {"ok", row_ok}});
    }
  }
  return {"rank1-orbits", pass, json{{"rows", std::move(rows)}}};
}

// shared driver for the three rank-3 certificates
ReproduceResult run_rk3(const std::string& id, PairFamily family, std::size_t p,
                        std::size_t q, const Partition& type, bool check_dims,
                        const RunConfig& cfg) {
  const json& exp = expected_data().at(id);
  json orbit_rows = json::array();
  bool found_bad = false, pass = true;
  for (const auto& rep : enumerate_orbit_reps(family, p, q)) {
    if (!(rep.jordan_type == type)) continue;
    OrbitVerdict v = gnib_at(rep, cfg);
    json row = to_json(v);
    if (v.status == VerdictStatus::unequal_certified) {
      found_bad = true;
      pass &= v.exact && v.index_upper == exp.at("index").get<std::size_t>();
      if (check_dims) {
        pass &= v.dim_ge0 == exp.at("dim_ge0").get<std::size_t>();
        pass &= v.dim_ge1 == exp.at("dim_ge1").get<std::size_t>();
      }
    }
    orbit_rows.push_back(std::move(row));
  }
  pass &= found_bad;
  json details{{"partition", type.to_string()},
               {"rank", rank_table(family, p, q)},
               {"orbits", std::move(orbit_rows)},
               {"no_gnib_certified", found_bad}};
  return {id, pass, std::move(details)};
}

ReproduceResult run_table(const RunConfig& cfg, std::size_t max_n) {
  const json& exp = expected_data().at("sl-n-table");
  const std::size_t good_p = exp.at("glpq_good_p_max").get<std::size_t>();
  const bool gl33_good = exp.at("gl33_good").get<bool>();
  json rows = json::array();
  bool pass = true;
  auto record = [&](const PairReport& r, bool expect_gnib) {
    bool ok = (r.overall == PairReport::Overall::gnib) == expect_gnib &&
              r.overall != PairReport::Overall::inconclusive;
    pass &= ok;
    rows.push_back(json{{"pair", r.label},
                        {"overall", overall_name(r.overall)},
                        {"expected", expect_gnib ? "GNIB" : "no-GNIB"},
                        {"ok", ok}});
  };
  for (std::size_t n = 2; n <= max_n; ++n) {
    record(gnib_check(PairFamily::gl_so, n, 0, cfg), true);
    if (n % 2 == 0) record(gnib_check(PairFamily::gl_sp, n / 2, 0, cfg), true);
    for (std::size_t p = 1; 2 * p <= n; ++p) {
      bool expect = p <= good_p || (gl33_good && p == 3 && n - p == 3);
      record(gnib_check(PairFamily::gl_glpq, p, n - p, cfg), expect);
    }
  }
  return {"sl-n-table", pass, json{{"max", max_n}, {"rows", std::move(rows)}}};
}

ReproduceResult run_remark(const std::string& id,
                           const std::vector<std::array<std::size_t, 2>>& params,
                           PairFamily family, const RunConfig& cfg) {
  const json& exp = expected_data().at(id);
  bool expect_gnib = exp.get<std::string>() == "GNIB";
  json rows = json::array();
  bool pass = true;
  for (const auto& [p, q] : params) {
    PairReport r = gnib_check(family, p, q, cfg);
    bool ok = (r.overall == PairReport::Overall::gnib) == expect_gnib &&
              r.overall != PairReport::Overall::inconclusive;
    pass &= ok;
    rows.push_back(json{{"pair", r.label}, {"overall", overall_name(r.overall)}, {"ok", ok}});
  }
  return {id, pass, json{{"rows", std::move(rows)}}};
}

ReproduceResult run_delta(const std::string& id, ClassicalType type,
                          const RunConfig& cfg) {
  const json& exp = expected_data().at(id);
  json rows = json::array();
  bool pass = true;
  if (id == "delta-sp") {
    Partition part = Partition::parse(exp.at("partition").get<std::string>());
    DeltaCertificate c = delta_certificate(type, part, cfg);
    pass = c.no_gnib == exp.at("positive").get<bool>();
    rows.push_back(to_json(c));
  } else {
    for (auto it = exp.begin(); it != exp.end(); ++it) {
      Partition part = Partition::parse(it.key());
      DeltaCertificate c = delta_certificate(type, part, cfg);
      bool ok = c.report.delta == it.value().get<long>() && c.no_gnib;
      pass &= ok;
      json row = to_json(c);
      row["ok"] = ok;
      rows.push_back(std::move(row));
    }
  }
  return {id, pass, json{{"rows", std::move(rows)}}};
}

ReproduceResult run_charbonnel(const RunConfig& cfg) {
  const json& exp = expected_data().at("charbonnel");
  json rows = json::array();
  bool pass = true;
  auto sweep = [&](ClassicalType type, std::size_t ambient, auto&& admissible) {
    for (const Partition& part : partitions(ambient)) {
      if (!admissible(part)) continue;
      CharbonnelReport r = charbonnel_check(type, part, cfg);
      pass &= r.equal;
      rows.push_back(to_json(r));
    }
  };
  for (std::size_t n = 1; n <= exp.at("gl_max").get<std::size_t>(); ++n)
    sweep(ClassicalType::gl, n, [](const Partition&) { return true; });
  for (std::size_t n = 2; n <= exp.at("so_max").get<std::size_t>(); ++n)
    sweep(ClassicalType::so, n, so_admissible);
  for (std::size_t n = 1; n <= exp.at("sp_max").get<std::size_t>(); ++n)
    sweep(ClassicalType::sp, 2 * n, sp_admissible);
  return {"charbonnel", pass, json{{"rows", std::move(rows)}}};
}

ReproduceResult run_family_sweep(const std::string& id, PairFamily family,
                                 const std::vector<std::array<std::size_t, 2>>& params,
                                 const RunConfig& cfg) {
  json rows = json::array();
  bool pass = true;
  for (const auto& [p, q] : params) {
    PairReport r = gnib_check(family, p, q, cfg);
    bool ok = r.overall == PairReport::Overall::gnib &&
              r.rank == rank_table(family, p, q);
    for (const auto& v : r.orbits) ok &= v.status == VerdictStatus::equal_certified;
    pass &= ok;
    rows.push_back(json{{"pair", r.label},
                        {"rank", r.rank},
                        {"orbits", r.orbits.size()},
                        {"overall", overall_name(r.overall)},
                        {"ok", ok}});
  }
  return {id, pass, json{{"rows", std::move(rows)}}};
}

ReproduceResult run_properties(const RunConfig& cfg) {
  const json& exp = expected_data().at("property-suites");
  MatrixLieAlgebra g2 = gl(2);
  Representation std2{g2, 2, g2.basis()};
  json details;
  bool pass = true;

  {  // Vinberg inequality on random representations and points
    const std::size_t n = exp.at("vinberg").get<std::size_t>();
    Rng rng(Rng::mix(cfg.seed, 0x7619));
    std::vector<Representation> reps = {std2, dual(std2), adjoint_rep(g2),
                                        direct_sum(std2, adjoint_rep(g2))};
    std::size_t good = 0;
    for (std::size_t t = 0; t < n; ++t) {
      const Representation& rep = reps[t % reps.size()];
      auto v = random_coords(rng, rep.module_dim, 4);
      VinbergReport vr = check_vinberg(rep, v, cfg.with_seed(rng.next()));
      if (vr.rhs.index >= vr.lhs.index) ++good;  // certified bounds never cross
    }
    pass &= good == n;
    details["vinberg"] = json{{"samples", n}, {"good", good}};
  }

  {  // graded dimension identity for coadjoint stabilizers
    const std::size_t n = exp.at("z2").get<std::size_t>();
    Rng rng(Rng::mix(cfg.seed, 0x22aa));
    std::vector<SymmetricPair> pairs;
    pairs.push_back(outer_pair(3, FormKind::symmetric));
    pairs.push_back(outer_pair(4, FormKind::skew));
    pairs.push_back(inner_pair(PairFamily::sp_gl, 2, 0));
    pairs.push_back(inner_pair(PairFamily::so_gl, 2, 0));
    pairs.push_back(inner_pair(PairFamily::gl_glpq, 2, 2));
    std::size_t good = 0;
    for (std::size_t t = 0; t < n; ++t) {
      const SymmetricPair& pair = pairs[t % pairs.size()];
      std::vector<RationalMatrix> adapted = pair.g0_basis;
      adapted.insert(adapted.end(), pair.g1_basis.begin(), pair.g1_basis.end());
      MatrixLieAlgebra q(pair.g.ambient(), adapted, "adapted");
      std::vector<Rat> xi(q.dim(), Rat(0));
      for (std::size_t i = pair.g0_basis.size(); i < q.dim(); ++i)
        xi[i] = Rat(static_cast<long>(rng.below(11)) - 5);
      MatrixLieAlgebra stab = stabilizer(coadjoint_rep(q), xi);
      auto [even, odd] = sigma_split(pair.sigma, stab.basis());
      long lhs = static_cast<long>(pair.g0_basis.size()) -
                 static_cast<long>(pair.g1_basis.size());
      if (static_cast<long>(even.size()) - static_cast<long>(odd.size()) == lhs)
        ++good;
    }
    pass &= good == n;
    details["z2"] = json{{"samples", n}, {"good", good}};
  }

  {  // rank-nullity for stabilizers and tangent spaces
    const std::size_t n = exp.at("rank_nullity").get<std::size_t>();
    Rng rng(Rng::mix(cfg.seed, 0x4417));
    MatrixLieAlgebra g3 = gl(3);
    Representation std3{g3, 3, g3.basis()};
    std::vector<Representation> reps = {std2, std3, adjoint_rep(g2)};
    std::size_t good = 0;
    for (std::size_t t = 0; t < n; ++t) {
      const Representation& rep = reps[t % reps.size()];
      auto v = random_coords(rng, rep.module_dim, 6);
      if (tangent_space(rep, v).size() + stabilizer_coords(rep, v).size() ==
          rep.algebra.dim())
        ++good;
    }
    pass &= good == n;
    details["rank_nullity"] = json{{"samples", n}, {"good", good}};
  }

  {  // index of large reducible modules, all sampled points good
    const std::size_t n = exp.at("big_modules_each").get<std::size_t>();
    Rng rng(Rng::mix(cfg.seed, 0x1909));
    json per_m = json::array();
    for (std::size_t m : {2UL, 3UL}) {
      Representation rep = m_copies(dual(std2), m);
      std::size_t expect = 2 * m - 4, good = 0;
      for (std::size_t t = 0; t < n; ++t) {
        auto v = random_coords(rng, rep.module_dim, 5);
        VinbergReport vr = check_vinberg(rep, v, cfg.with_seed(rng.next()));
        if (vr.verdict == Comparison::equal_certified && vr.lhs.index == expect)
          ++good;
      }
      pass &= good == n;
      per_m.push_back(json{{"m", m}, {"samples", n}, {"good", good}});
    }
    details["big_modules"] = std::move(per_m);
  }

  return {"property-suites", pass, std::move(details)};
}

} // namespace

void set_data_dir(const std::string& dir) { g_data_dir = dir; }
const std::string& data_dir() { return g_data_dir; }

std::vector<std::string> reproduce_ids() {
  return {"borel-gl4",  "sl2xsl2",    "mV-gib",      "sum-gib",
          "rank1-orbits", "rk3-gl",   "rk3-so",      "rk3-sp",
          "sl-n-table", "remark-gl2", "remark-gl33", "remark-so2",
          "remark-so33", "remark-sp4", "remark-sp66", "delta-gl",
          "delta-so",   "delta-sp",   "charbonnel",  "gnib-gl-so",
          "gnib-gl-sp", "gnib-sp-gl", "gnib-so-gl",  "property-suites"};
}

ReproduceResult reproduce(const std::string& id, const RunConfig& cfg,
                          std::size_t table_max) {
  using Params = std::vector<std::array<std::size_t, 2>>;
  if (id == "borel-gl4") return run_borel_gl4(cfg);
  if (id == "sl2xsl2") return run_sl2xsl2(cfg);
  if (id == "mV-gib") return run_mv_gib(cfg);
  if (id == "sum-gib") return run_sum_gib(cfg);
  if (id == "rank1-orbits") return run_rank1(cfg);
  if (id == "rk3-gl")
    return run_rk3("rk3-gl", PairFamily::gl_glpq, 3, 4, Partition::parse("3,3,1"),
                   true, cfg);
  if (id == "rk3-so")
    return run_rk3("rk3-so", PairFamily::so_sopq, 3, 4, Partition::parse("3,3,1"),
                   false, cfg);
  if (id == "rk3-sp")
    return run_rk3("rk3-sp", PairFamily::sp_sppq, 3, 4,
                   Partition::parse("3,3,3,3,1,1"), false, cfg);
  if (id == "sl-n-table") return run_table(cfg, table_max);
  if (id == "remark-gl2")
    return run_remark("remark-gl2", Params{{2, 2}, {2, 3}, {2, 4}},
                      PairFamily::gl_glpq, cfg);
  if (id == "remark-gl33")
    return run_remark("remark-gl33", Params{{3, 3}}, PairFamily::gl_glpq, cfg);
  if (id == "remark-so2")
    return run_remark("remark-so2", Params{{2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}},
                      PairFamily::so_sopq, cfg);
  if (id == "remark-so33")
    return run_remark("remark-so33", Params{{3, 3}}, PairFamily::so_sopq, cfg);
  if (id == "remark-sp4")
    return run_remark("remark-sp4", Params{{2, 1}, {2, 2}}, PairFamily::sp_sppq, cfg);
  if (id == "remark-sp66")
    return run_remark("remark-sp66", Params{{3, 3}}, PairFamily::sp_sppq, cfg);
  if (id == "delta-gl") return run_delta("delta-gl", ClassicalType::gl, cfg);
  if (id == "delta-so") return run_delta("delta-so", ClassicalType::so, cfg);
  if (id == "delta-sp") return run_delta("delta-sp", ClassicalType::sp, cfg);
  if (id == "charbonnel") return run_charbonnel(cfg);
  if (id == "gnib-gl-so")
    return run_family_sweep("gnib-gl-so", PairFamily::gl_so,
                            Params{{2, 0}, {3, 0}, {4, 0}, {5, 0}, {6, 0}}, cfg);
  if (id == "gnib-gl-sp")
    return run_family_sweep("gnib-gl-sp", PairFamily::gl_sp,
                            Params{{1, 0}, {2, 0}, {3, 0}}, cfg);
  if (id == "gnib-sp-gl")
    return run_family_sweep("gnib-sp-gl", PairFamily::sp_gl,
                            Params{{1, 0}, {2, 0}, {3, 0}, {4, 0}}, cfg);
  if (id == "gnib-so-gl")
    return run_family_sweep("gnib-so-gl", PairFamily::so_gl,
                            Params{{2, 0}, {3, 0}, {4, 0}}, cfg);
  if (id == "property-suites") return run_properties(cfg);
  throw error("unknown reproduction id: " + id);
}

json reproduce_all(const RunConfig& cfg, std::size_t table_max) {
  json results = json::array();
  bool pass = true;
  for (const std::string& id : reproduce_ids()) {
    ReproduceResult r = reproduce(id, cfg, table_max);
    pass &= r.pass;
    results.push_back(json{{"id", r.id}, {"pass", r.pass}, {"details", r.details}});
  }
  return json{{"seed", cfg.seed}, {"pass", pass}, {"results", std::move(results)}};
}

} // namespace indexlab
