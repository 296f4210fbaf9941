#include "indexlab/gnib.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "indexlab/json_io.hpp"
#include "indexlab/rng.hpp"

namespace indexlab {

std::string status_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::equal_certified: return "equal-certified";
    case VerdictStatus::unequal_certified: return "unequal-certified";
    case VerdictStatus::inconclusive: return "inconclusive";
  }
  throw error("unknown status");
}

std::string overall_name(PairReport::Overall o) {
  switch (o) {
    case PairReport::Overall::gnib: return "GNIB";
    case PairReport::Overall::no_gnib: return "no-GNIB";
    case PairReport::Overall::inconclusive: return "inconclusive";
  }
  throw error("unknown overall verdict");
}

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

// linear functional on ambient matrices given by weighted entries
struct EntryFunctional {
  std::vector<std::tuple<std::size_t, std::size_t, long>> terms;

  Rat eval(const RationalMatrix& m) const {
    Rat s = 0;
    for (const auto& [r, c, w] : terms)
      if (m.at(r, c) != 0) s += Rat(w) * m.at(r, c);
    return s;
  }
};

// dim of the odd part of the stabilizer of alpha in the graded centralizer:
// vectors x with alpha([x, g_e]) = 0 whose even component vanishes
std::size_t odd_fixed_dim(const std::vector<RationalMatrix>& ge0,
                          const std::vector<RationalMatrix>& ge1,
                          const std::function<Rat(const RationalMatrix&)>& alpha) {
  std::vector<const RationalMatrix*> all;
  for (const auto& b : ge0) all.push_back(&b);
  for (const auto& b : ge1) all.push_back(&b);
  const std::size_t m = all.size(), m0 = ge0.size();
  RationalMatrix k(m + m0, m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = x + 1; y < m; ++y) {
      Rat v = alpha(commutator(*all[x], *all[y]));
      k.at(x, y) = v;
      k.at(y, x) = -v;
    }
  for (std::size_t j = 0; j < m0; ++j) k.at(m + j, j) = 1;
  return kernel_basis(k).size();
}

// explicit covectors adapted to the cyclic basis: weighted top coefficients
// c_i^{i, d_i} (self blocks) and c_i^{i*, d_i} + c_{i*}^{i, d_i} (sign-linked
// pairs), with weights shared inside a pair and distinct across sites
std::optional<EntryFunctional> adapted_witness(const OrbitRep& rep) {
  const auto& parts = rep.jordan_type.parts;
  auto off = partition_offsets(rep.jordan_type);
  EntryFunctional f;
  long next_weight = 1;
  switch (rep.family) {
    case PairFamily::gl_so:
      for (std::size_t i = 0; i < parts.size(); ++i)
        f.terms.emplace_back(off[i] + parts[i] - 1, off[i], next_weight++);
      return f;
    case PairFamily::gl_sp:
      for (std::size_t i = 0; i < parts.size(); ++i) {
        std::size_t j = rep.decoration.pairing[i];
        if (j < i) continue;
        f.terms.emplace_back(off[i] + parts[i] - 1, off[i], next_weight);
        f.terms.emplace_back(off[j] + parts[j] - 1, off[j], next_weight);
        ++next_weight;
      }
      return f;
    case PairFamily::sp_gl:
      for (std::size_t i = 0; i < parts.size(); ++i) {
        std::size_t j = rep.decoration.pairing[i];
        if (j == i) {
          f.terms.emplace_back(off[i] + parts[i] - 1, off[i], next_weight++);
        } else if (j > i) {
          // c_i^{i*, d} reads the coefficient of e^d w_{i*} in phi(w_i)
          f.terms.emplace_back(off[j] + parts[j] - 1, off[i], next_weight);
          f.terms.emplace_back(off[i] + parts[i] - 1, off[j], next_weight);
          ++next_weight;
        }
      }
      return f;
    default:
      return std::nullopt;
  }
}

// generic covectors supported on the odd coordinates, minimized over a few
// seeded samples (used where no closed-form witness is written down)
std::size_t sampled_witness(const GradedCentralizer& gc, std::uint64_t seed) {
  const std::size_t m0 = gc.ge0_basis.size(), m1 = gc.ge1_basis.size();
  const std::size_t m = m0 + m1;
  std::vector<RationalMatrix> all = gc.ge0_basis;
  all.insert(all.end(), gc.ge1_basis.begin(), gc.ge1_basis.end());
  std::vector<std::vector<Rat>> cols;
  cols.reserve(m);
  for (const auto& b : all) cols.push_back(vec(b));
  SpanSolver span(cols);

  // odd coordinates of all pairwise brackets, computed once
  std::vector<std::vector<std::vector<Rat>>> odd(m);
  for (std::size_t x = 0; x < m; ++x) {
    odd[x].resize(m);
    for (std::size_t y = x + 1; y < m; ++y) {
      auto c = span.coords(vec(commutator(all[x], all[y])));
      check(c.has_value(), "witness: bracket escaped the centralizer");
      odd[x][y] = std::vector<Rat>(c->begin() + static_cast<long>(m0), c->end());
    }
  }

  std::size_t best = m1;
  for (unsigned s = 0; s < 6; ++s) {
    Rng rng(Rng::mix(seed, 0xa11ce + s));
    std::vector<Rat> alpha(m1);
    for (auto& a : alpha) a = Rat(static_cast<long>(rng.below(2000)) - 1000);
    RationalMatrix k(m + m0, m);
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = x + 1; y < m; ++y) {
        if (odd[x][y].empty()) continue;
        Rat v = 0;
        for (std::size_t t = 0; t < m1; ++t)
          if (odd[x][y][t] != 0) v += alpha[t] * odd[x][y][t];
        k.at(x, y) = v;
        k.at(y, x) = -v;
      }
    for (std::size_t j = 0; j < m0; ++j) k.at(m + j, j) = 1;
    best = std::min(best, kernel_basis(k).size());
  }
  return best;
}

} // namespace

OrbitVerdict gnib_at(const OrbitRep& rep, const RunConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  validate_rep(rep);
  SymmetricPair pair = rep.realize();
  const std::size_t target = rank_table(rep.family, rep.p, rep.q);

  GradedCentralizer gc = graded_centralizer(pair, rep.e);

  OrbitVerdict v;
  v.orbit_id = rep.id();
  v.rank_target = target;
  v.dim_ge0 = gc.ge0_basis.size();
  v.dim_ge1 = gc.ge1_basis.size();

  if (auto witness = adapted_witness(rep)) {
    for (const auto& b : gc.ge0_basis)
      check(witness->eval(b) == 0, v.orbit_id + ": witness covector does not vanish on g_{e,0}");
    v.witness_fixed_dim = odd_fixed_dim(
        gc.ge0_basis, gc.ge1_basis,
        [&](const RationalMatrix& m) { return witness->eval(m); });
  } else if (rep.family == PairFamily::so_gl) {
    v.witness_fixed_dim = sampled_witness(gc, cfg.seed);
  }

  IndexReport ir = index_of(gc.action, cfg, target);
  v.index_upper = ir.index;
  v.exact = ir.exact;
  v.certificate = ir.certificate;

  if (v.witness_fixed_dim) {
    // any fixed-point dimension upper-bounds the index
    check(*v.witness_fixed_dim >= target,
          v.orbit_id + ": witness dimension fell below the rank");
    if (*v.witness_fixed_dim < v.index_upper) {
      check(!ir.exact, v.orbit_id + ": witness contradicts the exact index");
      v.index_upper = *v.witness_fixed_dim;
      v.exact = v.index_upper == target;
    }
  }

  if (v.index_upper == target)
    v.status = VerdictStatus::equal_certified;
  else if (v.exact)
    v.status = VerdictStatus::unequal_certified;
  else
    v.status = VerdictStatus::inconclusive;
  v.ms = ms_since(t0);
  return v;
}

PairReport gnib_check(PairFamily family, std::size_t p, std::size_t q,
                      const RunConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  PairReport r;
  r.family = family;
  r.p = p;
  r.q = q;
  r.rank = rank_table(family, p, q);
  SymmetricPair standard = make_pair(family, p, q);
  r.label = standard.label();
  symmetric_rank(standard, cfg);  // table self-check

  auto reps = enumerate_orbit_reps(family, p, q);
  r.orbits.resize(reps.size());
  std::string failure;
  const long n = static_cast<long>(reps.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      r.orbits[static_cast<std::size_t>(i)] = gnib_at(
          reps[static_cast<std::size_t>(i)],
          cfg.with_seed(Rng::mix(cfg.seed, static_cast<std::uint64_t>(i))));
    } catch (const std::exception& ex) {
#pragma omp critical
      if (failure.empty()) failure = ex.what();
    }
  }
  if (!failure.empty()) throw error(failure);

  std::sort(r.orbits.begin(), r.orbits.end(),
            [](const OrbitVerdict& a, const OrbitVerdict& b) {
              return a.orbit_id < b.orbit_id;
            });
  bool all_equal = true, any_unequal = false;
  for (const auto& v : r.orbits) {
    all_equal &= v.status == VerdictStatus::equal_certified;
    any_unequal |= v.status == VerdictStatus::unequal_certified;
  }
  r.overall = any_unequal  ? PairReport::Overall::no_gnib
              : all_equal ? PairReport::Overall::gnib
                          : PairReport::Overall::inconclusive;
  r.gib_corollary = r.overall == PairReport::Overall::gnib;
  r.ms = ms_since(t0);
  return r;
}

DeltaCertificate delta_certificate(ClassicalType type, const Partition& partition,
                                   const RunConfig& cfg) {
  DeltaCertificate out;
  out.report = delta_of(type, partition, cfg);
  out.no_gnib = out.report.delta > 0;
  return out;
}

CharbonnelReport charbonnel_check(ClassicalType type, const Partition& partition,
                                  const RunConfig& cfg) {
  auto [e, form] = nilpotent_in_classical(type, partition);
  MatrixLieAlgebra g = classical_algebra(type, form, e.rows());
  auto coords = g.coords_of(e);
  check(coords.has_value(), "charbonnel: e is not in the algebra");

  std::vector<RationalMatrix> basis;
  for (const auto& c : kernel_basis(g.ad_of(*coords))) basis.push_back(g.element(c));
  MatrixLieAlgebra centralizer(g.ambient(), std::move(basis), g.label() + "_e");

  CharbonnelReport rep;
  rep.partition = partition;
  rep.algebra = g.label();
  rep.rank_g = classical_rank(type, g.ambient());
  // ind g <= ind g_e holds a priori, so the rank is a certified lower bound
  IndexReport ir = index_of(adjoint_rep(centralizer), cfg, rep.rank_g);
  rep.ind_centralizer = ir.index;
  rep.equal = ir.exact && ir.index == rep.rank_g;
  return rep;
}

json to_json(const OrbitVerdict& v) {
  json j{{"orbit", v.orbit_id},
         {"rank", v.rank_target},
         {"index_upper", v.index_upper},
         {"exact", v.exact},
         {"status", status_name(v.status)},
         {"dim_ge0", v.dim_ge0},
         {"dim_ge1", v.dim_ge1},
         {"certificate", to_json(v.certificate)}};
  if (v.witness_fixed_dim) j["witness_fixed_dim"] = *v.witness_fixed_dim;
  return j;
}

json to_json(const PairReport& r) {
  json orbits = json::array();
  for (const auto& v : r.orbits) orbits.push_back(to_json(v));
  return json{{"family", family_code(r.family)},
              {"params", json{{"p", r.p}, {"q", r.q}}},
              {"pair", r.label},
              {"rank", r.rank},
              {"orbits", std::move(orbits)},
              {"overall", overall_name(r.overall)},
              {"gib", r.gib_corollary}};
}

json to_json(const DeltaCertificate& c) {
  return json{{"partition", c.report.partition.to_string()},
              {"pair", c.report.pair_label},
              {"dim_g4", c.report.dim_g4},
              {"dim_s", c.report.dim_s},
              {"dim_se", c.report.dim_se},
              {"rank", c.report.rank},
              {"ind_centralizer", c.report.ind_centralizer},
              {"delta", c.report.delta},
              {"no_gnib", c.no_gnib}};
}

json to_json(const CharbonnelReport& c) {
  return json{{"partition", c.partition.to_string()},
              {"algebra", c.algebra},
              {"ind_centralizer", c.ind_centralizer},
              {"rank", c.rank_g},
              {"equal", c.equal}};
}

std::string to_markdown(const PairReport& r) {
  std::string s = "## " + r.label + "  rank " + std::to_string(r.rank) +
                  "  ->  " + overall_name(r.overall) + "\n\n";
  s += "| orbit | rank | index | status | mode | ms |\n";
  s += "|---|---|---|---|---|---|\n";
  for (const auto& v : r.orbits) {
    std::string idx = std::to_string(v.index_upper) + (v.exact ? "" : " (upper)");
    std::string mode =
        v.certificate.mode == RankMode::symbolic ? "symbolic" : "montecarlo";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", v.ms);
    s += "| " + v.orbit_id + " | " + std::to_string(v.rank_target) + " | " + idx +
         " | " + status_name(v.status) + " | " + mode + " | " + buf + " |\n";
  }
  return s;
}

std::string to_csv(const PairReport& r) {
  std::string s = "orbit,rank,index,status,mode,ms\n";
  for (const auto& v : r.orbits) {
    std::string idx = std::to_string(v.index_upper) + (v.exact ? "" : "+");
    std::string mode =
        v.certificate.mode == RankMode::symbolic ? "symbolic" : "montecarlo";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", v.ms);
    s += "\"" + v.orbit_id + "\"," + std::to_string(v.rank_target) + "," + idx +
         "," + status_name(v.status) + "," + mode + "," + buf + "\n";
  }
  return s;
}

} // namespace indexlab
