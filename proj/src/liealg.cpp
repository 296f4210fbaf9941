#include "indexlab/liealg.hpp"

#include <algorithm>

namespace indexlab {

struct MatrixLieAlgebra::Cache {
  SpanSolver span;
  std::once_flag ad_once;
  std::vector<RationalMatrix> ad;
};

namespace {

std::vector<Rat> unit_coords(std::size_t dim, std::size_t k) {
  std::vector<Rat> c(dim, Rat(0));
  c[k] = 1;
  return c;
}

} // namespace

MatrixLieAlgebra::MatrixLieAlgebra()
    : basis_(std::make_shared<const std::vector<RationalMatrix>>()),
      cache_(std::make_shared<Cache>()) {}

MatrixLieAlgebra::MatrixLieAlgebra(std::size_t ambient,
                                   std::vector<RationalMatrix> basis,
                                   std::string label)
    : ambient_(ambient), label_(std::move(label)) {
  for (const auto& b : basis)
    check(b.rows() == ambient && b.cols() == ambient,
          label_ + ": basis element of wrong ambient size");
  basis_ = std::make_shared<const std::vector<RationalMatrix>>(std::move(basis));
  cache_ = std::make_shared<Cache>();
  std::vector<std::vector<Rat>> cols;
  cols.reserve(basis_->size());
  for (const auto& b : *basis_) cols.push_back(vec(b));
  cache_->span = SpanSolver(cols);
  check(cache_->span.rank() == basis_->size(),
        label_ + ": basis is linearly dependent");
}

RationalMatrix MatrixLieAlgebra::element(const std::vector<Rat>& coords) const {
  check(coords.size() == dim(), label_ + ": coordinate vector of wrong length");
  RationalMatrix m(ambient_, ambient_);
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k] == 0) continue;
    const RationalMatrix& b = (*basis_)[k];
    for (std::size_t i = 0; i < ambient_; ++i)
      for (std::size_t j = 0; j < ambient_; ++j)
        if (b.at(i, j) != 0) m.at(i, j) += coords[k] * b.at(i, j);
  }
  return m;
}

std::optional<std::vector<Rat>> MatrixLieAlgebra::coords_of(const RationalMatrix& m) const {
  check(m.rows() == ambient_ && m.cols() == ambient_,
        label_ + ": matrix of wrong ambient size");
  return cache_->span.coords(vec(m));
}

std::vector<Rat> MatrixLieAlgebra::bracket(const std::vector<Rat>& x,
                                           const std::vector<Rat>& y) const {
  auto c = coords_of(commutator(element(x), element(y)));
  check(c.has_value(), label_ + ": commutator leaves the span (closure violated)");
  return *c;
}

const std::vector<RationalMatrix>& MatrixLieAlgebra::ad_matrices() const {
  std::call_once(cache_->ad_once, [&] {
    const std::size_t d = dim();
    std::vector<RationalMatrix> ad(d, RationalMatrix(d, d));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        auto c = cache_->span.coords(vec(commutator((*basis_)[i], (*basis_)[j])));
        check(c.has_value(), label_ + ": commutator leaves the span (closure violated)");
        for (std::size_t k = 0; k < d; ++k) ad[i].at(k, j) = (*c)[k];
      }
    cache_->ad = std::move(ad);
  });
  return cache_->ad;
}

RationalMatrix MatrixLieAlgebra::ad_of(const std::vector<Rat>& x) const {
  const std::size_t d = dim();
  RationalMatrix m(d, d);
  RationalMatrix X = element(x);
  for (std::size_t j = 0; j < d; ++j) {
    auto c = coords_of(commutator(X, (*basis_)[j]));
    check(c.has_value(), label_ + ": commutator leaves the span (closure violated)");
    for (std::size_t k = 0; k < d; ++k) m.at(k, j) = (*c)[k];
  }
  return m;
}

RationalMatrix Representation::action_of(const std::vector<Rat>& coords) const {
  check(coords.size() == action.size(), "action_of: coordinate length mismatch");
  RationalMatrix m(module_dim, module_dim);
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (coords[k] != 0) m += coords[k] * action[k];
  return m;
}

void Representation::certify() const {
  check(action.size() == algebra.dim(), "representation: one action matrix per basis element");
  for (const auto& a : action)
    check(a.rows() == module_dim && a.cols() == module_dim,
          "representation: action matrix of wrong size");
  const std::size_t d = algebra.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      auto c = algebra.bracket(unit_coords(d, i), unit_coords(d, j));
      check(action_of(c) == commutator(action[i], action[j]),
            "representation does not respect brackets");
    }
}

Representation adjoint_rep(const MatrixLieAlgebra& alg) {
  return Representation{alg, alg.dim(), alg.ad_matrices()};
}

Representation dual(const Representation& rep) {
  Representation d{rep.algebra, rep.module_dim, {}};
  d.action.reserve(rep.action.size());
  for (const auto& a : rep.action) d.action.push_back(-a.transpose());
  return d;
}

Representation coadjoint_rep(const MatrixLieAlgebra& alg) {
  return dual(adjoint_rep(alg));
}

Representation trivial_rep(const MatrixLieAlgebra& alg, std::size_t dim) {
  return Representation{alg, dim,
                        std::vector<RationalMatrix>(alg.dim(), RationalMatrix(dim, dim))};
}

std::vector<std::vector<Rat>> stabilizer_coords(const Representation& rep,
                                                const std::vector<Rat>& v) {
  check(v.size() == rep.module_dim, "stabilizer: vector outside the module");
  RationalMatrix s(rep.module_dim, rep.algebra.dim());
  for (std::size_t k = 0; k < rep.action.size(); ++k) {
    auto col = mat_vec(rep.action[k], v);
    for (std::size_t i = 0; i < rep.module_dim; ++i) s.at(i, k) = col[i];
  }
  return kernel_basis(s);
}

MatrixLieAlgebra stabilizer(const Representation& rep, const std::vector<Rat>& v) {
  auto coords = stabilizer_coords(rep, v);
  std::vector<RationalMatrix> basis;
  basis.reserve(coords.size());
  for (const auto& c : coords) basis.push_back(rep.algebra.element(c));
  MatrixLieAlgebra sub(rep.algebra.ambient(), std::move(basis),
                       rep.algebra.label() + "_v");
  sub.certify_closure();
  return sub;
}

std::vector<std::vector<Rat>> tangent_space(const Representation& rep,
                                            const std::vector<Rat>& v) {
  check(v.size() == rep.module_dim, "tangent_space: vector outside the module");
  std::vector<std::vector<Rat>> basis;
  IncrementalSpan span(rep.module_dim);
  for (const auto& a : rep.action) {
    auto col = mat_vec(a, v);
    if (span.add(col)) basis.push_back(std::move(col));
  }
  return basis;
}

Representation quotient_module(const Representation& rep, const std::vector<Rat>& v) {
  const std::size_t n = rep.module_dim;
  auto tangent = tangent_space(rep, v);
  const std::size_t t = tangent.size();

  IncrementalSpan span(n);
  for (const auto& w : tangent) span.add(w);
  std::vector<std::size_t> complement;
  for (std::size_t i = 0; i < n && complement.size() < n - t; ++i) {
    std::vector<Rat> e(n, Rat(0));
    e[i] = 1;
    if (span.add(e)) complement.push_back(i);
  }
  check(t + complement.size() == n, "quotient_module: complement extension failed");

  std::vector<std::vector<Rat>> frame = tangent;
  for (std::size_t i : complement) {
    std::vector<Rat> e(n, Rat(0));
    e[i] = 1;
    frame.push_back(std::move(e));
  }
  SpanSolver full(frame);

  auto stab_coords = stabilizer_coords(rep, v);
  std::vector<RationalMatrix> stab_basis;
  stab_basis.reserve(stab_coords.size());
  for (const auto& c : stab_coords) stab_basis.push_back(rep.algebra.element(c));
  MatrixLieAlgebra stab_alg(rep.algebra.ambient(), std::move(stab_basis),
                            rep.algebra.label() + "_v");

  const std::size_t q = n - t;
  std::vector<RationalMatrix> action;
  action.reserve(stab_coords.size());
  for (const auto& c : stab_coords) {
    RationalMatrix rho = rep.action_of(c);
    RationalMatrix m(q, q);
    for (std::size_t j = 0; j < q; ++j) {
      std::vector<Rat> col(n, Rat(0));
      col[complement[j]] = 1;
      auto image = mat_vec(rho, col);
      auto in_frame = full.coords(image);
      check(in_frame.has_value(), "quotient_module: image escaped the module");
      for (std::size_t i = 0; i < q; ++i) m.at(i, j) = (*in_frame)[t + i];
    }
    action.push_back(std::move(m));
  }

  Representation out{std::move(stab_alg), q, std::move(action)};
  out.certify();
  return out;
}

PolyMatrix dual_action_matrix(const Representation& rep) {
  const std::size_t n = rep.module_dim, d = rep.algebra.dim();
  PolyMatrix m(n, d, default_var_names(n));
  for (std::size_t k = 0; k < d; ++k) {
    const RationalMatrix& a = rep.action[k];
    for (std::size_t r = 0; r < n; ++r) {
      Poly entry(n);
      for (std::size_t s = 0; s < n; ++s)
        if (a.at(s, r) != 0) {
          Poly::Exps e(n, 0);
          e[s] = 1;
          entry.add_term(e, -a.at(s, r));
        }
      m.at(r, k) = std::move(entry);
    }
  }
  return m;
}

namespace {

IndexReport report_from(const Representation& rep, const RankCertificate& cert,
                        std::size_t lb) {
  IndexReport r;
  r.module_dim = rep.module_dim;
  r.algebra_dim = rep.algebra.dim();
  r.max_orbit_dim = cert.value;
  r.index = rep.module_dim - cert.value;
  r.certificate = cert;
  r.exact = cert.mode == RankMode::symbolic || cert.failure_bound == 0 ||
            r.index == lb;
  check(r.index >= lb, "computed index fell below its certified lower bound");
  return r;
}

} // namespace

IndexReport index_of(const Representation& rep, const RunConfig& cfg,
                     std::size_t known_lower_bound) {
  const std::size_t n = rep.module_dim, d = rep.algebra.dim();
  std::size_t lb = std::max(known_lower_bound, n > d ? n - d : 0);
  PolyMatrix m = dual_action_matrix(rep);
  if (cfg.mode == Mode::symbolic)
    return report_from(rep, generic_rank(m, RankMode::symbolic, cfg.seed,
                                         cfg.trials, cfg.box, cfg.guard),
                       lb);
  IndexReport mc = report_from(
      rep, generic_rank(m, RankMode::montecarlo, cfg.seed, cfg.trials, cfg.box,
                        cfg.guard),
      lb);
  if (cfg.mode == Mode::montecarlo || mc.exact) return mc;
  // automatic escalation; polynomial pivots explode with many covector
  // coordinates, so past a modest count the montecarlo bound stands
  if (m.nvars() > 24) return mc;
  try {
    return report_from(rep, generic_rank(m, RankMode::symbolic, cfg.seed,
                                         cfg.trials, cfg.box, cfg.guard),
                       lb);
  } catch (const error&) {
    return mc;
  }
}

IndexReport index_of_algebra(const MatrixLieAlgebra& alg, const RunConfig& cfg) {
  // Handing index_of the adjoint module makes the assembled covector matrix
  // range over coadjoint orbits, which is the index of the algebra.
  return index_of(adjoint_rep(alg), cfg);
}

VinbergReport check_vinberg(const Representation& rep, const std::vector<Rat>& v,
                            const RunConfig& cfg) {
  VinbergReport out;
  out.lhs = index_of(dual(rep), cfg);
  Representation quo = quotient_module(rep, v);
  out.quotient_dim = quo.module_dim;
  out.quotient_action_trivial = true;
  for (const auto& a : quo.action)
    if (!a.is_zero()) { out.quotient_action_trivial = false; break; }
  out.rhs = index_of(dual(quo), cfg);

  auto lo = [](const IndexReport& r) {
    if (r.exact) return r.index;
    return r.module_dim > r.algebra_dim ? r.module_dim - r.algebra_dim
                                        : std::size_t(0);
  };
  std::size_t lhs_lo = lo(out.lhs), rhs_lo = lo(out.rhs);
  check(out.rhs.index >= lhs_lo,
        "Vinberg inequality violated by certified bounds");
  if (out.rhs.index <= lhs_lo)
    out.verdict = Comparison::equal_certified;
  else if (rhs_lo > out.lhs.index)
    out.verdict = Comparison::unequal_certified;
  else
    out.verdict = Comparison::inconclusive;
  return out;
}

Representation m_copies(const Representation& rep, std::size_t m) {
  check(m >= 1, "m_copies: m must be positive");
  const std::size_t n = rep.module_dim;
  Representation out{rep.algebra, n * m, {}};
  out.action.reserve(rep.action.size());
  for (const auto& a : rep.action) {
    RationalMatrix b(n * m, n * m);
    for (std::size_t c = 0; c < m; ++c)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (a.at(i, j) != 0) b.at(c * n + i, c * n + j) = a.at(i, j);
    out.action.push_back(std::move(b));
  }
  return out;
}

Representation direct_sum(const Representation& a, const Representation& b) {
  check(a.algebra.basis() == b.algebra.basis(),
        "direct_sum: representations of different algebras");
  const std::size_t n = a.module_dim, m = b.module_dim;
  Representation out{a.algebra, n + m, {}};
  out.action.reserve(a.action.size());
  for (std::size_t k = 0; k < a.action.size(); ++k) {
    RationalMatrix s(n + m, n + m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s.at(i, j) = a.action[k].at(i, j);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) s.at(n + i, n + j) = b.action[k].at(i, j);
    out.action.push_back(std::move(s));
  }
  return out;
}

Sl2Triple sl2_complete(const MatrixLieAlgebra& alg, const std::vector<Rat>& e) {
  const std::size_t d = alg.dim();
  check(e.size() == d, "sl2_complete: coordinate length mismatch");
  RationalMatrix E = alg.element(e);
  check(!E.is_zero(), "sl2_complete: e must be nonzero");
  check(is_nilpotent_matrix(E), "sl2_complete: e is not nilpotent");

  RationalMatrix ad_e = alg.ad_of(e);
  RationalMatrix ad_e2 = ad_e * ad_e;
  std::vector<Rat> rhs(d);
  for (std::size_t k = 0; k < d; ++k) rhs[k] = Rat(-2) * e[k];
  auto y = solve(ad_e2, rhs);
  check(y.has_value(), "sl2_complete: e admits no neutral element in the algebra");
  std::vector<Rat> h = mat_vec(ad_e, *y);

  RationalMatrix ad_h = alg.ad_of(h);
  RationalMatrix stacked(2 * d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      stacked.at(i, j) = ad_e.at(i, j);
      stacked.at(d + i, j) = ad_h.at(i, j) + (i == j ? Rat(2) : Rat(0));
    }
  std::vector<Rat> rhs2(2 * d, Rat(0));
  for (std::size_t i = 0; i < d; ++i) rhs2[i] = h[i];
  auto f = solve(stacked, rhs2);
  check(f.has_value(), "sl2_complete: no lowering element in the algebra");

  Sl2Triple t{e, h, *f};
  auto scaled = [&](const std::vector<Rat>& x, long c) {
    std::vector<Rat> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = Rat(c) * x[i];
    return r;
  };
  check(alg.bracket(t.h, t.e) == scaled(t.e, 2), "sl2_complete: [h,e] != 2e");
  check(alg.bracket(t.h, t.f) == scaled(t.f, -2), "sl2_complete: [h,f] != -2f");
  check(alg.bracket(t.e, t.f) == t.h, "sl2_complete: [e,f] != h");
  return t;
}

MatrixLieAlgebra sl2_algebra() {
  RationalMatrix e{{0, 1}, {0, 0}};
  RationalMatrix h{{1, 0}, {0, -1}};
  RationalMatrix f{{0, 0}, {1, 0}};
  return MatrixLieAlgebra(2, {e, h, f}, "sl2");
}

Representation sl2_irrep(std::size_t d) {
  const std::size_t n = d + 1;
  RationalMatrix E(n, n), H(n, n), F(n, n);
  for (std::size_t s = 0; s <= d; ++s) {
    H.at(s, s) = Rat(static_cast<long>(d) - 2 * static_cast<long>(s));
    if (s >= 1) E.at(s - 1, s) = Rat(static_cast<long>(s));
    if (s + 1 <= d) F.at(s + 1, s) = Rat(static_cast<long>(d - s));
  }
  Representation rep{sl2_algebra(), n, {E, H, F}};
  rep.certify();
  return rep;
}

namespace {

RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j) == 0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          if (b.at(p, q) != 0)
            k.at(i * b.rows() + p, j * b.cols() + q) = a.at(i, j) * b.at(p, q);
    }
  return k;
}

} // namespace

Representation tensor_product(const Representation& a, const Representation& b) {
  const std::size_t na = a.algebra.ambient(), nb = b.algebra.ambient();
  std::vector<RationalMatrix> basis;
  basis.reserve(a.algebra.dim() + b.algebra.dim());
  auto embed = [&](const RationalMatrix& m, bool first) {
    RationalMatrix r(na + nb, na + nb);
    std::size_t off = first ? 0 : na;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (m.at(i, j) != 0) r.at(off + i, off + j) = m.at(i, j);
    return r;
  };
  for (const auto& m : a.algebra.basis()) basis.push_back(embed(m, true));
  for (const auto& m : b.algebra.basis()) basis.push_back(embed(m, false));
  MatrixLieAlgebra prod(na + nb, std::move(basis),
                        a.algebra.label() + " x " + b.algebra.label());

  Representation out{std::move(prod), a.module_dim * b.module_dim, {}};
  RationalMatrix ia = RationalMatrix::identity(a.module_dim);
  RationalMatrix ib = RationalMatrix::identity(b.module_dim);
  for (const auto& m : a.action) out.action.push_back(kron(m, ib));
  for (const auto& m : b.action) out.action.push_back(kron(ia, m));
  return out;
}

bool nilpotent_by_weight_certificate(const Representation& rep,
                                     const std::vector<Rat>& v,
                                     const std::vector<Rat>& h_coords) {
  RationalMatrix H = rep.action_of(h_coords);
  const std::size_t n = rep.module_dim;
  // span of the positive-integer eigenspaces of H
  IncrementalSpan positive(n);
  long bound = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rat a = H.at(i, j);
      if (a < 0) a = -a;
      if (a > bound) bound = static_cast<long>(a.get_num().get_si()) + 1;
    }
  for (long lam = 1; lam <= bound * static_cast<long>(n); ++lam) {
    RationalMatrix shifted = H;
    for (std::size_t i = 0; i < n; ++i) shifted.at(i, i) -= Rat(lam);
    for (auto& k : kernel_basis(shifted)) positive.add(std::move(k));
  }
  return positive.contains(v);
}

} // namespace indexlab
