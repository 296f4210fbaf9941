#include "indexlab/pairs.hpp"

#include <algorithm>
#include <tuple>

#include "indexlab/rng.hpp"

namespace indexlab {

void BilinearForm::certify() const {
  check(J.is_square(), "bilinear form matrix must be square");
  RationalMatrix t = J.transpose();
  if (kind == FormKind::symmetric)
    check(t == J, "form is not symmetric");
  else
    check(t == -J, "form is not skew");
  check(rank(J) == J.rows(), "form is degenerate");
}

BilinearForm antidiag_symmetric(std::size_t n) {
  RationalMatrix j(n, n);
  for (std::size_t i = 0; i < n; ++i) j.at(i, n - 1 - i) = 1;
  return BilinearForm{std::move(j), FormKind::symmetric};
}

BilinearForm antidiag_skew(std::size_t n) {
  check(n % 2 == 0, "skew form needs even dimension");
  RationalMatrix j(n, n);
  for (std::size_t i = 0; i < n / 2; ++i) {
    j.at(i, n - 1 - i) = 1;
    j.at(n - 1 - i, i) = -1;
  }
  return BilinearForm{std::move(j), FormKind::skew};
}

MatrixLieAlgebra gl(std::size_t n) {
  std::vector<RationalMatrix> basis;
  basis.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      RationalMatrix e(n, n);
      e.at(i, j) = 1;
      basis.push_back(std::move(e));
    }
  return MatrixLieAlgebra(n, std::move(basis), "gl" + std::to_string(n));
}

MatrixLieAlgebra sl(std::size_t n) {
  std::vector<RationalMatrix> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      RationalMatrix e(n, n);
      e.at(i, j) = 1;
      basis.push_back(std::move(e));
    }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    RationalMatrix h(n, n);
    h.at(i, i) = 1;
    h.at(i + 1, i + 1) = -1;
    basis.push_back(std::move(h));
  }
  return MatrixLieAlgebra(n, std::move(basis), "sl" + std::to_string(n));
}

MatrixLieAlgebra borel_gl(std::size_t n) {
  std::vector<RationalMatrix> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      RationalMatrix e(n, n);
      e.at(i, j) = 1;
      basis.push_back(std::move(e));
    }
  return MatrixLieAlgebra(n, std::move(basis), "b" + std::to_string(n));
}

MatrixLieAlgebra diagonal_torus(std::size_t n) {
  std::vector<RationalMatrix> basis;
  for (std::size_t i = 0; i < n; ++i) {
    RationalMatrix e(n, n);
    e.at(i, i) = 1;
    basis.push_back(std::move(e));
  }
  return MatrixLieAlgebra(n, std::move(basis), "t" + std::to_string(n));
}

namespace {

// basis of { A : A^t J + J A = 0 }
MatrixLieAlgebra form_algebra(const BilinearForm& form, const std::string& label) {
  form.certify();
  const std::size_t n = form.J.rows();
  // vec() is column-major: coordinate (i,j) -> j*n + i
  RationalMatrix eq(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t row = j * n + i;
      for (std::size_t k = 0; k < n; ++k) {
        if (form.J.at(k, j) != 0) eq.at(row, i * n + k) += form.J.at(k, j);
        if (form.J.at(i, k) != 0) eq.at(row, j * n + k) += form.J.at(i, k);
      }
    }
  std::vector<RationalMatrix> basis;
  for (auto& v : kernel_basis(eq)) basis.push_back(unvec(v, n, n));
  return MatrixLieAlgebra(n, std::move(basis), label);
}

} // namespace

MatrixLieAlgebra so(const BilinearForm& form, const std::string& label) {
  check(form.kind == FormKind::symmetric, "so() requires a symmetric form");
  std::string l = label.empty() ? "so" + std::to_string(form.J.rows()) : label;
  MatrixLieAlgebra a = form_algebra(form, l);
  check(a.dim() == form.J.rows() * (form.J.rows() - 1) / 2, "so dimension check failed");
  return a;
}

MatrixLieAlgebra sp(const BilinearForm& form, const std::string& label) {
  check(form.kind == FormKind::skew, "sp() requires a skew form");
  const std::size_t n = form.J.rows();
  std::string l = label.empty() ? "sp" + std::to_string(n) : label;
  MatrixLieAlgebra a = form_algebra(form, l);
  check(a.dim() == n / 2 * (n + 1), "sp dimension check failed");
  return a;
}

RationalMatrix Involution::apply(const RationalMatrix& a) const {
  if (kind == Kind::outer_by_form) {
    // -J^{-1} A^t J without forming the inverse: solve J X = A^t J
    RationalMatrix rhs = a.transpose() * form.J;
    RationalMatrix x(a.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
      std::vector<Rat> col(a.rows());
      for (std::size_t i = 0; i < a.rows(); ++i) col[i] = rhs.at(i, j);
      auto s = solve(form.J, col);
      check(s.has_value(), "outer involution: singular form");
      for (std::size_t i = 0; i < a.rows(); ++i) x.at(i, j) = -(*s)[i];
    }
    return x;
  }
  return conjugator * a * conjugator;
}

std::string family_code(PairFamily f) {
  switch (f) {
    case PairFamily::gl_so: return "gl/so";
    case PairFamily::gl_sp: return "gl/sp";
    case PairFamily::sp_gl: return "sp/gln";
    case PairFamily::so_gl: return "so/gln";
    case PairFamily::gl_glpq: return "gl/glpq";
    case PairFamily::so_sopq: return "so/sopq";
    case PairFamily::sp_sppq: return "sp/sppq";
  }
  throw error("unknown family");
}

PairFamily family_from_code(const std::string& code) {
  if (code == "gl/so") return PairFamily::gl_so;
  if (code == "gl/sp") return PairFamily::gl_sp;
  if (code == "sp/gln") return PairFamily::sp_gl;
  if (code == "so/gln") return PairFamily::so_gl;
  if (code == "gl/glpq") return PairFamily::gl_glpq;
  if (code == "so/sopq") return PairFamily::so_sopq;
  if (code == "sp/sppq") return PairFamily::sp_sppq;
  throw error("unsupported family code: " + code);
}

std::string SymmetricPair::label() const {
  auto s = [](std::size_t k) { return std::to_string(k); };
  switch (family) {
    case PairFamily::gl_so: return "(gl" + s(p) + ", so" + s(p) + ")";
    case PairFamily::gl_sp: return "(gl" + s(2 * p) + ", sp" + s(2 * p) + ")";
    case PairFamily::sp_gl: return "(sp" + s(2 * p) + ", gl" + s(p) + ")";
    case PairFamily::so_gl: return "(so" + s(2 * p) + ", gl" + s(p) + ")";
    case PairFamily::gl_glpq:
      return "(gl" + s(p + q) + ", gl" + s(p) + " x gl" + s(q) + ")";
    case PairFamily::so_sopq:
      return "(so" + s(p + q) + ", so" + s(p) + " x so" + s(q) + ")";
    case PairFamily::sp_sppq:
      return "(sp" + s(2 * p + 2 * q) + ", sp" + s(2 * p) + " x sp" + s(2 * q) + ")";
  }
  throw error("unknown family");
}

MatrixLieAlgebra SymmetricPair::g0_algebra() const {
  return MatrixLieAlgebra(g.ambient(), g0_basis, label() + ".g0");
}

void SymmetricPair::certify() const {
  const std::size_t d = g.dim();
  check(g0_coords.size() + g1_coords.size() == d,
        label() + ": eigenspace dimensions do not fill g");
  for (const auto& b : g.basis()) {
    RationalMatrix s = sigma.apply(b);
    check(g.contains(s), label() + ": sigma does not preserve g");
    check(sigma.apply(s) == b, label() + ": sigma is not involutive");
  }
  for (const auto& b : g0_basis)
    check(sigma.apply(b) == b, label() + ": g0 element not sigma-fixed");
  for (const auto& b : g1_basis)
    check(sigma.apply(b) == -b, label() + ": g1 element not sigma-negated");

  // bracket-grading inclusions, via sigma-eigenvalue of the commutator
  auto check_bracket = [&](const RationalMatrix& x, const RationalMatrix& y, int sign) {
    RationalMatrix c = commutator(x, y);
    check(g.contains(c), label() + ": bracket leaves g");
    RationalMatrix sc = sigma.apply(c);
    check(sign > 0 ? sc == c : sc == -c, label() + ": bracket grading violated");
  };
  std::size_t n0 = g0_basis.size(), n1 = g1_basis.size();
  if (d <= 30) {
    for (std::size_t i = 0; i < n0; ++i)
      for (std::size_t j = 0; j < n0; ++j) check_bracket(g0_basis[i], g0_basis[j], +1);
    for (std::size_t i = 0; i < n0; ++i)
      for (std::size_t j = 0; j < n1; ++j) check_bracket(g0_basis[i], g1_basis[j], -1);
    for (std::size_t i = 0; i < n1; ++i)
      for (std::size_t j = 0; j < n1; ++j) check_bracket(g1_basis[i], g1_basis[j], +1);
  } else {
    Rng rng(0xfeed);
    for (int t = 0; t < 200; ++t) {
      std::size_t i = rng.below(n0 + n1), j = rng.below(n0 + n1);
      const RationalMatrix& x = i < n0 ? g0_basis[i] : g1_basis[i - n0];
      const RationalMatrix& y = j < n0 ? g0_basis[j] : g1_basis[j - n0];
      int sign = ((i < n0) == (j < n0)) ? +1 : -1;
      check_bracket(x, y, sign);
    }
  }
}

std::size_t rank_table(PairFamily f, std::size_t p, std::size_t q) {
  switch (f) {
    case PairFamily::gl_so: return p;
    case PairFamily::gl_sp: return p;
    case PairFamily::sp_gl: return p;
    case PairFamily::so_gl: return p / 2;
    case PairFamily::gl_glpq:
    case PairFamily::so_sopq:
    case PairFamily::sp_sppq: return std::min(p, q);
  }
  throw error("unknown family");
}

namespace {

SymmetricPair split_pair(PairFamily family, std::size_t p, std::size_t q,
                         MatrixLieAlgebra g, Involution sigma) {
  SymmetricPair pair;
  pair.family = family;
  pair.p = p;
  pair.q = q;
  pair.g = std::move(g);
  pair.sigma = std::move(sigma);

  const std::size_t d = pair.g.dim();
  RationalMatrix s(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    auto c = pair.g.coords_of(pair.sigma.apply(pair.g.basis()[k]));
    check(c.has_value(), "involution does not preserve the algebra");
    for (std::size_t i = 0; i < d; ++i) s.at(i, k) = (*c)[i];
  }
  RationalMatrix plus = s, minus = s;
  for (std::size_t i = 0; i < d; ++i) {
    plus.at(i, i) -= 1;
    minus.at(i, i) += 1;
  }
  pair.g0_coords = kernel_basis(plus);
  pair.g1_coords = kernel_basis(minus);
  for (const auto& c : pair.g0_coords) pair.g0_basis.push_back(pair.g.element(c));
  for (const auto& c : pair.g1_coords) pair.g1_basis.push_back(pair.g.element(c));
  check(pair.g0_coords.size() + pair.g1_coords.size() == d,
        pair.label() + ": sigma eigenspaces do not fill g");
  return pair;
}

RationalMatrix block_sign_matrix(std::size_t plus, std::size_t minus) {
  RationalMatrix d(plus + minus, plus + minus);
  for (std::size_t i = 0; i < plus; ++i) d.at(i, i) = 1;
  for (std::size_t i = plus; i < plus + minus; ++i) d.at(i, i) = -1;
  return d;
}

BilinearForm block_diag_form(const BilinearForm& a, const BilinearForm& b) {
  check(a.kind == b.kind, "mixed form kinds");
  const std::size_t n = a.J.rows(), m = b.J.rows();
  RationalMatrix j(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) j.at(i, k) = a.J.at(i, k);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k) j.at(n + i, n + k) = b.J.at(i, k);
  return BilinearForm{std::move(j), a.kind};
}

} // namespace

SymmetricPair outer_pair(std::size_t n, FormKind kind) {
  BilinearForm form =
      kind == FormKind::symmetric ? antidiag_symmetric(n) : antidiag_skew(n);
  Involution sigma{Involution::Kind::outer_by_form, form, RationalMatrix()};
  PairFamily fam = kind == FormKind::symmetric ? PairFamily::gl_so : PairFamily::gl_sp;
  std::size_t p = kind == FormKind::symmetric ? n : n / 2;
  SymmetricPair pair = split_pair(fam, p, 0, gl(n), std::move(sigma));
  std::size_t d0 = kind == FormKind::symmetric ? n * (n - 1) / 2 : n / 2 * (n + 1);
  check(pair.g0_coords.size() == d0, pair.label() + ": g0 dimension check failed");
  return pair;
}

SymmetricPair inner_pair(PairFamily family, std::size_t p, std::size_t q) {
  MatrixLieAlgebra g;
  RationalMatrix d;
  std::size_t dim0 = 0;
  switch (family) {
    case PairFamily::gl_glpq:
      check(p >= 1 && q >= 1, "gl/glpq needs positive block sizes");
      g = gl(p + q);
      d = block_sign_matrix(p, q);
      dim0 = p * p + q * q;
      break;
    case PairFamily::sp_gl: {
      check(p >= 1, "sp/gln needs n >= 1");
      g = sp(antidiag_skew(2 * p));
      d = block_sign_matrix(p, p);
      dim0 = p * p;
      break;
    }
    case PairFamily::so_gl: {
      check(p >= 1, "so/gln needs n >= 1");
      g = so(antidiag_symmetric(2 * p));
      d = block_sign_matrix(p, p);
      dim0 = p * p;
      break;
    }
    case PairFamily::so_sopq: {
      check(p + q >= 2 && p >= 1, "so/sopq needs p >= 1 and p + q >= 2");
      g = so(block_diag_form(antidiag_symmetric(p), antidiag_symmetric(q)),
             "so" + std::to_string(p + q));
      d = block_sign_matrix(p, q);
      dim0 = p * (p - 1) / 2 + q * (q - 1) / 2;
      break;
    }
    case PairFamily::sp_sppq: {
      check(p >= 1 && q >= 1, "sp/sppq needs positive block sizes");
      g = sp(block_diag_form(antidiag_skew(2 * p), antidiag_skew(2 * q)),
             "sp" + std::to_string(2 * p + 2 * q));
      d = block_sign_matrix(2 * p, 2 * q);
      dim0 = p * (2 * p + 1) + q * (2 * q + 1);
      break;
    }
    default:
      throw error("inner_pair: outer family requested");
  }
  Involution sigma{Involution::Kind::inner_by_conjugation, BilinearForm{}, std::move(d)};
  SymmetricPair pair = split_pair(family, p, q, std::move(g), std::move(sigma));
  check(pair.g0_coords.size() == dim0, pair.label() + ": g0 dimension check failed");
  return pair;
}

SymmetricPair make_pair(PairFamily family, std::size_t p, std::size_t q) {
  if (family == PairFamily::gl_so) return outer_pair(p, FormKind::symmetric);
  if (family == PairFamily::gl_sp) return outer_pair(2 * p, FormKind::skew);
  return inner_pair(family, p, q);
}

SymmetricPair pair_from_involution(PairFamily family, std::size_t p, std::size_t q,
                                   MatrixLieAlgebra g, Involution sigma) {
  return split_pair(family, p, q, std::move(g), std::move(sigma));
}

Representation isotropy_rep(const SymmetricPair& pair) {
  MatrixLieAlgebra g0 = pair.g0_algebra();
  const std::size_t m = pair.g1_basis.size();
  std::vector<std::vector<Rat>> cols;
  cols.reserve(m);
  for (const auto& y : pair.g1_basis) cols.push_back(vec(y));
  SpanSolver g1_span(cols);

  std::vector<RationalMatrix> action;
  action.reserve(g0.dim());
  for (const auto& x : g0.basis()) {
    RationalMatrix a(m, m);
    for (std::size_t j = 0; j < m; ++j) {
      auto c = g1_span.coords(vec(commutator(x, pair.g1_basis[j])));
      check(c.has_value(), pair.label() + ": [g0, g1] escaped g1");
      for (std::size_t i = 0; i < m; ++i) a.at(i, j) = (*c)[i];
    }
    action.push_back(std::move(a));
  }
  return Representation{std::move(g0), m, std::move(action)};
}

std::size_t symmetric_rank(const SymmetricPair& pair, const RunConfig& cfg) {
  std::size_t expected = rank_table(pair.family, pair.p, pair.q);
  // the table rank is a proven lower bound for the index, so a Monte-Carlo
  // upper bound meeting it makes the self-check exact
  IndexReport r = index_of(isotropy_rep(pair), cfg, expected);
  check(r.index == expected,
        pair.label() + ": computed symmetric rank " + std::to_string(r.index) +
            " disagrees with the table value " + std::to_string(expected));
  return expected;
}

std::pair<std::vector<RationalMatrix>, std::vector<RationalMatrix>>
sigma_split(const Involution& sigma, const std::vector<RationalMatrix>& basis) {
  const std::size_t m = basis.size();
  if (m == 0) return {};
  std::vector<std::vector<Rat>> cols;
  cols.reserve(m);
  for (const auto& b : basis) cols.push_back(vec(b));
  SpanSolver span(cols);
  RationalMatrix s(m, m);
  for (std::size_t k = 0; k < m; ++k) {
    auto c = span.coords(vec(sigma.apply(basis[k])));
    check(c.has_value(), "sigma_split: sigma does not preserve the span");
    for (std::size_t i = 0; i < m; ++i) s.at(i, k) = (*c)[i];
  }
  RationalMatrix plus = s, minus = s;
  for (std::size_t i = 0; i < m; ++i) {
    plus.at(i, i) -= 1;
    minus.at(i, i) += 1;
  }
  auto lift = [&](const std::vector<Rat>& c) {
    RationalMatrix x(basis.front().rows(), basis.front().cols());
    for (std::size_t k = 0; k < m; ++k)
      if (c[k] != 0) x += c[k] * basis[k];
    return x;
  };
  std::pair<std::vector<RationalMatrix>, std::vector<RationalMatrix>> out;
  for (const auto& c : kernel_basis(plus)) out.first.push_back(lift(c));
  for (const auto& c : kernel_basis(minus)) out.second.push_back(lift(c));
  check(out.first.size() + out.second.size() == m,
        "sigma_split: eigenspaces do not fill the span");
  return out;
}

GradedCentralizer graded_centralizer(const MatrixLieAlgebra& g,
                                     const Involution& sigma,
                                     const RationalMatrix& e) {
  check(is_nilpotent_matrix(e), "graded_centralizer: e is not nilpotent");
  check(sigma.apply(e) == -e, "graded_centralizer: e is not in g1");
  auto e_coords = g.coords_of(e);
  check(e_coords.has_value(), "graded_centralizer: e is not in g");

  GradedCentralizer out;
  out.e = e;

  RationalMatrix ad_e = g.ad_of(*e_coords);
  auto ker = kernel_basis(ad_e);
  for (const auto& c : ker) out.ge_basis.push_back(g.element(c));

  std::tie(out.ge0_basis, out.ge1_basis) = sigma_split(sigma, out.ge_basis);

  MatrixLieAlgebra ge0(g.ambient(), out.ge0_basis, "ge0");
  const std::size_t m1 = out.ge1_basis.size();
  std::vector<std::vector<Rat>> cols1;
  cols1.reserve(m1);
  for (const auto& b : out.ge1_basis) cols1.push_back(vec(b));
  SpanSolver ge1_span(cols1);
  std::vector<RationalMatrix> action;
  action.reserve(ge0.dim());
  for (const auto& x : ge0.basis()) {
    RationalMatrix a(m1, m1);
    for (std::size_t j = 0; j < m1; ++j) {
      auto c = ge1_span.coords(vec(commutator(x, out.ge1_basis[j])));
      check(c.has_value(), "graded_centralizer: [g_{e,0}, g_{e,1}] escaped g_{e,1}");
      for (std::size_t i = 0; i < m1; ++i) a.at(i, j) = (*c)[i];
    }
    action.push_back(std::move(a));
  }
  out.action = Representation{std::move(ge0), m1, std::move(action)};
  return out;
}

GradedCentralizer graded_centralizer(const SymmetricPair& pair,
                                     const RationalMatrix& e) {
  return graded_centralizer(pair.g, pair.sigma, e);
}

} // namespace indexlab
