#pragma once

#include <string>
#include <vector>

#include "indexlab/liealg.hpp"

namespace indexlab {

enum class FormKind { symmetric, skew };

struct BilinearForm {
  RationalMatrix J;
  FormKind kind = FormKind::symmetric;

  // invertible and of the declared (skew)symmetry
  void certify() const;
};

BilinearForm antidiag_symmetric(std::size_t n);
BilinearForm antidiag_skew(std::size_t n);  // n even

MatrixLieAlgebra gl(std::size_t n);
MatrixLieAlgebra sl(std::size_t n);
MatrixLieAlgebra borel_gl(std::size_t n);  // upper-triangular matrices
MatrixLieAlgebra so(const BilinearForm& form, const std::string& label = "");
MatrixLieAlgebra sp(const BilinearForm& form, const std::string& label = "");

// abelian algebra of diagonal matrices, for torus checks
MatrixLieAlgebra diagonal_torus(std::size_t n);

struct Involution {
  enum class Kind { outer_by_form, inner_by_conjugation };
  Kind kind = Kind::inner_by_conjugation;
  BilinearForm form;          // outer: sigma(A) = -J^{-1} A^t J
  RationalMatrix conjugator;  // inner: sigma(A) = D A D with D^2 = I

  RationalMatrix apply(const RationalMatrix& a) const;
};

// The seven supported classical families.
enum class PairFamily {
  gl_so,     // (gl_n, so_n), outer, symmetric form
  gl_sp,     // (gl_2n, sp_2n), outer, skew form
  sp_gl,     // (sp_2n, gl_n)
  so_gl,     // (so_2n, gl_n)
  gl_glpq,   // (gl_{p+q}, gl_p x gl_q)
  so_sopq,   // (so_{p+q}, so_p x so_q)
  sp_sppq,   // (sp_{2p+2q}, sp_2p x sp_2q)
};

std::string family_code(PairFamily f);  // e.g. "gl/glpq"
PairFamily family_from_code(const std::string& code);

struct SymmetricPair {
  PairFamily family;
  std::size_t p = 0, q = 0;  // q unused for the single-parameter families
  MatrixLieAlgebra g;
  Involution sigma;
  std::vector<std::vector<Rat>> g0_coords, g1_coords;  // over g's basis
  std::vector<RationalMatrix> g0_basis, g1_basis;

  std::string label() const;  // e.g. "(gl7, gl3 x gl4)"
  MatrixLieAlgebra g0_algebra() const;

  // sigma is involutive, maps g into itself, and the eigenspace dimensions
  // fill g; bracket-grading inclusions are checked on all pairs for small
  // algebras and on a seeded sample for large ones
  void certify() const;
};

std::size_t rank_table(PairFamily f, std::size_t p, std::size_t q);

SymmetricPair outer_pair(std::size_t n, FormKind kind);
SymmetricPair inner_pair(PairFamily family, std::size_t p, std::size_t q);

// convenience dispatcher: builds the standard realization for any family
SymmetricPair make_pair(PairFamily family, std::size_t p, std::size_t q);

// assemble a pair directly from an ambient algebra and involution (used for
// orbit-adapted realizations and mod-4 gluings)
SymmetricPair pair_from_involution(PairFamily family, std::size_t p, std::size_t q,
                                   MatrixLieAlgebra g, Involution sigma);

// (G0 : g1), the bracket action of g0 on g1
Representation isotropy_rep(const SymmetricPair& pair);

// index of the isotropy representation, cross-checked against the rank
// table; a mismatch is a hard error
std::size_t symmetric_rank(const SymmetricPair& pair, const RunConfig& cfg);

struct GradedCentralizer {
  RationalMatrix e;
  std::vector<RationalMatrix> ge_basis;   // centralizer of e in g
  std::vector<RationalMatrix> ge0_basis;  // sigma = +1 part
  std::vector<RationalMatrix> ge1_basis;  // sigma = -1 part
  Representation action;                  // ge0 acting on span(ge1) by bracket

  std::size_t dim_ge() const { return ge_basis.size(); }
};

GradedCentralizer graded_centralizer(const MatrixLieAlgebra& g,
                                     const Involution& sigma,
                                     const RationalMatrix& e);
GradedCentralizer graded_centralizer(const SymmetricPair& pair,
                                     const RationalMatrix& e);

// split a sigma-stable span into its eigenspace bases (+1 first)
std::pair<std::vector<RationalMatrix>, std::vector<RationalMatrix>>
sigma_split(const Involution& sigma, const std::vector<RationalMatrix>& basis);

} // namespace indexlab
