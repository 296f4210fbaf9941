#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "indexlab/bareiss.hpp"
#include "indexlab/generic_rank.hpp"
#include "indexlab/matrix.hpp"

namespace indexlab {

enum class Mode { montecarlo, symbolic, automatic };

struct RunConfig {
  Mode mode = Mode::automatic;
  std::uint64_t seed = 0;
  unsigned trials = 3;
  std::uint64_t box = 1'000'000'000ULL;
  SymbolicGuard guard;

  RunConfig with_seed(std::uint64_t s) const {
    RunConfig c = *this;
    c.seed = s;
    return c;
  }
};

// A Lie algebra given by an ambient matrix size and an ordered basis closed
// under the commutator.  Structure constants are computed on first use; the
// computation doubles as the closure certificate (it fails if any commutator
// leaves the span).
class MatrixLieAlgebra {
public:
  MatrixLieAlgebra();
  MatrixLieAlgebra(std::size_t ambient, std::vector<RationalMatrix> basis,
                   std::string label);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_->size(); }
  const std::vector<RationalMatrix>& basis() const { return *basis_; }
  const std::string& label() const { return label_; }

  RationalMatrix element(const std::vector<Rat>& coords) const;
  std::optional<std::vector<Rat>> coords_of(const RationalMatrix& m) const;
  bool contains(const RationalMatrix& m) const { return coords_of(m).has_value(); }

  // commutator in basis coordinates; throws if closure is violated
  std::vector<Rat> bracket(const std::vector<Rat>& x, const std::vector<Rat>& y) const;

  // adjoint action matrices of the basis elements (structure constants)
  const std::vector<RationalMatrix>& ad_matrices() const;

  // matrix of ad(x) on the algebra, x in coordinates
  RationalMatrix ad_of(const std::vector<Rat>& x) const;

  void certify_closure() const { ad_matrices(); }

private:
  std::size_t ambient_ = 0;
  std::shared_ptr<const std::vector<RationalMatrix>> basis_;
  std::string label_;

  struct Cache;
  std::shared_ptr<Cache> cache_;
};

struct Representation {
  MatrixLieAlgebra algebra;
  std::size_t module_dim = 0;
  std::vector<RationalMatrix> action;  // one per algebra basis element

  // action of an algebra element given in coordinates
  RationalMatrix action_of(const std::vector<Rat>& coords) const;

  // bracket compatibility on all basis pairs
  void certify() const;
};

Representation adjoint_rep(const MatrixLieAlgebra& alg);
Representation dual(const Representation& rep);
Representation coadjoint_rep(const MatrixLieAlgebra& alg);
Representation trivial_rep(const MatrixLieAlgebra& alg, std::size_t dim);

// stationary subalgebra q_v = { s : s.v = 0 }
std::vector<std::vector<Rat>> stabilizer_coords(const Representation& rep,
                                                const std::vector<Rat>& v);
MatrixLieAlgebra stabilizer(const Representation& rep, const std::vector<Rat>& v);

// basis of the orbit tangent space q.v
std::vector<std::vector<Rat>> tangent_space(const Representation& rep,
                                            const std::vector<Rat>& v);

// q_v-module V / q.v; the complement is chosen by greedy pivoting in fixed
// coordinate order, so the result is deterministic
Representation quotient_module(const Representation& rep, const std::vector<Rat>& v);

// M(xi): the module-dim x algebra-dim matrix of dual-action images at a
// symbolic covector
PolyMatrix dual_action_matrix(const Representation& rep);

struct IndexReport {
  std::size_t module_dim = 0;
  std::size_t algebra_dim = 0;
  std::size_t max_orbit_dim = 0;  // certified rank value
  std::size_t index = 0;          // module_dim - max_orbit_dim
  bool exact = false;             // otherwise `index` is a certified upper bound
  RankCertificate certificate;
};

// In montecarlo mode the reported index is a certified upper bound; it is
// marked exact when it meets an a-priori lower bound (dim V - dim q, or a
// caller-supplied one) or when the certificate carries zero failure
// probability.  Automatic mode escalates to symbolic elimination when the
// bounds stay open.
IndexReport index_of(const Representation& rep, const RunConfig& cfg,
                     std::size_t known_lower_bound = 0);
IndexReport index_of_algebra(const MatrixLieAlgebra& alg, const RunConfig& cfg);

enum class Comparison { equal_certified, unequal_certified, inconclusive };

struct VinbergReport {
  IndexReport lhs;  // ind(q, V*)
  IndexReport rhs;  // ind(q_v, (V/q.v)*)
  std::size_t quotient_dim = 0;
  bool quotient_action_trivial = false;
  Comparison verdict = Comparison::inconclusive;
};

VinbergReport check_vinberg(const Representation& rep, const std::vector<Rat>& v,
                            const RunConfig& cfg);

Representation m_copies(const Representation& rep, std::size_t m);
Representation direct_sum(const Representation& a, const Representation& b);

struct Sl2Triple {
  std::vector<Rat> e, h, f;  // coordinates over the algebra basis
};

// Jacobson-Morozov completion by exact linear solves; the three bracket
// identities are certified before returning.
Sl2Triple sl2_complete(const MatrixLieAlgebra& alg, const std::vector<Rat>& e);

MatrixLieAlgebra sl2_algebra();
// simple sl2-module of dimension d+1, realized on binary forms of degree d
Representation sl2_irrep(std::size_t d);

// representation of the direct-product algebra on the tensor product module
Representation tensor_product(const Representation& a, const Representation& b);

// one-parameter-subgroup certificate: v lies in the span of positive-weight
// eigenvectors of the semisimple element h, so the torus contracts v to 0
bool nilpotent_by_weight_certificate(const Representation& rep,
                                     const std::vector<Rat>& v,
                                     const std::vector<Rat>& h_coords);

} // namespace indexlab
