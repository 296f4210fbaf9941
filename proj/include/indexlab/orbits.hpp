#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "indexlab/pairs.hpp"

namespace indexlab {

struct Partition {
  std::vector<std::size_t> parts;  // weakly decreasing, positive

  std::size_t total() const;
  std::size_t count(std::size_t part) const;
  std::string to_string() const;  // "3,3,1"
  static Partition parse(const std::string& s);
  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts == b.parts;
  }
};

// all partitions of `total`, lexicographically ascending
std::vector<Partition> partitions(std::size_t total);

// starting index of each cyclic block in the adapted basis
std::vector<std::size_t> partition_offsets(const Partition& p);

bool so_admissible(const Partition& p);  // even parts have even multiplicity
bool sp_admissible(const Partition& p);  // odd parts have even multiplicity

// adapted cyclic-basis data: which blocks are paired and the sigma-sign of
// each cyclic vector (inner families only)
struct Decoration {
  std::vector<std::size_t> pairing;  // partner block index; pairing[i] == i for self
  std::vector<int> signs;            // per block, +1 / -1; empty when unsigned

  std::string to_string() const;
};

struct ABDiagram {
  std::vector<std::string> rows;  // strictly alternating words over {a, b}

  std::size_t count(char letter) const;
  std::string to_string() const;
};

// A nilpotent element of g1 in its adapted cyclic basis, together with the
// bilinear form and sign data that realize the owning pair around it.
struct OrbitRep {
  PairFamily family;
  std::size_t p = 0, q = 0;
  Partition jordan_type;
  Decoration decoration;               // inner so/sp families
  std::optional<ABDiagram> diagram;    // gl_glpq
  RationalMatrix e;
  std::optional<BilinearForm> form;    // absent for gl_glpq
  std::optional<RationalMatrix> conj;  // D, inner families

  std::string id() const;
  // the pair realized in this representative's adapted coordinates
  SymmetricPair realize() const;
};

// one representative per admissible (partition, decoration | ab-diagram);
// distinct entries lie in distinct G0-orbits up to the documented
// over-coverage, and every nilpotent orbit is covered
std::vector<OrbitRep> enumerate_orbit_reps(PairFamily family, std::size_t p,
                                           std::size_t q);

// throws naming the violated invariant
void validate_rep(const OrbitRep& rep);

enum class ClassicalType { gl, so, sp };

// Jordan normal form adapted to a form of the right kind; the form is absent
// for gl
std::pair<RationalMatrix, std::optional<BilinearForm>> nilpotent_in_classical(
    ClassicalType type, const Partition& partition);

// the ambient algebra a nilpotent_in_classical element lives in
MatrixLieAlgebra classical_algebra(ClassicalType type,
                                   const std::optional<BilinearForm>& form,
                                   std::size_t ambient);

std::size_t classical_rank(ClassicalType type, std::size_t ambient);

struct AdGrading {
  std::vector<Rat> h;                                  // coordinates
  std::map<long, std::vector<std::vector<Rat>>> levels;  // eigenvalue -> basis
  bool even() const;
  long top_level() const;
  std::size_t level_dim(long ell) const;
};

// eigenspace decomposition of ad h; requires an integer spectrum
AdGrading ad_grading(const MatrixLieAlgebra& alg, const std::vector<Rat>& h);

// minimal N with (ad e)^{N+1} = 0
std::size_t height_of(const MatrixLieAlgebra& alg, const std::vector<Rat>& e);

// Z2-grading glued from the ad-h grading modulo 4: g0 = levels 0 mod 4,
// g1 = levels 2 mod 4, with the involution realized by a rational +-1
// conjugation on the module
SymmetricPair glue_mod4(const MatrixLieAlgebra& alg, ClassicalType type,
                        const std::vector<Rat>& h);

struct DeltaReport {
  Partition partition;
  std::string pair_label;
  std::size_t dim_g4 = 0;
  std::size_t dim_s = 0;         // generic stabilizer of (G0 : g1)
  std::size_t dim_se = 0;        // generic stabilizer of (G(0)_e : g(2)_e)
  std::size_t rank = 0;          // ind(g0, g1)
  std::size_t ind_centralizer = 0;  // ind(g_{e,0}, g_{e,1})
  long delta = 0;                // dim g4 + dim S^e - dim S
};

// The excess delta = ind(g_{e,0}, g_{e,1}) - ind(g0, g1) for an even
// height-4 nilpotent, assembled from the grading data and cross-checked
// against the direct index difference (mismatch is a hard error).
DeltaReport delta_of(ClassicalType type, const Partition& partition,
                     const RunConfig& cfg);

} // namespace indexlab
