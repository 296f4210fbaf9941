#include "indexlab/orbits.hpp"

#include <algorithm>
#include <tuple>

namespace indexlab {

std::size_t Partition::total() const {
  std::size_t t = 0;
  for (std::size_t p : parts) t += p;
  return t;
}

std::size_t Partition::count(std::size_t part) const {
  std::size_t c = 0;
  for (std::size_t p : parts) c += (p == part);
  return c;
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t p : parts) {
    if (!s.empty()) s += ",";
    s += std::to_string(p);
  }
  return s;
}

Partition Partition::parse(const std::string& s) {
  Partition out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    std::string tok = s.substr(pos, comma - pos);
    check(!tok.empty(), "empty part in partition literal");
    long v = std::stol(tok);
    check(v >= 1, "partition parts must be positive");
    out.parts.push_back(static_cast<std::size_t>(v));
    pos = comma + 1;
  }
  std::vector<std::size_t> sorted = out.parts;
  std::sort(sorted.rbegin(), sorted.rend());
  check(sorted == out.parts, "partition parts must be weakly decreasing");
  return out;
}

namespace {

void partitions_rec(std::size_t remaining, std::size_t max_part,
                    std::vector<std::size_t>& acc, std::vector<Partition>& out) {
  if (remaining == 0) {
    Partition p;
    p.parts = acc;  // already weakly decreasing
    out.push_back(std::move(p));
    return;
  }
  for (std::size_t next = 1; next <= std::min(remaining, max_part); ++next) {
    acc.push_back(next);
    partitions_rec(remaining - next, next, acc, out);
    acc.pop_back();
  }
}

} // namespace

std::vector<Partition> partitions(std::size_t total) {
  std::vector<Partition> out;
  std::vector<std::size_t> acc;
  // building smallest-part-last and reversing yields ascending
  // lexicographic order of the weakly decreasing tuples
  if (total == 0) {
    out.push_back(Partition{});
    return out;
  }
  partitions_rec(total, total, acc, out);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    return a.parts < b.parts;
  });
  return out;
}

std::vector<std::size_t> partition_offsets(const Partition& p) {
  std::vector<std::size_t> off;
  std::size_t t = 0;
  for (std::size_t part : p.parts) {
    off.push_back(t);
    t += part;
  }
  return off;
}

bool so_admissible(const Partition& p) {
  for (std::size_t part : p.parts)
    if (part % 2 == 0 && p.count(part) % 2 != 0) return false;
  return true;
}

bool sp_admissible(const Partition& p) {
  for (std::size_t part : p.parts)
    if (part % 2 == 1 && p.count(part) % 2 != 0) return false;
  return true;
}

std::string Decoration::to_string() const {
  if (signs.empty()) return "";
  std::string s;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (pairing[i] < i) continue;  // one symbol per pair
    s += signs[i] > 0 ? '+' : '-';
  }
  return s;
}

std::size_t ABDiagram::count(char letter) const {
  std::size_t c = 0;
  for (const auto& row : rows)
    for (char ch : row) c += (ch == letter);
  return c;
}

std::string ABDiagram::to_string() const {
  std::string s;
  for (const auto& row : rows) {
    if (!s.empty()) s += ",";
    s += row;
  }
  return s;
}

namespace {

struct Blocks {
  std::vector<std::size_t> size, offset;
  std::size_t total = 0;
};

Blocks layout(const Partition& p) {
  Blocks b;
  for (std::size_t part : p.parts) {
    b.offset.push_back(b.total);
    b.size.push_back(part);
    b.total += part;
  }
  return b;
}

RationalMatrix shift_matrix(const Blocks& b) {
  RationalMatrix e(b.total, b.total);
  for (std::size_t i = 0; i < b.size.size(); ++i)
    for (std::size_t a = 0; a + 1 < b.size[i]; ++a)
      e.at(b.offset[i] + a + 1, b.offset[i] + a) = 1;
  return e;
}

// Gram matrix adapted to the blocks: self-paired blocks carry the reversal
// pairing, cross-paired blocks pair with their partner, the top pairing
// normalized to 1.  `inner` distinguishes e in the algebra (sign alternation
// when moving e across the form) from e in the odd part of an outer
// involution (no alternation).
BilinearForm adapted_gram(const Blocks& b, const std::vector<std::size_t>& pairing,
                          FormKind kind, bool inner) {
  RationalMatrix j(b.total, b.total);
  for (std::size_t i = 0; i < b.size.size(); ++i) {
    std::size_t d = b.size[i] - 1;
    if (pairing[i] == i) {
      for (std::size_t a = 0; a <= d; ++a) {
        Rat v = inner && a % 2 ? Rat(-1) : Rat(1);
        j.at(b.offset[i] + a, b.offset[i] + d - a) = v;
      }
    } else if (pairing[i] > i) {
      std::size_t k = pairing[i];
      check(b.size[k] == b.size[i], "paired blocks of unequal size");
      for (std::size_t a = 0; a <= d; ++a) {
        Rat v = inner && a % 2 ? Rat(-1) : Rat(1);
        j.at(b.offset[i] + a, b.offset[k] + d - a) = v;
        j.at(b.offset[k] + d - a, b.offset[i] + a) =
            kind == FormKind::symmetric ? v : -v;
      }
    }
  }
  BilinearForm form{std::move(j), kind};
  form.certify();
  return form;
}

void verify_e_compat(const RationalMatrix& e, const BilinearForm& form, bool inner) {
  RationalMatrix lhs = e.transpose() * form.J;
  RationalMatrix rhs = form.J * e;
  if (inner)
    check((lhs + rhs).is_zero(), "adapted form is not e-invariant");
  else
    check(lhs == rhs, "e does not lie in the odd part of the outer involution");
}

RationalMatrix sign_diag(const Blocks& b, const std::vector<int>& block_signs) {
  RationalMatrix d(b.total, b.total);
  for (std::size_t i = 0; i < b.size.size(); ++i)
    for (std::size_t a = 0; a < b.size[i]; ++a)
      d.at(b.offset[i] + a, b.offset[i] + a) =
          (block_signs[i] > 0) == (a % 2 == 0) ? 1 : -1;
  return d;
}

std::size_t plus_dim(const RationalMatrix& d) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < d.rows(); ++i) c += d.at(i, i) == 1;
  return c;
}

struct FamilyTraits {
  bool outer = false;
  bool has_form = false;
  FormKind kind = FormKind::symmetric;
  int epsilon = 0;          // sign of D^t J D = eps J (inner families with form)
  std::size_t ambient = 0;
  std::size_t plus_target = 0;  // required +1-eigenspace dimension of D
};

FamilyTraits traits_of(PairFamily f, std::size_t p, std::size_t q) {
  FamilyTraits t;
  switch (f) {
    case PairFamily::gl_so:
      t = {true, true, FormKind::symmetric, 0, p, 0};
      break;
    case PairFamily::gl_sp:
      t = {true, true, FormKind::skew, 0, 2 * p, 0};
      break;
    case PairFamily::sp_gl:
      t = {false, true, FormKind::skew, -1, 2 * p, p};
      break;
    case PairFamily::so_gl:
      t = {false, true, FormKind::symmetric, -1, 2 * p, p};
      break;
    case PairFamily::gl_glpq:
      t = {false, false, FormKind::symmetric, 0, p + q, p};
      break;
    case PairFamily::so_sopq:
      t = {false, true, FormKind::symmetric, +1, p + q, p};
      break;
    case PairFamily::sp_sppq:
      t = {false, true, FormKind::skew, +1, 2 * p + 2 * q, 2 * p};
      break;
  }
  return t;
}

std::size_t expected_g0_dim(PairFamily f, std::size_t p, std::size_t q) {
  switch (f) {
    case PairFamily::gl_so: return p * (p - 1) / 2;
    case PairFamily::gl_sp: return p * (2 * p + 1);
    case PairFamily::sp_gl: return p * p;
    case PairFamily::so_gl: return p * p;
    case PairFamily::gl_glpq: return p * p + q * q;
    case PairFamily::so_sopq: return p * (p - 1) / 2 + q * (q - 1) / 2;
    case PairFamily::sp_sppq: return p * (2 * p + 1) + q * (2 * q + 1);
  }
  throw error("unknown family");
}

// canonical pairing: equal parts pair consecutively; parts with `self` role
// stay fixed
std::vector<std::size_t> canonical_pairing(const Partition& part,
                                           auto&& is_self_size) {
  std::vector<std::size_t> pairing(part.parts.size());
  for (std::size_t i = 0; i < part.parts.size();) {
    if (is_self_size(part.parts[i])) {
      pairing[i] = i;
      ++i;
      continue;
    }
    check(i + 1 < part.parts.size() && part.parts[i + 1] == part.parts[i],
          "block needs a partner of equal size");
    pairing[i] = i + 1;
    pairing[i + 1] = i;
    i += 2;
  }
  return pairing;
}

} // namespace

std::string OrbitRep::id() const {
  std::string s = "(" + jordan_type.to_string() + ")";
  if (diagram.has_value())
    s += "[" + diagram->to_string() + "]";
  else if (!decoration.signs.empty())
    s += "[" + decoration.to_string() + "]";
  return s;
}

SymmetricPair OrbitRep::realize() const {
  FamilyTraits t = traits_of(family, p, q);
  MatrixLieAlgebra g;
  Involution sigma;
  if (!t.has_form) {
    g = gl(t.ambient);
    sigma = Involution{Involution::Kind::inner_by_conjugation, BilinearForm{}, *conj};
  } else if (t.outer) {
    g = gl(t.ambient);
    sigma = Involution{Involution::Kind::outer_by_form, *form, RationalMatrix()};
  } else {
    g = t.kind == FormKind::skew
            ? sp(*form, "sp" + std::to_string(t.ambient))
            : so(*form, "so" + std::to_string(t.ambient));
    sigma = Involution{Involution::Kind::inner_by_conjugation, BilinearForm{}, *conj};
  }
  SymmetricPair pair = pair_from_involution(family, p, q, std::move(g), std::move(sigma));
  check(pair.g0_coords.size() == expected_g0_dim(family, p, q),
        "orbit realization: g0 dimension disagrees with the family");
  return pair;
}

std::vector<OrbitRep> enumerate_orbit_reps(PairFamily family, std::size_t p,
                                           std::size_t q) {
  FamilyTraits t = traits_of(family, p, q);
  std::vector<OrbitRep> out;

  for (const Partition& part : partitions(t.ambient)) {
    if (family == PairFamily::gl_glpq) {
      // one representative per ab-diagram: a multiset of starting letters
      // per size class, filtered by the letter balance (p, q)
      std::vector<std::pair<std::size_t, std::size_t>> classes;  // (size, count)
      for (std::size_t i = 0; i < part.parts.size();) {
        std::size_t j = i;
        while (j < part.parts.size() && part.parts[j] == part.parts[i]) ++j;
        classes.emplace_back(part.parts[i], j - i);
        i = j;
      }
      std::vector<std::size_t> a_starts(classes.size());
      auto emit = [&]() {
        Blocks b = layout(part);
        std::vector<int> letter(part.parts.size());
        std::size_t blk = 0;
        for (std::size_t c = 0; c < classes.size(); ++c)
          for (std::size_t k = 0; k < classes[c].second; ++k, ++blk)
            letter[blk] = k < a_starts[c] ? +1 : -1;
        RationalMatrix d = sign_diag(b, letter);
        if (plus_dim(d) != t.plus_target) return;
        OrbitRep rep;
        rep.family = family;
        rep.p = p;
        rep.q = q;
        rep.jordan_type = part;
        ABDiagram diag;
        for (std::size_t i = 0; i < part.parts.size(); ++i) {
          std::string row;
          for (std::size_t a = 0; a < part.parts[i]; ++a)
            row += (letter[i] > 0) == (a % 2 == 0) ? 'a' : 'b';
          diag.rows.push_back(std::move(row));
        }
        rep.diagram = std::move(diag);
        rep.e = shift_matrix(b);
        rep.conj = std::move(d);
        out.push_back(std::move(rep));
      };
      // product of per-class choices, a-start count descending
      std::vector<std::size_t> idx(classes.size(), 0);
      for (;;) {
        for (std::size_t c = 0; c < classes.size(); ++c)
          a_starts[c] = classes[c].second - idx[c];
        emit();
        std::size_t c = 0;
        while (c < classes.size() && ++idx[c] > classes[c].second) idx[c++] = 0;
        if (c == classes.size()) break;
      }
      continue;
    }

    // form-carrying families: assign roles per block size
    auto self_size = [&](std::size_t s) {
      switch (family) {
        case PairFamily::gl_so: return true;
        case PairFamily::gl_sp: return false;
        case PairFamily::sp_gl: return s % 2 == 0;   // even size: d odd
        case PairFamily::so_gl: return false;
        case PairFamily::so_sopq: return s % 2 == 1;  // odd size: d even
        case PairFamily::sp_sppq: return false;
        default: return false;
      }
    };
    // a pair (i, i*) carries one free sign exactly when the involution links
    // the two cyclic-vector signs equally: s_{i*} = eps (-1)^d s_i
    auto pair_signed = [&](std::size_t s) {
      if (t.outer) return false;
      long d = static_cast<long>(s) - 1;
      return t.epsilon * (d % 2 ? -1 : 1) > 0;
    };

    bool admissible = true;
    for (std::size_t part_sz : part.parts)
      if (!self_size(part_sz) && part.count(part_sz) % 2 != 0) {
        admissible = false;
        break;
      }
    if (!admissible) continue;

    std::vector<std::size_t> pairing = canonical_pairing(part, self_size);
    Blocks b = layout(part);
    RationalMatrix e = shift_matrix(b);
    BilinearForm form = adapted_gram(b, pairing, t.kind, !t.outer);
    verify_e_compat(e, form, !t.outer);

    if (t.outer) {
      OrbitRep rep;
      rep.family = family;
      rep.p = p;
      rep.q = q;
      rep.jordan_type = part;
      rep.decoration = Decoration{pairing, {}};
      rep.e = e;
      rep.form = form;
      out.push_back(std::move(rep));
      continue;
    }

    // signed sites: self blocks, and the lead block of a sign-linked pair
    std::vector<std::vector<std::size_t>> site_classes;
    for (std::size_t i = 0; i < part.parts.size();) {
      std::size_t j = i;
      while (j < part.parts.size() && part.parts[j] == part.parts[i]) ++j;
      std::vector<std::size_t> sites;
      for (std::size_t k = i; k < j; ++k)
        if (pairing[k] == k || (pairing[k] > k && pair_signed(part.parts[k])))
          sites.push_back(k);
      if (!sites.empty()) site_classes.push_back(std::move(sites));
      i = j;
    }

    std::vector<std::size_t> plus_counts(site_classes.size(), 0);
    auto emit = [&]() {
      std::vector<int> signs(part.parts.size(), +1);
      for (std::size_t c = 0; c < site_classes.size(); ++c)
        for (std::size_t k = 0; k < site_classes[c].size(); ++k)
          signs[site_classes[c][k]] = k < plus_counts[c] ? +1 : -1;
      // propagate the linked sign to the partner blocks
      for (std::size_t i = 0; i < part.parts.size(); ++i) {
        if (pairing[i] <= i) continue;
        long d = static_cast<long>(part.parts[i]) - 1;
        int link = t.epsilon * (d % 2 ? -1 : 1);
        signs[pairing[i]] = link * signs[i];
      }
      RationalMatrix d = sign_diag(b, signs);
      if (plus_dim(d) != t.plus_target) return;
      check((d * form.J * d) == (t.epsilon > 0 ? form.J : -form.J),
            "decoration does not normalize the adapted form");
      check(d * e * d == -e, "decoration does not negate e");
      OrbitRep rep;
      rep.family = family;
      rep.p = p;
      rep.q = q;
      rep.jordan_type = part;
      rep.decoration = Decoration{pairing, signs};
      rep.e = e;
      rep.form = form;
      rep.conj = std::move(d);
      out.push_back(std::move(rep));
    };

    std::vector<std::size_t> idx(site_classes.size(), 0);
    for (;;) {
      for (std::size_t c = 0; c < site_classes.size(); ++c)
        plus_counts[c] = site_classes[c].size() - idx[c];
      emit();
      std::size_t c = 0;
      while (c < site_classes.size() && ++idx[c] > site_classes[c].size())
        idx[c++] = 0;
      if (c == site_classes.size()) break;
    }
  }
  return out;
}

namespace {

Partition jordan_type_of(const RationalMatrix& e) {
  std::vector<std::size_t> ranks;  // rank of e^k, k = 0, 1, ...
  ranks.push_back(e.rows());
  RationalMatrix p = e;
  while (true) {
    std::size_t r = rank(p);
    ranks.push_back(r);
    if (r == 0) break;
    p = p * e;
  }
  // conjugate partition: lambda'_k = rank e^{k-1} - rank e^k
  std::vector<std::size_t> conj;
  for (std::size_t k = 1; k < ranks.size(); ++k)
    conj.push_back(ranks[k - 1] - ranks[k]);
  Partition out;
  for (std::size_t part = conj.size(); part >= 1; --part) {
    std::size_t mult =
        conj[part - 1] - (part < conj.size() ? conj[part] : 0);
    for (std::size_t m = 0; m < mult; ++m) out.parts.push_back(part);
  }
  return out;
}

} // namespace

void validate_rep(const OrbitRep& rep) {
  FamilyTraits t = traits_of(rep.family, rep.p, rep.q);
  check(rep.e.rows() == t.ambient && rep.e.cols() == t.ambient,
        rep.id() + ": ambient size mismatch");
  check(is_nilpotent_matrix(rep.e), rep.id() + ": e is not nilpotent");
  check(jordan_type_of(rep.e) == rep.jordan_type,
        rep.id() + ": declared Jordan type disagrees with the rank profile");

  if (t.has_form) {
    check(rep.form.has_value(), rep.id() + ": missing bilinear form");
    check(rep.form->kind == t.kind, rep.id() + ": wrong form kind");
    rep.form->certify();
    verify_e_compat(rep.e, *rep.form, !t.outer);
  } else {
    check(!rep.form.has_value(), rep.id() + ": unexpected form");
  }

  if (!t.outer) {
    check(rep.conj.has_value(), rep.id() + ": missing sign involution");
    const RationalMatrix& d = *rep.conj;
    check(d * d == RationalMatrix::identity(t.ambient),
          rep.id() + ": sign involution is not involutive");
    check(d * rep.e * d == -rep.e, rep.id() + ": sigma(e) != -e");
    check(plus_dim(d) == t.plus_target,
          rep.id() + ": eigenspace balance violates the family parameters");
    if (t.has_form)
      check(d * rep.form->J * d == (t.epsilon > 0 ? rep.form->J : -(rep.form->J)),
            rep.id() + ": sign involution does not normalize the form");
  } else {
    // sigma(e) = -e for the outer involution reduces to e^t J = J e,
    // already certified above
    check(!rep.conj.has_value(), rep.id() + ": unexpected conjugator");
  }

  if (rep.diagram.has_value()) {
    check(rep.diagram->count('a') == rep.p && rep.diagram->count('b') == rep.q,
          rep.id() + ": ab-diagram letter counts violate (p, q)");
    for (const auto& row : rep.diagram->rows)
      for (std::size_t i = 0; i + 1 < row.size(); ++i)
        check(row[i] != row[i + 1], rep.id() + ": ab-diagram row not alternating");
  }
}

std::pair<RationalMatrix, std::optional<BilinearForm>> nilpotent_in_classical(
    ClassicalType type, const Partition& partition) {
  Blocks b = layout(partition);
  RationalMatrix e = shift_matrix(b);
  if (type == ClassicalType::gl) return {std::move(e), std::nullopt};

  bool is_sp = type == ClassicalType::sp;
  if (is_sp)
    check(sp_admissible(partition),
          "partition is not admissible for sp: odd parts need even multiplicity");
  else
    check(so_admissible(partition),
          "partition is not admissible for so: even parts need even multiplicity");
  auto self_size = [&](std::size_t s) { return is_sp ? s % 2 == 0 : s % 2 == 1; };
  std::vector<std::size_t> pairing = canonical_pairing(partition, self_size);
  BilinearForm form = adapted_gram(
      b, pairing, is_sp ? FormKind::skew : FormKind::symmetric, true);
  verify_e_compat(e, form, true);
  return {std::move(e), std::move(form)};
}

MatrixLieAlgebra classical_algebra(ClassicalType type,
                                   const std::optional<BilinearForm>& form,
                                   std::size_t ambient) {
  switch (type) {
    case ClassicalType::gl: return gl(ambient);
    case ClassicalType::so: return so(*form, "so" + std::to_string(ambient));
    case ClassicalType::sp: return sp(*form, "sp" + std::to_string(ambient));
  }
  throw error("unknown classical type");
}

std::size_t classical_rank(ClassicalType type, std::size_t ambient) {
  switch (type) {
    case ClassicalType::gl: return ambient;
    case ClassicalType::so: return ambient / 2;
    case ClassicalType::sp: return ambient / 2;
  }
  throw error("unknown classical type");
}

bool AdGrading::even() const {
  for (const auto& [ell, basis] : levels)
    if (ell % 2 != 0 && !basis.empty()) return false;
  return true;
}

long AdGrading::top_level() const {
  long top = 0;
  for (const auto& [ell, basis] : levels)
    if (!basis.empty()) top = std::max(top, ell);
  return top;
}

std::size_t AdGrading::level_dim(long ell) const {
  auto it = levels.find(ell);
  return it == levels.end() ? 0 : it->second.size();
}

AdGrading ad_grading(const MatrixLieAlgebra& alg, const std::vector<Rat>& h) {
  AdGrading g;
  g.h = h;
  const std::size_t d = alg.dim();
  RationalMatrix ad_h = alg.ad_of(h);
  std::size_t found = 0;
  long bound = 2 * static_cast<long>(alg.ambient());
  for (long mag = 0; mag <= bound && found < d; ++mag) {
    for (long ell : {mag, -mag}) {
      if (ell == 0 && mag != 0) continue;
      RationalMatrix shifted = ad_h;
      for (std::size_t i = 0; i < d; ++i) shifted.at(i, i) -= Rat(ell);
      auto ker = kernel_basis(shifted);
      if (ker.empty()) continue;
      found += ker.size();
      g.levels[ell] = std::move(ker);
      if (ell == 0) break;
    }
  }
  check(found == d, "ad h has a non-integer spectrum");
  return g;
}

std::size_t height_of(const MatrixLieAlgebra& alg, const std::vector<Rat>& e) {
  RationalMatrix ad_e = alg.ad_of(e);
  RationalMatrix p = ad_e;
  std::size_t n = 0;
  while (!p.is_zero()) {
    p = p * ad_e;
    ++n;
    check(n <= 2 * alg.ambient() + 1, "ad e is not nilpotent");
  }
  return n;
}

SymmetricPair glue_mod4(const MatrixLieAlgebra& alg, ClassicalType type,
                        const std::vector<Rat>& h) {
  AdGrading grading = ad_grading(alg, h);
  check(grading.even(), "glue_mod4: grading has odd levels");

  // eigen-decomposition of h on the module; all weights must be even for
  // the quarter-turn to be a rational +-1 conjugation
  const std::size_t n = alg.ambient();
  RationalMatrix hv = alg.element(h);
  std::vector<std::vector<Rat>> eigvecs;
  std::vector<long> eigvals;
  long bound = 2 * static_cast<long>(n);
  for (long mag = 0; mag <= bound && eigvecs.size() < n; ++mag) {
    for (long lam : {mag, -mag}) {
      if (lam == 0 && mag != 0) continue;
      RationalMatrix shifted = hv;
      for (std::size_t i = 0; i < n; ++i) shifted.at(i, i) -= Rat(lam);
      for (auto& v : kernel_basis(shifted)) {
        eigvecs.push_back(std::move(v));
        eigvals.push_back(lam);
      }
      if (lam == 0) break;
    }
  }
  check(eigvecs.size() == n, "glue_mod4: h is not diagonalizable with integer spectrum");
  for (long lam : eigvals)
    check(lam % 2 == 0, "glue_mod4: module weights are odd");

  SpanSolver eigbasis(eigvecs);
  RationalMatrix d(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rat> unit(n, Rat(0));
    unit[j] = 1;
    auto c = eigbasis.coords(unit);
    check(c.has_value(), "glue_mod4: eigenbasis is not a basis");
    for (std::size_t k = 0; k < n; ++k) {
      if ((*c)[k] == 0) continue;
      Rat s = (eigvals[k] / 2) % 2 == 0 ? (*c)[k] : -(*c)[k];
      for (std::size_t i = 0; i < n; ++i)
        if (eigvecs[k][i] != 0) d.at(i, j) += s * eigvecs[k][i];
    }
  }
  check(d * d == RationalMatrix::identity(n), "glue_mod4: quarter turn is not involutive");

  std::size_t plus = rank(d + RationalMatrix::identity(n));
  PairFamily family;
  std::size_t p, q;
  switch (type) {
    case ClassicalType::gl:
      family = PairFamily::gl_glpq;
      p = plus;
      q = n - plus;
      break;
    case ClassicalType::so:
      family = PairFamily::so_sopq;
      p = plus;
      q = n - plus;
      break;
    case ClassicalType::sp:
      family = PairFamily::sp_sppq;
      check(plus % 2 == 0 && (n - plus) % 2 == 0, "glue_mod4: odd symplectic block");
      p = plus / 2;
      q = (n - plus) / 2;
      break;
    default: throw error("unknown classical type");
  }
  Involution sigma{Involution::Kind::inner_by_conjugation, BilinearForm{}, std::move(d)};
  SymmetricPair pair = pair_from_involution(family, p, q, alg, std::move(sigma));

  // g0 must be exactly the levels 0 mod 4 and g1 the levels 2 mod 4
  std::size_t dim0 = 0, dim1 = 0;
  for (const auto& [ell, basis] : grading.levels)
    (ell % 4 == 0 ? dim0 : dim1) += basis.size();
  check(pair.g0_coords.size() == dim0 && pair.g1_coords.size() == dim1,
        "glue_mod4: eigenspaces disagree with the mod-4 levels");
  return pair;
}

DeltaReport delta_of(ClassicalType type, const Partition& partition,
                     const RunConfig& cfg) {
  auto [e, form] = nilpotent_in_classical(type, partition);
  MatrixLieAlgebra alg = classical_algebra(type, form, e.rows());
  auto e_coords = alg.coords_of(e);
  check(e_coords.has_value(), "delta: e is not in the algebra");

  Sl2Triple triple = sl2_complete(alg, *e_coords);
  AdGrading grading = ad_grading(alg, triple.h);
  check(grading.even(), "delta: e is not even");
  check(grading.top_level() == 4, "delta: e does not have height 4");

  SymmetricPair pair = glue_mod4(alg, type, triple.h);
  check(pair.sigma.apply(e) == -e, "delta: e is not in g1 of the glued pair");

  DeltaReport rep;
  rep.partition = partition;
  rep.pair_label = pair.label();
  rep.dim_g4 = grading.level_dim(4);
  rep.rank = symmetric_rank(pair, cfg);

  const std::size_t dim_g0 = pair.g0_coords.size();
  const std::size_t dim_g1 = pair.g1_coords.size();

  // generic stabilizer of (G0 : g1) at a point; the rank identity pins it
  Representation iso = isotropy_rep(pair);
  // g1 is an orthogonal module, so the point side shares the rank bound
  IndexReport point_side = index_of(dual(iso), cfg, rep.rank);
  rep.dim_s = dim_g0 - point_side.max_orbit_dim;
  check(rep.dim_s == dim_g0 - dim_g1 + rep.rank,
        "delta: generic stabilizer of the isotropy representation "
        "disagrees with the symmetric rank");

  // g(0)_e and g(2)_e: centralizer slices of the grading levels
  RationalMatrix ad_e = alg.ad_of(*e_coords);
  auto centralizer_slice = [&](long ell) {
    const auto& level = grading.levels.at(ell);
    RationalMatrix mapped(alg.dim(), level.size());
    for (std::size_t k = 0; k < level.size(); ++k) {
      auto img = mat_vec(ad_e, level[k]);
      for (std::size_t i = 0; i < alg.dim(); ++i) mapped.at(i, k) = img[i];
    }
    std::vector<RationalMatrix> basis;
    for (const auto& coeff : kernel_basis(mapped)) {
      std::vector<Rat> v(alg.dim(), Rat(0));
      for (std::size_t k = 0; k < level.size(); ++k)
        if (coeff[k] != 0)
          for (std::size_t i = 0; i < alg.dim(); ++i)
            v[i] += coeff[k] * level[k][i];
      basis.push_back(alg.element(v));
    }
    return basis;
  };
  std::vector<RationalMatrix> g0e = centralizer_slice(0);
  std::vector<RationalMatrix> g2e = centralizer_slice(2);

  // (G(0)_e : g(2)_e) and its generic point stabilizer
  MatrixLieAlgebra a0(alg.ambient(), g0e, "g0_e");
  std::vector<std::vector<Rat>> module_cols;
  for (const auto& m : g2e) module_cols.push_back(vec(m));
  SpanSolver module(module_cols);
  std::vector<RationalMatrix> action;
  for (const auto& x : a0.basis()) {
    RationalMatrix a(g2e.size(), g2e.size());
    for (std::size_t j = 0; j < g2e.size(); ++j) {
      auto c = module.coords(vec(commutator(x, g2e[j])));
      check(c.has_value(), "delta: [g(0)_e, g(2)_e] escaped g(2)_e");
      for (std::size_t i = 0; i < g2e.size(); ++i) a.at(i, j) = (*c)[i];
    }
    action.push_back(std::move(a));
  }
  Representation slice_rep{a0, g2e.size(), std::move(action)};
  IndexReport se_side = index_of(dual(slice_rep), cfg);
  rep.dim_se = g0e.size() - se_side.max_orbit_dim;

  rep.delta = static_cast<long>(rep.dim_g4 + rep.dim_se) -
              static_cast<long>(rep.dim_s);

  // direct route: the graded centralizer of e in the glued pair
  GradedCentralizer gc = graded_centralizer(pair, e);
  check(gc.ge0_basis.size() == g0e.size() + rep.dim_g4 &&
            gc.ge1_basis.size() == g2e.size(),
        "delta: graded centralizer dimensions disagree with the grading");
  IndexReport ind_c = index_of(gc.action, cfg, rep.rank);
  rep.ind_centralizer = ind_c.index;
  check(static_cast<long>(rep.ind_centralizer) -
            static_cast<long>(rep.rank) == rep.delta,
        "delta: the grading formula and the direct index disagree");
  check(rep.delta >= 0, "delta: negative excess");
  return rep;
}

} // namespace indexlab
