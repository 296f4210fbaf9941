#include "indexlab/poly.hpp"

#include <algorithm>
#include <unordered_map>

namespace indexlab {

namespace {

struct KeyHash {
  std::size_t operator()(const Poly::Key& k) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::uint64_t w : k) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

Poly::Key key_sum(const Poly::Key& a, const Poly::Key& b) {
  Poly::Key k;
  for (std::size_t w = 0; w < Poly::kKeyWords; ++w) k[w] = a[w] + b[w];
  return k;
}

} // namespace

Poly::Poly(std::size_t nvars) : nvars_(nvars) {
  check(nvars <= kMaxVars, "too many indeterminates for a polynomial");
}

// variable i lives in byte 7 - i%8 of word i/8, so word-lexicographic key
// order is variable-lexicographic term order
void Poly::pack(const Exps& e, Key& k) {
  k.fill(0);
  for (std::size_t i = 0; i < e.size(); ++i) {
    check(e[i] <= kMaxExp, "exponent overflow in packed polynomial key");
    k[i / 8] |= static_cast<std::uint64_t>(e[i]) << (8 * (7 - i % 8));
  }
}

void Poly::unpack(const Key& k, Exps& e) const {
  for (std::size_t i = 0; i < nvars_; ++i)
    e[i] = static_cast<std::uint32_t>((k[i / 8] >> (8 * (7 - i % 8))) & 0xff);
}

long Poly::key_degree(const Key& k) {
  long d = 0;
  for (std::uint64_t w : k)
    for (int b = 0; b < 8; ++b) d += static_cast<long>((w >> (8 * b)) & 0xff);
  return d;
}

Poly Poly::constant(std::size_t nvars, const Rat& c) {
  Poly p(nvars);
  if (c != 0) p.t_.emplace_back(Key{}, c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t i) {
  check(i < nvars, "variable index out of range");
  Poly p(nvars);
  Exps e(nvars, 0);
  e[i] = 1;
  Key k;
  pack(e, k);
  p.t_.emplace_back(k, Rat(1));
  return p;
}

bool Poly::is_constant_one() const {
  return t_.size() == 1 && t_.front().first == Key{} && t_.front().second == 1;
}

long Poly::total_degree() const {
  long d = -1;
  for (const auto& [k, c] : t_) d = std::max(d, key_degree(k));
  return d;
}

void Poly::accumulate(const Key& k, const Rat& c) {
  if (c == 0) return;
  auto it = std::lower_bound(
      t_.begin(), t_.end(), k,
      [](const auto& term, const Key& key) { return term.first < key; });
  if (it != t_.end() && it->first == k) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  } else {
    t_.emplace(it, k, c);
  }
}

void Poly::add_term(const Exps& e, const Rat& c) {
  check(e.size() == nvars_, "exponent vector arity mismatch");
  Key k;
  pack(e, k);
  accumulate(k, c);
}

Poly& Poly::operator+=(const Poly& o) {
  check(nvars_ == o.nvars_ || is_zero() || o.is_zero(), "polynomial arity mismatch");
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  std::vector<std::pair<Key, Rat>> merged;
  merged.reserve(t_.size() + o.t_.size());
  auto a = t_.cbegin();
  auto b = o.t_.cbegin();
  while (a != t_.cend() || b != o.t_.cend()) {
    if (b == o.t_.cend() || (a != t_.cend() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == t_.cend() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      Rat s = a->second + b->second;
      if (s != 0) merged.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  t_ = std::move(merged);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check(nvars_ == o.nvars_ || is_zero() || o.is_zero(), "polynomial arity mismatch");
  if (o.is_zero()) return *this;
  if (is_zero()) nvars_ = o.nvars_;
  std::vector<std::pair<Key, Rat>> merged;
  merged.reserve(t_.size() + o.t_.size());
  auto a = t_.cbegin();
  auto b = o.t_.cbegin();
  while (a != t_.cend() || b != o.t_.cend()) {
    if (b == o.t_.cend() || (a != t_.cend() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == t_.cend() || b->first < a->first) {
      merged.emplace_back(b->first, -b->second);
      ++b;
    } else {
      Rat s = a->second - b->second;
      if (s != 0) merged.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  t_ = std::move(merged);
  return *this;
}

Poly operator-(const Poly& a) {
  Poly r(a.nvars_);
  r.t_.reserve(a.t_.size());
  for (const auto& [k, c] : a.t_) r.t_.emplace_back(k, -c);
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  check(a.nvars_ == b.nvars_ || a.is_zero() || b.is_zero(), "polynomial arity mismatch");
  Poly r(a.is_zero() ? b.nvars_ : a.nvars_);
  if (a.is_zero() || b.is_zero()) return r;
  const Poly& small = a.t_.size() <= b.t_.size() ? a : b;
  const Poly& large = a.t_.size() <= b.t_.size() ? b : a;

  if (small.t_.size() <= 4) {
    // few shifted copies, merged pairwise
    for (const auto& [ks, cs] : small.t_) {
      Poly shifted(r.nvars_);
      shifted.t_.reserve(large.t_.size());
      for (const auto& [kl, cl] : large.t_)
        shifted.t_.emplace_back(key_sum(ks, kl), cs * cl);
      r += shifted;
    }
    return r;
  }

  std::unordered_map<Poly::Key, Rat, KeyHash> acc;
  acc.reserve(small.t_.size() * large.t_.size() / 2);
  for (const auto& [ks, cs] : small.t_)
    for (const auto& [kl, cl] : large.t_) acc[key_sum(ks, kl)] += cs * cl;
  r.t_.reserve(acc.size());
  for (auto& [k, c] : acc)
    if (c != 0) r.t_.emplace_back(k, std::move(c));
  std::sort(r.t_.begin(), r.t_.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return r;
}

namespace {

// Geobucket accumulator: the remainder of a long division lives in a few
// sorted lists of geometrically increasing size, so subtracting a shifted
// divisor costs O(|d| log) amortized instead of a full-remainder merge.
class Geobucket {
public:
  using Term = std::pair<Poly::Key, Rat>;

  void add_list(std::vector<Term> l) {
    if (l.empty()) return;
    std::size_t level = 0;
    while ((std::size_t(4) << (2 * level)) < l.size()) ++level;
    while (level < buckets_.size() && !buckets_[level].empty()) {
      l = merge(std::move(l), std::move(buckets_[level]));
      buckets_[level].clear();
      ++level;
    }
    if (level >= buckets_.size()) buckets_.resize(level + 1);
    buckets_[level] = std::move(l);
  }

  // extract the leading (largest-key) term, summing duplicates across
  // buckets and skipping cancellations; false when empty
  bool pop_leading(Poly::Key& key, Rat& coeff) {
    for (;;) {
      bool found = false;
      for (const auto& b : buckets_)
        if (!b.empty() && (!found || key < b.back().first)) {
          key = b.back().first;
          found = true;
        }
      if (!found) return false;
      coeff = 0;
      for (auto& b : buckets_)
        while (!b.empty() && b.back().first == key) {
          coeff += b.back().second;
          b.pop_back();
        }
      if (coeff != 0) return true;
    }
  }

private:
  static std::vector<Term> merge(std::vector<Term> a, std::vector<Term> b) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() || j != b.end()) {
      if (j == b.end() || (i != a.end() && i->first < j->first)) {
        out.push_back(std::move(*i++));
      } else if (i == a.end() || j->first < i->first) {
        out.push_back(std::move(*j++));
      } else {
        Rat s = i->second + j->second;
        if (s != 0) out.emplace_back(i->first, std::move(s));
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::vector<std::vector<Term>> buckets_;
};

} // namespace

Poly Poly::divexact(const Poly& d) const {
  check(!d.is_zero(), "polynomial division by zero");
  if (is_zero()) return Poly(nvars_ ? nvars_ : d.nvars_);
  check(nvars_ == d.nvars_, "polynomial arity mismatch");
  if (d.is_constant_one()) return *this;

  const Key& dk = d.t_.back().first;
  const Rat& dc = d.t_.back().second;

  Geobucket rem;
  rem.add_list(t_);

  std::vector<std::pair<Key, Rat>> qterms;
  Key rk;
  Rat rc;
  while (rem.pop_leading(rk, rc)) {
    Key e;
    for (std::size_t w = 0; w < kKeyWords; ++w) {
      // per-byte subtraction with divisibility check
      std::uint64_t rw = rk[w], dw = dk[w], ew = 0;
      for (int byte = 0; byte < 8; ++byte) {
        std::uint64_t re = (rw >> (8 * byte)) & 0xff, de = (dw >> (8 * byte)) & 0xff;
        check(re >= de, "polynomial division is not exact");
        ew |= (re - de) << (8 * byte);
      }
      e[w] = ew;
    }
    Rat c = rc / dc;
    // the leading term is already popped; subtract c x^e (d - lead(d))
    std::vector<Geobucket::Term> shifted;
    shifted.reserve(d.t_.size() - 1);
    for (std::size_t k = 0; k + 1 < d.t_.size(); ++k)
      shifted.emplace_back(key_sum(e, d.t_[k].first), -(c * d.t_[k].second));
    rem.add_list(std::move(shifted));
    qterms.emplace_back(e, std::move(c));
  }
  std::sort(qterms.begin(), qterms.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  Poly q(nvars_);
  q.t_ = std::move(qterms);
  return q;
}

Rat Poly::eval(const std::vector<Int>& point) const {
  check(point.size() == nvars_, "evaluation point arity mismatch");
  Rat acc = 0;
  Int t, p;
  Exps e(nvars_);
  for (const auto& [k, c] : t_) {
    unpack(k, e);
    t = 1;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      mpz_pow_ui(p.get_mpz_t(), point[i].get_mpz_t(), e[i]);
      t *= p;
    }
    acc += c * Rat(t);
  }
  return acc;
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
  if (is_zero()) return "0";
  std::string s;
  Exps e(nvars_);
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    unpack(it->first, e);
    if (!s.empty()) s += " + ";
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty())
      s += indexlab::to_string(it->second);
    else if (it->second == 1)
      s += mono;
    else
      s += indexlab::to_string(it->second) + "*" + mono;
  }
  return s;
}

PolyMatrix::PolyMatrix(std::size_t r, std::size_t c, std::vector<std::string> names)
    : rows(r), cols(c), var_names(std::move(names)),
      entries(r * c, Poly(var_names.size())) {}

long PolyMatrix::max_entry_degree() const {
  long d = 0;
  for (const Poly& p : entries) d = std::max(d, p.total_degree());
  return d;
}

RationalMatrix PolyMatrix::eval(const std::vector<Int>& point) const {
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = at(i, j).eval(point);
  return m;
}

std::vector<std::string> default_var_names(std::size_t n) {
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = "x" + std::to_string(i + 1);
  return names;
}

} // namespace indexlab
