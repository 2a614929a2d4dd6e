#pragma once

#include <map>
#include <optional>
#include <vector>

#include "frlim/abgroup.hpp"
#include "frlim/frword.hpp"
#include "frlim/group_ring.hpp"
#include "frlim/presentation.hpp"

namespace frlim {

/// The tensor algebra Z<X_1..X_d> truncated at degree N: the Magnus model of
/// Z[F]/f^N under x_i -> 1 + X_i.  Monomials of degree < N are indexed by
/// length and base-d digits; index 0 is the empty monomial.
class TruncRing {
 public:
  TruncRing(std::size_t d, std::size_t degree) : d_(d), n_(degree) {
    offsets_.assign(n_ + 1, 0);
    std::size_t pw = 1;
    for (std::size_t len = 0; len < n_; ++len) {
      offsets_[len + 1] = offsets_[len] + pw;
      pw *= d_;
    }
  }

  std::size_t generators() const { return d_; }
  std::size_t degree() const { return n_; }
  std::size_t dim() const { return offsets_[n_]; }

  std::size_t length_of(std::size_t idx) const {
    std::size_t len = 0;
    while (idx >= offsets_[len + 1]) ++len;
    return len;
  }

  /// Concatenation; dim() means truncated away.
  std::size_t mul_monomials(std::size_t a, std::size_t b) const {
    std::size_t la = length_of(a), lb = length_of(b);
    if (la + lb >= n_) return dim();
    std::size_t pw = 1;
    for (std::size_t k = 0; k < lb; ++k) pw *= d_;
    return offsets_[la + lb] + (a - offsets_[la]) * pw + (b - offsets_[lb]);
  }

  std::size_t generator_index(std::size_t i) const { return offsets_[1] + i; }

  std::string monomial_name(std::size_t idx) const {
    std::size_t len = length_of(idx);
    std::size_t code = idx - offsets_[len];
    std::string s;
    for (std::size_t k = 0; k < len; ++k) {
      std::size_t pw = 1;
      for (std::size_t j = 1; j < len - k; ++j) pw *= d_;
      std::size_t digit = code / pw;
      code %= pw;
      s += "X" + std::to_string(digit + 1);
    }
    return s.empty() ? "1" : s;
  }

  bool operator==(const TruncRing& o) const {
    return d_ == o.d_ && n_ == o.n_;
  }

 private:
  std::size_t d_, n_;
  std::vector<std::size_t> offsets_;
};

/// Sparse element of a TruncRing: monomial index -> coefficient.
struct TruncElem {
  std::map<std::size_t, Int> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  void add(std::size_t idx, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs.emplace(idx, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs.erase(it);
    }
  }
  TruncElem operator+(const TruncElem& o) const {
    TruncElem r = *this;
    for (const auto& [i, c] : o.coeffs) r.add(i, c);
    return r;
  }
  TruncElem operator-(const TruncElem& o) const {
    TruncElem r = *this;
    for (const auto& [i, c] : o.coeffs) r.add(i, -c);
    return r;
  }
};

inline TruncElem trunc_one() {
  TruncElem e;
  e.add(0, 1);
  return e;
}

inline TruncElem trunc_mul(const TruncRing& ring, const TruncElem& a,
                           const TruncElem& b) {
  TruncElem r;
  for (const auto& [i, c] : a.coeffs)
    for (const auto& [j, d] : b.coeffs) {
      std::size_t k = ring.mul_monomials(i, j);
      if (k < ring.dim()) r.add(k, c * d);
    }
  return r;
}

/// Magnus embedding x_i -> 1 + X_i, x_i^-1 -> geometric series, extended to
/// words and group-ring elements; a ring homomorphism up to truncation.
inline TruncElem magnus_embed(const TruncRing& ring, const FreeWord& w) {
  TruncElem acc = trunc_one();
  for (int l : w.letters()) {
    std::size_t g = static_cast<std::size_t>(std::abs(l)) - 1;
    if (g >= ring.generators()) throw InvalidGenerator("generator out of range");
    TruncElem factor;
    if (l > 0) {
      factor.add(0, 1);
      factor.add(ring.generator_index(g), 1);
    } else {
      // sum_k (-X)^k
      std::size_t idx = 0;
      Int sign = 1;
      for (std::size_t k = 0; k < ring.degree(); ++k) {
        factor.add(idx, sign);
        idx = ring.mul_monomials(idx, ring.generator_index(g));
        if (idx >= ring.dim()) break;
        sign = -sign;
      }
    }
    acc = trunc_mul(ring, acc, factor);
  }
  return acc;
}

inline TruncElem magnus_embed(const TruncRing& ring,
                              const GroupRingElement& e) {
  TruncElem acc;
  for (const auto& [w, c] : e.terms()) {
    TruncElem t = magnus_embed(ring, w);
    for (const auto& [i, k] : t.coeffs) acc.add(i, k * c);
  }
  return acc;
}

namespace detail {

using SparseVec = std::vector<std::pair<std::size_t, Int>>;  // sorted by index

inline SparseVec to_sparse(const TruncElem& e) {
  return SparseVec(e.coeffs.begin(), e.coeffs.end());
}

inline SparseVec scaled(const SparseVec& v, const Int& c) {
  SparseVec out;
  if (c == 0) return out;
  out.reserve(v.size());
  for (const auto& [i, k] : v) out.emplace_back(i, k * c);
  return out;
}

inline void axpy(SparseVec& v, const Int& c, const SparseVec& w) {
  if (c == 0) return;
  SparseVec out;
  out.reserve(v.size() + w.size());
  std::size_t i = 0, j = 0;
  while (i < v.size() || j < w.size()) {
    if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
      out.push_back(std::move(v[i++]));
    } else if (i == v.size() || w[j].first < v[i].first) {
      out.emplace_back(w[j].first, c * w[j].second);
      ++j;
    } else {
      Int s = v[i].second + c * w[j].second;
      if (s != 0) out.emplace_back(v[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  v = std::move(out);
}

/// Echelon basis of an integer sublattice with sparse rows; pivots positive,
/// off-pivot entries reduced, so equal lattices have equal bases after
/// canonicalize().
class SparseLattice {
 public:
  explicit SparseLattice(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseVec>& basis() const { return rows_; }

  bool insert(SparseVec v) {
    bool changed = false;
    std::size_t k = 0;
    while (!v.empty()) {
      std::size_t p = v.front().first;
      while (k < rows_.size() && rows_[k].front().first < p) ++k;
      if (k == rows_.size() || rows_[k].front().first > p) {
        if (v.front().second < 0)
          for (auto& [i, c] : v) c = -c;
        rows_.insert(rows_.begin() + k, std::move(v));
        canonical_ = false;
        return true;
      }
      Int& b = rows_[k].front().second;
      if (v.front().second % b == 0) {
        axpy(v, -(v.front().second / b), rows_[k]);
      } else {
        Int g, x, y;
        ext_gcd(b, v.front().second, g, x, y);
        Int bq = b / g, vq = v.front().second / g;
        SparseVec combo = scaled(rows_[k], x);
        axpy(combo, y, v);
        SparseVec newv = scaled(v, bq);
        axpy(newv, -vq, rows_[k]);
        rows_[k] = std::move(combo);
        v = std::move(newv);
        canonical_ = false;
        changed = true;
      }
      ++k;
    }
    return changed;
  }

  SparseVec reduce(SparseVec v) const {
    std::size_t k = 0;
    while (!v.empty()) {
      std::size_t p = v.front().first;
      while (k < rows_.size() && rows_[k].front().first < p) ++k;
      if (k == rows_.size() || rows_[k].front().first > p) return v;
      if (v.front().second % rows_[k].front().second != 0) return v;
      axpy(v, -(v.front().second / rows_[k].front().second), rows_[k]);
    }
    return v;
  }

  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  std::vector<Int> coordinates(SparseVec v) const {
    std::vector<Int> c(rows_.size());
    std::size_t k = 0;
    while (!v.empty()) {
      std::size_t p = v.front().first;
      while (k < rows_.size() && rows_[k].front().first < p) ++k;
      if (k == rows_.size() || rows_[k].front().first > p ||
          v.front().second % rows_[k].front().second != 0)
        throw NotSubLattice("vector not in lattice");
      c[k] = v.front().second / rows_[k].front().second;
      axpy(v, -c[k], rows_[k]);
    }
    return c;
  }

  void canonicalize() {
    if (canonical_) return;
    // ascending pivots: later reductions only modify later columns
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      std::size_t p = rows_[k].front().first;
      const Int& piv = rows_[k].front().second;
      for (std::size_t j = 0; j < k; ++j) {
        // entry of row j at column p
        Int e = 0;
        for (const auto& [i, c] : rows_[j]) {
          if (i == p) {
            e = c;
            break;
          }
          if (i > p) break;
        }
        Int q = floor_div(e, piv);
        if (q != 0) axpy(rows_[j], -q, rows_[k]);
      }
    }
    canonical_ = true;
  }

  bool equals(SparseLattice o) const {
    SparseLattice a = *this;
    a.canonicalize();
    o.canonicalize();
    return a.dim_ == o.dim_ && a.rows_ == o.rows_;
  }

 private:
  static void ext_gcd(const Int& a, const Int& b, Int& g, Int& x, Int& y) {
    Int r0 = a, r1 = b, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
    while (r1 != 0) {
      Int q = r0 / r1;
      Int r2 = r0 - q * r1;
      r0 = r1;
      r1 = r2;
      Int x2 = x0 - q * x1;
      x0 = x1;
      x1 = x2;
      Int y2 = y0 - q * y1;
      y0 = y1;
      y1 = y2;
    }
    if (r0 < 0) {
      r0 = -r0;
      x0 = -x0;
      y0 = -y0;
    }
    g = r0;
    x = x0;
    y = y0;
  }

  std::size_t dim_;
  std::vector<SparseVec> rows_;
  bool canonical_ = true;
};

}  // namespace detail

/// Finitely generated sublattice of a TruncRing that is closed under the
/// ambient (truncated) two-sided monomial multiplication: the image of an
/// ideal of Z[F] in Z[F]/f^N.
class IdealLattice {
 public:
  IdealLattice(const TruncRing& ring)
      : d_(ring.generators()), n_(ring.degree()), lat_(ring.dim()) {}

  std::size_t dim() const { return lat_.dim(); }
  std::size_t rank() const { return lat_.rank(); }
  const detail::SparseLattice& lattice() const { return lat_; }
  detail::SparseLattice& lattice() { return lat_; }
  std::size_t generators() const { return d_; }
  std::size_t degree() const { return n_; }

  bool same_ambient(const IdealLattice& o) const {
    return d_ == o.d_ && n_ == o.n_;
  }
  void check_ambient(const IdealLattice& o) const {
    if (!same_ambient(o)) throw AmbientMismatch("ideal lattices in different rings");
  }

  bool contains_elem(const TruncElem& e) const {
    return lat_.contains(detail::to_sparse(e));
  }

 private:
  std::size_t d_, n_;
  detail::SparseLattice lat_;
};

inline bool lattice_contains(const IdealLattice& big, const IdealLattice& small) {
  big.check_ambient(small);
  for (const auto& v : small.lattice().basis())
    if (!big.lattice().contains(v)) return false;
  return true;
}

inline IdealLattice lattice_sum(const TruncRing& ring, const IdealLattice& a,
                                const IdealLattice& b) {
  a.check_ambient(b);
  IdealLattice out = a;
  for (const auto& v : b.lattice().basis()) out.lattice().insert(v);
  out.lattice().canonicalize();
  return out;
}

inline IdealLattice lattice_intersect(const TruncRing& ring,
                                      const IdealLattice& a,
                                      const IdealLattice& b) {
  a.check_ambient(b);
  // Zassenhaus on doubled coordinates: echelonize rows (x | x) for x in A
  // and (y | 0) for y in B; rows supported on the second block are exactly
  // 0 (+) (A & B)
  std::size_t n = ring.dim();
  detail::SparseLattice doubled(2 * n);
  for (const auto& v : a.lattice().basis()) {
    detail::SparseVec w;
    w.reserve(2 * v.size());
    for (const auto& [i, c] : v) w.emplace_back(i, c);
    for (const auto& [i, c] : v) w.emplace_back(n + i, c);
    doubled.insert(std::move(w));
  }
  for (const auto& v : b.lattice().basis()) doubled.insert(v);
  IdealLattice out(ring);
  for (const auto& row : doubled.basis()) {
    if (row.front().first < n) continue;
    detail::SparseVec tail;
    tail.reserve(row.size());
    for (const auto& [i, c] : row) tail.emplace_back(i - n, c);
    out.lattice().insert(std::move(tail));
  }
  out.lattice().canonicalize();
  return out;
}

/// A / B as an abelian group; B must be a sublattice of A.
inline AbGroup quotient_abgroup(const IdealLattice& a, const IdealLattice& b) {
  a.check_ambient(b);
  if (!lattice_contains(a, b)) throw NotSubLattice("quotient by non-sublattice");
  IntMatrix x(a.lattice().rank(), b.lattice().rank());
  std::size_t j = 0;
  for (const auto& v : b.lattice().basis()) {
    std::vector<Int> c = a.lattice().coordinates(v);
    for (std::size_t i = 0; i < c.size(); ++i) x.at(i, j) = c[i];
    ++j;
  }
  return cokernel(x);
}

/// Cached fr-ideal computations for one presentation at several truncation
/// degrees.
class MagnusContext {
 public:
  explicit MagnusContext(const Presentation& p) : pres_(p) {}

  const Presentation& presentation() const { return pres_; }

  const TruncRing& ring(std::size_t degree) {
    auto it = rings_.find(degree);
    if (it == rings_.end())
      it = rings_.emplace(degree, TruncRing(pres_.rank(), degree)).first;
    return it->second;
  }

  /// Image of the monomial ideal of an fr-word in Z[F]/f^N; prefixes are
  /// cached so word families share work.
  const IdealLattice& fr_ideal(const FrWord& word, std::size_t degree) {
    check_fr_word(word);
    if (degree < word.size())
      throw DegreeTooSmall("truncation degree below word length");
    auto key = std::make_pair(word, degree);
    auto it = ideals_.find(key);
    if (it != ideals_.end()) return it->second;

    IdealLattice cur = [&] {
      if (word.size() == 1)
        return word[0] == 'f' ? f_ideal(degree) : r_ideal(degree);
      const IdealLattice& prefix =
          fr_ideal(word.substr(0, word.size() - 1), degree);
      return multiply_letter(ring(degree), prefix, word.back(), degree);
    }();
    return ideals_.emplace(key, std::move(cur)).first->second;
  }

  /// Sum of the word ideals of a sentence.
  IdealLattice sentence_ideal(const FrSentence& s, std::size_t degree) {
    IdealLattice out(ring(degree));
    for (const FrWord& w : s)
      out = lattice_sum(ring(degree), out, fr_ideal(w, degree));
    return out;
  }

  /// Intersection of the word ideals of a sentence.
  IdealLattice sentence_intersection(const FrSentence& s, std::size_t degree) {
    auto it = s.begin();
    IdealLattice out = fr_ideal(*it, degree);
    for (++it; it != s.end(); ++it)
      out = lattice_intersect(ring(degree), out, fr_ideal(*it, degree));
    return out;
  }

  /// ideal(w) <= ideal(v) at one truncation degree.
  bool ideal_contained(const FrWord& w, const FrWord& v, std::size_t degree) {
    return lattice_contains(fr_ideal(v, degree), fr_ideal(w, degree));
  }

  /// (intersection of upper) / (sum of lower) at one truncation degree.
  AbGroup generation_quotient(const FrSentence& upper, const FrSentence& lower,
                              std::size_t degree) {
    IdealLattice a = sentence_intersection(upper, degree);
    IdealLattice b = sentence_ideal(lower, degree);
    return quotient_abgroup(a, b);
  }

  /// Stabilization sweep: the quotient value once it is identical for three
  /// consecutive degrees AND the intersection lattice has stopped shrinking
  /// when projected to the lowest swept degree.  Sums of ideals project
  /// exactly between truncation degrees, but intersections only shrink
  /// towards the true image, so a still-moving projection means the sweep
  /// has not seen all relations yet.  Also returns the per-degree values.
  std::optional<AbGroup> stabilized_generation_quotient(
      const FrSentence& upper, const FrSentence& lower,
      const std::vector<std::size_t>& degrees,
      std::vector<AbGroup>* values = nullptr) {
    std::vector<AbGroup> vals;
    std::vector<detail::SparseLattice> heads;  // intersections projected to
                                               // the reference degree
    std::size_t ref = degrees.front();
    std::size_t ref_dim = ring(ref).dim();
    for (std::size_t n : degrees) {
      IdealLattice a = sentence_intersection(upper, n);
      IdealLattice b = sentence_ideal(lower, n);
      vals.push_back(quotient_abgroup(a, b));
      detail::SparseLattice head(ref_dim);
      for (const auto& row : a.lattice().basis()) {
        detail::SparseVec v;
        for (const auto& [i, c] : row)
          if (i < ref_dim) v.emplace_back(i, c);
        if (!v.empty()) head.insert(std::move(v));
      }
      heads.push_back(std::move(head));
    }
    if (values) *values = vals;
    for (std::size_t k = vals.size(); k-- >= 3;) {
      if (vals[k - 1] == vals[k - 2] && vals[k - 2] == vals[k - 3] &&
          heads[k - 1].equals(heads[k - 2]))
        return vals[k - 1];
    }
    return std::nullopt;
  }

 private:
  IdealLattice f_ideal(std::size_t degree) {
    const TruncRing& rg = ring(degree);
    IdealLattice out(rg);
    for (std::size_t i = 1; i < rg.dim(); ++i)
      out.lattice().insert({{i, Int(1)}});
    out.lattice().canonicalize();
    return out;
  }

  IdealLattice r_ideal(std::size_t degree) {
    const TruncRing& rg = ring(degree);
    IdealLattice out(rg);
    std::vector<detail::SparseVec> work;
    for (const FreeWord& s : pres_.relators) {
      TruncElem t = magnus_embed(rg, s);
      t.add(0, -1);
      detail::SparseVec v = detail::to_sparse(t);
      if (!v.empty() && out.lattice().insert(v)) work.push_back(v);
    }
    close_two_sided(rg, out, work);
    out.lattice().canonicalize();
    return out;
  }

  void close_two_sided(const TruncRing& rg, IdealLattice& out,
                       std::vector<detail::SparseVec> work) {
    while (!work.empty()) {
      detail::SparseVec v = std::move(work.back());
      work.pop_back();
      for (std::size_t g = 0; g < rg.generators(); ++g) {
        for (bool left : {true, false}) {
          detail::SparseVec u;
          for (const auto& [i, c] : v) {
            std::size_t j = left
                ? rg.mul_monomials(rg.generator_index(g), i)
                : rg.mul_monomials(i, rg.generator_index(g));
            if (j < rg.dim()) u.emplace_back(j, c);
          }
          // one-sided monomial multiplication preserves the length-lex order
          if (!u.empty() && out.lattice().insert(u)) work.push_back(u);
        }
      }
    }
  }

  IdealLattice multiply_letter(const TruncRing& rg, const IdealLattice& w,
                               char letter, std::size_t degree) {
    IdealLattice out(rg);
    std::vector<detail::SparseVec> work;
    auto push = [&](detail::SparseVec u) {
      if (!u.empty() && out.lattice().insert(u)) work.push_back(u);
    };
    if (letter == 'f') {
      for (const auto& v : w.lattice().basis())
        for (std::size_t g = 0; g < rg.generators(); ++g)
          push(right_mul_gen(rg, v, g));
    } else {
      for (const FreeWord& s : pres_.relators) {
        TruncElem t = magnus_embed(rg, s);
        t.add(0, -1);
        for (const auto& v : w.lattice().basis())
          push(sparse_mul(rg, v, detail::to_sparse(t)));
      }
    }
    // right monomial closure
    while (!work.empty()) {
      detail::SparseVec v = std::move(work.back());
      work.pop_back();
      for (std::size_t g = 0; g < rg.generators(); ++g)
        push(right_mul_gen(rg, v, g));
    }
    out.lattice().canonicalize();
    return out;
  }

  static detail::SparseVec right_mul_gen(const TruncRing& rg,
                                         const detail::SparseVec& v,
                                         std::size_t g) {
    detail::SparseVec u;
    for (const auto& [i, c] : v) {
      std::size_t j = rg.mul_monomials(i, rg.generator_index(g));
      if (j < rg.dim()) u.emplace_back(j, c);
    }
    return u;  // right multiplication preserves the length-lex order
  }

  static detail::SparseVec sparse_mul(const TruncRing& rg,
                                      const detail::SparseVec& a,
                                      const detail::SparseVec& b) {
    std::map<std::size_t, Int> acc;
    for (const auto& [i, c] : a)
      for (const auto& [j, d] : b) {
        std::size_t k = rg.mul_monomials(i, j);
        if (k < rg.dim()) acc[k] += c * d;
      }
    detail::SparseVec out;
    for (auto& [i, c] : acc)
      if (c != 0) out.emplace_back(i, c);
    return out;
  }

  Presentation pres_;
  std::map<std::size_t, TruncRing> rings_;
  std::map<std::pair<FrWord, std::size_t>, IdealLattice> ideals_;
};

}  // namespace frlim
