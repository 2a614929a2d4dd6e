#pragma once

#include <vector>

#include "frlim/abgroup.hpp"
#include "frlim/matrix.hpp"

namespace frlim {

/// A finitely presented abelian group given as coker(relations): the cover is
/// Z^cover and the columns of relations generate the relation lattice.  An
/// empty relation matrix presents a free module.
struct ModulePresentation {
  std::size_t cover = 0;
  IntMatrix relations;  // cover x s (s may be 0)

  static ModulePresentation free(std::size_t rank) {
    return {rank, IntMatrix(rank, 0)};
  }
  static ModulePresentation of(const AbGroup& g) {
    return {g.free_rank + g.torsion.size(), g.presentation()};
  }
  bool is_free() const { return relations.cols() == 0; }
};

/// Bounded chain complex ... -> M_{k+1} -> M_k -> ... of finitely presented
/// abelian groups.  Differentials are matrices on the covers; diff(k) maps the
/// cover of module(k+1) to the cover of module(k).
class ChainComplex {
 public:
  ChainComplex(long bottom_degree, std::vector<ModulePresentation> modules,
               std::vector<IntMatrix> diffs)
      : bottom_(bottom_degree),
        modules_(std::move(modules)),
        diffs_(std::move(diffs)) {
    if (!modules_.empty() && diffs_.size() + 1 != modules_.size())
      throw ShapeMismatch("chain complex needs one differential per adjacent pair");
    for (std::size_t k = 0; k < diffs_.size(); ++k) {
      if (diffs_[k].rows() != modules_[k].cover ||
          diffs_[k].cols() != modules_[k + 1].cover)
        throw ShapeMismatch("differential shape does not chain");
    }
  }

  static ChainComplex free_complex(long bottom, std::vector<std::size_t> ranks,
                                   std::vector<IntMatrix> diffs) {
    std::vector<ModulePresentation> mods;
    mods.reserve(ranks.size());
    for (std::size_t r : ranks) mods.push_back(ModulePresentation::free(r));
    return ChainComplex(bottom, std::move(mods), std::move(diffs));
  }

  /// Two-term free resolution 0 -> Z^s -> Z^m -> 0 of a group, in degrees 1,0.
  static ChainComplex resolution_of(const AbGroup& g) {
    IntMatrix r = g.presentation();
    return free_complex(0, {r.rows(), r.cols()}, {r});
  }

  long bottom() const { return bottom_; }
  long top() const { return bottom_ + static_cast<long>(modules_.size()) - 1; }
  std::size_t length() const { return modules_.size(); }
  const ModulePresentation& module_at(long degree) const {
    return modules_[static_cast<std::size_t>(degree - bottom_)];
  }
  /// The differential leaving degree `degree` (mapping it one step down).
  const IntMatrix& diff_from(long degree) const {
    return diffs_[static_cast<std::size_t>(degree - bottom_ - 1)];
  }

  bool all_free() const {
    for (const auto& m : modules_)
      if (!m.is_free()) return false;
    return true;
  }

  /// d o d = 0 (exactly for free complexes, modulo relations otherwise) and
  /// relations carried into relations.
  void validate() const {
    for (std::size_t k = 0; k + 1 < diffs_.size(); ++k) {
      IntMatrix dd = diffs_[k] * diffs_[k + 1];
      if (modules_[k].is_free()) {
        if (!dd.is_zero()) throw ShapeMismatch("d o d != 0");
      } else {
        Echelon rel(modules_[k].cover);
        for (std::size_t j = 0; j < modules_[k].relations.cols(); ++j)
          rel.insert(modules_[k].relations.column(j));
        for (std::size_t j = 0; j < dd.cols(); ++j)
          if (!rel.contains(dd.column(j)))
            throw ShapeMismatch("d o d != 0 modulo relations");
      }
    }
    for (std::size_t k = 0; k < diffs_.size(); ++k) {
      if (modules_[k + 1].is_free()) continue;
      IntMatrix dr = diffs_[k] * modules_[k + 1].relations;
      Echelon rel(modules_[k].cover);
      for (std::size_t j = 0; j < modules_[k].relations.cols(); ++j)
        rel.insert(modules_[k].relations.column(j));
      for (std::size_t j = 0; j < dr.cols(); ++j)
        if (!rel.contains(dr.column(j)))
          throw ShapeMismatch("differential does not preserve relations");
    }
  }

  /// Replaces every module by a two-term free presentation and totalizes;
  /// the result has the same homology.
  ChainComplex reduce_to_free() const;

  friend ChainComplex complex_tensor(const ChainComplex& a,
                                     const ChainComplex& b);

 private:
  long bottom_;
  std::vector<ModulePresentation> modules_;
  std::vector<IntMatrix> diffs_;
};

namespace detail {

/// Column-independent basis matrix of the lattice spanned by the columns.
inline IntMatrix lattice_basis_matrix(const IntMatrix& m) {
  Echelon e(m.rows());
  for (std::size_t j = 0; j < m.cols(); ++j) e.insert(m.column(j));
  e.canonicalize();
  return IntMatrix::from_columns(m.rows(), e.basis());
}

}  // namespace detail

inline ChainComplex ChainComplex::reduce_to_free() const {
  if (all_free()) return *this;
  std::size_t len = modules_.size();
  std::vector<IntMatrix> rel(len);     // injective relation bases
  for (std::size_t k = 0; k < len; ++k)
    rel[k] = detail::lattice_basis_matrix(modules_[k].relations);

  // lifts: d R = R' S  and homotopies: d d = R'' H
  std::vector<IntMatrix> lift(len), homo(len);
  for (std::size_t k = 0; k + 1 < len; ++k) {
    IntMatrix target = diffs_[k] * rel[k + 1];
    auto s = solve_exact(rel[k], target);
    if (!s) throw ShapeMismatch("relations not preserved by differential");
    lift[k + 1] = std::move(*s);
  }
  for (std::size_t k = 0; k + 2 < len; ++k) {
    IntMatrix dd = diffs_[k] * diffs_[k + 1];
    auto h = solve_exact(rel[k], dd);
    if (!h) throw ShapeMismatch("d o d not zero modulo relations");
    homo[k + 2] = std::move(*h);
  }

  // T_j = cover_j (+) relcover_{j-1};  D(x,y) = (d x + R y, -H x - S y)
  std::vector<ModulePresentation> mods(len + 1);
  for (std::size_t j = 0; j <= len; ++j) {
    std::size_t c = (j < len ? modules_[j].cover : 0) +
                    (j >= 1 ? rel[j - 1].cols() : 0);
    mods[j] = ModulePresentation::free(c);
  }
  std::vector<IntMatrix> dd(len);
  for (std::size_t j = 1; j <= len; ++j) {
    IntMatrix d(mods[j - 1].cover, mods[j].cover);
    std::size_t cov_j = j < len ? modules_[j].cover : 0;
    std::size_t cov_jm1 = modules_[j - 1].cover;
    if (j < len) {
      for (std::size_t r = 0; r < cov_jm1; ++r)
        for (std::size_t c = 0; c < cov_j; ++c)
          d.at(r, c) = diffs_[j - 1].at(r, c);
    }
    // R block
    for (std::size_t r = 0; r < cov_jm1; ++r)
      for (std::size_t c = 0; c < rel[j - 1].cols(); ++c)
        d.at(r, cov_j + c) = rel[j - 1].at(r, c);
    // -H block
    if (j >= 2 && j < len && homo[j].rows() > 0) {
      for (std::size_t r = 0; r < homo[j].rows(); ++r)
        for (std::size_t c = 0; c < cov_j; ++c)
          d.at(cov_jm1 + r, c) = -homo[j].at(r, c);
    }
    // -S block
    if (j >= 2 && lift[j - 1].rows() > 0) {
      for (std::size_t r = 0; r < lift[j - 1].rows(); ++r)
        for (std::size_t c = 0; c < rel[j - 1].cols(); ++c)
          d.at(cov_jm1 + r, cov_j + c) = -lift[j - 1].at(r, c);
    }
    dd[j - 1] = std::move(d);
  }
  ChainComplex t(bottom_, std::move(mods), std::move(dd));
  t.validate();
  return t;
}

/// H_n(C) in canonical invariant-factor form.
inline AbGroup homology(const ChainComplex& c, long n) {
  if (n < c.bottom() || n > c.top()) return AbGroup::zero();
  if (!c.all_free()) return homology(c.reduce_to_free(), n);

  std::size_t rank_n = c.module_at(n).cover;
  Echelon ker(rank_n);
  if (n > c.bottom()) {
    IntMatrix k = kernel_basis(c.diff_from(n));
    for (std::size_t j = 0; j < k.cols(); ++j) ker.insert(k.column(j));
  } else {
    for (std::size_t i = 0; i < rank_n; ++i) {
      std::vector<Int> e(rank_n);
      e[i] = 1;
      ker.insert(std::move(e));
    }
  }
  std::vector<std::vector<Int>> im;
  if (n < c.top()) {
    const IntMatrix& d = c.diff_from(n + 1);
    for (std::size_t j = 0; j < d.cols(); ++j) im.push_back(d.column(j));
  }
  return subquotient(ker, im);
}

/// Tensor product of two free complexes with Koszul signs.
inline ChainComplex complex_tensor(const ChainComplex& a,
                                   const ChainComplex& b) {
  if (!a.all_free() || !b.all_free())
    throw ShapeMismatch("complex_tensor expects free complexes");
  long bot = a.bottom() + b.bottom();
  long top = a.top() + b.top();
  std::size_t len = static_cast<std::size_t>(top - bot + 1);

  // offset of the (p,q) block inside total degree p+q
  auto block_offset = [&](long p, long q) {
    std::size_t off = 0;
    for (long pp = a.bottom(); pp < p; ++pp) {
      long qq = p + q - pp;
      if (qq >= b.bottom() && qq <= b.top())
        off += a.module_at(pp).cover * b.module_at(qq).cover;
    }
    return off;
  };
  std::vector<std::size_t> ranks(len, 0);
  for (long p = a.bottom(); p <= a.top(); ++p)
    for (long q = b.bottom(); q <= b.top(); ++q)
      ranks[static_cast<std::size_t>(p + q - bot)] +=
          a.module_at(p).cover * b.module_at(q).cover;

  std::vector<IntMatrix> diffs;
  for (long j = bot + 1; j <= top; ++j) {
    IntMatrix d(ranks[static_cast<std::size_t>(j - 1 - bot)],
                ranks[static_cast<std::size_t>(j - bot)]);
    for (long p = a.bottom(); p <= a.top(); ++p) {
      long q = j - p;
      if (q < b.bottom() || q > b.top()) continue;
      std::size_t ra = a.module_at(p).cover, rb = b.module_at(q).cover;
      std::size_t src = block_offset(p, q);
      // d_a (x) id : block (p-1, q)
      if (p > a.bottom()) {
        const IntMatrix& da = a.diff_from(p);
        std::size_t dst = block_offset(p - 1, q);
        for (std::size_t i = 0; i < da.rows(); ++i)
          for (std::size_t k = 0; k < ra; ++k) {
            if (da.at(i, k) == 0) continue;
            for (std::size_t t = 0; t < rb; ++t)
              d.at(dst + i * rb + t, src + k * rb + t) += da.at(i, k);
          }
      }
      // (-1)^p id (x) d_b : block (p, q-1)
      if (q > b.bottom()) {
        const IntMatrix& db = b.diff_from(q);
        std::size_t dst = block_offset(p, q - 1);
        Int sign = (p % 2 == 0) ? 1 : -1;
        for (std::size_t k = 0; k < ra; ++k)
          for (std::size_t t = 0; t < db.rows(); ++t)
            for (std::size_t s = 0; s < rb; ++s) {
              if (db.at(t, s) == 0) continue;
              d.at(dst + k * db.rows() + t, src + k * rb + s) +=
                  sign * db.at(t, s);
            }
      }
    }
    diffs.push_back(std::move(d));
  }
  return ChainComplex::free_complex(bot, std::move(ranks), std::move(diffs));
}

/// H_i of the n-fold tensor power of a two-term free resolution of A;
/// this is the i-th derived functor of the n-fold tensor power at A.
inline AbGroup derived_tensor_power(const AbGroup& a, std::size_t n, long i) {
  if (n < 1) throw ShapeMismatch("tensor power arity must be >= 1");
  if (i < 0 || i >= static_cast<long>(n)) return AbGroup::zero();
  ChainComplex t = ChainComplex::resolution_of(a);
  for (std::size_t k = 1; k < n; ++k)
    t = complex_tensor(t, ChainComplex::resolution_of(a));
  return homology(t, i);
}

/// Tensor with a coefficient group at the complex level: C (x) A is computed
/// as the total complex of C (x) P_A.
inline ChainComplex tensor_with_group(const ChainComplex& c, const AbGroup& a) {
  return complex_tensor(c, ChainComplex::resolution_of(a));
}

}  // namespace frlim
