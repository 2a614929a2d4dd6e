#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "frlim/matrix.hpp"

namespace frlim {

/// Finitely generated abelian group in invariant-factor form:
/// Z^free_rank + Z/d1 + ... + Z/dk with 2 <= d1 | d2 | ... | dk.
/// The representation is canonical, so isomorphism is operator==.
struct AbGroup {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;

  AbGroup() = default;
  AbGroup(std::size_t rank, std::vector<Int> tors)
      : free_rank(rank), torsion(std::move(tors)) {}
  static AbGroup free(std::size_t rank) {
    AbGroup g;
    g.free_rank = rank;
    return g;
  }
  static AbGroup cyclic(const Int& d) {
    AbGroup g;
    if (d == 0)
      g.free_rank = 1;
    else if (abs(d) != 1)
      g.torsion.push_back(abs(d));
    return g;
  }
  static AbGroup zero() { return AbGroup(); }

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  bool is_finite() const { return free_rank == 0; }

  Int order() const {
    Int n = 1;
    for (const Int& d : torsion) n *= d;
    return n;
  }

  AbGroup direct_sum(const AbGroup& o) const;

  bool operator==(const AbGroup& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
  bool operator!=(const AbGroup& o) const { return !(*this == o); }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    auto app = [&s](const std::string& t) {
      if (!s.empty()) s += " + ";
      s += t;
    };
    if (free_rank == 1)
      app("Z");
    else if (free_rank > 1)
      app("Z^" + std::to_string(free_rank));
    for (const Int& d : torsion) app("Z/" + d.str());
    return s;
  }

  /// Presentation matrix: cover rank = free_rank + #torsion, one relation
  /// d_i * e_i per torsion generator (columns are relations, injective).
  IntMatrix presentation() const {
    IntMatrix r(free_rank + torsion.size(), torsion.size());
    for (std::size_t j = 0; j < torsion.size(); ++j)
      r.at(free_rank + j, j) = torsion[j];
    return r;
  }
};

/// Z^rows / column span of m, canonical form.
inline AbGroup cokernel(const IntMatrix& m) {
  SmithResult snf = smith_normal_form(m);
  AbGroup g;
  std::size_t r = snf_rank(snf.s);
  g.free_rank = m.rows() - r;
  for (std::size_t i = 0; i < r; ++i)
    if (snf.s.at(i, i) > 1) g.torsion.push_back(snf.s.at(i, i));
  return g;
}

inline AbGroup AbGroup::direct_sum(const AbGroup& o) const {
  // canonicalize through a diagonal presentation
  IntMatrix m(torsion.size() + o.torsion.size(),
              torsion.size() + o.torsion.size());
  std::size_t k = 0;
  for (const Int& d : torsion) m.at(k, k) = d, ++k;
  for (const Int& d : o.torsion) m.at(k, k) = d, ++k;
  AbGroup g = cokernel(m);
  g.free_rank += free_rank + o.free_rank;
  return g;
}

/// big/sub as an abstract group, where sub is given by generating vectors
/// lying inside the lattice big.
inline AbGroup subquotient(const Echelon& big,
                           const std::vector<std::vector<Int>>& sub_gens) {
  IntMatrix x(big.rank(), sub_gens.size());
  for (std::size_t j = 0; j < sub_gens.size(); ++j)
    x.set_column(j, big.coordinates(sub_gens[j]));
  return cokernel(x);
}

/// A (+) B over Z via the presentation of the tensor product.
inline AbGroup ab_tensor(const AbGroup& a, const AbGroup& b) {
  IntMatrix ra = a.presentation();
  IntMatrix rb = b.presentation();
  std::size_t ma = ra.rows(), mb = rb.rows();
  // relations: ra (x) I  and  I (x) rb on the cover Z^(ma*mb)
  IntMatrix rel(ma * mb, ra.cols() * mb + ma * rb.cols());
  std::size_t col = 0;
  for (std::size_t j = 0; j < ra.cols(); ++j)
    for (std::size_t t = 0; t < mb; ++t, ++col)
      for (std::size_t i = 0; i < ma; ++i) rel.at(i * mb + t, col) = ra.at(i, j);
  for (std::size_t s = 0; s < ma; ++s)
    for (std::size_t j = 0; j < rb.cols(); ++j, ++col)
      for (std::size_t t = 0; t < mb; ++t) rel.at(s * mb + t, col) = rb.at(t, j);
  return cokernel(rel);
}

/// Tor_1(A, B) as H_1 of the tensor product of the canonical two-term free
/// resolutions.  Symmetric; vanishes when either argument is free.
inline AbGroup ab_tor(const AbGroup& a, const AbGroup& b) {
  IntMatrix ra = a.presentation();
  IntMatrix rb = b.presentation();
  std::size_t ma = ra.rows(), sa = ra.cols();
  std::size_t mb = rb.rows(), sb = rb.cols();
  // P_a (x) P_b: degree 2 = sa*sb, degree 1 = sa*mb + ma*sb, degree 0 = ma*mb
  IntMatrix d1(ma * mb, sa * mb + ma * sb);
  for (std::size_t j = 0; j < sa; ++j)
    for (std::size_t t = 0; t < mb; ++t)
      for (std::size_t i = 0; i < ma; ++i)
        d1.at(i * mb + t, j * mb + t) = ra.at(i, j);
  for (std::size_t s = 0; s < ma; ++s)
    for (std::size_t j = 0; j < sb; ++j)
      for (std::size_t t = 0; t < mb; ++t)
        d1.at(s * mb + t, sa * mb + s * sb + j) = rb.at(t, j);
  IntMatrix d2(sa * mb + ma * sb, sa * sb);
  for (std::size_t p = 0; p < sa; ++p)
    for (std::size_t q = 0; q < sb; ++q) {
      // d(e_p (x) f_q) = (ra e_p) (x) f_q - e_p (x) (rb f_q), Koszul sign
      for (std::size_t t = 0; t < mb; ++t)
        d2.at(p * mb + t, p * sb + q) = -rb.at(t, q);
      for (std::size_t i = 0; i < ma; ++i)
        d2.at(sa * mb + i * sb + q, p * sb + q) = ra.at(i, p);
    }
  // H_1 = ker(d1) / im(d2)
  IntMatrix k = kernel_basis(d1);
  Echelon ker(d1.cols());
  for (std::size_t j = 0; j < k.cols(); ++j) ker.insert(k.column(j));
  std::vector<std::vector<Int>> im;
  for (std::size_t j = 0; j < d2.cols(); ++j) im.push_back(d2.column(j));
  return subquotient(ker, im);
}

}  // namespace frlim
