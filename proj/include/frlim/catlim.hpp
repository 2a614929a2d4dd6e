#pragma once

#include <map>
#include <string>
#include <vector>

#include "frlim/chain.hpp"

namespace frlim {

/// Finite category: objects, morphisms with domain/codomain, a total
/// composition table for composable pairs, and an identity per object.
/// Associativity and unitality are checked exhaustively on construction.
class FiniteCategory {
 public:
  struct Morphism {
    std::string name;
    int dom, cod;
  };

  FiniteCategory(std::vector<std::string> objects,
                 std::vector<Morphism> morphisms, std::vector<int> identities,
                 std::vector<std::vector<int>> composition)
      : objects_(std::move(objects)),
        morphisms_(std::move(morphisms)),
        identity_(std::move(identities)),
        comp_(std::move(composition)) {
    validate();
  }

  std::size_t num_objects() const { return objects_.size(); }
  std::size_t num_morphisms() const { return morphisms_.size(); }
  const std::vector<std::string>& objects() const { return objects_; }
  const Morphism& morphism(int i) const { return morphisms_[i]; }
  int identity(int obj) const { return identity_[obj]; }
  bool is_identity(int m) const { return identity_[morphisms_[m].dom] == m; }

  /// g after f; requires cod(f) == dom(g).
  int compose(int g, int f) const {
    int c = comp_[g][f];
    if (c < 0) throw ShapeMismatch("composing non-composable morphisms");
    return c;
  }

  bool strongly_connected() const {
    std::vector<std::vector<bool>> hom(num_objects(),
                                       std::vector<bool>(num_objects(), false));
    for (const auto& m : morphisms_) hom[m.dom][m.cod] = true;
    for (std::size_t a = 0; a < num_objects(); ++a)
      for (std::size_t b = 0; b < num_objects(); ++b)
        if (!hom[a][b]) return false;
    return true;
  }

  /// Composable chains (a_1, ..., a_p) with dom(a_i) = cod(a_{i+1});
  /// p = 0 gives one empty chain per object (encoded by -1 - object).
  std::vector<std::vector<int>> chains(std::size_t p,
                                       bool include_identities) const {
    std::vector<std::vector<int>> out;
    if (p == 0) {
      for (std::size_t o = 0; o < num_objects(); ++o)
        out.push_back({-1 - static_cast<int>(o)});
      return out;
    }
    std::vector<int> cur;
    build_chains(p, include_identities, cur, out);
    return out;
  }

  /// Object the chain maps into: cod of the outermost morphism.
  int chain_target(const std::vector<int>& chain) const {
    if (chain.size() == 1 && chain[0] < 0) return -1 - chain[0];
    return morphisms_[chain[0]].cod;
  }
  /// Object the chain starts from: dom of the innermost morphism.
  int chain_source(const std::vector<int>& chain) const {
    if (chain.size() == 1 && chain[0] < 0) return -1 - chain[0];
    return morphisms_[chain.back()].dom;
  }

 private:
  void build_chains(std::size_t p, bool ids, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) const {
    if (cur.size() == p) {
      out.push_back(cur);
      return;
    }
    for (int m = 0; m < static_cast<int>(morphisms_.size()); ++m) {
      if (!ids && is_identity(m)) continue;
      if (!cur.empty() && morphisms_[cur.back()].dom != morphisms_[m].cod)
        continue;
      cur.push_back(m);
      build_chains(p, ids, cur, out);
      cur.pop_back();
    }
  }

  void validate() const {
    if (identity_.size() != objects_.size())
      throw ShapeMismatch("one identity per object required");
    for (std::size_t o = 0; o < objects_.size(); ++o) {
      int id = identity_[o];
      if (morphisms_[id].dom != static_cast<int>(o) ||
          morphisms_[id].cod != static_cast<int>(o))
        throw ShapeMismatch("identity endpoints wrong");
    }
    if (comp_.size() != morphisms_.size())
      throw ShapeMismatch("composition table shape");
    for (std::size_t g = 0; g < morphisms_.size(); ++g) {
      if (comp_[g].size() != morphisms_.size())
        throw ShapeMismatch("composition table shape");
      for (std::size_t f = 0; f < morphisms_.size(); ++f) {
        bool composable = morphisms_[f].cod == morphisms_[g].dom;
        int c = comp_[g][f];
        if (!composable && c >= 0)
          throw ShapeMismatch("composition defined for non-composable pair");
        if (composable) {
          if (c < 0) throw ShapeMismatch("composition missing");
          if (morphisms_[c].dom != morphisms_[f].dom ||
              morphisms_[c].cod != morphisms_[g].cod)
            throw ShapeMismatch("composite has wrong endpoints");
        }
      }
    }
    for (std::size_t f = 0; f < morphisms_.size(); ++f) {
      if (comp_[identity_[morphisms_[f].cod]][f] != static_cast<int>(f) ||
          comp_[f][identity_[morphisms_[f].dom]] != static_cast<int>(f))
        throw ShapeMismatch("identity is not neutral");
    }
    // associativity, exhaustively
    for (std::size_t h = 0; h < morphisms_.size(); ++h)
      for (std::size_t g = 0; g < morphisms_.size(); ++g) {
        if (morphisms_[g].cod != morphisms_[h].dom) continue;
        for (std::size_t f = 0; f < morphisms_.size(); ++f) {
          if (morphisms_[f].cod != morphisms_[g].dom) continue;
          if (comp_[comp_[h][g]][f] != comp_[h][comp_[g][f]])
            throw ShapeMismatch("composition not associative");
        }
      }
  }

  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<int> identity_;
  std::vector<std::vector<int>> comp_;
};

/// Functor C -> Ab: a finitely presented abelian group per object and a
/// matrix on covers per morphism.  Functoriality is checked exhaustively.
struct Representation {
  const FiniteCategory* cat;
  std::vector<ModulePresentation> value;  // per object
  std::vector<IntMatrix> matrix;          // per morphism

  Representation(const FiniteCategory& c, std::vector<ModulePresentation> vals,
                 std::vector<IntMatrix> mats)
      : cat(&c), value(std::move(vals)), matrix(std::move(mats)) {
    validate();
  }

  static Representation constant(const FiniteCategory& c, const AbGroup& m) {
    std::vector<ModulePresentation> vals(c.num_objects(),
                                         ModulePresentation::of(m));
    std::vector<IntMatrix> mats;
    for (std::size_t f = 0; f < c.num_morphisms(); ++f)
      mats.push_back(IntMatrix::identity(vals[0].cover));
    return Representation(c, std::move(vals), std::move(mats));
  }

  void validate() const {
    for (std::size_t f = 0; f < cat->num_morphisms(); ++f) {
      const auto& m = cat->morphism(static_cast<int>(f));
      if (matrix[f].rows() != value[m.cod].cover ||
          matrix[f].cols() != value[m.dom].cover)
        throw ShapeMismatch("representation matrix shape");
    }
    for (std::size_t o = 0; o < cat->num_objects(); ++o)
      if (!(matrix[cat->identity(static_cast<int>(o))] ==
            IntMatrix::identity(value[o].cover)))
        throw ShapeMismatch("identity must act as identity matrix");
    for (std::size_t g = 0; g < cat->num_morphisms(); ++g)
      for (std::size_t f = 0; f < cat->num_morphisms(); ++f) {
        if (cat->morphism(static_cast<int>(f)).cod !=
            cat->morphism(static_cast<int>(g)).dom)
          continue;
        int gf = cat->compose(static_cast<int>(g), static_cast<int>(f));
        if (!(matrix[gf] == matrix[g] * matrix[f]))
          throw ShapeMismatch("representation not functorial");
      }
    // relations must be carried into relations
    for (std::size_t f = 0; f < cat->num_morphisms(); ++f) {
      const auto& m = cat->morphism(static_cast<int>(f));
      if (value[m.dom].is_free()) continue;
      IntMatrix moved = matrix[f] * value[m.dom].relations;
      Echelon rel(value[m.cod].cover);
      for (std::size_t j = 0; j < value[m.cod].relations.cols(); ++j)
        rel.insert(value[m.cod].relations.column(j));
      for (std::size_t j = 0; j < moved.cols(); ++j)
        if (!rel.contains(moved.column(j)))
          throw ShapeMismatch("representation does not preserve relations");
    }
  }
};

/// lim over a strongly connected category as the invariants of any object:
/// the kernel of the stacked difference matrix over all parallel pairs of
/// morphisms out of object 0.
inline AbGroup lim_invariants(const Representation& rep) {
  const FiniteCategory& c = *rep.cat;
  if (!c.strongly_connected())
    throw NotStronglyConnected("lim as invariants needs a strongly connected category");
  int c0 = 0;
  std::size_t cover0 = rep.value[c0].cover;

  // stack F(f1) - F(f2) for all parallel pairs out of c0, and pad columns
  // with the target relation lattices so torsion targets compare correctly
  std::vector<IntMatrix> diffs;
  std::vector<const IntMatrix*> target_rels;
  for (std::size_t f1 = 0; f1 < c.num_morphisms(); ++f1) {
    if (c.morphism(static_cast<int>(f1)).dom != c0) continue;
    for (std::size_t f2 = f1 + 1; f2 < c.num_morphisms(); ++f2) {
      if (c.morphism(static_cast<int>(f2)).dom != c0) continue;
      if (c.morphism(static_cast<int>(f1)).cod !=
          c.morphism(static_cast<int>(f2)).cod)
        continue;
      diffs.push_back(rep.matrix[f1] + (-rep.matrix[f2]));
      target_rels.push_back(&rep.value[c.morphism(static_cast<int>(f1)).cod].relations);
    }
  }
  // solution lattice {x : D x in im(rels)} via the kernel of [D | -rels]
  std::size_t total_rows = 0, rel_cols = 0;
  for (std::size_t k = 0; k < diffs.size(); ++k) {
    total_rows += diffs[k].rows();
    rel_cols += target_rels[k]->cols();
  }
  IntMatrix big(total_rows, cover0 + rel_cols);
  std::size_t row = 0, rc = cover0;
  for (std::size_t k = 0; k < diffs.size(); ++k) {
    for (std::size_t i = 0; i < diffs[k].rows(); ++i)
      for (std::size_t j = 0; j < cover0; ++j)
        big.at(row + i, j) = diffs[k].at(i, j);
    for (std::size_t i = 0; i < target_rels[k]->rows(); ++i)
      for (std::size_t j = 0; j < target_rels[k]->cols(); ++j)
        big.at(row + i, rc + j) = -target_rels[k]->at(i, j);
    row += diffs[k].rows();
    rc += target_rels[k]->cols();
  }
  IntMatrix ker = kernel_basis(big);
  Echelon solutions(cover0);
  for (std::size_t j = 0; j < ker.cols(); ++j) {
    std::vector<Int> x(cover0);
    for (std::size_t i = 0; i < cover0; ++i) x[i] = ker.at(i, j);
    solutions.insert(std::move(x));
  }
  solutions.canonicalize();
  std::vector<std::vector<Int>> rel0;
  for (std::size_t j = 0; j < rep.value[c0].relations.cols(); ++j)
    rel0.push_back(rep.value[c0].relations.column(j));
  return subquotient(solutions, rel0);
}

namespace detail {

inline bool face_degenerate(const FiniteCategory& cat,
                            const std::vector<int>& chain) {
  if (chain.size() == 1 && chain[0] < 0) return false;  // empty chain
  for (int m : chain)
    if (cat.is_identity(m)) return true;
  return false;
}

/// Cochain complex computing lim^n: degree p is the product over composable
/// p-chains (a_1,...,a_p), a_i: c_i -> c_{i-1}, of the value at the chain
/// target c_0; the differential is the categorical bar differential.  The
/// variance is pinned by H^0 = equalizer limit, which the tests enforce.
struct CochainComplex {
  std::vector<ModulePresentation> modules;  // degree 0..top
  std::vector<IntMatrix> deltas;            // deltas[p]: C^p -> C^{p+1}

  /// Reindex as a chain complex (degree k holds C^{top-k}) and take homology.
  AbGroup cohomology(long n) const {
    long top = static_cast<long>(modules.size()) - 1;
    if (n < 0 || n > top) return AbGroup::zero();
    std::vector<ModulePresentation> mods(modules.rbegin(), modules.rend());
    std::vector<IntMatrix> diffs;
    for (long k = top - 1; k >= 0; --k) diffs.push_back(deltas[k]);
    ChainComplex c(0, std::move(mods), std::move(diffs));
    return homology(c, top - n);
  }
};

inline CochainComplex lim_cochain_complex(const Representation& rep,
                                          std::size_t top,
                                          bool include_identities) {
  const FiniteCategory& cat = *rep.cat;
  CochainComplex out;
  std::vector<std::vector<std::vector<int>>> chains;
  for (std::size_t p = 0; p <= top; ++p)
    chains.push_back(cat.chains(p, include_identities));

  // block offsets per degree
  std::vector<std::vector<std::size_t>> offset(top + 1);
  for (std::size_t p = 0; p <= top; ++p) {
    std::size_t off = 0;
    for (const auto& ch : chains[p]) {
      offset[p].push_back(off);
      off += rep.value[cat.chain_target(ch)].cover;
    }
    // assemble the degree-p module: product of the chain-target values
    std::size_t total_rel = 0;
    for (const auto& ch : chains[p])
      total_rel += rep.value[cat.chain_target(ch)].relations.cols();
    ModulePresentation m;
    m.cover = off;
    m.relations = IntMatrix(off, total_rel);
    std::size_t rc = 0;
    for (std::size_t t = 0; t < chains[p].size(); ++t) {
      const IntMatrix& rel = rep.value[cat.chain_target(chains[p][t])].relations;
      for (std::size_t i = 0; i < rel.rows(); ++i)
        for (std::size_t j = 0; j < rel.cols(); ++j)
          m.relations.at(offset[p][t] + i, rc + j) = rel.at(i, j);
      rc += rel.cols();
    }
    out.modules.push_back(std::move(m));
  }

  std::vector<std::map<std::vector<int>, std::size_t>> index(top + 1);
  for (std::size_t p = 0; p <= top; ++p)
    for (std::size_t t = 0; t < chains[p].size(); ++t)
      index[p][chains[p][t]] = t;
  auto chain_index = [&](std::size_t p, const std::vector<int>& ch) {
    auto it = index[p].find(ch);
    if (it == index[p].end()) throw ShapeMismatch("face chain not found");
    return it->second;
  };

  for (std::size_t p = 0; p < top; ++p) {
    IntMatrix d(out.modules[p + 1].cover, out.modules[p].cover);
    for (std::size_t t = 0; t < chains[p + 1].size(); ++t) {
      const std::vector<int>& ch = chains[p + 1][t];
      std::size_t rows = rep.value[cat.chain_target(ch)].cover;
      // face 0: apply F(a_1) to the value at the truncated chain
      {
        std::vector<int> face(ch.begin() + 1, ch.end());
        if (face.empty())
          face = {-1 - cat.morphism(ch[0]).dom};
        if (include_identities || !face_degenerate(cat, face)) {
          std::size_t s = chain_index(p, face);
          const IntMatrix& m = rep.matrix[ch[0]];
          for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
              if (m.at(i, j) != 0)
                d.at(offset[p + 1][t] + i, offset[p][s] + j) += m.at(i, j);
        }
      }
      // faces 1..p: compose a_i a_{i+1}
      for (std::size_t i = 1; i <= p; ++i) {
        std::vector<int> face;
        for (std::size_t k = 0; k < ch.size(); ++k) {
          if (k == i - 1) {
            face.push_back(cat.compose(ch[i - 1], ch[i]));
            ++k;  // skip ch[i]
          } else {
            face.push_back(ch[k]);
          }
        }
        if (!include_identities && face_degenerate(cat, face)) continue;
        std::size_t s = chain_index(p, face);
        Int sign = (i % 2 == 0) ? 1 : -1;
        for (std::size_t q = 0; q < rows; ++q)
          d.at(offset[p + 1][t] + q, offset[p][s] + q) += sign;
      }
      // face p+1: drop the innermost morphism
      {
        std::vector<int> face(ch.begin(), ch.end() - 1);
        if (face.empty()) face = {-1 - cat.morphism(ch[0]).cod};
        if (include_identities || !face_degenerate(cat, face)) {
          std::size_t s = chain_index(p, face);
          Int sign = ((p + 1) % 2 == 0) ? 1 : -1;
          for (std::size_t q = 0; q < rows; ++q)
            d.at(offset[p + 1][t] + q, offset[p][s] + q) += sign;
        }
      }
    }
    out.deltas.push_back(std::move(d));
  }
  return out;
}

/// Boundary matrices of the nerve chain complex C_.(NC): free on composable
/// chains, with the alternating face sum.  An independent route used to
/// compute nerve cohomology by dualizing.
inline std::vector<IntMatrix> nerve_boundaries(
    const FiniteCategory& cat,
    const std::vector<std::vector<std::vector<int>>>& chains,
    bool include_identities) {
  std::vector<std::map<std::vector<int>, std::size_t>> index(chains.size());
  for (std::size_t p = 0; p < chains.size(); ++p)
    for (std::size_t t = 0; t < chains[p].size(); ++t)
      index[p][chains[p][t]] = t;

  std::vector<IntMatrix> bd;
  for (std::size_t p = 1; p < chains.size(); ++p) {
    IntMatrix d(chains[p - 1].size(), chains[p].size());
    for (std::size_t t = 0; t < chains[p].size(); ++t) {
      const std::vector<int>& ch = chains[p][t];
      for (std::size_t i = 0; i <= p; ++i) {
        std::vector<int> face;
        if (i == 0) {
          face.assign(ch.begin() + 1, ch.end());
          if (face.empty()) face = {-1 - cat.morphism(ch[0]).dom};
        } else if (i == p) {
          face.assign(ch.begin(), ch.end() - 1);
          if (face.empty()) face = {-1 - cat.morphism(ch[0]).cod};
        } else {
          for (std::size_t k = 0; k < ch.size(); ++k) {
            if (k == i - 1) {
              face.push_back(cat.compose(ch[i - 1], ch[i]));
              ++k;
            } else {
              face.push_back(ch[k]);
            }
          }
        }
        if (!include_identities && face_degenerate(cat, face)) continue;
        d.at(index[p - 1][face], t) += (i % 2 == 0) ? 1 : -1;
      }
    }
    bd.push_back(std::move(d));
  }
  return bd;
}

}  // namespace detail

/// lim^n of a representation via the cosimplicial replacement, truncated at
/// chain length `top` (defaults to n + 2 so the incoming differential at
/// degree n+1 is present).
inline AbGroup higher_lim(const Representation& rep, long n, long top = -1,
                          bool include_identities = true) {
  if (n < 0) return AbGroup::zero();
  if (top < 0) top = n + 2;
  if (top < n + 1) throw ShapeMismatch("chain bound must exceed the degree");
  auto cc = detail::lim_cochain_complex(rep, static_cast<std::size_t>(top),
                                        include_identities);
  return cc.cohomology(n);
}

/// H^n(B C, M): cohomology of the nerve, computed from the chain-level
/// boundary matrices of C_.(NC) dualized into M.  Degenerate simplices are
/// included by default; the normalized variant gives the same answer
/// (tested, not assumed).
inline AbGroup nerve_cohomology(const FiniteCategory& cat, const AbGroup& m,
                                long n, long top = -1,
                                bool include_identities = true) {
  if (n < 0) return AbGroup::zero();
  if (top < 0) top = n + 2;
  std::vector<std::vector<std::vector<int>>> chains;
  for (std::size_t p = 0; p <= static_cast<std::size_t>(top); ++p)
    chains.push_back(cat.chains(p, include_identities));
  std::vector<IntMatrix> bd =
      detail::nerve_boundaries(cat, chains, include_identities);

  // Hom(C_., M): cover = one copy of M per chain, delta = transpose (x) id
  IntMatrix mrel = m.presentation();
  std::size_t cov = mrel.rows();
  detail::CochainComplex cc;
  for (std::size_t p = 0; p < chains.size(); ++p) {
    ModulePresentation mod;
    mod.cover = chains[p].size() * cov;
    mod.relations = IntMatrix(mod.cover, chains[p].size() * mrel.cols());
    for (std::size_t t = 0; t < chains[p].size(); ++t)
      for (std::size_t i = 0; i < cov; ++i)
        for (std::size_t j = 0; j < mrel.cols(); ++j)
          mod.relations.at(t * cov + i, t * mrel.cols() + j) = mrel.at(i, j);
    cc.modules.push_back(std::move(mod));
  }
  for (std::size_t p = 0; p + 1 < chains.size(); ++p) {
    const IntMatrix& b = bd[p];  // C_{p+1} -> C_p
    IntMatrix delta(chains[p + 1].size() * cov, chains[p].size() * cov);
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) {
        if (b.at(r, c) == 0) continue;
        for (std::size_t i = 0; i < cov; ++i)
          delta.at(c * cov + i, r * cov + i) = b.at(r, c);
      }
    cc.deltas.push_back(std::move(delta));
  }
  return cc.cohomology(n);
}

/// An endofunctor of a finite category, as index maps.
struct FunctorData {
  std::vector<int> on_objects;
  std::vector<int> on_morphisms;
};

/// F composed with an endofunctor.
inline Representation pullback(const Representation& f, const FunctorData& phi) {
  const FiniteCategory& c = *f.cat;
  std::vector<ModulePresentation> vals;
  for (std::size_t o = 0; o < c.num_objects(); ++o)
    vals.push_back(f.value[phi.on_objects[o]]);
  std::vector<IntMatrix> mats;
  for (std::size_t m = 0; m < c.num_morphisms(); ++m)
    mats.push_back(f.matrix[phi.on_morphisms[m]]);
  return Representation(c, std::move(vals), std::move(mats));
}

/// Comparison of the maps induced on lim^n by natural transformations
/// Id -> Phi (given by a component morphism per object).
struct InducedLimMaps {
  AbGroup source, target;
  bool equal = false;       // the two induced maps agree on cohomology
  bool isomorphisms = false;  // and both are isomorphisms
};

inline InducedLimMaps compare_induced_lim_maps(const Representation& f,
                                               const FunctorData& phi,
                                               const std::vector<int>& eta1,
                                               const std::vector<int>& eta2,
                                               long n, long top = -1) {
  const FiniteCategory& cat = *f.cat;
  if (top < 0) top = n + 2;
  Representation fphi = pullback(f, phi);
  auto ca = detail::lim_cochain_complex(f, static_cast<std::size_t>(top), true);
  auto cb = detail::lim_cochain_complex(fphi, static_cast<std::size_t>(top), true);
  for (const auto& m : ca.modules)
    if (!m.is_free())
      throw ShapeMismatch("induced-map comparison implemented for free values");

  // block-diagonal cochain maps u |-> F(eta_target) o u, per chain
  auto chains_n = [&](std::size_t p) { return cat.chains(p, true); };
  auto block_map = [&](const std::vector<int>& eta, std::size_t p) {
    auto cs = chains_n(p);
    IntMatrix t(cb.modules[p].cover, ca.modules[p].cover);
    std::size_t ra = 0, rb = 0;
    for (const auto& ch : cs) {
      int target = cat.chain_target(ch);
      const IntMatrix& m = f.matrix[eta[target]];
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
          t.at(rb + i, ra + j) = m.at(i, j);
      ra += m.cols();
      rb += m.rows();
    }
    return t;
  };
  IntMatrix t1n = block_map(eta1, static_cast<std::size_t>(n));
  IntMatrix t2n = block_map(eta2, static_cast<std::size_t>(n));
  // naturality check: the square with the next differential commutes
  IntMatrix t1n1 = block_map(eta1, static_cast<std::size_t>(n) + 1);
  if (!((cb.deltas[n] * t1n) == (t1n1 * ca.deltas[n])))
    throw ShapeMismatch("cochain map does not commute with the differential");

  // cocycles and coboundaries at degree n
  auto cocycles = [&](const detail::CochainComplex& cc) {
    IntMatrix k = kernel_basis(cc.deltas[n]);
    Echelon e(cc.modules[n].cover);
    for (std::size_t j = 0; j < k.cols(); ++j) e.insert(k.column(j));
    e.canonicalize();
    return e;
  };
  Echelon ka = cocycles(ca), kb = cocycles(cb);
  auto coboundaries = [&](const detail::CochainComplex& cc, const Echelon& k) {
    std::vector<std::vector<Int>> out;
    if (n >= 1)
      for (std::size_t j = 0; j < cc.deltas[n - 1].cols(); ++j)
        out.push_back(cc.deltas[n - 1].column(j));
    return out;
  };
  auto cba = coboundaries(ca, ka);
  auto cbb = coboundaries(cb, kb);

  InducedLimMaps out;
  out.source = subquotient(ka, cba);
  out.target = subquotient(kb, cbb);

  // express images of the source cocycle basis in target cocycle coordinates
  auto express = [&](const IntMatrix& t) {
    IntMatrix m(kb.rank(), ka.rank());
    for (std::size_t j = 0; j < ka.rank(); ++j) {
      std::vector<Int> v = ka.basis()[j];
      std::vector<Int> w = t.apply(v);
      std::vector<Int> c = kb.coordinates(w);
      for (std::size_t i = 0; i < c.size(); ++i) m.at(i, j) = c[i];
    }
    return m;
  };
  IntMatrix m1 = express(t1n), m2 = express(t2n);

  // coboundary lattice in cocycle coordinates
  Echelon cob_coords(kb.rank());
  IntMatrix xb(kb.rank(), cbb.size());
  for (std::size_t j = 0; j < cbb.size(); ++j) {
    std::vector<Int> c = kb.coordinates(cbb[j]);
    cob_coords.insert(c);
    for (std::size_t i = 0; i < c.size(); ++i) xb.at(i, j) = c[i];
  }
  out.equal = true;
  for (std::size_t j = 0; j < m1.cols() && out.equal; ++j) {
    std::vector<Int> diff(kb.rank());
    for (std::size_t i = 0; i < kb.rank(); ++i)
      diff[i] = m1.at(i, j) - m2.at(i, j);
    out.equal = cob_coords.contains(diff);
  }
  // surjectivity of a map between isomorphic finitely generated groups is
  // equivalent to bijectivity
  bool surj1 = cokernel(m1.hstack(xb)).is_zero();
  bool surj2 = cokernel(m2.hstack(xb)).is_zero();
  out.isomorphisms = (out.source == out.target) && surj1 && surj2;
  return out;
}

/// Group as a one-object category: morphisms are the elements with
/// composition from the multiplication table times[g][h] = g*h.
inline FiniteCategory group_category(
    const std::vector<std::vector<int>>& times,
    const std::vector<std::string>& names, int identity) {
  std::vector<FiniteCategory::Morphism> ms;
  for (const std::string& nm : names) ms.push_back({nm, 0, 0});
  return FiniteCategory({"*"}, std::move(ms), {identity}, times);
}

/// Poset as a category from its full order relation (reflexive,
/// transitive); one morphism a -> b per related pair.
inline FiniteCategory poset_category(
    const std::vector<std::string>& objects,
    const std::vector<std::vector<bool>>& leq) {
  std::size_t n = objects.size();
  std::vector<FiniteCategory::Morphism> ms;
  std::map<std::pair<int, int>, int> idx;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (leq[a][b]) {
        idx[{static_cast<int>(a), static_cast<int>(b)}] =
            static_cast<int>(ms.size());
        ms.push_back({objects[a] + "<=" + objects[b], static_cast<int>(a),
                      static_cast<int>(b)});
      }
  std::vector<int> ids(n);
  for (std::size_t a = 0; a < n; ++a)
    ids[a] = idx[{static_cast<int>(a), static_cast<int>(a)}];
  std::vector<std::vector<int>> comp(ms.size(),
                                     std::vector<int>(ms.size(), -1));
  for (std::size_t g = 0; g < ms.size(); ++g)
    for (std::size_t f = 0; f < ms.size(); ++f)
      if (ms[f].cod == ms[g].dom) comp[g][f] = idx[{ms[f].dom, ms[g].cod}];
  return FiniteCategory(objects, std::move(ms), std::move(ids),
                        std::move(comp));
}

/// Two objects with mutually inverse morphisms between them.
inline FiniteCategory two_object_iso_category() {
  std::vector<FiniteCategory::Morphism> ms = {
      {"id_a", 0, 0}, {"id_b", 1, 1}, {"u", 0, 1}, {"v", 1, 0}};
  std::vector<std::vector<int>> comp(4, std::vector<int>(4, -1));
  comp[0][0] = 0;                  // id_a id_a
  comp[1][1] = 1;                  // id_b id_b
  comp[2][0] = 2;                  // u id_a
  comp[1][2] = 2;                  // id_b u
  comp[3][1] = 3;                  // v id_b
  comp[0][3] = 3;                  // id_a v
  comp[3][2] = 0;                  // v u = id_a
  comp[2][3] = 1;                  // u v = id_b
  return FiniteCategory({"a", "b"}, std::move(ms), {0, 1}, std::move(comp));
}

/// Cyclic group Z/m as a one-object category.
inline FiniteCategory cyclic_category(int m) {
  std::vector<std::vector<int>> times(m, std::vector<int>(m));
  std::vector<std::string> names;
  for (int a = 0; a < m; ++a) {
    names.push_back("t^" + std::to_string(a));
    for (int b = 0; b < m; ++b) times[a][b] = (a + b) % m;
  }
  return group_category(times, names, 0);
}

}  // namespace frlim
