#pragma once

#include <vector>

#include "frlim/abgroup.hpp"
#include "frlim/gruenberg.hpp"

namespace frlim {

/// Exact linear algebra inside the finite group ring ZG, realized on the
/// regular basis Z^{|G|}: powers of the augmentation ideal and tensor
/// products of augmentation-ideal modules over ZG.
class GroupAlgebra {
 public:
  explicit GroupAlgebra(const GroupData& gd) : gd_(&gd) {
    std::size_t n = gd.order();
    // basis of g: e_x - e_1 for x != 1
    for (std::size_t x = 1; x < n; ++x) {
      std::vector<Int> v(n);
      v[x] = 1;
      v[0] = -1;
      aug_basis_.push_back(std::move(v));
    }
  }

  const GroupData& group() const { return *gd_; }
  std::size_t order() const { return gd_->order(); }

  /// g as an abelian group: free of rank |G| - 1.
  AbGroup augmentation_ideal_group() const {
    return AbGroup::free(order() - 1);
  }

  /// Lattice basis of g^k inside Z^{|G|} (g^0 = ZG).
  std::vector<std::vector<Int>> aug_power_basis(std::size_t k) const {
    std::size_t n = order();
    if (k == 0) {
      std::vector<std::vector<Int>> full;
      for (std::size_t x = 0; x < n; ++x) {
        std::vector<Int> v(n);
        v[x] = 1;
        full.push_back(std::move(v));
      }
      return full;
    }
    std::vector<std::vector<Int>> cur = aug_basis_;
    for (std::size_t step = 1; step < k; ++step) {
      Echelon e(n);
      for (const auto& u : cur)
        for (const auto& v : aug_basis_) e.insert(mul(u, v));
      e.canonicalize();
      cur = e.basis();
    }
    if (k == 1) {
      Echelon e(n);
      for (const auto& u : cur) e.insert(u);
      e.canonicalize();
      cur = e.basis();
    }
    return cur;
  }

  /// g^a / g^b for a < b.
  AbGroup aug_quotient(std::size_t a, std::size_t b) const {
    Echelon big(order());
    for (const auto& v : aug_power_basis(a)) big.insert(v);
    big.canonicalize();
    return subquotient(big, aug_power_basis(b));
  }

  /// n-fold tensor power of g over ZG (bimodule tensor: adjacent actions
  /// identified), as an abelian group.  Direct route: quotient of the
  /// Z-tensor power of the lattice g by the middle-action relations.
  AbGroup aug_mod_tensor(std::size_t n) const {
    return mod_tensor_chain(std::vector<std::size_t>(n, 1));
  }

  /// g^p (x)_ZG g via the same bilinear route.
  AbGroup aug_power_mod_tensor(std::size_t p) const {
    return mod_tensor_chain({p, 1});
  }

  /// Tensor product over ZG of the modules g^{p_1}, ..., g^{p_k} (right
  /// action on each left factor, left action on its right neighbour).
  AbGroup mod_tensor_chain(const std::vector<std::size_t>& powers) const {
    std::size_t n = order();
    std::vector<Echelon> lattices;
    for (std::size_t p : powers) {
      Echelon e(n);
      for (const auto& v : aug_power_basis(p)) e.insert(v);
      e.canonicalize();
      lattices.push_back(std::move(e));
    }
    // the echelon's own basis indexes the tensor factors
    std::vector<std::vector<std::vector<Int>>> bases;
    for (const auto& e : lattices) bases.push_back(e.basis());
    std::vector<std::size_t> ranks;
    std::size_t total = 1;
    for (const auto& b : bases) {
      ranks.push_back(b.size());
      total *= b.size();
    }

    // relations: at each junction j, (u . s) (x) v - u (x) (s . v) tensored
    // with the standard basis elsewhere; s ranges over the group generators
    std::vector<std::vector<Int>> relations;
    std::vector<int> gens;
    for (std::size_t i = 0; i < gd_->presentation().rank(); ++i)
      gens.push_back(gd_->table().coset_of(
          FreeWord::generator(static_cast<int>(i))));
    for (std::size_t j = 0; j + 1 < powers.size(); ++j) {
      for (std::size_t bu = 0; bu < ranks[j]; ++bu)
        for (std::size_t bv = 0; bv < ranks[j + 1]; ++bv)
          for (int s : gens) {
            // (u.s) in lattice coordinates and (s.v) likewise
            std::vector<Int> us =
                lattices[j].coordinates(act(bases[j][bu], s, /*left=*/false));
            std::vector<Int> sv = lattices[j + 1].coordinates(
                act(bases[j + 1][bv], s, /*left=*/true));
            // tensor difference, with identity in the other slots
            std::vector<Int> rel(total);
            add_tensor_block(rel, powers.size(), ranks, j, us, bv, bu, sv,
                             true);
            relations.push_back(std::move(rel));
          }
    }
    IntMatrix relmat(total, relations.size());
    for (std::size_t c = 0; c < relations.size(); ++c)
      relmat.set_column(c, relations[c]);
    return cokernel(relmat);
  }

  /// Presentation route for g^p (x)_ZG g: present g^p by free right modules
  /// and use right-exactness of the tensor product.  An independent check of
  /// the bilinear route.
  AbGroup aug_power_mod_tensor_presented(std::size_t p) const {
    std::size_t n = order();
    auto gens = aug_power_basis(p);  // module generators of g^p
    std::size_t m = gens.size();
    // phi: ZG^m -> g^p, e_t * a |-> gens[t] . a;  kernel as a lattice
    IntMatrix phi(n, m * n);
    for (std::size_t t = 0; t < m; ++t)
      for (std::size_t a = 0; a < n; ++a) {
        // gens[t] . a: right multiplication by the group element a
        std::vector<Int> col = act_elem(gens[t], static_cast<int>(a), false);
        for (std::size_t i = 0; i < n; ++i) phi.at(i, t * n + a) = col[i];
      }
    IntMatrix ker = kernel_basis(phi);

    // g^p (x)_ZG g = coker( K (x) g -> (ZG^m) (x)_ZG g = g^m )
    Echelon glat(n);
    for (const auto& v : aug_basis_) glat.insert(v);
    glat.canonicalize();
    std::size_t grank = glat.rank();
    IntMatrix rel(m * grank, ker.cols() * grank);
    for (std::size_t kcol = 0; kcol < ker.cols(); ++kcol)
      for (std::size_t b = 0; b < grank; ++b) {
        // image of (kernel vector) (x) (g basis vector b)
        for (std::size_t t = 0; t < m; ++t) {
          // component t of the kernel vector is sum_a ker[t*n+a] * a in ZG;
          // it acts on the left of g
          std::vector<Int> acc(n);
          for (std::size_t a = 0; a < n; ++a) {
            const Int& c = ker.at(t * n + a, kcol);
            if (c == 0) continue;
            std::vector<Int> moved =
                act_elem(glat.basis()[b], static_cast<int>(a), true);
            for (std::size_t i = 0; i < n; ++i) acc[i] += c * moved[i];
          }
          std::vector<Int> coords = glat.coordinates(acc);
          for (std::size_t i = 0; i < grank; ++i)
            rel.at(t * grank + i, kcol * grank + b) = coords[i];
        }
      }
    return cokernel(rel);
  }

  /// ZG-module product u * v from lattice vectors (convolution).
  std::vector<Int> mul(const std::vector<Int>& u,
                       const std::vector<Int>& v) const {
    std::size_t n = order();
    std::vector<Int> w(n);
    for (std::size_t a = 0; a < n; ++a) {
      if (u[a] == 0) continue;
      for (std::size_t b = 0; b < n; ++b)
        if (v[b] != 0) w[gd_->times(static_cast<int>(a), static_cast<int>(b))] += u[a] * v[b];
    }
    return w;
  }

 private:
  /// u acted by the group element s on the chosen side.
  std::vector<Int> act_elem(const std::vector<Int>& u, int s, bool left) const {
    std::size_t n = order();
    std::vector<Int> w(n);
    for (std::size_t a = 0; a < n; ++a) {
      if (u[a] == 0) continue;
      int t = left ? gd_->times(s, static_cast<int>(a))
                   : gd_->times(static_cast<int>(a), s);
      w[t] += u[a];
    }
    return w;
  }
  std::vector<Int> act(const std::vector<Int>& u, int s, bool left) const {
    return act_elem(u, s, left);
  }

  /// For every choice of basis indices in the bystander slots, appends the
  /// relation (us (x) e_bv) - (e_bu (x) sv) placed at slots j, j+1.
  void add_tensor_block(std::vector<Int>& rel, std::size_t slots,
                        const std::vector<std::size_t>& ranks, std::size_t j,
                        const std::vector<Int>& us, std::size_t bv,
                        std::size_t bu, const std::vector<Int>& sv,
                        bool /*unused*/) const {
    std::vector<std::size_t> others;
    for (std::size_t s = 0; s < slots; ++s)
      if (s != j && s != j + 1) others.push_back(s);
    std::vector<std::size_t> idx(slots, 0);
    auto flat = [&](const std::vector<std::size_t>& full) {
      std::size_t f = 0;
      for (std::size_t s = 0; s < slots; ++s) f = f * ranks[s] + full[s];
      return f;
    };
    while (true) {
      std::vector<std::size_t> full = idx;
      for (std::size_t t = 0; t < us.size(); ++t) {
        if (us[t] == 0) continue;
        full[j] = t;
        full[j + 1] = bv;
        rel[flat(full)] += us[t];
      }
      for (std::size_t t = 0; t < sv.size(); ++t) {
        if (sv[t] == 0) continue;
        full[j] = bu;
        full[j + 1] = t;
        rel[flat(full)] -= sv[t];
      }
      std::size_t k = others.size();
      while (k > 0) {
        std::size_t s = others[k - 1];
        if (++idx[s] < ranks[s]) break;
        idx[s] = 0;
        --k;
      }
      if (k == 0) break;
    }
  }

  const GroupData* gd_;
  std::vector<std::vector<Int>> aug_basis_;
};

}  // namespace frlim
