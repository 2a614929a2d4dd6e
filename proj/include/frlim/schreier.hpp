#pragma once

#include <vector>

#include "frlim/coset_table.hpp"

namespace frlim {

/// Schreier transversal and free basis of R from a complete coset table:
/// transversal words are BFS-minimal over positive generator edges (hence
/// prefix closed), and each non-tree edge (c, x) contributes the free
/// generator  t_c x (t_{c.x})^{-1}  of R.
class SchreierData {
 public:
  SchreierData(const Presentation& p, const CosetTable& t) : table_(&t) {
    std::size_t n = t.num_cosets();
    std::size_t d = p.rank();
    transversal_.assign(n, FreeWord());
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    std::vector<int> order = {0};
    std::vector<char> tree(n * d, 0);
    for (std::size_t head = 0; head < order.size(); ++head) {
      int c = order[head];
      for (std::size_t g = 0; g < d; ++g) {
        int t2 = t.act(c, static_cast<int>(g) + 1);
        if (!seen[t2]) {
          seen[t2] = 1;
          tree[c * d + g] = 1;
          transversal_[t2] =
              transversal_[c] * FreeWord::generator(static_cast<int>(g));
          order.push_back(t2);
        }
      }
    }
    for (std::size_t c = 0; c < n; ++c)
      if (!seen[c]) throw IncompleteTable("coset table is not transitive");

    // non-tree edges, in (coset, generator) order
    basis_index_.assign(n, std::vector<int>(d, 0));
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t g = 0; g < d; ++g) {
        if (tree[c * d + g]) continue;
        int t2 = t.act(static_cast<int>(c), static_cast<int>(g) + 1);
        FreeWord y = transversal_[c] * FreeWord::generator(static_cast<int>(g)) *
                     transversal_[t2].inverse();
        basis_.push_back(y);
        basis_index_[c][g] = static_cast<int>(basis_.size());
      }
  }

  const std::vector<FreeWord>& transversal() const { return transversal_; }
  const std::vector<FreeWord>& basis() const { return basis_; }

  /// +-(index+1) of the Schreier generator on edge (coset, gen); 0 for tree
  /// edges.
  int edge_basis_index(int coset, int gen) const {
    return basis_index_[coset][gen];
  }

  /// Rewrites a word lying in R as a word in the free generators y_j,
  /// returned as signed 1-based indices.
  std::vector<int> rewrite(const FreeWord& w) const {
    const CosetTable& t = *table_;
    if (t.coset_of(w) != 0)
      throw NotInSubgroup("word does not lie in the kernel");
    std::vector<int> out;
    int c = 0;
    for (int l : w.letters()) {
      int g = std::abs(l) - 1;
      if (l > 0) {
        int idx = basis_index_[c][g];
        if (idx != 0) out.push_back(idx);
        c = t.act(c, l);
      } else {
        int c2 = t.act(c, l);
        int idx = basis_index_[c2][g];
        if (idx != 0) out.push_back(-idx);
        c = c2;
      }
    }
    return out;
  }

  /// Inverse of rewrite: multiplies out basis words.
  FreeWord expand(const std::vector<int>& indices) const {
    FreeWord w;
    for (int i : indices) {
      const FreeWord& y = basis_[static_cast<std::size_t>(std::abs(i)) - 1];
      w = w * (i > 0 ? y : y.inverse());
    }
    return w;
  }

  const CosetTable& table() const { return *table_; }

 private:
  const CosetTable* table_;
  std::vector<FreeWord> transversal_;
  std::vector<FreeWord> basis_;
  std::vector<std::vector<int>> basis_index_;
};

inline SchreierData schreier_data(const Presentation& p, const CosetTable& t) {
  return SchreierData(p, t);
}

}  // namespace frlim
