#pragma once

#include <deque>
#include <numeric>
#include <vector>

#include "frlim/presentation.hpp"

namespace frlim {

/// Complete coset table of the normal closure R of the relators, i.e. the
/// regular action of G = F/R.  Coset 0 is the identity; entries per coset are
/// indexed by 2*gen for the generator and 2*gen+1 for its inverse.
class CosetTable {
 public:
  CosetTable(std::size_t num_generators, std::vector<std::vector<int>> table)
      : d_(num_generators), tab_(std::move(table)) {}

  std::size_t num_cosets() const { return tab_.size(); }
  std::size_t num_generators() const { return d_; }

  int act(int coset, int signed_letter) const {
    int g = std::abs(signed_letter) - 1;
    std::size_t e = signed_letter > 0 ? 2 * g : 2 * g + 1;
    return tab_[coset][e];
  }

  int trace(int coset, const FreeWord& w) const {
    int c = coset;
    for (int l : w.letters()) c = act(c, l);
    return c;
  }

  int coset_of(const FreeWord& w) const { return trace(0, w); }

  bool generator_actions_are_bijections() const {
    for (std::size_t g = 0; g < d_; ++g) {
      std::vector<char> hit(num_cosets(), 0);
      for (std::size_t c = 0; c < num_cosets(); ++c) {
        int t = tab_[c][2 * g];
        if (t < 0 || hit[t]) return false;
        hit[t] = 1;
        if (tab_[t][2 * g + 1] != static_cast<int>(c)) return false;
      }
    }
    return true;
  }

 private:
  std::size_t d_;
  std::vector<std::vector<int>> tab_;
};

namespace detail {

/// HLT enumeration with FIFO coset definitions and immediate coincidence
/// processing.
class ToddCoxeterRun {
 public:
  ToddCoxeterRun(const Presentation& p, std::size_t max_cosets)
      : p_(p), d_(p.rank()), max_(max_cosets) {
    new_coset();
  }

  CosetTable run() {
    for (std::size_t c = 0; c < tab_.size(); ++c) {
      if (dead(c)) continue;
      for (const FreeWord& r : p_.relators) {
        scan(static_cast<int>(c), r);
        drain();
        if (dead(c)) break;
      }
      if (dead(c)) continue;
      for (std::size_t e = 0; e < 2 * d_; ++e)
        if (lookup(static_cast<int>(c), e) < 0) define(static_cast<int>(c), e);
    }
    return compact();
  }

 private:
  bool dead(std::size_t c) const { return rep_[c] != static_cast<int>(c); }

  int find(int c) {
    while (rep_[c] != c) {
      rep_[c] = rep_[rep_[c]];
      c = rep_[c];
    }
    return c;
  }

  static std::size_t edge_of(int signed_letter) {
    int g = std::abs(signed_letter) - 1;
    return signed_letter > 0 ? 2 * g : 2 * g + 1;
  }
  static std::size_t inv_edge(std::size_t e) { return e ^ 1u; }

  int lookup(int c, std::size_t e) {
    int t = tab_[c][e];
    if (t < 0) return -1;
    t = find(t);
    tab_[c][e] = t;
    return t;
  }

  int new_coset() {
    if (tab_.size() >= max_)
      throw ToddCoxeterOverflow("coset enumeration exceeded bound " +
                                std::to_string(max_));
    tab_.emplace_back(2 * d_, -1);
    rep_.push_back(static_cast<int>(tab_.size()) - 1);
    return static_cast<int>(tab_.size()) - 1;
  }

  int define(int c, std::size_t e) {
    int n = new_coset();
    tab_[c][e] = n;
    tab_[n][inv_edge(e)] = c;
    return n;
  }

  /// Records tab_[c][e] = t, queuing a coincidence on conflict.
  void deduce(int c, std::size_t e, int t) {
    int old = lookup(c, e);
    if (old < 0)
      tab_[c][e] = t;
    else if (old != t)
      queue_.emplace_back(old, t);
    int back = lookup(t, inv_edge(e));
    if (back < 0)
      tab_[t][inv_edge(e)] = c;
    else if (back != c)
      queue_.emplace_back(back, c);
  }

  void scan(int c, const FreeWord& r) {
    c = find(c);
    const auto& ls = r.letters();
    int cur = c;
    for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
      std::size_t e = edge_of(ls[i]);
      int t = lookup(cur, e);
      if (t < 0) t = define(cur, e);
      cur = t;
    }
    deduce(cur, edge_of(ls.back()), c);
  }

  void drain() {
    while (!queue_.empty()) {
      auto [a, b] = queue_.front();
      queue_.pop_front();
      a = find(a);
      b = find(b);
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      rep_[b] = a;
      for (std::size_t e = 0; e < 2 * d_; ++e) {
        int t = tab_[b][e];
        if (t < 0) continue;
        t = find(t);
        int s = lookup(a, e);
        if (s < 0)
          tab_[a][e] = t;
        else if (s != t)
          queue_.emplace_back(s, t);
      }
    }
  }

  CosetTable compact() {
    std::vector<int> newid(tab_.size(), -1);
    int n = 0;
    for (std::size_t c = 0; c < tab_.size(); ++c)
      if (!dead(c)) newid[c] = n++;
    std::vector<std::vector<int>> out(n, std::vector<int>(2 * d_, -1));
    for (std::size_t c = 0; c < tab_.size(); ++c) {
      if (dead(c)) continue;
      for (std::size_t e = 0; e < 2 * d_; ++e) {
        int t = tab_[c][e];
        if (t < 0) throw IncompleteTable("coset table did not close");
        out[newid[c]][e] = newid[find(t)];
      }
    }
    return CosetTable(d_, std::move(out));
  }

  const Presentation& p_;
  std::size_t d_;
  std::size_t max_;
  std::vector<std::vector<int>> tab_;
  std::vector<int> rep_;
  std::deque<std::pair<int, int>> queue_;
};

}  // namespace detail

/// Enumerates the cosets of the normal closure of the relators.  Throws
/// ToddCoxeterOverflow when the table does not close within max_cosets.
inline CosetTable todd_coxeter(const Presentation& p, std::size_t max_cosets) {
  if (max_cosets < 1) throw ToddCoxeterOverflow("bound must be >= 1");
  CosetTable t = detail::ToddCoxeterRun(p, max_cosets).run();
  // verification pass: bijections and trivially acting relators
  if (!t.generator_actions_are_bijections())
    throw IncompleteTable("generator action is not a bijection");
  for (const FreeWord& r : p.relators)
    for (std::size_t c = 0; c < t.num_cosets(); ++c)
      if (t.trace(static_cast<int>(c), r) != static_cast<int>(c))
        throw IncompleteTable("relator does not act trivially");
  return t;
}

}  // namespace frlim
