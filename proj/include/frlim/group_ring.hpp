#pragma once

#include <map>

#include "frlim/freeword.hpp"
#include "frlim/matrix.hpp"

namespace frlim {

/// Element of the integral group ring Z[F]: a finite integer combination of
/// freely reduced words.  Zero coefficients are never stored.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  static GroupRingElement zero() { return {}; }
  static GroupRingElement one() { return of_word(FreeWord()); }
  static GroupRingElement of_word(const FreeWord& w, Int c = 1) {
    GroupRingElement e;
    e.add_term(w, c);
    return e;
  }

  const std::map<FreeWord, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const FreeWord& w, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  GroupRingElement operator+(const GroupRingElement& o) const {
    GroupRingElement r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
  }
  GroupRingElement operator-(const GroupRingElement& o) const {
    GroupRingElement r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
    return r;
  }
  GroupRingElement operator*(const GroupRingElement& o) const {
    GroupRingElement r;
    for (const auto& [w1, c1] : terms_)
      for (const auto& [w2, c2] : o.terms_) r.add_term(w1 * w2, c1 * c2);
    return r;
  }
  GroupRingElement scaled(const Int& c) const {
    GroupRingElement r;
    for (const auto& [w, k] : terms_) r.add_term(w, k * c);
    return r;
  }
  bool operator==(const GroupRingElement& o) const {
    return terms_ == o.terms_;
  }

  Int augmentation() const {
    Int s = 0;
    for (const auto& [w, c] : terms_) s += c;
    return s;
  }

  /// w -> w^{-1} extended linearly (an anti-automorphism).
  GroupRingElement involuted() const {
    GroupRingElement r;
    for (const auto& [w, c] : terms_) r.add_term(w.inverse(), c);
    return r;
  }

 private:
  std::map<FreeWord, Int> terms_;
};

inline GroupRingElement word_minus_one(const FreeWord& w) {
  GroupRingElement e = GroupRingElement::of_word(w);
  e.add_term(FreeWord(), -1);
  return e;
}

/// Fox derivative d/dx_i with the convention
///   w - 1 = sum_i (dw/dx_i) (x_i - 1),
/// i.e. d(uv) = du + u dv, d(x^-1)/dx = -x^-1.
inline GroupRingElement fox_derivative(const FreeWord& w, int gen_index) {
  if (gen_index < 0) throw InvalidGenerator("negative generator index");
  GroupRingElement d;
  FreeWord prefix;
  for (int l : w.letters()) {
    int g = std::abs(l) - 1;
    if (g == gen_index) {
      if (l > 0) {
        d.add_term(prefix, 1);
      } else {
        d.add_term(prefix * FreeWord::generator(g, -1), -1);
      }
    }
    prefix = prefix * FreeWord::generator(g, l > 0 ? 1 : -1);
  }
  return d;
}

inline GroupRingElement fox_derivative(const GroupRingElement& e,
                                       int gen_index) {
  GroupRingElement d;
  for (const auto& [w, c] : e.terms())
    d = d + fox_derivative(w, gen_index).scaled(c);
  return d;
}

/// Right-handed analogue: coefficients on the right,
///   w - 1 = sum_i (x_i - 1) D_i(w),  D(uv) = D(u) v + D(v).
inline GroupRingElement right_fox_derivative(const FreeWord& w,
                                             int gen_index) {
  if (gen_index < 0) throw InvalidGenerator("negative generator index");
  GroupRingElement d;
  const auto& ls = w.letters();
  FreeWord suffix;  // product of letters after the current one
  // walk from the right so suffixes are cheap
  std::vector<FreeWord> suffixes(ls.size());
  for (std::size_t k = ls.size(); k-- > 0;) {
    suffixes[k] = suffix;
    int g = std::abs(ls[k]) - 1;
    suffix = FreeWord::generator(g, ls[k] > 0 ? 1 : -1) * suffix;
  }
  for (std::size_t k = 0; k < ls.size(); ++k) {
    int g = std::abs(ls[k]) - 1;
    if (g != gen_index) continue;
    if (ls[k] > 0) {
      d.add_term(suffixes[k], 1);
    } else {
      d.add_term(FreeWord::generator(g, -1) * suffixes[k], -1);
    }
  }
  return d;
}

inline GroupRingElement right_fox_derivative(const GroupRingElement& e,
                                             int gen_index) {
  GroupRingElement d;
  for (const auto& [w, c] : e.terms())
    d = d + right_fox_derivative(w, gen_index).scaled(c);
  return d;
}

}  // namespace frlim
