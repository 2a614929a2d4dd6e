#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frlim/game.hpp"
#include "frlim/magnus.hpp"
#include "frlim/zg_algebra.hpp"

namespace frlim {

/// Functor descriptor attached to an fr-code at a fixed lim degree.
struct Tag {
  enum class Kind {
    Zero,
    AugIdealTensorPower,   // g^(x)n over Z
    GabTensorPower,        // Gab^(x)n
    Homology,              // H_n(G)
    DerivedTensor,         // L_i of the n-fold tensor power at Gab
    TorGab,                // Tor(Gab (x) Gab, Gab)
    AugModTensor,          // g^(x)n over ZG
    AugQuotient,           // g / g^n
    AugIdealPower,         // g^n as an abelian group
    AugPowerModTensor,     // g^p (x)_ZG g
    AugSquareModGabTensor, // (g^2/g^3) (x) Gab
    AugGabMixedTensor,     // g^(x)a (x) Gab^(x)b over Z
    Unknown
  };
  Kind kind = Kind::Unknown;
  long n = 0, i = 0;

  static Tag zero() { return {Kind::Zero, 0, 0}; }
  static Tag unknown() { return {Kind::Unknown, 0, 0}; }
  static Tag of(Kind k, long n = 0, long i = 0) { return {k, n, i}; }

  bool operator==(const Tag& o) const {
    return kind == o.kind && n == o.n && i == o.i;
  }
  bool operator!=(const Tag& o) const { return !(*this == o); }

  bool is_zero() const { return kind == Kind::Zero; }
  bool is_unknown() const { return kind == Kind::Unknown; }

  std::string to_string() const {
    switch (kind) {
      case Kind::Zero:
        return "0";
      case Kind::AugIdealTensorPower:
        return n == 1 ? "g" : "g^(x)" + std::to_string(n);
      case Kind::GabTensorPower:
        return n == 1 ? "Gab" : "Gab^(x)" + std::to_string(n);
      case Kind::Homology:
        return "H_" + std::to_string(n) + "(G)";
      case Kind::DerivedTensor:
        return "L_" + std::to_string(i) + " (x)^" + std::to_string(n) + " Gab";
      case Kind::TorGab:
        return "Tor(Gab(x)Gab, Gab)";
      case Kind::AugModTensor:
        return "g^(x)_ZG " + std::to_string(n);
      case Kind::AugQuotient:
        return "g/g^" + std::to_string(n);
      case Kind::AugIdealPower:
        return "g^" + std::to_string(n);
      case Kind::AugPowerModTensor:
        return "g^" + std::to_string(n) + " (x)_ZG g";
      case Kind::AugSquareModGabTensor:
        return "(g^2/g^3) (x) Gab";
      case Kind::AugGabMixedTensor:
        return "g^(x)" + std::to_string(n) + " (x) Gab^(x)" + std::to_string(i);
      case Kind::Unknown:
        return "unknown";
    }
    return "unknown";
  }
};

/// An fr-code: an expression plus the derived-limit degree it is read at.
struct FrCode {
  FrExprPtr expr;
  long lim_degree = 1;

  static FrCode parse(const std::string& text, long i = 1) {
    return {parse_fr_expr(text), i};
  }
};

/// One row of the published table: the code as printed and the four
/// translations lim^1..lim^4.
struct TableEntry {
  std::string code;
  std::array<Tag, 4> tags;
};

/// The published table, all rows verbatim (including the row printed with a
/// duplicated summand, which the verification report flags).
inline const std::vector<TableEntry>& builtin_table() {
  using K = Tag::Kind;
  auto T = [](K k, long n = 0, long i = 0) { return Tag::of(k, n, i); };
  static const std::vector<TableEntry> table = {
      {"f", {Tag::zero(), Tag::zero(), Tag::zero(), Tag::zero()}},
      {"r",
       {T(K::AugIdealTensorPower, 1), Tag::zero(), Tag::zero(), Tag::zero()}},
      {"rr",
       {Tag::zero(), T(K::AugIdealTensorPower, 2), Tag::zero(), Tag::zero()}},
      {"rrr",
       {Tag::zero(), Tag::zero(), T(K::AugIdealTensorPower, 3), Tag::zero()}},
      {"rrrr",
       {Tag::zero(), Tag::zero(), Tag::zero(), T(K::AugIdealTensorPower, 4)}},
      {"fr+rf", {T(K::AugModTensor, 2), Tag::zero(), Tag::zero(), Tag::zero()}},
      {"ffr+frf+rff",
       {T(K::AugModTensor, 3), Tag::zero(), Tag::zero(), Tag::zero()}},
      {"r+ff", {T(K::GabTensorPower, 1), Tag::zero(), Tag::zero(), Tag::zero()}},
      {"r+fff", {T(K::AugQuotient, 3), Tag::zero(), Tag::zero(), Tag::zero()}},
      {"rf+ffr",
       {T(K::AugPowerModTensor, 2), Tag::zero(), Tag::zero(), Tag::zero()}},
      {"rf+fffr",
       {T(K::AugPowerModTensor, 3), Tag::zero(), Tag::zero(), Tag::zero()}},
      {"rfr+frr+ffff", {T(K::TorGab), Tag::zero(), Tag::zero(), Tag::zero()}},
      {"fr+rf+fff",
       {T(K::GabTensorPower, 2), Tag::zero(), Tag::zero(), Tag::zero()}},
      {"rff+frf+rff+ffff",
       {T(K::GabTensorPower, 3), Tag::zero(), Tag::zero(), Tag::zero()}},
      {"rr+fff",
       {T(K::DerivedTensor, 2, 1), T(K::GabTensorPower, 2), Tag::zero(),
        Tag::zero()}},
      {"rrr+ffff",
       {T(K::DerivedTensor, 3, 2), T(K::DerivedTensor, 3, 1),
        T(K::GabTensorPower, 3), Tag::zero()}},
      {"rrrr+fffff",
       {T(K::DerivedTensor, 4, 3), T(K::DerivedTensor, 4, 2),
        T(K::DerivedTensor, 4, 1), T(K::GabTensorPower, 4)}},
      {"rr+frf",
       {T(K::Homology, 3), T(K::AugModTensor, 2), Tag::zero(), Tag::zero()}},
      {"rrf+frr",
       {T(K::Homology, 4), T(K::Homology, 3), T(K::AugModTensor, 2),
        Tag::zero()}},
      {"rrr+frrf",
       {T(K::Homology, 5), T(K::Homology, 4), T(K::Homology, 3),
        T(K::AugModTensor, 2)}},
      {"rrrf+frrr",
       {T(K::Homology, 6), T(K::Homology, 5), T(K::Homology, 4),
        T(K::Homology, 3)}},
      {"rf+ffr+ffff",
       {T(K::AugSquareModGabTensor), Tag::zero(), Tag::zero(), Tag::zero()}},
      {"rfff+rfr+rrf",
       {Tag::zero(), T(K::AugGabMixedTensor, 1, 2), Tag::zero(), Tag::zero()}},
      {"rrfff+rrfr+rrrf",
       {Tag::zero(), Tag::zero(), T(K::AugGabMixedTensor, 2, 2), Tag::zero()}},
  };
  return table;
}

namespace detail {

inline FrWord repeat(char c, long k) { return FrWord(k, c); }

/// The sentence sum_{j=1..n} f^{j-1} r f^{n-j}.
inline FrSentence aug_mod_tensor_sentence(long n) {
  FrSentence s;
  for (long j = 1; j <= n; ++j)
    s.insert(repeat('f', j - 1) + "r" + repeat('f', n - j));
  return s;
}

/// Family matching on the normalized sentence; no table fallback here.
inline Tag recognize_families(const FrSentence& s, long i) {
  using K = Tag::Kind;
  if (i <= 0) return Tag::zero();  // lim^0 of an ideal vanishes
  // {f^k}
  if (s.size() == 1) {
    const FrWord& w = *s.begin();
    if (w.find('r') == FrWord::npos) return Tag::zero();
    // {r^n}
    if (w.find('f') == FrWord::npos) {
      long n = static_cast<long>(w.size());
      return i == n ? Tag::of(K::AugIdealTensorPower, n) : Tag::zero();
    }
    return Tag::unknown();
  }
  // {r, f^n}
  if (s.size() == 2 && s.count("r")) {
    FrWord other;
    for (const FrWord& w : s)
      if (w != "r") other = w;
    if (other.find('r') == FrWord::npos && other.size() >= 2) {
      long n = static_cast<long>(other.size());
      if (i != 1) return Tag::zero();
      return n == 2 ? Tag::of(K::GabTensorPower, 1) : Tag::of(K::AugQuotient, n);
    }
  }
  // {r^n, f^{n+1}}
  if (s.size() == 2) {
    FrWord rw, fw;
    for (const FrWord& w : s) {
      if (w.find('f') == FrWord::npos) rw = w;
      if (w.find('r') == FrWord::npos) fw = w;
    }
    if (!rw.empty() && !fw.empty() && fw.size() == rw.size() + 1 &&
        rw.size() >= 2) {
      long n = static_cast<long>(rw.size());
      if (i > n) return Tag::zero();
      if (i == n) return Tag::of(K::GabTensorPower, n);
      return Tag::of(K::DerivedTensor, n, n - i);
    }
  }
  // {f r^n, r^n f} (homology, even codes)
  if (s.size() == 2) {
    for (long n = 2; n <= 8; ++n) {
      FrSentence pat = {"f" + repeat('r', n), repeat('r', n) + "f"};
      if (s == pat) {
        if (i <= 2 * n - 2) return Tag::of(K::Homology, 2 * n + 1 - i);
        if (i == 2 * n - 1) return Tag::of(K::AugModTensor, 2);
        return Tag::zero();
      }
    }
  }
  // {r^n, f r^{n-1} f} (homology, odd codes)
  if (s.size() == 2) {
    for (long n = 2; n <= 8; ++n) {
      FrSentence pat = {repeat('r', n), "f" + repeat('r', n - 1) + "f"};
      if (s == pat) {
        if (i <= 2 * n - 3) return Tag::of(K::Homology, 2 * n - i);
        if (i == 2 * n - 2) return Tag::of(K::AugModTensor, 2);
        return Tag::zero();
      }
    }
  }
  // Tor(Gab (x) Gab, Gab)
  if (s == FrSentence{"rfr", "frr", "ffff"})
    return i == 1 ? Tag::of(K::TorGab) : Tag::zero();
  // sum f^{j-1} r f^{n-j} with or without f^{n+1}
  for (long n = 2; n <= 8; ++n) {
    FrSentence mod = aug_mod_tensor_sentence(n);
    if (s == mod) return i == 1 ? Tag::of(K::AugModTensor, n) : Tag::zero();
    FrSentence gab = mod;
    gab.insert(repeat('f', n + 1));
    if (s == gab) return i == 1 ? Tag::of(K::GabTensorPower, n) : Tag::zero();
  }
  return Tag::unknown();
}

}  // namespace detail

inline bool is_family_kind(Tag::Kind k) {
  using K = Tag::Kind;
  return k == K::AugIdealTensorPower || k == K::GabTensorPower ||
         k == K::Homology || k == K::DerivedTensor || k == K::TorGab ||
         k == K::AugModTensor || k == K::AugQuotient;
}

/// Maps a code to its functor descriptor: the intersection form r & f^n, the
/// named polynomial families, then (optionally) lookup among the published
/// rows whose text matches its own translation.
inline Tag recognize(const FrCode& code, bool table_fallback = true) {
  using K = Tag::Kind;
  const FrExpr& e = *code.expr;
  // non-polynomial code r & f^n
  if (e.kind == FrExpr::Kind::Intersection && e.children.size() == 2) {
    FrSentence a, b;
    try {
      a = expand_to_sentence(*e.children[0]);
      b = expand_to_sentence(*e.children[1]);
    } catch (const Error&) {
      return Tag::unknown();
    }
    if (a == FrSentence{"r"} && b.size() == 1 &&
        b.begin()->find('r') == FrWord::npos) {
      long n = static_cast<long>(b.begin()->size());
      return code.lim_degree == 1 ? Tag::of(K::AugIdealPower, n) : Tag::unknown();
    }
    return Tag::unknown();
  }
  if (e.has_intersection()) return Tag::unknown();
  FrSentence s = normalize(expand_to_sentence(e));
  Tag t = detail::recognize_families(s, code.lim_degree);
  if (!t.is_unknown() || !table_fallback) return t;
  // lookup among published rows that are consistent with their own tags
  for (const TableEntry& row : builtin_table()) {
    FrSentence rs = normalize(expand_to_sentence(*parse_fr_expr(row.code)));
    if (rs != s) continue;
    bool consistent = true;
    for (long i = 1; i <= 4; ++i) {
      Tag fam = detail::recognize_families(rs, i);
      if (!fam.is_unknown() && fam != row.tags[i - 1]) consistent = false;
      if (fam.is_unknown() && !row.tags[i - 1].is_zero() &&
          is_family_kind(row.tags[i - 1].kind))
        consistent = false;
    }
    if (!consistent) continue;
    if (code.lim_degree >= 1 && code.lim_degree <= 4)
      return row.tags[code.lim_degree - 1];
  }
  return Tag::unknown();
}

/// Knobs for evaluation and verification.
struct EvalOptions {
  std::size_t coset_bound = 4096;
  std::size_t basis_cap = 20000;
  std::vector<std::size_t> h2_degrees = {4, 5, 6};
  std::vector<std::size_t> h3_degrees = {5, 6, 7};
  std::vector<std::size_t> quotient_extra = {0, 1, 2};  // offsets over minimum
};

/// Computed value plus the computation path that produced it.
struct FunctorValue {
  AbGroup value;
  std::string provenance;
};

/// Per-presentation caches shared by the evaluator and the table verifier.
class EvalContext {
 public:
  explicit EvalContext(const Presentation& p, EvalOptions opts = {})
      : pres_(p), opts_(std::move(opts)) {}

  const Presentation& presentation() const { return pres_; }
  const EvalOptions& options() const { return opts_; }

  GroupData& group_data() {
    if (!gd_) gd_.emplace(pres_, opts_.coset_bound);
    return *gd_;
  }
  GroupAlgebra& algebra() {
    if (!alg_) alg_.emplace(group_data());
    return *alg_;
  }
  MagnusContext& magnus() {
    if (!magnus_) magnus_.emplace(pres_);
    return *magnus_;
  }
  AbGroup gab() { return cokernel(pres_.exponent_matrix()); }

  AbGroup homology(long n) {
    if (n < 0) return AbGroup::zero();
    auto it = homology_.find(n);
    if (it != homology_.end()) return it->second;
    std::size_t need = static_cast<std::size_t>(n) + 1;
    if (!complex_ || built_degree_ < need) {
      GruenbergResolution res(pres_, need, opts_.coset_bound, opts_.basis_cap);
      complex_ = res.integer_complex();
      built_degree_ = need;
    }
    AbGroup h = frlim::homology(*complex_, n);
    homology_.emplace(n, h);
    return h;
  }

  /// Builds the resolution once at the highest degree a caller will need.
  void reserve_homology_degree(long n) {
    if (n >= 0) homology(n);
  }

 private:
  Presentation pres_;
  EvalOptions opts_;
  std::optional<GroupData> gd_;
  std::optional<GroupAlgebra> alg_;
  std::optional<MagnusContext> magnus_;
  std::optional<ChainComplex> complex_;
  std::size_t built_degree_ = 0;
  std::map<long, AbGroup> homology_;
};

namespace detail {

inline AbGroup tensor_power(const AbGroup& a, long n) {
  AbGroup acc = a;
  for (long k = 1; k < n; ++k) acc = ab_tensor(acc, a);
  return acc;
}

/// Kuenneth recursion for the derived tensor powers: an independent route
/// from the total-complex computation.
inline AbGroup derived_power_kuenneth(const AbGroup& a, long n, long i) {
  if (i < 0 || i >= n) return AbGroup::zero();
  if (n == 1) return i == 0 ? a : AbGroup::zero();
  AbGroup t = ab_tensor(derived_power_kuenneth(a, n - 1, i), a);
  AbGroup tor = ab_tor(derived_power_kuenneth(a, n - 1, i - 1), a);
  return t.direct_sum(tor);
}

/// Structural gcd formulas for tensor and Tor of canonical forms.
inline AbGroup tensor_structural(const AbGroup& a, const AbGroup& b) {
  AbGroup out = AbGroup::free(a.free_rank * b.free_rank);
  for (const Int& d : a.torsion)
    for (std::size_t k = 0; k < b.free_rank; ++k)
      out = out.direct_sum(AbGroup::cyclic(d));
  for (const Int& d : b.torsion)
    for (std::size_t k = 0; k < a.free_rank; ++k)
      out = out.direct_sum(AbGroup::cyclic(d));
  for (const Int& d : a.torsion)
    for (const Int& e : b.torsion) out = out.direct_sum(AbGroup::cyclic(gcd(d, e)));
  return out;
}
inline AbGroup tor_structural(const AbGroup& a, const AbGroup& b) {
  AbGroup out;
  for (const Int& d : a.torsion)
    for (const Int& e : b.torsion) out = out.direct_sum(AbGroup::cyclic(gcd(d, e)));
  return out;
}

}  // namespace detail

/// Evaluates a recognized descriptor for a concrete presented group.
inline FunctorValue evaluate_tag(const Tag& tag, EvalContext& ctx) {
  using K = Tag::Kind;
  switch (tag.kind) {
    case K::Zero:
      return {AbGroup::zero(), "vanishing family; nothing to compute"};
    case K::AugIdealTensorPower: {
      AbGroup g = ctx.algebra().augmentation_ideal_group();
      return {detail::tensor_power(g, tag.n),
              "augmentation-kernel rank with tensor powers over Z"};
    }
    case K::GabTensorPower:
      return {detail::tensor_power(ctx.gab(), tag.n),
              "abelianization from the exponent matrix, tensored over Z"};
    case K::Homology:
      return {ctx.homology(tag.n), "gruenberg resolution homology"};
    case K::DerivedTensor:
      return {derived_tensor_power(ctx.gab(), tag.n, tag.i),
              "derived tensor power via the total tensor complex"};
    case K::TorGab:
      return {ab_tor(ab_tensor(ctx.gab(), ctx.gab()), ctx.gab()),
              "Tor of the tensor square against the abelianization"};
    case K::AugModTensor:
      return {ctx.algebra().aug_mod_tensor(tag.n),
              "bimodule tensor power of g over ZG (bilinear relations)"};
    case K::AugQuotient:
      return {ctx.algebra().aug_quotient(1, tag.n),
              "augmentation filtration quotient in ZG"};
    case K::AugIdealPower: {
      Echelon e(ctx.algebra().order());
      for (const auto& v : ctx.algebra().aug_power_basis(tag.n)) e.insert(v);
      return {AbGroup::free(e.rank()), "augmentation-ideal power lattice in ZG"};
    }
    case K::AugPowerModTensor:
      return {ctx.algebra().aug_power_mod_tensor(tag.n),
              "g^p (x)_ZG g via bilinear relations"};
    case K::AugSquareModGabTensor:
      return {ab_tensor(ctx.algebra().aug_quotient(2, 3), ctx.gab()),
              "(g^2/g^3) (x) Gab via ZG lattices"};
    case K::AugGabMixedTensor: {
      AbGroup g = ctx.algebra().augmentation_ideal_group();
      AbGroup v = detail::tensor_power(g, tag.n);
      return {ab_tensor(v, detail::tensor_power(ctx.gab(), tag.i)),
              "mixed g and Gab tensor over Z"};
    }
    case K::Unknown:
      break;
  }
  throw UnknownCode("no evaluation path for unknown code");
}

inline FunctorValue evaluate(const FrCode& code, EvalContext& ctx) {
  Tag tag = recognize(code);
  return evaluate_tag(tag, ctx);
}

inline FunctorValue evaluate(const FrCode& code, const Presentation& p,
                             EvalOptions opts = {}) {
  EvalContext ctx(p, std::move(opts));
  return evaluate(code, ctx);
}

}  // namespace frlim
