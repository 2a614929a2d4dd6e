#pragma once

#include <map>
#include <vector>

#include "frlim/chain.hpp"
#include "frlim/group_ring.hpp"
#include "frlim/schreier.hpp"

namespace frlim {

/// Element of ZG in the regular basis: coefficient per coset.
using ZGElem = std::vector<Int>;

/// Sparse matrix over ZG; column c holds the (row -> coefficient) support of
/// the image of the c-th basis element, coefficients acting on the right.
struct ZGMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::map<int, ZGElem>> col;

  ZGMatrix() = default;
  ZGMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), col(c) {}
};

/// Finite group data derived from a completed coset enumeration.
class GroupData {
 public:
  GroupData(const Presentation& p, std::size_t coset_bound)
      : pres_(p),
        table_(todd_coxeter(p, coset_bound)),
        schreier_(p, table_) {
    std::size_t n = table_.num_cosets();
    times_.assign(n, std::vector<int>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        times_[a][b] =
            table_.trace(static_cast<int>(a), schreier_.transversal()[b]);
  }

  const Presentation& presentation() const { return pres_; }
  const CosetTable& table() const { return table_; }
  const SchreierData& schreier() const { return schreier_; }
  std::size_t order() const { return table_.num_cosets(); }
  int times(int a, int b) const { return times_[a][b]; }

  ZGElem zg_zero() const { return ZGElem(order()); }

  ZGElem project(const GroupRingElement& e) const {
    ZGElem v = zg_zero();
    for (const auto& [w, c] : e.terms()) v[table_.coset_of(w)] += c;
    return v;
  }

  ZGElem zg_mul(const ZGElem& a, const ZGElem& b) const {
    ZGElem r = zg_zero();
    for (std::size_t g = 0; g < a.size(); ++g) {
      if (a[g] == 0) continue;
      for (std::size_t h = 0; h < b.size(); ++h)
        if (b[h] != 0) r[times_[g][h]] += a[g] * b[h];
    }
    return r;
  }

  static Int augmentation(const ZGElem& a) {
    Int s = 0;
    for (const Int& c : a) s += c;
    return s;
  }
  static bool zg_is_zero(const ZGElem& a) {
    for (const Int& c : a)
      if (c != 0) return false;
    return true;
  }

 private:
  Presentation pres_;
  CosetTable table_;
  SchreierData schreier_;
  std::vector<std::vector<int>> times_;
};

namespace detail {

/// Coefficients of an element of r in the free right-module basis
/// {(y_j - 1)}: e = sum_j (y_j - 1) c_j with c_j in Z[F].  Derived from the
/// transversal decomposition g = (g t^-1) t and the telescoping expansion
/// (z1 z2 - 1) = (z1 - 1) z2 + (z2 - 1) over the free generators of R.
inline std::map<int, GroupRingElement> express_in_r_basis(
    const GroupRingElement& e, const GroupData& gd, bool verify) {
  const SchreierData& s = gd.schreier();
  const CosetTable& t = gd.table();

  // membership check: coefficients must cancel within each coset
  {
    std::vector<Int> per_coset(gd.order());
    for (const auto& [w, c] : e.terms()) per_coset[t.coset_of(w)] += c;
    for (const Int& c : per_coset)
      if (c != 0) throw NotInIdeal("element does not lie in r");
  }

  std::map<int, GroupRingElement> out;
  for (const auto& [g, a] : e.terms()) {
    int c = t.coset_of(g);
    const FreeWord& tr = s.transversal()[c];
    FreeWord z = g * tr.inverse();
    std::vector<int> ys = s.rewrite(z);
    // suffix products of the Y-word of z, as elements of F
    FreeWord suffix;
    std::vector<FreeWord> suffixes(ys.size());
    for (std::size_t k = ys.size(); k-- > 0;) {
      suffixes[k] = suffix;
      const FreeWord& y = s.basis()[static_cast<std::size_t>(std::abs(ys[k])) - 1];
      suffix = (ys[k] > 0 ? y : y.inverse()) * suffix;
    }
    for (std::size_t k = 0; k < ys.size(); ++k) {
      int j = std::abs(ys[k]) - 1;
      const FreeWord& y = s.basis()[j];
      if (ys[k] > 0) {
        out[j].add_term(suffixes[k] * tr, a);
      } else {
        out[j].add_term(y.inverse() * suffixes[k] * tr, -a);
      }
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);

  if (verify) {
    GroupRingElement back;
    for (const auto& [j, cj] : out)
      back = back + word_minus_one(s.basis()[j]) * cj;
    if (!(back == e)) throw NotInIdeal("r-basis expression failed to verify");
  }
  return out;
}

/// Coefficients of an element of r^n in the basis of n-fold products
/// (y_{j1}-1)...(y_{jn}-1); keys are the tuples (j1..jn).
inline std::map<std::vector<int>, GroupRingElement> express_in_power_basis(
    const GroupRingElement& e, std::size_t n, const GroupData& gd,
    bool verify) {
  std::map<std::vector<int>, GroupRingElement> out;
  if (e.is_zero()) return out;
  if (n == 0) {
    out[{}] = e;
    return out;
  }
  auto top = express_in_r_basis(e, gd, verify);
  for (auto& [j, cj] : top) {
    auto rest = express_in_power_basis(cj, n - 1, gd, verify);
    for (auto& [tuple, c] : rest) {
      std::vector<int> key;
      key.reserve(n);
      key.push_back(j);
      key.insert(key.end(), tuple.begin(), tuple.end());
      out[key] = std::move(c);
    }
  }
  return out;
}

}  // namespace detail

/// The Gruenberg resolution of Z over ZG through a chosen degree:
/// C_0 = ZG, C_{2n} has basis the n-fold products of the Schreier generators
/// minus one, C_{2n+1} has basis (x_i - 1) times those products, and the
/// differentials are induced by the inclusions f r^n < r^n and r^{n+1} < f r^n.
class GruenbergResolution {
 public:
  GruenbergResolution(const Presentation& p, std::size_t max_degree,
                      std::size_t coset_bound = 4096,
                      std::size_t basis_cap = 20000, bool verify_expr = true)
      : gd_(p, coset_bound), max_degree_(max_degree) {
    std::size_t d = p.rank();
    std::size_t y = gd_.schreier().basis().size();

    ranks_.resize(max_degree + 1);
    for (std::size_t k = 0; k <= max_degree; ++k) {
      std::size_t n = k / 2;
      std::size_t r = 1;
      for (std::size_t i = 0; i < n; ++i) {
        r *= y;
        if (r > basis_cap) throw DegreeTooLarge("basis cap exceeded");
      }
      if (k % 2 == 1) r *= d;
      if (r > basis_cap) throw DegreeTooLarge("basis cap exceeded");
      ranks_[k] = r;
    }

    diffs_.resize(max_degree);  // diffs_[k]: C_{k+1} -> C_k
    for (std::size_t k = 1; k <= max_degree; ++k)
      diffs_[k - 1] = build_differential(k, verify_expr);

    for (std::size_t k = 1; k + 1 <= max_degree; ++k)
      if (!compose_is_zero(diffs_[k - 1], diffs_[k]))
        throw Error("gruenberg resolution: d o d != 0 over ZG");
  }

  const GroupData& group() const { return gd_; }
  std::size_t max_degree() const { return max_degree_; }
  std::size_t rank(std::size_t degree) const { return ranks_[degree]; }
  const ZGMatrix& differential(std::size_t from_degree) const {
    return diffs_[from_degree - 1];
  }

  /// The complex of free abelian groups obtained by sending every coset to 1
  /// (i.e. applying (x)_{ZG} Z with the trivial right action).
  ChainComplex integer_complex() const {
    std::vector<std::size_t> ranks(ranks_.begin(), ranks_.end());
    std::vector<IntMatrix> diffs;
    for (const ZGMatrix& m : diffs_) {
      IntMatrix d(m.rows, m.cols);
      for (std::size_t c = 0; c < m.cols; ++c)
        for (const auto& [r, e] : m.col[c]) d.at(r, c) = GroupData::augmentation(e);
      diffs.push_back(std::move(d));
    }
    return ChainComplex::free_complex(0, std::move(ranks), std::move(diffs));
  }

 private:
  // tuple enumeration in lexicographic order
  static std::vector<std::vector<int>> tuples(std::size_t y, std::size_t n) {
    std::vector<std::vector<int>> out = {{}};
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<std::vector<int>> next;
      for (const auto& t : out)
        for (std::size_t j = 0; j < y; ++j) {
          auto u = t;
          u.push_back(static_cast<int>(j));
          next.push_back(std::move(u));
        }
      out = std::move(next);
    }
    return out;
  }

  std::size_t flat_index(const std::vector<int>& tuple) const {
    std::size_t y = gd_.schreier().basis().size();
    std::size_t idx = 0;
    for (int j : tuple) idx = idx * y + static_cast<std::size_t>(j);
    return idx;
  }

  GroupRingElement product_of_basis(const std::vector<int>& tuple) const {
    GroupRingElement e = GroupRingElement::one();
    for (int j : tuple)
      e = e * word_minus_one(gd_.schreier().basis()[j]);
    return e;
  }

  ZGMatrix build_differential(std::size_t k, bool verify) {
    std::size_t d = gd_.presentation().rank();
    std::size_t y = gd_.schreier().basis().size();
    ZGMatrix m(ranks_[k - 1], ranks_[k]);
    std::size_t n = (k - 1) / 2;  // power of r in the target for odd k,
                                  // in the source minus one for even k
    if (k % 2 == 1) {
      // C_{2n+1} = f r^n / f r^{n+1} -> C_{2n} = r^n / r^{n+1}
      auto ts = tuples(y, n);
      std::size_t c = 0;
      for (std::size_t i = 0; i < d; ++i)
        for (const auto& tuple : ts) {
          GroupRingElement e =
              word_minus_one(FreeWord::generator(static_cast<int>(i))) *
              product_of_basis(tuple);
          for (auto& [key, coeff] :
               detail::express_in_power_basis(e, n, gd_, verify)) {
            ZGElem v = gd_.project(coeff);
            if (!GroupData::zg_is_zero(v))
              m.col[c][static_cast<int>(flat_index(key))] = std::move(v);
          }
          ++c;
        }
    } else {
      // C_{2n+2} = r^{n+1} / r^{n+2} -> C_{2n+1} = f r^n / f r^{n+1};
      // split off the f factor with the right-handed Fox expansion, then
      // express the remainder inside r^n.
      n = k / 2 - 1;
      auto ts = tuples(y, n + 1);
      std::size_t c = 0;
      for (const auto& tuple : ts) {
        GroupRingElement e = product_of_basis(tuple);
        for (std::size_t i = 0; i < d; ++i) {
          GroupRingElement di = right_fox_derivative(e, static_cast<int>(i));
          if (di.is_zero()) continue;
          for (auto& [key, coeff] :
               detail::express_in_power_basis(di, n, gd_, verify)) {
            ZGElem v = gd_.project(coeff);
            if (!GroupData::zg_is_zero(v))
              m.col[c][static_cast<int>(i * (ranks_[k - 1] / d) +
                                        flat_index(key))] = std::move(v);
          }
        }
        ++c;
      }
    }
    return m;
  }

  bool compose_is_zero(const ZGMatrix& a, const ZGMatrix& b) const {
    // columns of b expanded through a; coefficients multiply on the right
    for (std::size_t c = 0; c < b.cols; ++c) {
      std::map<int, ZGElem> acc;
      for (const auto& [r, coeff] : b.col[c]) {
        const auto& acol = a.col[static_cast<std::size_t>(r)];
        for (const auto& [r2, coeff2] : acol) {
          ZGElem prod = gd_.zg_mul(coeff2, coeff);
          auto [pos, inserted] = acc.emplace(r2, prod);
          if (!inserted)
            for (std::size_t g = 0; g < prod.size(); ++g)
              pos->second[g] += prod[g];
        }
      }
      for (const auto& [r2, v] : acc)
        if (!GroupData::zg_is_zero(v)) return false;
    }
    return true;
  }

  GroupData gd_;
  std::size_t max_degree_;
  std::vector<std::size_t> ranks_;
  std::vector<ZGMatrix> diffs_;
};

/// H_n(G, A) for a trivial G-module A, via the Gruenberg resolution.
inline AbGroup group_homology(const Presentation& p, long n,
                              const AbGroup& a = AbGroup::free(1),
                              std::size_t coset_bound = 4096) {
  if (n < 0) return AbGroup::zero();
  GruenbergResolution res(p, static_cast<std::size_t>(n) + 1, coset_bound);
  ChainComplex c = res.integer_complex();
  if (a == AbGroup::free(1)) return homology(c, n);
  return homology(tensor_with_group(c, a), n);
}

}  // namespace frlim
