#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "frlim/errors.hpp"

namespace frlim {

using Int = boost::multiprecision::cpp_int;

/// Division rounded to nearest (ties toward zero); keeps remainders small
/// during elimination.
inline Int div_round(const Int& a, const Int& b) {
  Int q = a / b;
  Int r = a - q * b;
  if (r * 2 > abs(b)) q += (b > 0 ? 1 : -1);
  if (-r * 2 > abs(b)) q -= (b > 0 ? 1 : -1);
  return q;
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Dense row-major matrix over arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  bool is_zero() const {
    for (const Int& x : a_)
      if (x != 0) return false;
    return true;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  IntMatrix operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw ShapeMismatch("matrix product shape mismatch");
    IntMatrix p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Int& x = at(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          if (o.at(k, j) != 0) p.at(i, j) += x * o.at(k, j);
        }
      }
    return p;
  }

  IntMatrix operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw ShapeMismatch("matrix sum shape mismatch");
    IntMatrix s(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] + o.a_[i];
    return s;
  }

  IntMatrix operator-() const {
    IntMatrix s(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = -a_[i];
    return s;
  }

  IntMatrix scaled(const Int& c) const {
    IntMatrix s(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] * c;
    return s;
  }

  /// Horizontal concatenation [this | o].
  IntMatrix hstack(const IntMatrix& o) const {
    if (rows_ != o.rows_) throw ShapeMismatch("hstack rows mismatch");
    IntMatrix h(rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) h.at(i, j) = at(i, j);
      for (std::size_t j = 0; j < o.cols_; ++j) h.at(i, cols_ + j) = o.at(i, j);
    }
    return h;
  }

  std::vector<Int> column(std::size_t j) const {
    std::vector<Int> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
  }

  void set_column(std::size_t j, const std::vector<Int>& c) {
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = c[i];
  }

  static IntMatrix from_columns(std::size_t rows,
                                const std::vector<std::vector<Int>>& cols) {
    IntMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
    return m;
  }

  std::vector<Int> apply(const std::vector<Int>& v) const {
    if (v.size() != cols_) throw ShapeMismatch("matrix/vector shape mismatch");
    std::vector<Int> w(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      Int s = 0;
      for (std::size_t j = 0; j < cols_; ++j)
        if (at(i, j) != 0) s += at(i, j) * v[j];
      w[i] = s;
    }
    return w;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Int> a_;
};

struct SmithResult {
  IntMatrix s;  // diagonal, nonnegative, divisibility chain
  IntMatrix u;  // unimodular, rows x rows
  IntMatrix v;  // unimodular, cols x cols;  u * m * v == s
};

namespace detail {

inline void swap_rows(IntMatrix& m, std::size_t i, std::size_t j) {
  for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m.at(i, k), m.at(j, k));
}
inline void swap_cols(IntMatrix& m, std::size_t i, std::size_t j) {
  for (std::size_t k = 0; k < m.rows(); ++k) std::swap(m.at(k, i), m.at(k, j));
}
inline void add_row(IntMatrix& m, std::size_t dst, std::size_t src,
                    const Int& c) {
  if (c == 0) return;
  for (std::size_t k = 0; k < m.cols(); ++k) m.at(dst, k) += c * m.at(src, k);
}
inline void add_col(IntMatrix& m, std::size_t dst, std::size_t src,
                    const Int& c) {
  if (c == 0) return;
  for (std::size_t k = 0; k < m.rows(); ++k) m.at(k, dst) += c * m.at(k, src);
}
inline void negate_row(IntMatrix& m, std::size_t i) {
  for (std::size_t k = 0; k < m.cols(); ++k) m.at(i, k) = -m.at(i, k);
}

}  // namespace detail

/// Smith normal form with minimal-absolute-value pivoting. Returns (s, u, v)
/// with u*m*v == s, u and v unimodular, diag(s) a nonnegative divisibility
/// chain.
inline SmithResult smith_normal_form(const IntMatrix& m) {
  using namespace detail;
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  std::size_t n = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < n; ++t) {
    // minimal |entry| pivot in the trailing block
    std::size_t pi = t, pj = t;
    Int best = 0;
    for (std::size_t i = t; i < a.rows(); ++i)
      for (std::size_t j = t; j < a.cols(); ++j) {
        const Int& x = a.at(i, j);
        if (x == 0) continue;
        if (best == 0 || abs(x) < best) {
          best = abs(x);
          pi = i;
          pj = j;
        }
      }
    if (best == 0) break;
    if (pi != t) {
      swap_rows(a, t, pi);
      swap_rows(u, t, pi);
    }
    if (pj != t) {
      swap_cols(a, t, pj);
      swap_cols(v, t, pj);
    }

    bool dirty = true;
    while (dirty) {
      dirty = false;
      // clear column t
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        while (a.at(i, t) != 0) {
          Int q = div_round(a.at(i, t), a.at(t, t));
          add_row(a, i, t, -q);
          add_row(u, i, t, -q);
          if (a.at(i, t) != 0) {
            // remainder strictly smaller: promote it to the pivot
            swap_rows(a, t, i);
            swap_rows(u, t, i);
          }
        }
      }
      // clear row t
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        while (a.at(t, j) != 0) {
          Int q = div_round(a.at(t, j), a.at(t, t));
          add_col(a, j, t, -q);
          add_col(v, j, t, -q);
          if (a.at(t, j) != 0) {
            swap_cols(a, t, j);
            swap_cols(v, t, j);
            dirty = true;  // column t may be dirty again
          }
        }
      }
      if (dirty) continue;
      // pivot must divide every remaining entry
      for (std::size_t i = t + 1; i < a.rows() && !dirty; ++i)
        for (std::size_t j = t + 1; j < a.cols() && !dirty; ++j)
          if (a.at(i, j) % a.at(t, t) != 0) {
            add_row(a, t, i, 1);
            add_row(u, t, i, 1);
            dirty = true;
          }
    }
    if (a.at(t, t) < 0) {
      negate_row(a, t);
      negate_row(u, t);
    }
  }
  return {std::move(a), std::move(u), std::move(v)};
}

inline std::size_t snf_rank(const IntMatrix& s) {
  std::size_t r = 0;
  std::size_t n = std::min(s.rows(), s.cols());
  while (r < n && s.at(r, r) != 0) ++r;
  return r;
}

/// Columns form a basis of the integer kernel of m.
inline IntMatrix kernel_basis(const IntMatrix& m) {
  SmithResult snf = smith_normal_form(m);
  std::size_t r = snf_rank(snf.s);
  IntMatrix k(m.cols(), m.cols() - r);
  for (std::size_t j = r; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.cols(); ++i)
      k.at(i, j - r) = snf.v.at(i, j);
  return k;
}

/// Exact integer solve A X = B; returns nothing if unsolvable over Z.
inline std::optional<IntMatrix> solve_exact(const IntMatrix& a,
                                            const IntMatrix& b) {
  if (a.rows() != b.rows()) throw ShapeMismatch("solve_exact shape mismatch");
  SmithResult snf = smith_normal_form(a);
  std::size_t r = snf_rank(snf.s);
  IntMatrix c = snf.u * b;
  IntMatrix y(a.cols(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i < r) {
        if (c.at(i, j) % snf.s.at(i, i) != 0) return std::nullopt;
        if (i < a.cols()) y.at(i, j) = c.at(i, j) / snf.s.at(i, i);
      } else if (c.at(i, j) != 0) {
        return std::nullopt;
      }
    }
  }
  return snf.v * y;
}

/// Determinant by Bareiss fraction-free elimination (square matrices).
inline Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeMismatch("determinant of non-square");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      detail::swap_rows(a, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        a.at(i, j) = num / prev;  // exact by Bareiss
      }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

/// Incremental column-style echelon basis for a sublattice of Z^dim.
/// Basis vectors are kept sorted by pivot (first nonzero coordinate), pivots
/// positive; canonicalize() additionally reduces off-pivot entries so equal
/// lattices have identical bases.
class Echelon {
 public:
  explicit Echelon(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::vector<Int>>& basis() const { return rows_; }

  /// Inserts v into the lattice; returns true if the lattice grew.
  bool insert(std::vector<Int> v) {
    if (v.size() != dim_) throw ShapeMismatch("echelon dim mismatch");
    bool changed = false;
    std::size_t k = 0;
    while (true) {
      std::size_t p = first_nonzero(v);
      if (p == dim_) return changed;
      while (k < rows_.size() && pivot_of(rows_[k]) < p) ++k;
      if (k == rows_.size() || pivot_of(rows_[k]) > p) {
        if (v[p] < 0)
          for (Int& x : v) x = -x;
        rows_.insert(rows_.begin() + k, std::move(v));
        canonical_ = false;
        return true;
      }
      Int& b = rows_[k][p];
      if (v[p] % b == 0) {
        sub_mul(v, rows_[k], v[p] / b);
      } else {
        // gcd update: replace basis row so its pivot becomes gcd
        Int g, x, y;
        ext_gcd(b, v[p], g, x, y);
        std::vector<Int> combo(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
          combo[i] = x * rows_[k][i] + y * v[i];
        Int bq = b / g, vq = v[p] / g;
        for (std::size_t i = 0; i < dim_; ++i) {
          Int nv = bq * v[i] - vq * rows_[k][i];
          v[i] = nv;
        }
        rows_[k] = std::move(combo);
        canonical_ = false;
        changed = true;
      }
      ++k;
    }
  }

  /// Reduces v by the basis; result is zero iff v is in the lattice.
  std::vector<Int> reduce(std::vector<Int> v) const {
    std::size_t k = 0;
    while (true) {
      std::size_t p = first_nonzero(v);
      if (p == dim_) return v;
      while (k < rows_.size() && pivot_of(rows_[k]) < p) ++k;
      if (k == rows_.size() || pivot_of(rows_[k]) > p) return v;
      if (v[p] % rows_[k][p] != 0) return v;
      sub_mul(v, rows_[k], v[p] / rows_[k][p]);
    }
  }

  bool contains(const std::vector<Int>& v) const {
    return first_nonzero(reduce(v)) == dim_;
  }

  bool contains_lattice(const Echelon& other) const {
    for (const auto& b : other.rows_)
      if (!contains(b)) return false;
    return true;
  }

  /// Expresses v in the echelon basis; throws if v is not in the lattice.
  std::vector<Int> coordinates(std::vector<Int> v) const {
    std::vector<Int> c(rows_.size());
    std::size_t k = 0;
    while (true) {
      std::size_t p = first_nonzero(v);
      if (p == dim_) return c;
      while (k < rows_.size() && pivot_of(rows_[k]) < p) ++k;
      if (k == rows_.size() || pivot_of(rows_[k]) > p || v[p] % rows_[k][p] != 0)
        throw NotSubLattice("vector not in lattice");
      c[k] = v[p] / rows_[k][p];
      sub_mul(v, rows_[k], c[k]);
    }
  }

  /// Hermite-style canonical form: off-pivot entries reduced into [0, pivot).
  /// Ascending pivot order, so later reductions only touch later columns.
  void canonicalize() {
    if (canonical_) return;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      std::size_t p = pivot_of(rows_[k]);
      for (std::size_t j = 0; j < k; ++j) {
        Int q = floor_div(rows_[j][p], rows_[k][p]);
        if (q != 0) sub_mul(rows_[j], rows_[k], q);
      }
    }
    canonical_ = true;
  }

  bool operator==(const Echelon& o) const {
    Echelon a = *this, b = o;
    a.canonicalize();
    b.canonicalize();
    return a.dim_ == b.dim_ && a.rows_ == b.rows_;
  }

 private:
  static std::size_t pivot_of(const std::vector<Int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) return i;
    return v.size();
  }
  std::size_t first_nonzero(const std::vector<Int>& v) const {
    return pivot_of(v);
  }
  static void sub_mul(std::vector<Int>& v, const std::vector<Int>& w,
                      const Int& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (w[i] != 0) v[i] -= q * w[i];
  }
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
  std::vector<std::vector<Int>> rows_;
  bool canonical_ = true;
};

}  // namespace frlim
