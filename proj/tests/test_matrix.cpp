#include <random>

#include "catch2/catch_amalgamated.hpp"
#include "frlim/matrix.hpp"

using namespace frlim;

namespace {

IntMatrix make(std::size_t r, std::size_t c, std::vector<long> vals) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = vals[i * c + j];
  return m;
}

bool is_divisibility_chain(const IntMatrix& s) {
  std::size_t n = std::min(s.rows(), s.cols());
  for (std::size_t i = 0; i < n; ++i) {
    if (s.at(i, i) < 0) return false;
    if (i + 1 < n && s.at(i, i) != 0 && s.at(i + 1, i + 1) != 0 &&
        s.at(i + 1, i + 1) % s.at(i, i) != 0)
      return false;
    if (s.at(i, i) == 0 && i + 1 < n && s.at(i + 1, i + 1) != 0) return false;
  }
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j)
      if (i != j && s.at(i, j) != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("smith normal form: identity", "[matrix]") {
  IntMatrix m = IntMatrix::identity(3);
  auto r = smith_normal_form(m);
  CHECK(r.s == IntMatrix::identity(3));
  CHECK(r.u * m * r.v == r.s);
}

TEST_CASE("smith normal form: 2x2 example", "[matrix]") {
  // gcd of entries 2, |det| = 8 force diag(2, 4)
  IntMatrix m = make(2, 2, {2, 4, 6, 8});
  Int g = gcd(gcd(Int(2), Int(4)), gcd(Int(6), Int(8)));
  Int det = Int(2) * 8 - Int(4) * 6;
  REQUIRE(g == 2);
  REQUIRE(abs(det) == 8);
  auto r = smith_normal_form(m);
  CHECK(r.s.at(0, 0) == 2);
  CHECK(r.s.at(1, 1) == 4);
  CHECK(r.u * m * r.v == r.s);
  CHECK(abs(determinant(r.u)) == 1);
  CHECK(abs(determinant(r.v)) == 1);
}

TEST_CASE("smith normal form: zero matrix", "[matrix]") {
  IntMatrix m(2, 3);
  auto r = smith_normal_form(m);
  CHECK(r.s == m);
}

TEST_CASE("smith normal form: random unimodularity and chain", "[matrix]") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> dist(-9, 9);
  for (int iter = 0; iter < 200; ++iter) {
    IntMatrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = dist(rng);
    auto r = smith_normal_form(m);
    REQUIRE(r.u * m * r.v == r.s);
    REQUIRE(abs(determinant(r.u)) == 1);
    REQUIRE(abs(determinant(r.v)) == 1);
    REQUIRE(is_divisibility_chain(r.s));
  }
}

TEST_CASE("kernel basis", "[matrix]") {
  IntMatrix m = make(2, 3, {1, 2, 3, 2, 4, 6});
  IntMatrix k = kernel_basis(m);
  REQUIRE(k.cols() == 2);
  CHECK((m * k).is_zero());

  CHECK(kernel_basis(IntMatrix::identity(3)).cols() == 0);
}

TEST_CASE("exact solve", "[matrix]") {
  IntMatrix a = make(2, 2, {2, 0, 0, 3});
  IntMatrix b = make(2, 1, {4, 9});
  auto x = solve_exact(a, b);
  REQUIRE(x.has_value());
  CHECK(a * *x == b);
  IntMatrix c = make(2, 1, {1, 0});
  CHECK(!solve_exact(a, c).has_value());
}

TEST_CASE("echelon lattice basics", "[matrix]") {
  Echelon e(3);
  e.insert({Int(2), Int(0), Int(0)});
  e.insert({Int(0), Int(3), Int(0)});
  CHECK(e.rank() == 2);
  CHECK(e.contains({Int(4), Int(3), Int(0)}));
  CHECK(!e.contains({Int(1), Int(0), Int(0)}));
  CHECK(!e.contains({Int(0), Int(0), Int(5)}));

  // gcd updates: inserting 3*e1 alongside 2*e1 refines to e1
  Echelon f(1);
  f.insert({Int(2)});
  f.insert({Int(3)});
  CHECK(f.contains({Int(1)}));

  // canonical form is order independent
  Echelon g1(2), g2(2);
  g1.insert({Int(2), Int(1)});
  g1.insert({Int(0), Int(4)});
  g2.insert({Int(2), Int(5)});
  g2.insert({Int(0), Int(-4)});
  CHECK(g1 == g2);
}

TEST_CASE("echelon coordinates", "[matrix]") {
  Echelon e(3);
  e.insert({Int(2), Int(1), Int(0)});
  e.insert({Int(0), Int(3), Int(1)});
  e.canonicalize();
  std::vector<Int> v = {Int(4), Int(5), Int(1)};
  auto c = e.coordinates(v);
  REQUIRE(c.size() == 2);
  std::vector<Int> back(3);
  for (std::size_t k = 0; k < c.size(); ++k)
    for (std::size_t i = 0; i < 3; ++i) back[i] += c[k] * e.basis()[k][i];
  CHECK(back == v);
}
