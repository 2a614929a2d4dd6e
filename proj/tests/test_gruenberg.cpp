#include "catch2/catch_amalgamated.hpp"
#include "frlim/gruenberg.hpp"
#include "oracles.hpp"

using namespace frlim;

TEST_CASE("express in r basis and back", "[gruenberg]") {
  Presentation p = cyclic_presentation(3);
  GroupData gd(p, 100);
  FreeWord x = FreeWord::generator(0);

  auto e1 = detail::express_in_r_basis(word_minus_one(x.pow(3)), gd, true);
  REQUIRE(e1.size() == 1);
  CHECK(e1.begin()->second == GroupRingElement::one());

  // (x^6 - 1) = (y - 1)(x^3 + 1)
  auto e2 = detail::express_in_r_basis(word_minus_one(x.pow(6)), gd, true);
  REQUIRE(e2.size() == 1);
  GroupRingElement expected =
      GroupRingElement::of_word(x.pow(3)) + GroupRingElement::one();
  CHECK(e2.begin()->second == expected);

  // x (x^3 - 1) = (y - 1) x after conjugation rewriting
  auto e3 = detail::express_in_r_basis(
      GroupRingElement::of_word(x) * word_minus_one(x.pow(3)), gd, true);
  REQUIRE(e3.size() == 1);
  CHECK(e3.begin()->second == GroupRingElement::of_word(x));

  CHECK_THROWS_AS(detail::express_in_r_basis(word_minus_one(x), gd, true),
                  NotInIdeal);
}

TEST_CASE("gruenberg resolution of cyclic 3 matches the periodic oracle",
          "[gruenberg]") {
  Presentation p = cyclic_presentation(3);
  GruenbergResolution res(p, 4);
  for (std::size_t k = 0; k <= 4; ++k) CHECK(res.rank(k) == 1);
  ChainComplex c = res.integer_complex();
  c.validate();
  ChainComplex oracle = oracles::cyclic_periodic_complex(3, 4);
  for (long n = 0; n <= 3; ++n) CHECK(homology(c, n) == homology(oracle, n));
}

TEST_CASE("gruenberg resolution of the trivial group", "[gruenberg]") {
  Presentation p({"x"}, {"x"});
  GruenbergResolution res(p, 2);
  ChainComplex c = res.integer_complex();
  CHECK(homology(c, 0) == AbGroup::free(1));
  CHECK(homology(c, 1).is_zero());
  CHECK(homology(c, 2).is_zero());
}

TEST_CASE("gruenberg ranks follow the basis counting", "[gruenberg]") {
  // klein four: |Y| = 5, d = 2
  GruenbergResolution res(klein_four_presentation(), 4);
  CHECK(res.rank(0) == 1);
  CHECK(res.rank(1) == 2);
  CHECK(res.rank(2) == 5);
  CHECK(res.rank(3) == 10);
  CHECK(res.rank(4) == 25);
}

TEST_CASE("group homology of cyclic groups", "[gruenberg]") {
  for (long m : {2L, 3L, 4L, 6L}) {
    Presentation p = cyclic_presentation(m);
    for (long n = 0; n <= 5; ++n)
      CHECK(group_homology(p, n) == oracles::cyclic_homology(m, n));
  }
}

TEST_CASE("group homology of the klein four-group", "[gruenberg]") {
  Presentation p = klein_four_presentation();
  CHECK(group_homology(p, 0) == AbGroup::free(1));
  CHECK(group_homology(p, 1) == oracles::klein_four_homology(1));
  CHECK(group_homology(p, 2) == oracles::klein_four_homology(2));
  CHECK(oracles::klein_four_homology(2) == AbGroup::cyclic(2));
}

TEST_CASE("h1 equals the cokernel of the exponent matrix", "[gruenberg]") {
  for (const Presentation& p :
       {cyclic_presentation(4), klein_four_presentation(),
        symmetric3_presentation()}) {
    CHECK(group_homology(p, 1) == cokernel(p.exponent_matrix()));
  }
  CHECK(group_homology(klein_four_presentation(), 1) ==
        (AbGroup{0, {Int(2), Int(2)}}));
  CHECK(group_homology(symmetric3_presentation(), 1) == AbGroup::cyclic(2));
}

TEST_CASE("group homology with coefficients", "[gruenberg]") {
  // H_n(Z/2; Z/2) = Z/2 for all n >= 0 (universal coefficients)
  Presentation p = cyclic_presentation(2);
  for (long n = 0; n <= 3; ++n)
    CHECK(group_homology(p, n, AbGroup::cyclic(2)) == AbGroup::cyclic(2));
}
