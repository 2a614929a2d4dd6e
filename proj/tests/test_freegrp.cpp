#include <random>

#include "catch2/catch_amalgamated.hpp"
#include "frlim/group_ring.hpp"
#include "frlim/presentation.hpp"

using namespace frlim;

namespace {
FreeWord W(std::initializer_list<int> ls) { return FreeWord(std::vector<int>(ls)); }

FreeWord random_word(std::mt19937& rng, int num_gens, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(1, num_gens);
  std::uniform_int_distribution<int> sgn(0, 1);
  std::vector<int> ls;
  int n = len(rng);
  for (int i = 0; i < n; ++i) ls.push_back(sgn(rng) ? gen(rng) : -gen(rng));
  return FreeWord(ls);
}
}  // namespace

TEST_CASE("free word arithmetic", "[freegrp]") {
  FreeWord x = FreeWord::generator(0), y = FreeWord::generator(1),
           z = FreeWord::generator(2);
  CHECK((x * x.inverse()).is_identity());
  CHECK((x * y) * (y.inverse() * z) == x * z);
  CHECK((x * y.inverse()).inverse() == y * x.inverse());
  CHECK(x.pow(3) == W({1, 1, 1}));
  CHECK(x.pow(-2) == W({-1, -1}));
  CHECK(x.pow(0).is_identity());
}

TEST_CASE("word parser", "[freegrp]") {
  std::vector<std::string> names = {"x", "y"};
  CHECK(parse_word("x*y*x^-1*y^-1", names) == W({1, 2, -1, -2}));
  CHECK(parse_word("x^2", names) == W({1, 1}));
  CHECK(parse_word("(x*y)^2", names) == W({1, 2, 1, 2}));
  CHECK_THROWS_AS(parse_word("q", names), SyntaxError);
  CHECK_THROWS_AS(parse_word("x^", names), SyntaxError);
  CHECK_THROWS_AS(parse_word("", names), SyntaxError);
}

TEST_CASE("fox derivative axioms", "[freegrp]") {
  FreeWord x = FreeWord::generator(0);
  CHECK(fox_derivative(x, 0) == GroupRingElement::one());
  CHECK(fox_derivative(x, 1).is_zero());
  CHECK(fox_derivative(x.inverse(), 0) ==
        GroupRingElement::of_word(x.inverse(), -1));

  // d(x^m)/dx = 1 + x + ... + x^{m-1}, certified by the fundamental identity
  for (long m = 1; m <= 5; ++m) {
    GroupRingElement d = fox_derivative(x.pow(m), 0);
    GroupRingElement expected;
    for (long k = 0; k < m; ++k) expected.add_term(x.pow(k), 1);
    CHECK(d == expected);
    CHECK(d * word_minus_one(x) == word_minus_one(x.pow(m)));
  }
}

TEST_CASE("fox fundamental identity on random words", "[freegrp]") {
  std::mt19937 rng(777);
  for (int iter = 0; iter < 200; ++iter) {
    FreeWord w = random_word(rng, 3, 8);
    GroupRingElement lhs;
    for (int g = 0; g < 3; ++g)
      lhs = lhs + fox_derivative(w, g) * word_minus_one(FreeWord::generator(g));
    REQUIRE(lhs == word_minus_one(w));
  }
}

TEST_CASE("right fox identity on random words", "[freegrp]") {
  std::mt19937 rng(778);
  for (int iter = 0; iter < 200; ++iter) {
    FreeWord w = random_word(rng, 3, 8);
    GroupRingElement lhs;
    for (int g = 0; g < 3; ++g)
      lhs = lhs + word_minus_one(FreeWord::generator(g)) *
                      right_fox_derivative(w, g);
    REQUIRE(lhs == word_minus_one(w));
  }
}

TEST_CASE("presentation parsing and exponent matrix", "[freegrp]") {
  Presentation p = klein_four_presentation();
  CHECK(p.rank() == 2);
  CHECK(p.relators.size() == 3);
  IntMatrix m = p.exponent_matrix();
  CHECK(m.at(0, 0) == 2);
  CHECK(m.at(1, 1) == 2);
  CHECK(m.at(0, 2) == 2);
  CHECK(m.at(1, 2) == 2);
}
