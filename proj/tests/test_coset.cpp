#include <random>

#include "catch2/catch_amalgamated.hpp"
#include "frlim/schreier.hpp"

using namespace frlim;

TEST_CASE("todd-coxeter on cyclic groups", "[coset]") {
  Presentation p = cyclic_presentation(3);
  CosetTable t = todd_coxeter(p, 100);
  REQUIRE(t.num_cosets() == 3);
  // x acts as a 3-cycle
  int c = 0;
  c = t.act(c, 1);
  CHECK(c != 0);
  c = t.act(c, 1);
  CHECK(c != 0);
  c = t.act(c, 1);
  CHECK(c == 0);
}

TEST_CASE("todd-coxeter on the trivial group", "[coset]") {
  Presentation p({"x"}, {"x"});
  CosetTable t = todd_coxeter(p, 10);
  CHECK(t.num_cosets() == 1);
}

TEST_CASE("todd-coxeter on the klein four-group", "[coset]") {
  CosetTable t = todd_coxeter(klein_four_presentation(), 100);
  CHECK(t.num_cosets() == 4);
}

TEST_CASE("todd-coxeter on s3", "[coset]") {
  CosetTable t = todd_coxeter(symmetric3_presentation(), 100);
  CHECK(t.num_cosets() == 6);
}

TEST_CASE("todd-coxeter overflow on an infinite group", "[coset]") {
  Presentation p;
  p.generator_names = {"x"};  // free group of rank 1
  CHECK_THROWS_AS(todd_coxeter(p, 10), ToddCoxeterOverflow);
}

TEST_CASE("schreier data for cyclic 3", "[coset]") {
  Presentation p = cyclic_presentation(3);
  CosetTable t = todd_coxeter(p, 100);
  SchreierData s(p, t);
  FreeWord x = FreeWord::generator(0);
  REQUIRE(s.transversal().size() == 3);
  CHECK(s.transversal()[t.coset_of(FreeWord())] == FreeWord());
  CHECK(s.transversal()[t.coset_of(x)] == x);
  CHECK(s.transversal()[t.coset_of(x.pow(2))] == x.pow(2));
  REQUIRE(s.basis().size() == 1);  // 3*(1-1)+1
  CHECK(s.basis()[0] == x.pow(3));
}

TEST_CASE("schreier basis sizes match the nielsen-schreier count", "[coset]") {
  struct Case {
    Presentation p;
    std::size_t order;
  };
  std::vector<Case> cases = {{cyclic_presentation(4), 4},
                             {klein_four_presentation(), 4},
                             {symmetric3_presentation(), 6},
                             {Presentation({"x"}, {"x"}), 1}};
  for (auto& cs : cases) {
    CosetTable t = todd_coxeter(cs.p, 200);
    REQUIRE(t.num_cosets() == cs.order);
    SchreierData s(cs.p, t);
    std::size_t d = cs.p.rank();
    CHECK(s.basis().size() == cs.order * (d - 1) + 1);
    for (const FreeWord& y : s.basis()) CHECK(t.coset_of(y) == 0);
  }
}

TEST_CASE("schreier rewriting", "[coset]") {
  Presentation p = cyclic_presentation(3);
  CosetTable t = todd_coxeter(p, 100);
  SchreierData s(p, t);
  FreeWord x = FreeWord::generator(0);
  CHECK(s.rewrite(x.pow(3)) == std::vector<int>{1});
  CHECK(s.rewrite(FreeWord()).empty());
  CHECK(s.rewrite(x.pow(6)) == std::vector<int>{1, 1});
  CHECK(s.rewrite(x.pow(-3)) == std::vector<int>{-1});
  CHECK_THROWS_AS(s.rewrite(x), NotInSubgroup);
}

TEST_CASE("rewrite then expand is the identity on kernel elements", "[coset]") {
  Presentation p = klein_four_presentation();
  CosetTable t = todd_coxeter(p, 100);
  SchreierData s(p, t);
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> nrel(1, 4);
  std::uniform_int_distribution<int> which(0, 2);
  for (int iter = 0; iter < 100; ++iter) {
    FreeWord w;
    int n = nrel(rng);
    for (int k = 0; k < n; ++k) {
      std::uniform_int_distribution<int> len(0, 3);
      std::uniform_int_distribution<int> gen(1, 2);
      std::uniform_int_distribution<int> sgn(0, 1);
      std::vector<int> ls;
      int m = len(rng);
      for (int i = 0; i < m; ++i) ls.push_back(sgn(rng) ? gen(rng) : -gen(rng));
      FreeWord g(ls);
      w = w * p.relators[which(rng)].conjugated_by(g);
    }
    REQUIRE(t.coset_of(w) == 0);
    REQUIRE(s.expand(s.rewrite(w)) == w);
  }
}
