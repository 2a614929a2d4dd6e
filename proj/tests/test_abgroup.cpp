#include "catch2/catch_amalgamated.hpp"
#include "frlim/abgroup.hpp"
#include "oracles.hpp"

using namespace frlim;

namespace {
IntMatrix make(std::size_t r, std::size_t c, std::vector<long> vals) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = vals[i * c + j];
  return m;
}
}  // namespace

TEST_CASE("cokernel of diagonal and small presentations", "[abgroup]") {
  IntMatrix d = make(3, 3, {1, 0, 0, 0, 2, 0, 0, 0, 0});
  AbGroup g = cokernel(d);
  CHECK(g.free_rank == 1);
  CHECK(g.torsion == std::vector<Int>{Int(2)});

  AbGroup h = cokernel(make(1, 1, {2}));
  CHECK(h.free_rank == 0);
  CHECK(h.torsion == std::vector<Int>{Int(2)});

  // <a,b | 2a+4b, 6a+8b> = Z/2 + Z/4, via the SNF of [[2,4],[6,8]]
  AbGroup p = cokernel(make(2, 2, {2, 6, 4, 8}));
  CHECK(p == AbGroup{0, {Int(2), Int(4)}});
}

TEST_CASE("canonical form is unique representation", "[abgroup]") {
  // Z/2 + Z/3 = Z/6 must canonicalize identically
  AbGroup a = AbGroup::cyclic(2).direct_sum(AbGroup::cyclic(3));
  CHECK(a == AbGroup::cyclic(6));
  AbGroup b = AbGroup::cyclic(4).direct_sum(AbGroup::cyclic(6));
  CHECK(b == (AbGroup{0, {Int(2), Int(12)}}));
}

TEST_CASE("tensor of cyclic groups", "[abgroup]") {
  // gcd rule via the direct cokernel of the 1x2 presentation [4 6]
  AbGroup direct = cokernel(make(1, 2, {4, 6}));
  CHECK(direct == AbGroup::cyclic(2));
  CHECK(ab_tensor(AbGroup::cyclic(4), AbGroup::cyclic(6)) == direct);

  CHECK(ab_tensor(AbGroup::free(2), AbGroup::cyclic(3)) ==
        (AbGroup{0, {Int(3), Int(3)}}));
  CHECK(ab_tensor(AbGroup::free(2), AbGroup::free(3)) == AbGroup::free(6));
}

TEST_CASE("tor basics", "[abgroup]") {
  CHECK(ab_tor(AbGroup::free(1), AbGroup::cyclic(8)).is_zero());
  CHECK(ab_tor(AbGroup::free(3), AbGroup{1, {Int(2), Int(4)}}).is_zero());
  CHECK(ab_tor(AbGroup::cyclic(2), AbGroup::cyclic(2)) == AbGroup::cyclic(2));
  // symmetry
  AbGroup a{1, {Int(4)}};
  AbGroup b{0, {Int(2), Int(6)}};
  CHECK(ab_tor(a, b) == ab_tor(b, a));
}

TEST_CASE("tensor and tor agree with cyclic rules up to 12", "[abgroup]") {
  for (long m = 2; m <= 12; ++m)
    for (long n = 2; n <= 12; ++n) {
      CHECK(ab_tensor(AbGroup::cyclic(m), AbGroup::cyclic(n)) ==
            oracles::cyclic_tensor(m, n));
      CHECK(ab_tor(AbGroup::cyclic(m), AbGroup::cyclic(n)) ==
            oracles::cyclic_tor(m, n));
    }
}

TEST_CASE("subquotient", "[abgroup]") {
  Echelon big(2);
  big.insert({Int(1), Int(0)});
  big.insert({Int(0), Int(1)});
  std::vector<std::vector<Int>> sub = {{Int(2), Int(0)}, {Int(0), Int(1)}};
  CHECK(subquotient(big, sub) == AbGroup::cyclic(2));
  CHECK(subquotient(big, {}) == AbGroup::free(2));
}
