#include "catch2/catch_amalgamated.hpp"
#include "frlim/chain.hpp"
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

TEST_CASE("homology of short complexes", "[chain]") {
  // 0 -> Z --2--> Z -> 0
  ChainComplex c = ChainComplex::free_complex(0, {1, 1}, {make(1, 1, {2})});
  c.validate();
  CHECK(homology(c, 0) == AbGroup::cyclic(2));
  CHECK(homology(c, 1).is_zero());
  CHECK(homology(c, 5).is_zero());

  // exact: 0 -> Z --id--> Z -> 0
  ChainComplex e = ChainComplex::free_complex(0, {1, 1}, {make(1, 1, {1})});
  CHECK(homology(e, 0).is_zero());
  CHECK(homology(e, 1).is_zero());
}

TEST_CASE("homology of the truncated cyclic resolution", "[chain]") {
  // oracle for the group <x | x^3> in low degrees
  ChainComplex c = oracles::cyclic_periodic_complex(3, 4);
  c.validate();
  CHECK(homology(c, 0) == AbGroup::free(1));
  CHECK(homology(c, 1) == AbGroup::cyclic(3));
  CHECK(homology(c, 2).is_zero());
  CHECK(homology(c, 3) == AbGroup::cyclic(3));
}

TEST_CASE("homology invariant under zero padding and shift", "[chain]") {
  ChainComplex c = ChainComplex::free_complex(0, {1, 1}, {make(1, 1, {6})});
  ChainComplex padded = ChainComplex::free_complex(
      -1, {0, 1, 1, 0}, {make(0, 1, {}), make(1, 1, {6}), make(1, 0, {})});
  for (long n = -1; n <= 3; ++n) CHECK(homology(c, n) == homology(padded, n));
}

TEST_CASE("homology of complexes of non-free modules", "[chain]") {
  // 0 -> Z/4 --2--> Z/4 -> 0: kernel and image of *2 are both 2Z/4Z
  std::vector<ModulePresentation> mods = {ModulePresentation::of(AbGroup::cyclic(4)),
                                          ModulePresentation::of(AbGroup::cyclic(4))};
  ChainComplex c(0, mods, {make(1, 1, {2})});
  c.validate();
  CHECK(homology(c, 0) == AbGroup::cyclic(2));
  CHECK(homology(c, 1) == AbGroup::cyclic(2));
}

TEST_CASE("tensor of complexes matches Koszul signs", "[chain]") {
  ChainComplex p = ChainComplex::resolution_of(AbGroup::cyclic(2));
  ChainComplex pp = complex_tensor(p, p);
  pp.validate();
  CHECK(homology(pp, 0) == AbGroup::cyclic(2));
  CHECK(homology(pp, 1) == AbGroup::cyclic(2));
  CHECK(homology(pp, 2).is_zero());
}

TEST_CASE("derived tensor powers", "[chain]") {
  AbGroup z2 = AbGroup::cyclic(2);
  CHECK(derived_tensor_power(z2, 2, 0) == z2);  // L0 = tensor square
  CHECK(derived_tensor_power(z2, 2, 1) == ab_tor(z2, z2));
  CHECK(derived_tensor_power(z2, 1, 0) == z2);
  CHECK(derived_tensor_power(z2, 3, 5).is_zero());
  CHECK(derived_tensor_power(AbGroup::free(2), 3, 1).is_zero());
  CHECK(derived_tensor_power(AbGroup::free(2), 3, 2).is_zero());
}

TEST_CASE("L2 of the triple power of Z/2 against the hand-built complex",
          "[chain]") {
  // P = (Z --2--> Z); P (x) P (x) P expanded by hand with Koszul signs.
  // Degree ranks 1,3,3,1; bases eee | (bee, ebe, eeb) | (bbe, beb, ebb) | bbb.
  IntMatrix d3 = make(3, 1, {2, -2, 2});
  IntMatrix d2 = make(3, 3, {2, 2, 0, -2, 0, 2, 0, -2, -2});
  IntMatrix d1 = make(1, 3, {2, 2, 2});
  ChainComplex hand = ChainComplex::free_complex(0, {1, 3, 3, 1}, {d1, d2, d3});
  hand.validate();  // d o d = 0 certifies the sign bookkeeping
  AbGroup expected = homology(hand, 2);
  CHECK(expected == AbGroup::cyclic(2));
  CHECK(derived_tensor_power(AbGroup::cyclic(2), 3, 2) == expected);
}

TEST_CASE("derived power independent of padded resolution", "[chain]") {
  // resolution of Z/2 padded with an acyclic summand Z --id--> Z
  IntMatrix r = make(2, 2, {2, 0, 0, 1});
  ChainComplex padded = ChainComplex::free_complex(0, {2, 2}, {r});
  ChainComplex t = complex_tensor(padded, padded);
  ChainComplex ref = complex_tensor(ChainComplex::resolution_of(AbGroup::cyclic(2)),
                                    ChainComplex::resolution_of(AbGroup::cyclic(2)));
  for (long i = 0; i <= 2; ++i) CHECK(homology(t, i) == homology(ref, i));
}

TEST_CASE("tensor with coefficient group", "[chain]") {
  // universal coefficients on 0 -> Z --3--> Z -> 0 with A = Z/6
  ChainComplex c = ChainComplex::free_complex(0, {1, 1}, {make(1, 1, {3})});
  ChainComplex ca = tensor_with_group(c, AbGroup::cyclic(6));
  CHECK(homology(ca, 0) == AbGroup::cyclic(3));  // Z/3 (x) Z/6
  CHECK(homology(ca, 1) == AbGroup::cyclic(3));  // Tor(Z/3, Z/6)
}
