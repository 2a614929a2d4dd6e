#pragma once

// Independent oracles used across the test suites.  Everything here is kept
// deliberately separate from the library's computation paths: periodic
// resolutions for cyclic groups, the Kuenneth formula, and gcd rules for
// tensor/Tor of cyclic groups.

#include <cstddef>
#include <numeric>
#include <vector>

#include "frlim/abgroup.hpp"
#include "frlim/chain.hpp"

namespace oracles {

using frlim::AbGroup;
using frlim::ChainComplex;
using frlim::Int;
using frlim::IntMatrix;

/// The classical periodic resolution of Z over Z[Z/m] after applying
/// (x) Z: differentials alternate 0, m, 0, m, ...
inline ChainComplex cyclic_periodic_complex(long m, std::size_t top_degree) {
  std::vector<std::size_t> ranks(top_degree + 1, 1);
  std::vector<IntMatrix> diffs;
  for (std::size_t k = 1; k <= top_degree; ++k) {
    IntMatrix d(1, 1);
    d.at(0, 0) = (k % 2 == 0) ? Int(m) : Int(0);
    diffs.push_back(d);
  }
  return ChainComplex::free_complex(0, std::move(ranks), std::move(diffs));
}

/// H_n(Z/m; Z) from the periodic resolution: Z, Z/m, 0, Z/m, 0, ...
inline AbGroup cyclic_homology(long m, long n) {
  if (n == 0) return AbGroup::free(1);
  if (n % 2 == 1) return AbGroup::cyclic(m);
  return AbGroup::zero();
}

/// gcd rules for cyclic groups.
inline AbGroup cyclic_tensor(long m, long n) {
  return AbGroup::cyclic(std::gcd(m, n));
}
inline AbGroup cyclic_tor(long m, long n) {
  return AbGroup::cyclic(std::gcd(m, n));
}

/// Kuenneth formula for a direct product, from the factors' homology.
template <typename HomologyA, typename HomologyB>
AbGroup kuenneth(HomologyA ha, HomologyB hb, long n) {
  AbGroup out = AbGroup::zero();
  for (long i = 0; i <= n; ++i)
    out = out.direct_sum(frlim::ab_tensor(ha(i), hb(n - i)));
  for (long i = 0; i <= n - 1; ++i)
    out = out.direct_sum(frlim::ab_tor(ha(i), hb(n - 1 - i)));
  return out;
}

/// H_n of the Klein four-group via Kuenneth on Z/2 x Z/2.
inline AbGroup klein_four_homology(long n) {
  auto h2 = [](long k) { return cyclic_homology(2, k); };
  return kuenneth(h2, h2, n);
}

}  // namespace oracles
