#pragma once

#include <cstdint>

#include "unitroot/laurent.hpp"
#include "unitroot/rings.hpp"

namespace unitroot {

// Coefficient of t^target in f^n, without expanding f^n.  The multinomial
// sum runs over all ways of writing (target, n) as a nonnegative combination
// of the support points; feasible combinations are enumerated by interval
// pruning on every coordinate plus the coordinate sum.  For a simplex support
// the combination is unique, so arbitrarily large n stay cheap.
mpz_class power_coefficient_exact(const PolyZ& f, uint64_t n,
                                  const ExpVec& target);

// Same sum evaluated mod p^M, tracking p-adic valuations so factorials enter
// only through their unit parts.
uint64_t power_coefficient_mod(const PolyZ& f, uint64_t n, const ExpVec& target,
                               const ZmodRing& ring);

}  // namespace unitroot
