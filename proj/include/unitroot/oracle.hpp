#pragma once

#include <cstdint>

#include "unitroot/laurent.hpp"

namespace unitroot {

// #{ t in ((Z/p)^x)^d : f(t) = 0 }, by exhaustive evaluation.  Requires
// p^d <= 10^8.
int64_t torus_point_count(const PolyZ& f, uint64_t p);

// Projective point count of the fixed plane cubic x^2 y + x y^2 + z^3 = 0,
// the smooth compactification of t1 + t2 + 1/(t1 t2) = 0.  Throws
// BadReductionError at primes where the reduction is singular.
int64_t cubic_point_count(uint64_t p);

// a_p = p + 1 - #X(F_p) for the same cubic.
int64_t cubic_ap(uint64_t p);

// The unit root of T^2 - a_p T + p, Hensel-lifted to precision K.  Requires
// p not dividing a_p; otherwise throws SupersingularError.
uint64_t unit_root(int64_t a_p, uint64_t p, int K);

struct CrosscheckReport {
  uint64_t p = 0;
  int precision = 0;
  bool ordinary = false;       // from the Hasse-Witt side
  bool ap_unit = false;        // p does not divide a_p
  int64_t a_p = 0;
  uint64_t unit_root_value = 0;   // meaningful when ap_unit
  uint64_t alpha_value = 0;       // meaningful when ordinary
  bool match = false;          // the two pipelines agree
};

// Runs both pipelines for f = t1 + t2 + 1/(t1 t2): the p-adic limit matrix
// (1x1 here) and the Hensel-lifted unit root from brute-force point counts.
CrosscheckReport crosscheck_unit_root(uint64_t p, int K);

}  // namespace unitroot
