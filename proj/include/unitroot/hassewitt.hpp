#pragma once

#include <cstdint>
#include <vector>

#include "unitroot/coefficients.hpp"
#include "unitroot/padic.hpp"
#include "unitroot/polytope.hpp"

namespace unitroot {

// (alpha_s)_{u,v} = coefficient of t^{p^s v - u} in f^{p^s - 1}, reduced
// mod p^M.  Rows are indexed by u, columns by v; labels are the interior
// lattice points in graded-lex order.
PadicMatrix hasse_witt(const PolyZ& f, uint64_t p, int s, int M);

// Same matrix with exact integer entries (feasible whenever the multinomial
// enumeration is, which covers every simplex support at any exponent).
std::vector<std::vector<mpz_class>> hasse_witt_exact(const PolyZ& f, uint64_t p,
                                                     int s);

// det(alpha_1) is a unit mod p
bool is_ordinary(const PolyZ& f, uint64_t p);

struct CongruenceReport1 {
  uint64_t p = 0;
  int s_max = 0;
  std::vector<bool> holds;  // holds[s-1]: alpha_s == alpha_1^s mod p
  bool ok() const {
    for (bool b : holds)
      if (!b) return false;
    return true;
  }
};

// alpha_s == alpha_1^s mod p for 1 <= s <= s_max
CongruenceReport1 congruence_check_1(const PolyZ& f, uint64_t p, int s_max);

struct CongruenceReport2 {
  uint64_t p = 0;
  int s_max = 0;
  int precision = 0;
  // agreement[s-1] = p-adic agreement level of
  // alpha_{s+1} alpha_s^{-1} and alpha_s alpha_{s-1}^{-1}, for 1 <= s < s_max
  std::vector<int> agreement;
  bool ok() const {
    for (std::size_t i = 0; i < agreement.size(); ++i)
      if (agreement[i] < static_cast<int>(i) + 1) return false;
    return true;
  }
};

CongruenceReport2 congruence_check_2(const PolyZ& f, uint64_t p, int s_max,
                                     int M);

struct LimitResult {
  PadicMatrix alpha;
  // (s, agreement level between consecutive quotients q_s and q_{s-1})
  std::vector<std::pair<int, int>> trace;
};

// alpha = lim alpha_{s+1} alpha_s^{-1}, evaluated mod p^K as the s = K
// quotient; all arithmetic at precision K (no digits are lost because the
// matrices inverted have unit determinant).
LimitResult frobenius_limit(const PolyZ& f, uint64_t p, int K);

}  // namespace unitroot
