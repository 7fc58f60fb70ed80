#pragma once

#include <optional>
#include <vector>

#include "unitroot/formal_log.hpp"
#include "unitroot/series.hpp"

namespace unitroot {

// N-dimensional formal group law truncated at total degree D.  Component i is
// a series in 2N variables: x = vars [0, N), y = vars [N, 2N).
struct GroupLaw {
  int N = 0;
  int D = 0;
  int label_dim = 0;
  std::vector<ExpVec> labels;        // interior points, graded-lex
  std::vector<TruncatedSeries> comp;
};

// F = L^{-1}(L(x) + L(y)) for the formal logarithm of f.
GroupLaw group_law(const PolyZ& f, int D);

// Group law of an arbitrary logarithm with identity linear part (used by
// negative controls and synthetic tests).
GroupLaw group_law_from_log(const std::vector<TruncatedSeries>& L, int D);

struct IntegralityReport {
  struct Offender {
    int component;
    Mono monomial;
    mpz_class denominator;
  };
  bool integral = true;
  std::vector<Offender> offenders;
};

// Lists every coefficient denominator exceeding 1.
IntegralityReport integrality_report(const GroupLaw& F);

struct AxiomsReport {
  bool identity_ok = false;
  bool commutativity_ok = false;
  bool associativity_ok = false;
  bool ok() const { return identity_ok && commutativity_ok && associativity_ok; }
};

// F(x,0) = x, F(x,y) = F(y,x), F(F(x,y),z) = F(x,F(y,z)), all up to degree D.
AxiomsReport axioms_check(const GroupLaw& F);

}  // namespace unitroot
