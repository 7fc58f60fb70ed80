#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "unitroot/grouplaw.hpp"
#include "unitroot/series1d.hpp"

namespace unitroot {

// Polynomial in tau and delta = tau d/dtau, kept in the normal form
// sum c_{k,j} tau^k delta^j (all tau powers to the left of all delta powers).
class EulerOperator {
 public:
  using Key = std::pair<int, int>;  // (tau power k, delta power j)

  EulerOperator() = default;

  static EulerOperator delta() { return term(0, 1, 1); }
  static EulerOperator tau(int k = 1) { return term(k, 0, 1); }
  static EulerOperator constant(const mpz_class& c) { return term(0, 0, c); }
  static EulerOperator term(int k, int j, const mpz_class& c);

  const std::map<Key, mpz_class>& terms() const { return terms_; }
  mpz_class coefficient(int k, int j) const;
  int max_tau_power() const;
  int delta_degree() const;
  bool is_zero() const { return terms_.empty(); }

  EulerOperator& operator+=(const EulerOperator& o);
  friend EulerOperator operator+(EulerOperator a, const EulerOperator& b) {
    a += b;
    return a;
  }
  friend EulerOperator operator-(const EulerOperator& a, const EulerOperator& b);
  // composition of operators, normalized with delta tau^k = tau^k (delta + k)
  friend EulerOperator operator*(const EulerOperator& a, const EulerOperator& b);

  bool operator==(const EulerOperator&) const = default;

 private:
  void prune();
  std::map<Key, mpz_class> terms_;
};

// Applies the operator; the result is reliable to degree
// g.degree - max_tau_power, which is what gets returned.
PowerSeries1D apply(const EulerOperator& op, const PowerSeries1D& g);

// tau^N prod_{theta in S} (delta + N theta) - delta^{|S|}; every theta must
// be k/N with 1 <= k <= N-1, and S nonempty.
EulerOperator honda_operator(const std::vector<mpq_class>& S, int N);

// (-d)^d tau^d (delta+1) ... (delta+d-1) - delta^{d-1}, d >= 2
EulerOperator pf_operator_cyclic(int d);

// 4^4 tau^4 (delta+1)(delta+3) - delta^2
EulerOperator pf_operator_1124();

// Unique normalized power-series solution (constant term 1) of an operator of
// the two-shift shape tau^N P(delta) - Q(delta) with Q(0) = 0.  Throws when
// the recurrence degenerates (Q vanishing at a positive integer).
PowerSeries1D normalized_solution(const EulerOperator& op, int D);

PowerSeries1D honda_solution(const std::vector<mpq_class>& S, int N, int D);

struct AnnihilationReport {
  bool annihilated = false;
  int checked_degree = -1;           // degree up to which the result is valid
  std::optional<int> first_failure;  // smallest failing tau degree
};

AnnihilationReport annihilation_check(const EulerOperator& op,
                                      const PowerSeries1D& g);

// Scales every tau^k coefficient by c^k, so that
// apply(conjugate(op, c), scale_variable(g, c)) = scale_variable(apply(op, g), c).
EulerOperator conjugate(const EulerOperator& op, const mpz_class& c);

struct HondaGroupLawResult {
  GroupLaw law;                        // one-dimensional, in variables (x, y)
  std::vector<mpz_class> denominator_primes;  // sorted, deduplicated
};

// Group law of the formal integral f(x) = sum A(n) x^{Nn+1}/(Nn+1) of the
// normalized solution; reports every prime dividing a coefficient denominator.
// Requires {N theta} to cover all reduced residues mod N.
HondaGroupLawResult honda_group_law(const std::vector<mpq_class>& S, int N,
                                    int D);

}  // namespace unitroot
