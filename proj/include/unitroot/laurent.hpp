#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "unitroot/exponent.hpp"
#include "unitroot/rings.hpp"

namespace unitroot {

// Global term-count budget shared by polynomial products and coefficient
// enumeration.  Defaults to 5e6, overridable via UNITROOT_MAX_TERMS.
std::size_t term_cap();
void set_term_cap(std::size_t cap);

// Sparse Laurent polynomial over a pluggable coefficient ring.  Terms are
// kept sorted in graded-lex order with no explicit zeros, so representations
// are canonical and iteration order is deterministic.
template <class R>
class LaurentPolynomial {
 public:
  using Ring = R;
  using Coeff = typename R::Value;
  using Term = std::pair<ExpVec, Coeff>;

  explicit LaurentPolynomial(int d, R ring = R{}) : d_(d), ring_(ring) {
    check_dim(d);
  }

  static LaurentPolynomial zero(int d, R ring = R{}) {
    return LaurentPolynomial(d, ring);
  }

  static LaurentPolynomial one(int d, R ring = R{}) {
    LaurentPolynomial f(d, ring);
    Coeff c = f.ring_.one();
    if (!f.ring_.is_zero(c)) f.terms_.emplace_back(ExpVec::zero(), c);
    return f;
  }

  static LaurentPolynomial monomial(int d, const ExpVec& e, Coeff c,
                                    R ring = R{}) {
    LaurentPolynomial f(d, ring);
    if (!f.ring_.is_zero(c)) f.terms_.emplace_back(e, std::move(c));
    return f;
  }

  // Combines like terms, drops zeros, sorts.
  static LaurentPolynomial from_terms(int d, std::vector<Term> terms,
                                      R ring = R{}) {
    LaurentPolynomial f(d, ring);
    std::unordered_map<ExpVec, Coeff, ExpVecHash> acc;
    for (auto& [e, c] : terms) {
      for (int i = d; i < kMaxDim; ++i)
        if (e[i] != 0) throw UnsupportedError("exponent beyond dimension");
      auto it = acc.find(e);
      if (it == acc.end())
        acc.emplace(e, std::move(c));
      else
        f.ring_.add_assign(it->second, c);
    }
    f.terms_.reserve(acc.size());
    for (auto& [e, c] : acc)
      if (!f.ring_.is_zero(c)) f.terms_.emplace_back(e, std::move(c));
    f.sort_terms();
    return f;
  }

  int dimension() const { return d_; }
  const R& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  // Stored coefficient or the ring's zero.
  Coeff coefficient(const ExpVec& e) const {
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), e,
        [](const Term& t, const ExpVec& k) { return graded_lex_less(t.first, k); });
    if (it != terms_.end() && it->first == e) return it->second;
    return ring_.zero();
  }

  bool operator==(const LaurentPolynomial& o) const {
    return d_ == o.d_ && ring_ == o.ring_ && terms_ == o.terms_;
  }

  std::vector<ExpVec> support() const {
    std::vector<ExpVec> s;
    s.reserve(terms_.size());
    for (const auto& t : terms_) s.push_back(t.first);
    return s;
  }

 private:
  static void check_dim(int d) {
    if (d < 1 || d > kMaxDim)
      throw UnsupportedError("dimension must be between 1 and " +
                             std::to_string(kMaxDim));
  }

  void sort_terms() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) {
                return graded_lex_less(a.first, b.first);
              });
  }

  int d_;
  R ring_;
  std::vector<Term> terms_;

  template <class S>
  friend LaurentPolynomial<S> multiply(const LaurentPolynomial<S>&,
                                       const LaurentPolynomial<S>&);
  template <class S>
  friend LaurentPolynomial<S> add(const LaurentPolynomial<S>&,
                                  const LaurentPolynomial<S>&);
};

using PolyZ = LaurentPolynomial<ZRing>;
using PolyQ = LaurentPolynomial<QRing>;
using PolyMod = LaurentPolynomial<ZmodRing>;

template <class R>
void require_compatible(const LaurentPolynomial<R>& a,
                        const LaurentPolynomial<R>& b) {
  if (a.dimension() != b.dimension())
    throw RingMismatchError("dimension mismatch");
  if (!(a.ring() == b.ring())) throw RingMismatchError("ring mismatch");
}

template <class R>
LaurentPolynomial<R> add(const LaurentPolynomial<R>& a,
                         const LaurentPolynomial<R>& b) {
  require_compatible(a, b);
  std::vector<typename LaurentPolynomial<R>::Term> ts;
  ts.reserve(a.term_count() + b.term_count());
  for (const auto& t : a.terms()) ts.push_back(t);
  for (const auto& t : b.terms()) ts.push_back(t);
  return LaurentPolynomial<R>::from_terms(a.dimension(), std::move(ts),
                                          a.ring());
}

template <class R>
LaurentPolynomial<R> multiply(const LaurentPolynomial<R>& a,
                              const LaurentPolynomial<R>& b) {
  require_compatible(a, b);
  const auto& ring = a.ring();
  LaurentPolynomial<R> prod(a.dimension(), ring);
  if (a.is_zero() || b.is_zero()) return prod;

  std::unordered_map<ExpVec, typename R::Value, ExpVecHash> acc;
  acc.reserve(a.term_count() + b.term_count());
  const std::size_t cap = term_cap();
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      ExpVec e = unitroot::add(ea, eb);
      auto it = acc.find(e);
      if (it == acc.end()) {
        if (acc.size() >= cap)
          throw CapExceededError(
              "product exceeds the term budget (UNITROOT_MAX_TERMS)");
        it = acc.emplace(e, ring.zero()).first;
      }
      ring.addmul(it->second, ca, cb);
    }
  }
  prod.terms_.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (!ring.is_zero(c)) prod.terms_.emplace_back(e, std::move(c));
  prod.sort_terms();
  return prod;
}

// f^n by binary powering.  Over ZmodRing every intermediate product is
// already reduced, which keeps coefficient sizes flat.
template <class R>
LaurentPolynomial<R> power(const LaurentPolynomial<R>& f, uint64_t n) {
  LaurentPolynomial<R> result = LaurentPolynomial<R>::one(f.dimension(), f.ring());
  if (n == 0) return result;
  LaurentPolynomial<R> base = f;
  while (true) {
    if (n & 1) result = multiply(result, base);
    n >>= 1;
    if (!n) break;
    base = multiply(base, base);
  }
  return result;
}

// exact coefficients -> canonical residues mod p^M
inline PolyMod reduce_mod(const PolyZ& f, const ZmodRing& ring) {
  std::vector<PolyMod::Term> ts;
  ts.reserve(f.term_count());
  for (const auto& [e, c] : f.terms()) ts.emplace_back(e, ring.reduce(c));
  return PolyMod::from_terms(f.dimension(), std::move(ts), ring);
}

inline PolyMod power_mod(const PolyZ& f, uint64_t n, const ZmodRing& ring) {
  return power(reduce_mod(f, ring), n);
}

// Text grammar:
//   polynomial := term (('+'|'-') term)*
//   term       := [integer '*']? factor ('*' factor)*
//   factor     := 't'INDEX ('^' SIGNED_INT)? | integer
// Whitespace is ignored.  Coefficients are arbitrary-precision integers.
PolyZ parse_laurent(std::string_view text, int d);

}  // namespace unitroot
