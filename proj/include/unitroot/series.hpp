#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "unitroot/errors.hpp"

namespace unitroot {

// Monomial in up to 8 variables, one byte of degree per variable.
using Mono = uint64_t;

inline constexpr int kMaxSeriesVars = 8;
inline constexpr int kMaxSeriesDegree = 255;

inline int mono_get(Mono m, int i) {
  return static_cast<int>((m >> (8 * i)) & 0xff);
}

inline Mono mono_set(Mono m, int i, int e) {
  m &= ~(Mono{0xff} << (8 * i));
  return m | (static_cast<Mono>(e & 0xff) << (8 * i));
}

inline Mono mono_var(int i, int e = 1) { return mono_set(0, i, e); }

inline int mono_total(Mono m) {
  int t = 0;
  while (m) {
    t += static_cast<int>(m & 0xff);
    m >>= 8;
  }
  return t;
}

inline Mono mono_mul(Mono a, Mono b) {
  // per-byte addition; degrees stay <= 255 because totals are capped first
  return a + b;
}

// Multivariate power series over exact rationals, truncated at a total
// degree.  Terms are kept sorted by (total degree, packed monomial) with no
// explicit zeros.
class TruncatedSeries {
 public:
  using Term = std::pair<Mono, mpq_class>;

  TruncatedSeries(int nvars, int degree);

  static TruncatedSeries zero(int nvars, int degree) {
    return TruncatedSeries(nvars, degree);
  }
  static TruncatedSeries constant(int nvars, int degree, const mpq_class& c);
  static TruncatedSeries variable(int nvars, int degree, int i);
  static TruncatedSeries from_terms(int nvars, int degree,
                                    std::vector<Term> terms);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  mpq_class coefficient(Mono m) const;
  mpq_class constant_term() const { return coefficient(0); }

  TruncatedSeries truncated(int new_degree) const;
  // relabel variable i -> var_map[i] inside a ring with new_nvars variables
  TruncatedSeries embedded(const std::vector<int>& var_map, int new_nvars) const;

  friend TruncatedSeries operator+(const TruncatedSeries&, const TruncatedSeries&);
  friend TruncatedSeries operator-(const TruncatedSeries&, const TruncatedSeries&);
  friend TruncatedSeries operator*(const TruncatedSeries&, const TruncatedSeries&);
  TruncatedSeries operator-() const;
  TruncatedSeries scaled(const mpq_class& c) const;

  bool operator==(const TruncatedSeries&) const = default;

 private:
  void sort_and_prune();

  int nvars_;
  int degree_;
  std::vector<Term> terms_;
};

// Substitution outer(inner[0], ..., inner[m-1]).  Every inner series must
// have zero constant term and live in one common ring; the result is
// truncated at min(outer.degree, inner degree).
TruncatedSeries compose(const TruncatedSeries& outer,
                        const std::vector<TruncatedSeries>& inner);

std::vector<TruncatedSeries> compose(const std::vector<TruncatedSeries>& outer,
                                     const std::vector<TruncatedSeries>& inner);

// Inverse under composition of a tuple L of n series in n variables whose
// linear part is the identity; fixed-point iteration g <- id - (L - id)(g),
// one degree gained per pass.
std::vector<TruncatedSeries> invert_composition(
    const std::vector<TruncatedSeries>& L);

// identity tuple (tau_0, ..., tau_{n-1})
std::vector<TruncatedSeries> identity_tuple(int nvars, int degree);

}  // namespace unitroot
