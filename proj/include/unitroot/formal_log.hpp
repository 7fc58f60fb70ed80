#pragma once

#include <vector>

#include "unitroot/laurent.hpp"
#include "unitroot/series.hpp"
#include "unitroot/series1d.hpp"

namespace unitroot {

// beta_{v,w,nu} = coefficient of t^{nu w - v} in f^{nu-1}, for interior
// lattice points v, w of the Newton polytope.
//
// The table is filled by iterated multiplication (every power f^{nu-1} is
// needed anyway); the single-shot beta() below extracts one coefficient by
// multinomial enumeration instead, so the two routes check each other.
class BetaTable {
 public:
  BetaTable(int d, int max_nu, std::vector<ExpVec> points);

  int max_nu() const { return max_nu_; }
  const std::vector<ExpVec>& points() const { return points_; }
  std::size_t point_count() const { return points_.size(); }
  int dimension() const { return d_; }

  const mpz_class& at(std::size_t v_idx, std::size_t w_idx, int nu) const;
  mpz_class& at(std::size_t v_idx, std::size_t w_idx, int nu);

 private:
  int d_;
  int max_nu_;
  std::vector<ExpVec> points_;
  std::vector<mpz_class> entries_;
};

BetaTable beta_table(const PolyZ& f, int max_nu);

mpz_class beta(const PolyZ& f, const ExpVec& v, const ExpVec& w, int nu);

// The formal logarithm: component L_v = sum_w sum_nu beta_{v,w,nu} tau_w^nu / nu,
// one series per interior point, in N variables ordered graded-lex.
std::vector<TruncatedSeries> log_series(const PolyZ& f, int D);
std::vector<TruncatedSeries> log_series(const BetaTable& table, int D);

// sum_nu (-1)^{nu-1} beta_{v,w,nu} tau^{nu-1}, truncated at tau^D.  With this
// sign convention the series solves the associated ordinary differential
// equations (see the diffop module).
PowerSeries1D signed_pf_series(const PolyZ& f, const ExpVec& v, const ExpVec& w,
                               int D);

// same series without the alternating sign; kept for negative controls
PowerSeries1D unsigned_pf_series(const PolyZ& f, const ExpVec& v,
                                 const ExpVec& w, int D);

}  // namespace unitroot
