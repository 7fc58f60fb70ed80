#include "unitroot/formal_log.hpp"

#include <algorithm>

#include "unitroot/coefficients.hpp"
#include "unitroot/polytope.hpp"

namespace unitroot {

BetaTable::BetaTable(int d, int max_nu, std::vector<ExpVec> points)
    : d_(d), max_nu_(max_nu), points_(std::move(points)) {
  if (max_nu < 1) throw UnsupportedError("max_nu must be >= 1");
  entries_.assign(points_.size() * points_.size() *
                      static_cast<std::size_t>(max_nu),
                  mpz_class(0));
}

const mpz_class& BetaTable::at(std::size_t v_idx, std::size_t w_idx,
                               int nu) const {
  const std::size_t n = points_.size();
  return entries_[((static_cast<std::size_t>(nu) - 1) * n + v_idx) * n + w_idx];
}

mpz_class& BetaTable::at(std::size_t v_idx, std::size_t w_idx, int nu) {
  const std::size_t n = points_.size();
  return entries_[((static_cast<std::size_t>(nu) - 1) * n + v_idx) * n + w_idx];
}

BetaTable beta_table(const PolyZ& f, int max_nu) {
  auto pts = require_interior_points(f);
  BetaTable table(f.dimension(), max_nu, pts);
  const std::size_t n = pts.size();

  PolyZ running = PolyZ::one(f.dimension());  // f^{nu-1}
  for (int nu = 1; nu <= max_nu; ++nu) {
    for (std::size_t vi = 0; vi < n; ++vi)
      for (std::size_t wi = 0; wi < n; ++wi) {
        ExpVec target = sub(scale(pts[wi], nu), pts[vi]);
        table.at(vi, wi, nu) = running.coefficient(target);
      }
    if (nu < max_nu) running = multiply(running, f);
  }
  return table;
}

mpz_class beta(const PolyZ& f, const ExpVec& v, const ExpVec& w, int nu) {
  if (nu < 1) throw UnsupportedError("nu must be >= 1");
  auto pts = require_interior_points(f);
  auto inside = [&](const ExpVec& x) {
    return std::find(pts.begin(), pts.end(), x) != pts.end();
  };
  if (!inside(v) || !inside(w))
    throw HypothesisError("v and w must be interior lattice points");
  ExpVec target = sub(scale(w, nu), v);
  return power_coefficient_exact(f, static_cast<uint64_t>(nu) - 1, target);
}

std::vector<TruncatedSeries> log_series(const BetaTable& table, int D) {
  if (D < 1) throw UnsupportedError("D must be >= 1");
  if (table.max_nu() < D)
    throw UnsupportedError("beta table too short for the requested degree");
  const std::size_t n = table.point_count();
  if (n > static_cast<std::size_t>(kMaxSeriesVars))
    throw UnsupportedError("too many interior points for the series ring");

  std::vector<TruncatedSeries> L;
  for (std::size_t vi = 0; vi < n; ++vi) {
    std::vector<TruncatedSeries::Term> terms;
    for (std::size_t wi = 0; wi < n; ++wi)
      for (int nu = 1; nu <= D; ++nu) {
        const mpz_class& b = table.at(vi, wi, nu);
        if (sgn(b) == 0) continue;
        mpq_class q(b, nu);
        q.canonicalize();
        terms.emplace_back(mono_var(static_cast<int>(wi), nu), q);
      }
    L.push_back(TruncatedSeries::from_terms(static_cast<int>(n), D,
                                            std::move(terms)));
  }
  return L;
}

std::vector<TruncatedSeries> log_series(const PolyZ& f, int D) {
  return log_series(beta_table(f, D), D);
}

namespace {

PowerSeries1D pf_series(const PolyZ& f, const ExpVec& v, const ExpVec& w, int D,
                        bool signed_variant) {
  if (D < 0) throw UnsupportedError("D must be >= 0");
  auto pts = require_interior_points(f);
  auto inside = [&](const ExpVec& x) {
    return std::find(pts.begin(), pts.end(), x) != pts.end();
  };
  if (!inside(v) || !inside(w))
    throw HypothesisError("v and w must be interior lattice points");

  PowerSeries1D g(D);
  for (int nu = 1; nu <= D + 1; ++nu) {
    ExpVec target = sub(scale(w, nu), v);
    mpz_class b =
        power_coefficient_exact(f, static_cast<uint64_t>(nu) - 1, target);
    if (signed_variant && (nu - 1) % 2 == 1) b = -b;
    g.c[static_cast<std::size_t>(nu) - 1] = mpq_class(b);
  }
  return g;
}

}  // namespace

PowerSeries1D signed_pf_series(const PolyZ& f, const ExpVec& v, const ExpVec& w,
                               int D) {
  return pf_series(f, v, w, D, true);
}

PowerSeries1D unsigned_pf_series(const PolyZ& f, const ExpVec& v,
                                 const ExpVec& w, int D) {
  return pf_series(f, v, w, D, false);
}

}  // namespace unitroot
