#include "unitroot/coefficients.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "unitroot/padic.hpp"

namespace unitroot {

namespace {

// Enumeration of solutions of
//   sum_j x_j * u_j = target,  sum_j x_j = n,  x_j >= 0
// over the support points u_j.  Points are visited in order of decreasing L1
// norm; at each level the feasible range of x_j is the intersection of the
// intervals implied by per-coordinate (and coordinate-sum) bounds of the
// remaining points.
class Enumerator {
 public:
  Enumerator(const PolyZ& f, uint64_t n, const ExpVec& target)
      : d_(f.dimension()), n_(n) {
    for (const auto& [e, c] : f.terms()) pts_.push_back(e);
    std::sort(pts_.begin(), pts_.end(), [](const ExpVec& a, const ExpVec& b) {
      if (a.l1() != b.l1()) return a.l1() > b.l1();
      return graded_lex_less(a, b);
    });
    const std::size_t k = pts_.size();
    // virtual coordinates: the d real ones plus the coordinate sum
    nc_ = d_ + 1;
    coord_.assign(k * static_cast<std::size_t>(nc_), 0);
    for (std::size_t j = 0; j < k; ++j) {
      for (int c = 0; c < d_; ++c) coord(j, c) = pts_[j][c];
      coord(j, d_) = pts_[j].coord_sum();
    }
    smin_.assign((k + 1) * static_cast<std::size_t>(nc_), 0);
    smax_.assign((k + 1) * static_cast<std::size_t>(nc_), 0);
    for (int c = 0; c < nc_; ++c) {
      smin(k, c) = INT64_MAX;
      smax(k, c) = INT64_MIN;
    }
    for (std::size_t j = k; j-- > 0;) {
      for (int c = 0; c < nc_; ++c) {
        smin(j, c) = std::min(smin(j + 1, c), coord(j, c));
        smax(j, c) = std::max(smax(j + 1, c), coord(j, c));
      }
    }
    rt_.assign(static_cast<std::size_t>(nc_), 0);
    for (int c = 0; c < d_; ++c) rt_[static_cast<std::size_t>(c)] = target[c];
    rt_[static_cast<std::size_t>(d_)] = target.coord_sum();
  }

  // visit(counts) is called for every solution
  template <class Visit>
  void run(Visit&& visit) {
    counts_.assign(pts_.size(), 0);
    budget_ = std::max<std::size_t>(term_cap(), 1'000'000);
    if (pts_.empty()) {
      // f == 0: f^0 = 1, otherwise no terms at all
      bool tgt_zero = std::all_of(rt_.begin(), rt_.end(),
                                  [](int64_t v) { return v == 0; });
      if (n_ == 0 && tgt_zero) visit(counts_);
      return;
    }
    dfs(0, static_cast<int64_t>(n_), visit);
  }

  const std::vector<ExpVec>& points() const { return pts_; }

 private:
  int64_t& coord(std::size_t j, int c) {
    return coord_[j * static_cast<std::size_t>(nc_) + static_cast<std::size_t>(c)];
  }
  int64_t& smin(std::size_t j, int c) {
    return smin_[j * static_cast<std::size_t>(nc_) + static_cast<std::size_t>(c)];
  }
  int64_t& smax(std::size_t j, int c) {
    return smax_[j * static_cast<std::size_t>(nc_) + static_cast<std::size_t>(c)];
  }

  static int64_t floor_div(int64_t a, int64_t b) {
    int64_t q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
  }
  static int64_t ceil_div(int64_t a, int64_t b) {
    int64_t q = a / b, r = a % b;
    return (r != 0 && ((r < 0) == (b < 0))) ? q + 1 : q;
  }

  template <class Visit>
  void dfs(std::size_t level, int64_t m, Visit&& visit) {
    if (budget_-- == 0)
      throw CapExceededError("coefficient enumeration budget exhausted");
    const std::size_t k = pts_.size();
    if (level + 1 == k) {
      // last point takes everything that remains
      for (int c = 0; c < nc_; ++c)
        if (rt_[static_cast<std::size_t>(c)] != m * coord(level, c)) return;
      counts_[level] = static_cast<uint64_t>(m);
      visit(counts_);
      counts_[level] = 0;
      return;
    }
    // feasible interval for x_level
    int64_t lo = 0, hi = m;
    bool feasible = true;
    auto require_le = [&](int64_t a, int64_t b) {  // a*x <= b
      if (a > 0)
        hi = std::min(hi, floor_div(b, a));
      else if (a < 0)
        lo = std::max(lo, ceil_div(b, a));
      else if (b < 0)
        feasible = false;
    };
    auto require_ge = [&](int64_t a, int64_t b) {  // a*x >= b
      if (a > 0)
        lo = std::max(lo, ceil_div(b, a));
      else if (a < 0)
        hi = std::min(hi, floor_div(b, a));
      else if (b > 0)
        feasible = false;
    };
    for (int c = 0; c < nc_ && feasible && lo <= hi; ++c) {
      const int64_t u = coord(level, c);
      const int64_t mn = smin(level + 1, c), mx = smax(level + 1, c);
      const int64_t t = rt_[static_cast<std::size_t>(c)];
      // need: (m - x)*mn <= t - x*u <= (m - x)*mx, i.e.
      //   (u - mn)*x <= t - m*mn   and   (u - mx)*x >= t - m*mx
      require_le(u - mn, t - m * mn);
      require_ge(u - mx, t - m * mx);
    }
    if (!feasible) return;
    for (int64_t x = lo; x <= hi; ++x) {
      counts_[level] = static_cast<uint64_t>(x);
      for (int c = 0; c < nc_; ++c) rt_[static_cast<std::size_t>(c)] -= x * coord(level, c);
      dfs(level + 1, m - x, visit);
      for (int c = 0; c < nc_; ++c) rt_[static_cast<std::size_t>(c)] += x * coord(level, c);
    }
    counts_[level] = 0;
  }

  int d_;
  uint64_t n_;
  int nc_;
  std::vector<ExpVec> pts_;
  std::vector<int64_t> coord_, smin_, smax_, rt_;
  std::vector<uint64_t> counts_;
  std::size_t budget_ = 0;
};

}  // namespace

mpz_class power_coefficient_exact(const PolyZ& f, uint64_t n,
                                  const ExpVec& target) {
  if (n > (uint64_t{1} << 40))
    throw UnsupportedError("exponent too large for exact extraction");
  Enumerator en(f, n, target);
  // coefficients looked up in enumeration order
  std::vector<mpz_class> coeffs;
  for (const auto& p : en.points()) coeffs.push_back(f.coefficient(p));

  mpz_class total = 0;
  en.run([&](const std::vector<uint64_t>& counts) {
    // multinomial as a product of binomials
    mpz_class term = 1;
    uint64_t acc = 0;
    mpz_class binom;
    for (std::size_t j = 0; j < counts.size(); ++j) {
      if (!counts[j]) continue;
      acc += counts[j];
      mpz_bin_uiui(binom.get_mpz_t(), acc, counts[j]);
      term *= binom;
    }
    for (std::size_t j = 0; j < counts.size(); ++j) {
      if (!counts[j]) continue;
      if (coeffs[j] == 1) continue;
      mpz_class pw;
      mpz_pow_ui(pw.get_mpz_t(), coeffs[j].get_mpz_t(), counts[j]);
      term *= pw;
    }
    total += term;
  });
  return total;
}

uint64_t power_coefficient_mod(const PolyZ& f, uint64_t n, const ExpVec& target,
                               const ZmodRing& ring) {
  Enumerator en(f, n, target);
  const uint64_t p = ring.p();
  const int M = ring.precision();

  // per-point coefficient split a = p^v * b with p ∤ b
  std::vector<int64_t> cval;
  std::vector<uint64_t> cunit;
  for (const auto& pt : en.points()) {
    mpz_class c = f.coefficient(pt);
    mpz_class b;
    auto v = static_cast<int64_t>(
        mpz_remove(b.get_mpz_t(), c.get_mpz_t(),
                   mpz_class(static_cast<unsigned long>(p)).get_mpz_t()));
    cval.push_back(v);
    cunit.push_back(ring.reduce(b));
  }

  std::map<uint64_t, uint64_t> fact_cache;
  uint64_t total = 0;
  en.run([&](const std::vector<uint64_t>& counts) {
    int64_t val = factorial_valuation(n, p);
    for (std::size_t j = 0; j < counts.size(); ++j) {
      if (!counts[j]) continue;
      val -= factorial_valuation(counts[j], p);
      val += cval[j] * static_cast<int64_t>(counts[j]);
    }
    if (val >= M) return;
    uint64_t u = factorial_unit(n, ring, &fact_cache);
    for (std::size_t j = 0; j < counts.size(); ++j) {
      if (!counts[j]) continue;
      u = ring.mul(u, *ring.inv(factorial_unit(counts[j], ring, &fact_cache)));
      if (cunit[j] != ring.one()) u = ring.mul(u, ring.pow(cunit[j], counts[j]));
    }
    uint64_t scale = ring.one();
    for (int64_t i = 0; i < val; ++i) scale = ring.mul(scale, p % ring.modulus());
    total = ring.add(total, ring.mul(u, scale));
  });
  return total;
}

}  // namespace unitroot
