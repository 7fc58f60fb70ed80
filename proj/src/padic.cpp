#include "unitroot/padic.hpp"

#include <algorithm>

namespace unitroot {

int64_t factorial_valuation(uint64_t n, uint64_t p) {
  int64_t v = 0;
  while (n) {
    n /= p;
    v += static_cast<int64_t>(n);
  }
  return v;
}

uint64_t factorial_unit(uint64_t n, const ZmodRing& ring,
                        std::map<uint64_t, uint64_t>* cache) {
  if (cache) {
    auto it = cache->find(n);
    if (it != cache->end()) return it->second;
  }
  const uint64_t p = ring.p();
  // n! = p^{floor(n/p)} * floor(n/p)! * prod_{i<=n, p∤i} i
  uint64_t u = ring.one();
  uint64_t m = n;
  while (m) {
    uint64_t block = ring.one();
    for (uint64_t i = 1; i <= m; ++i)
      if (i % p) block = ring.mul(block, i % ring.modulus());
    u = ring.mul(u, block);
    m /= p;
  }
  if (cache) cache->emplace(n, u);
  return u;
}

PadicMatrix mat_mul(const PadicMatrix& a, const PadicMatrix& b) {
  if (!(a.ring() == b.ring()) || a.size() != b.size())
    throw RingMismatchError("matrix shape or modulus mismatch");
  PadicMatrix c(a.ring(), a.labels(), a.label_dim());
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      uint64_t aik = a.at(i, k);
      if (!aik) continue;
      for (std::size_t j = 0; j < n; ++j)
        c.at(i, j) = a.ring().add(c.at(i, j), a.ring().mul(aik, b.at(k, j)));
    }
  return c;
}

PadicMatrix matrix_inverse_mod(const PadicMatrix& a) {
  const std::size_t n = a.size();
  const ZmodRing& R = a.ring();
  PadicMatrix work = a;
  PadicMatrix inv = PadicMatrix::identity(R, a.labels(), a.label_dim());

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    for (std::size_t r = col; r < n; ++r)
      if (R.is_unit(work.at(r, col))) {
        pivot = r;
        break;
      }
    if (pivot == n)
      throw NotInvertibleError("matrix is not invertible modulo " +
                               std::to_string(R.p()));
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work.at(pivot, j), work.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    uint64_t piv_inv = *R.inv(work.at(col, col));
    for (std::size_t j = 0; j < n; ++j) {
      work.at(col, j) = R.mul(work.at(col, j), piv_inv);
      inv.at(col, j) = R.mul(inv.at(col, j), piv_inv);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      uint64_t factor = work.at(r, col);
      if (!factor) continue;
      for (std::size_t j = 0; j < n; ++j) {
        work.at(r, j) = R.sub(work.at(r, j), R.mul(factor, work.at(col, j)));
        inv.at(r, j) = R.sub(inv.at(r, j), R.mul(factor, inv.at(col, j)));
      }
    }
  }
  return inv;
}

uint64_t mat_det(const PadicMatrix& a) {
  // fraction-free is unnecessary: eliminate with unit pivots, and once no unit
  // pivot exists the determinant's p-valuation only grows, handled by scaling
  const std::size_t n = a.size();
  const ZmodRing& R = a.ring();
  PadicMatrix w = a;
  uint64_t det = R.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    for (std::size_t r = col; r < n; ++r)
      if (R.is_unit(w.at(r, col))) {
        pivot = r;
        break;
      }
    if (pivot == n) {
      // every remaining entry in this column is divisible by p: factor p out
      // of one row if possible, else the determinant is simply non-unit; for
      // our purposes an exact non-unit value is still required, so fall back
      // to expansion for the small sizes in play
      break;
    }
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(w.at(pivot, j), w.at(col, j));
      det = R.neg(det);
    }
    uint64_t piv = w.at(col, col);
    det = R.mul(det, piv);
    uint64_t piv_inv = *R.inv(piv);
    for (std::size_t r = col + 1; r < n; ++r) {
      uint64_t factor = R.mul(w.at(r, col), piv_inv);
      if (!factor) continue;
      for (std::size_t j = col; j < n; ++j)
        w.at(r, j) = R.sub(w.at(r, j), R.mul(factor, w.at(col, j)));
    }
    if (col == n - 1) return det;
  }
  // Laplace expansion fallback (only reached when no unit pivot was found;
  // sizes here are tiny)
  struct Expand {
    const PadicMatrix& m;
    const ZmodRing& R;
    uint64_t run(std::vector<std::size_t> rows, std::vector<std::size_t> cols) {
      if (rows.empty()) return R.one();
      uint64_t acc = 0;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        uint64_t v = m.at(rows[i], cols[0]);
        if (v) {
          auto r2 = rows;
          r2.erase(r2.begin() + static_cast<std::ptrdiff_t>(i));
          auto c2 = cols;
          c2.erase(c2.begin());
          uint64_t sub = run(std::move(r2), std::move(c2));
          uint64_t term = R.mul(v, sub);
          acc = (i % 2 == 0) ? R.add(acc, term) : R.sub(acc, term);
        }
      }
      return acc;
    }
  };
  std::vector<std::size_t> rows(n), cols(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = cols[i] = i;
  return Expand{a, R}.run(rows, cols);
}

PadicMatrix reduce_precision(const PadicMatrix& a, int M2) {
  if (M2 > a.precision())
    throw UnsupportedError("cannot raise matrix precision");
  ZmodRing r2(a.p(), M2);
  PadicMatrix b(r2, a.labels(), a.label_dim());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      b.at(i, j) = a.at(i, j) % r2.modulus();
  return b;
}

int agreement_level(const PadicMatrix& a, const PadicMatrix& b) {
  if (!(a.ring() == b.ring()) || a.size() != b.size())
    throw RingMismatchError("matrix shape or modulus mismatch");
  const uint64_t p = a.p();
  int level = a.precision();
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      uint64_t diff = a.ring().sub(a.at(i, j), b.at(i, j));
      if (diff == 0) continue;
      int v = 0;
      while (diff % p == 0) {
        diff /= p;
        ++v;
      }
      level = std::min(level, v);
    }
  return level;
}

}  // namespace unitroot
