#include "unitroot/oracle.hpp"

#include <cmath>

#include "unitroot/builtins.hpp"
#include "unitroot/hassewitt.hpp"

namespace unitroot {

namespace {

uint64_t powmod(uint64_t a, uint64_t n, uint64_t p) {
  uint64_t r = 1 % p;
  a %= p;
  while (n) {
    if (n & 1) r = static_cast<uint64_t>((static_cast<unsigned __int128>(r) * a) % p);
    a = static_cast<uint64_t>((static_cast<unsigned __int128>(a) * a) % p);
    n >>= 1;
  }
  return r;
}

}  // namespace

int64_t torus_point_count(const PolyZ& f, uint64_t p) {
  if (!is_prime_u64(p)) throw UnsupportedError("p must be prime");
  const int d = f.dimension();
  double size = 1;
  for (int i = 0; i < d; ++i) size *= static_cast<double>(p);
  if (size > 1e8) throw UnsupportedError("p^d exceeds the brute force bound");

  // residues of coefficients, exponents folded to nonnegative via t^(p-1) = 1
  std::vector<uint64_t> coeffs;
  std::vector<std::array<uint64_t, kMaxDim>> exps;
  for (const auto& [e, c] : f.terms()) {
    mpz_class r = c % mpz_class(static_cast<unsigned long>(p));
    if (sgn(r) < 0) r += mpz_class(static_cast<unsigned long>(p));
    coeffs.push_back(mpz_get_ui(r.get_mpz_t()));
    std::array<uint64_t, kMaxDim> fe{};
    for (int i = 0; i < d; ++i) {
      int64_t x = e[i] % static_cast<int64_t>(p - 1);
      if (x < 0) x += static_cast<int64_t>(p - 1);
      fe[static_cast<std::size_t>(i)] = static_cast<uint64_t>(x);
    }
    exps.push_back(fe);
  }

  std::vector<uint64_t> t(static_cast<std::size_t>(d), 1);
  int64_t count = 0;
  while (true) {
    uint64_t val = 0;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      uint64_t m = coeffs[j];
      for (int i = 0; i < d; ++i)
        m = static_cast<uint64_t>(
            (static_cast<unsigned __int128>(m) *
             powmod(t[static_cast<std::size_t>(i)], exps[j][static_cast<std::size_t>(i)], p)) %
            p);
      val = (val + m) % p;
    }
    if (val == 0) ++count;
    int i = 0;
    for (; i < d; ++i) {
      if (t[static_cast<std::size_t>(i)] < p - 1) {
        ++t[static_cast<std::size_t>(i)];
        break;
      }
      t[static_cast<std::size_t>(i)] = 1;
    }
    if (i == d) break;
  }
  return count;
}

int64_t cubic_point_count(uint64_t p) {
  if (!is_prime_u64(p)) throw UnsupportedError("p must be prime");
  if (p > 499) throw UnsupportedError("cubic point count limited to p <= 499");

  auto F = [p](uint64_t x, uint64_t y, uint64_t z) -> uint64_t {
    unsigned __int128 v = static_cast<unsigned __int128>(x) * x % p * y;
    v += static_cast<unsigned __int128>(x) * y % p * y;
    v += static_cast<unsigned __int128>(z) * z % p * z;
    return static_cast<uint64_t>(v % p);
  };

  // gradient (2xy + y^2, x^2 + 2xy, 3z^2); vanishing is scale-invariant, so
  // checking normalized representatives suffices
  auto singular_at = [p, &F](uint64_t x, uint64_t y, uint64_t z) {
    if (F(x, y, z) != 0) return false;
    uint64_t fx = (2 * x % p * y + y * y) % p;
    uint64_t fy = (x * x + 2 * x % p * y) % p;
    uint64_t fz = 3 * z % p * z % p;
    return fx == 0 && fy == 0 && fz == 0;
  };

  // projective points via normalized representatives
  int64_t count = 0;
  bool singular = false;
  for (uint64_t y = 0; y < p; ++y)  // chart x = 1
    for (uint64_t z = 0; z < p; ++z)
      if (F(1, y, z) == 0) {
        ++count;
        singular = singular || singular_at(1, y, z);
      }
  for (uint64_t z = 0; z < p; ++z)  // chart x = 0, y = 1
    if (F(0, 1, z) == 0) {
      ++count;
      singular = singular || singular_at(0, 1, z);
    }
  if (F(0, 0, 1) == 0) {
    ++count;
    singular = singular || singular_at(0, 0, 1);
  }
  if (singular)
    throw BadReductionError("the cubic is singular mod " + std::to_string(p));
  return count;
}

int64_t cubic_ap(uint64_t p) {
  return static_cast<int64_t>(p) + 1 - cubic_point_count(p);
}

uint64_t unit_root(int64_t a_p, uint64_t p, int K) {
  if (!is_prime_u64(p)) throw UnsupportedError("p must be prime");
  if (K < 1) throw UnsupportedError("K must be >= 1");
  int64_t ap_mod = a_p % static_cast<int64_t>(p);
  if (ap_mod == 0)
    throw SupersingularError("p divides a_p: no unit root exists");

  ZmodRing ring(p, K);
  const uint64_t ap = ring.reduce_i64(a_p);
  uint64_t u = ring.reduce_i64(ap_mod);
  // Newton iteration on T^2 - a_p T + p; g'(u) = 2u - a_p is a unit
  for (int i = 0; i < 2 * K + 4; ++i) {
    uint64_t g = ring.add(ring.sub(ring.mul(u, u), ring.mul(ap, u)),
                          p % ring.modulus());
    if (g == 0) break;
    uint64_t gp = ring.sub(ring.add(u, u), ap);
    u = ring.sub(u, ring.mul(g, *ring.inv(gp)));
  }
  return u;
}

CrosscheckReport crosscheck_unit_root(uint64_t p, int K) {
  CrosscheckReport rep;
  rep.p = p;
  rep.precision = K;
  PolyZ f = builtin_polynomial("cubic");
  rep.ordinary = is_ordinary(f, p);
  rep.a_p = cubic_ap(p);
  rep.ap_unit = rep.a_p % static_cast<int64_t>(p) != 0;

  if (!rep.ordinary || !rep.ap_unit) {
    // consistency: both sides must fail together
    rep.match = rep.ordinary == rep.ap_unit;
    return rep;
  }
  rep.unit_root_value = unit_root(rep.a_p, p, K);
  LimitResult lim = frobenius_limit(f, p, K);
  rep.alpha_value = lim.alpha.at(0, 0);
  rep.match = rep.alpha_value == rep.unit_root_value;
  return rep;
}

}  // namespace unitroot
