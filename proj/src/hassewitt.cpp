#include "unitroot/hassewitt.hpp"

namespace unitroot {

namespace {

uint64_t prime_power(uint64_t p, int s) {
  uint64_t v = 1;
  for (int i = 0; i < s; ++i) {
    if (v > UINT64_MAX / p) throw UnsupportedError("p^s out of range");
    v *= p;
  }
  return v;
}

void require_prime(uint64_t p) {
  if (!is_prime_u64(p)) throw UnsupportedError("p must be prime");
}

ExpVec hw_target(const ExpVec& u, const ExpVec& v, uint64_t ps) {
  // p^s v - u; may exceed the int32 range of ExpVec for very large p^s, so
  // build carefully
  ExpVec t;
  for (int i = 0; i < kMaxDim; ++i) {
    int64_t x = static_cast<int64_t>(ps) * v[i] - u[i];
    if (x < INT32_MIN || x > INT32_MAX)
      throw UnsupportedError("p^s v - u exceeds the exponent range");
    t[i] = static_cast<int32_t>(x);
  }
  return t;
}

}  // namespace

PadicMatrix hasse_witt(const PolyZ& f, uint64_t p, int s, int M) {
  require_prime(p);
  if (s < 0) throw UnsupportedError("s must be >= 0");
  if (M < 1) throw UnsupportedError("M must be >= 1");
  auto pts = require_interior_points(f);
  const uint64_t ps = prime_power(p, s);
  ZmodRing ring(p, M);
  PadicMatrix a(ring, pts, f.dimension());
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j)
      a.at(i, j) =
          power_coefficient_mod(f, ps - 1, hw_target(pts[i], pts[j], ps), ring);
  return a;
}

std::vector<std::vector<mpz_class>> hasse_witt_exact(const PolyZ& f, uint64_t p,
                                                     int s) {
  require_prime(p);
  if (s < 0) throw UnsupportedError("s must be >= 0");
  auto pts = require_interior_points(f);
  const uint64_t ps = prime_power(p, s);
  std::vector<std::vector<mpz_class>> a(pts.size(),
                                        std::vector<mpz_class>(pts.size()));
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j)
      a[i][j] =
          power_coefficient_exact(f, ps - 1, hw_target(pts[i], pts[j], ps));
  return a;
}

bool is_ordinary(const PolyZ& f, uint64_t p) {
  PadicMatrix a1 = hasse_witt(f, p, 1, 1);
  return a1.ring().is_unit(mat_det(a1));
}

CongruenceReport1 congruence_check_1(const PolyZ& f, uint64_t p, int s_max) {
  if (s_max < 1) throw UnsupportedError("s_max must be >= 1");
  CongruenceReport1 rep;
  rep.p = p;
  rep.s_max = s_max;
  PadicMatrix a1 = hasse_witt(f, p, 1, 1);
  PadicMatrix power = a1;
  for (int s = 1; s <= s_max; ++s) {
    PadicMatrix as = s == 1 ? a1 : hasse_witt(f, p, s, 1);
    rep.holds.push_back(as == power);
    power = mat_mul(power, a1);
  }
  return rep;
}

CongruenceReport2 congruence_check_2(const PolyZ& f, uint64_t p, int s_max,
                                     int M) {
  if (s_max < 1) throw UnsupportedError("s_max must be >= 1");
  if (M < s_max) throw UnsupportedError("need precision M >= s_max");
  CongruenceReport2 rep;
  rep.p = p;
  rep.s_max = s_max;
  rep.precision = M;

  std::vector<PadicMatrix> alpha;
  for (int s = 0; s <= s_max; ++s) alpha.push_back(hasse_witt(f, p, s, M));
  std::vector<PadicMatrix> quot;  // q_s = alpha_{s+1} alpha_s^{-1}
  for (int s = 0; s < s_max; ++s)
    quot.push_back(
        mat_mul(alpha[static_cast<std::size_t>(s) + 1],
                matrix_inverse_mod(alpha[static_cast<std::size_t>(s)])));
  for (int s = 1; s < s_max; ++s)
    rep.agreement.push_back(agreement_level(quot[static_cast<std::size_t>(s)],
                                            quot[static_cast<std::size_t>(s) - 1]));
  return rep;
}

LimitResult frobenius_limit(const PolyZ& f, uint64_t p, int K) {
  if (K < 1) throw UnsupportedError("K must be >= 1");
  if (!is_ordinary(f, p))
    throw NotOrdinaryError("alpha_1 is not invertible mod " + std::to_string(p));

  std::vector<PadicMatrix> alpha;
  for (int s = 0; s <= K + 1; ++s) alpha.push_back(hasse_witt(f, p, s, K));
  std::vector<PadicMatrix> quot;
  for (int s = 0; s <= K; ++s)
    quot.push_back(
        mat_mul(alpha[static_cast<std::size_t>(s) + 1],
                matrix_inverse_mod(alpha[static_cast<std::size_t>(s)])));

  LimitResult res{quot.back(), {}};
  for (int s = 1; s <= K; ++s)
    res.trace.emplace_back(
        s, agreement_level(quot[static_cast<std::size_t>(s)],
                           quot[static_cast<std::size_t>(s) - 1]));
  return res;
}

}  // namespace unitroot
