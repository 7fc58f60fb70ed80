#include <doctest.h>

#include "unitroot/builtins.hpp"
#include "unitroot/hassewitt.hpp"

using namespace unitroot;

namespace {

mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace

TEST_CASE("hasse_witt: s = 0 is the identity") {
  for (const char* name : {"cubic", "quintic-like"}) {
    PolyZ f = builtin_polynomial(name);
    PadicMatrix a0 = hasse_witt(f, 7, 0, 3);
    CHECK(a0 == PadicMatrix::identity(a0.ring(), a0.labels(), a0.label_dim()));
  }
}

TEST_CASE("hasse_witt: quintic-like at p = 11 is diag(3150, 1260)") {
  PolyZ f = builtin_polynomial("quintic-like");
  auto exact = hasse_witt_exact(f, 11, 1);
  REQUIRE(exact.size() == 2);
  CHECK(exact[0][0] == 3150);
  CHECK(exact[0][1] == 0);
  CHECK(exact[1][0] == 0);
  CHECK(exact[1][1] == 1260);
  // 1260 = 10!/((2!)^2 6!)
  CHECK(exact[1][1] == factorial(10) / (factorial(2) * factorial(2) * factorial(6)));
  // labels in graded-lex order: (0,0) before (-1,-1)
  PadicMatrix a1 = hasse_witt(f, 11, 1, 3);
  CHECK(a1.labels()[0] == ExpVec::zero());
  CHECK(a1.labels()[1] == ExpVec::of({-1, -1}));
  CHECK(a1.at(0, 0) == 3150 % 1331);
  CHECK(a1.at(1, 1) == 1260 % 1331);
}

TEST_CASE("hasse_witt: quintic-like at p = 2 is strictly upper triangular") {
  auto exact = hasse_witt_exact(builtin_polynomial("quintic-like"), 2, 1);
  CHECK(exact[0][0] == 0);
  CHECK(exact[0][1] == 1);
  CHECK(exact[1][0] == 0);
  CHECK(exact[1][1] == 0);
}

TEST_CASE("hasse_witt: modular values match exact values reduced") {
  // multinomial enumeration vs full expansion, p^s - 1 <= 100
  for (const char* name : {"cubic", "quintic-like"}) {
    PolyZ f = builtin_polynomial(name);
    auto pts = require_interior_points(f);
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
      for (int s = 0; s <= (p <= 3 ? 2 : 1); ++s) {
        uint64_t ps = 1;
        for (int i = 0; i < s; ++i) ps *= p;
        if (ps - 1 > 100) continue;
        ZmodRing ring(p, 3);
        PadicMatrix a = hasse_witt(f, p, s, 3);
        PolyZ fn = power(f, ps - 1);  // independent full expansion
        for (std::size_t i = 0; i < pts.size(); ++i)
          for (std::size_t j = 0; j < pts.size(); ++j) {
            ExpVec target;
            for (int k = 0; k < f.dimension(); ++k)
              target[k] = static_cast<int32_t>(
                  static_cast<int64_t>(ps) * pts[j][k] - pts[i][k]);
            CHECK(a.at(i, j) == ring.reduce(fn.coefficient(target)));
          }
      }
    }
  }
}

TEST_CASE("hasse_witt: non-simplex support against full powering") {
  // four support points: the multinomial solution space is one-dimensional
  PolyZ f = parse_laurent("t1 + t2 + t1^-1*t2^-1 + 1", 2);
  auto pts = require_interior_points(f);
  REQUIRE(pts.size() == 1);
  ZmodRing ring(7, 2);
  PadicMatrix a = hasse_witt(f, 7, 2, 2);
  PolyZ f48 = power(f, 48);
  CHECK(a.at(0, 0) == ring.reduce(f48.coefficient(ExpVec::zero())));
  // and with mixed coefficients
  PolyZ g = parse_laurent("2*t1 + t2 - 3*t1^-1*t2^-1 + 7", 2);
  PadicMatrix b = hasse_witt(g, 5, 2, 3);
  ZmodRing r5(5, 3);
  PolyZ g24 = power(g, 24);
  CHECK(b.at(0, 0) == r5.reduce(g24.coefficient(ExpVec::zero())));
}

TEST_CASE("is_ordinary: quintic-like follows p mod 5") {
  PolyZ f = builtin_polynomial("quintic-like");
  CHECK(is_ordinary(f, 11));
  CHECK(!is_ordinary(f, 2));
  CHECK(!is_ordinary(f, 7));
}

TEST_CASE("matrix_inverse_mod: identity and round trip") {
  PolyZ f = builtin_polynomial("quintic-like");
  PadicMatrix a1 = hasse_witt(f, 11, 1, 3);
  PadicMatrix id = PadicMatrix::identity(a1.ring(), a1.labels(), a1.label_dim());
  CHECK(matrix_inverse_mod(id) == id);
  PadicMatrix inv = matrix_inverse_mod(a1);
  CHECK(mat_mul(a1, inv) == id);
  CHECK(mat_mul(inv, a1) == id);
}

TEST_CASE("matrix_inverse_mod: nilpotent matrix is rejected") {
  PadicMatrix a = hasse_witt(builtin_polynomial("quintic-like"), 2, 1, 1);
  CHECK_THROWS_AS(matrix_inverse_mod(a), NotInvertibleError);
}

TEST_CASE("congruence 1: holds for the worked examples") {
  CongruenceReport1 r1 =
      congruence_check_1(builtin_polynomial("quintic-like"), 11, 3);
  CHECK(r1.ok());
  CongruenceReport1 r2 = congruence_check_1(builtin_polynomial("cubic"), 7, 2);
  CHECK(r2.ok());
  CongruenceReport1 r3 = congruence_check_1(builtin_polynomial("cubic"), 5, 2);
  CHECK(r3.ok());  // holds with alpha_1 = 0 as well
}

TEST_CASE("congruence 2: agreement levels meet the bound") {
  CongruenceReport2 r =
      congruence_check_2(builtin_polynomial("cubic"), 7, 3, 3);
  REQUIRE(r.agreement.size() == 2);
  CHECK(r.agreement[0] >= 1);
  CHECK(r.agreement[1] >= 2);
  CHECK(r.ok());
  CongruenceReport2 q =
      congruence_check_2(builtin_polynomial("quintic-like"), 11, 3, 3);
  CHECK(q.ok());
}

TEST_CASE("congruence 2: non-invertible alpha_1 is rejected") {
  CHECK_THROWS_AS(congruence_check_2(builtin_polynomial("quintic-like"), 7, 3, 3),
                  NotInvertibleError);
}

TEST_CASE("frobenius_limit: alpha = alpha_1 mod p") {
  PolyZ f = builtin_polynomial("cubic");
  LimitResult lim = frobenius_limit(f, 7, 3);
  PadicMatrix a1 = hasse_witt(f, 7, 1, 3);
  CHECK(agreement_level(lim.alpha, a1) >= 1);
}

TEST_CASE("frobenius_limit: stabilization across precisions") {
  PolyZ f = builtin_polynomial("cubic");
  LimitResult k3 = frobenius_limit(f, 7, 3);
  LimitResult k4 = frobenius_limit(f, 7, 4);
  CHECK(reduce_precision(k4.alpha, 3) == k3.alpha);
  for (const auto& [s, lvl] : k4.trace) CHECK(lvl >= s);
}

TEST_CASE("frobenius_limit: frozen value at p = 7, K = 4") {
  LimitResult lim = frobenius_limit(builtin_polynomial("cubic"), 7, 4);
  REQUIRE(lim.alpha.size() == 1);
  CHECK(lim.alpha.at(0, 0) == 741);
}

TEST_CASE("frobenius_limit: non-ordinary input is rejected") {
  CHECK_THROWS_AS(frobenius_limit(builtin_polynomial("cubic"), 5, 2),
                  NotOrdinaryError);
  CHECK_THROWS_AS(frobenius_limit(builtin_polynomial("quintic-like"), 7, 2),
                  NotOrdinaryError);
}

TEST_CASE("frobenius_limit: det(alpha) is a unit") {
  PolyZ f = builtin_polynomial("quintic-like");
  LimitResult lim = frobenius_limit(f, 11, 2);
  CHECK(lim.alpha.ring().is_unit(mat_det(lim.alpha)));
}

TEST_CASE("one-variable pipeline end to end") {
  // f = t1 + 1/t1: Newton polytope [-1,1], single interior point 0,
  // alpha_1 = central binomial C(p-1, (p-1)/2), a unit for every odd p
  PolyZ f = builtin_polynomial("cyclic-2");
  REQUIRE(f.dimension() == 1);
  auto pts = require_interior_points(f);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0] == ExpVec::zero());

  auto a1 = hasse_witt_exact(f, 7, 1);
  mpz_class want;
  mpz_bin_uiui(want.get_mpz_t(), 6, 3);
  CHECK(a1[0][0] == want);  // 20

  for (uint64_t p : {3ull, 5ull, 7ull, 13ull}) {
    CHECK(is_ordinary(f, p));
    CHECK(congruence_check_1(f, p, 3).ok());
    CHECK(congruence_check_2(f, p, 3, 3).ok());
    LimitResult lim = frobenius_limit(f, p, 3);
    CHECK(agreement_level(lim.alpha, hasse_witt(f, p, 1, 3)) >= 1);
  }
  CHECK(!is_ordinary(f, 2));
}

TEST_CASE("frobenius_limit: 2x2 case at p = 31") {
  PolyZ f = builtin_polynomial("quintic-like");
  REQUIRE(is_ordinary(f, 31));
  LimitResult lim = frobenius_limit(f, 31, 3);
  REQUIRE(lim.alpha.size() == 2);
  for (const auto& [s, lvl] : lim.trace) CHECK(lvl >= s);
  CHECK(lim.alpha.ring().is_unit(mat_det(lim.alpha)));
  PadicMatrix a1 = hasse_witt(f, 31, 1, 3);
  CHECK(agreement_level(lim.alpha, a1) >= 1);
  CHECK(reduce_precision(lim.alpha, 2) == frobenius_limit(f, 31, 2).alpha);
}

TEST_CASE("is_ordinary iff frobenius_limit at K = 1 succeeds") {
  PolyZ f = builtin_polynomial("quintic-like");
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 31ull}) {
    bool ord = is_ordinary(f, p);
    bool limit_ok = true;
    try {
      frobenius_limit(f, p, 1);
    } catch (const NotOrdinaryError&) {
      limit_ok = false;
    }
    CHECK(ord == limit_ok);
  }
}
