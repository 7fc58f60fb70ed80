#include <doctest.h>

#include <random>

#include "unitroot/builtins.hpp"
#include "unitroot/coefficients.hpp"
#include "unitroot/laurent.hpp"

using namespace unitroot;

namespace {

PolyZ cubic() { return builtin_polynomial("cubic"); }

PolyZ random_poly(std::mt19937_64& rng, int d, int max_terms, int coord_bound,
                  int coeff_bound) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> coord(-coord_bound, coord_bound);
  std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
  std::vector<PolyZ::Term> ts;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    ExpVec e;
    for (int j = 0; j < d; ++j) e[j] = coord(rng);
    ts.emplace_back(e, mpz_class(coeff(rng)));
  }
  return PolyZ::from_terms(d, std::move(ts));
}

// brute-force product: expand every pair without hashing tricks
PolyZ naive_multiply(const PolyZ& a, const PolyZ& b) {
  std::vector<PolyZ::Term> ts;
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) ts.emplace_back(add(ea, eb), ca * cb);
  return PolyZ::from_terms(a.dimension(), std::move(ts));
}

}  // namespace

TEST_CASE("parse: negative-exponent support") {
  PolyZ f = parse_laurent("t1 + t2 + t1^-2*t2^-2", 2);
  CHECK(f.term_count() == 3);
  CHECK(f.coefficient(ExpVec::of({1, 0})) == 1);
  CHECK(f.coefficient(ExpVec::of({0, 1})) == 1);
  CHECK(f.coefficient(ExpVec::of({-2, -2})) == 1);
}

TEST_CASE("parse: zero polynomial") {
  PolyZ f = parse_laurent("0", 2);
  CHECK(f.is_zero());
  CHECK(f.term_count() == 0);
}

TEST_CASE("parse: cancellation") {
  PolyZ f = parse_laurent("2*t1 - t1", 1);
  CHECK(f.term_count() == 1);
  CHECK(f.coefficient(ExpVec::of({1})) == 1);
}

TEST_CASE("parse: coefficients and repeated variables") {
  PolyZ f = parse_laurent("3*t1^2*t1 - 2*t2 + 7", 2);
  CHECK(f.coefficient(ExpVec::of({3, 0})) == 3);
  CHECK(f.coefficient(ExpVec::of({0, 1})) == -2);
  CHECK(f.coefficient(ExpVec::of({0, 0})) == 7);
}

TEST_CASE("parse: errors carry positions") {
  CHECK_THROWS_AS(parse_laurent("t1 + + t2", 2), ParseError);
  CHECK_THROWS_AS(parse_laurent("t3", 2), ParseError);
  CHECK_THROWS_AS(parse_laurent("", 2), ParseError);
  CHECK_THROWS_AS(parse_laurent("t1*", 2), ParseError);
  try {
    parse_laurent("t1 + @", 2);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.pos == 5);
  }
}

TEST_CASE("multiply: identity and binomial") {
  PolyZ f = cubic();
  CHECK(multiply(f, PolyZ::one(2)) == f);
  PolyZ s = parse_laurent("t1 + t2", 2);
  PolyZ sq = multiply(s, s);
  CHECK(sq.coefficient(ExpVec::of({2, 0})) == 1);
  CHECK(sq.coefficient(ExpVec::of({1, 1})) == 2);
  CHECK(sq.coefficient(ExpVec::of({0, 2})) == 1);
  CHECK(sq.term_count() == 3);
}

TEST_CASE("multiply: constant term of f^3 is 6") {
  // oracle: expand all 27 monomial products by brute force
  PolyZ f = cubic();
  PolyZ f3 = naive_multiply(naive_multiply(f, f), f);
  CHECK(f3.coefficient(ExpVec::zero()) == 6);
  CHECK(multiply(multiply(f, f), f) == f3);
}

TEST_CASE("multiply: ring and dimension mismatch") {
  PolyZ a = parse_laurent("t1", 1);
  PolyZ b = parse_laurent("t1", 2);
  CHECK_THROWS_AS(multiply(a, b), RingMismatchError);
  ZmodRing r5(5, 1), r7(7, 1);
  PolyMod am = reduce_mod(a, r5);
  PolyMod bm = reduce_mod(a, r7);
  CHECK_THROWS_AS(multiply(am, bm), RingMismatchError);
}

TEST_CASE("power: f^0 is the empty product") {
  PolyZ f = cubic();
  PolyZ one = power(f, 0);
  CHECK(one.term_count() == 1);
  CHECK(one.coefficient(ExpVec::zero()) == 1);
  CHECK(power(PolyZ::zero(2), 0) == PolyZ::one(2));
  CHECK(power(PolyZ::zero(2), 3).is_zero());
}

TEST_CASE("power: multinomial coefficient of f^6") {
  // 6!/(2!2!2!) = 90 at t^(0,0)
  PolyZ f6 = power(cubic(), 6);
  CHECK(f6.coefficient(ExpVec::zero()) == 90);
}

TEST_CASE("power: exact vs modular agreement") {
  PolyZ f = cubic();
  ZmodRing ring(11, 3);
  PolyZ exact = power(f, 10);
  PolyMod modular = power_mod(f, 10, ring);
  CHECK(reduce_mod(exact, ring) == modular);
}

TEST_CASE("coefficient: lookups") {
  CHECK(PolyZ::one(2).coefficient(ExpVec::zero()) == 1);
  PolyZ s = parse_laurent("t1 + t2", 2);
  CHECK(s.coefficient(ExpVec::of({5, 5})) == 0);
  PolyZ f = builtin_polynomial("quintic-like");
  PolyZ f2 = multiply(f, f);
  CHECK(f2.coefficient(ExpVec::of({1, 1})) == 2);
}

TEST_CASE("property: multiply commutes and associates") {
  std::mt19937_64 rng(0xC0FFEE);
  for (int i = 0; i < 30; ++i) {
    int d = 1 + static_cast<int>(rng() % 3);
    PolyZ a = random_poly(rng, d, 5, 3, 4);
    PolyZ b = random_poly(rng, d, 5, 3, 4);
    PolyZ c = random_poly(rng, d, 4, 2, 4);
    CHECK(multiply(a, b) == multiply(b, a));
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    CHECK(multiply(a, b) == naive_multiply(a, b));
  }
}

TEST_CASE("property: power is a homomorphism in the exponent") {
  std::mt19937_64 rng(0xBEEF);
  for (int i = 0; i < 10; ++i) {
    PolyZ f = random_poly(rng, 2, 4, 2, 3);
    for (uint64_t m = 0; m <= 8; m += 3)
      for (uint64_t n = 1; n <= 8; n += 2)
        CHECK(power(f, m + n) == multiply(power(f, m), power(f, n)));
  }
}

TEST_CASE("property: reduction commutes with powering up to p^2") {
  std::mt19937_64 rng(0xABCD);
  for (uint64_t p : {3ull, 5ull}) {
    ZmodRing ring(p, 2);
    for (int i = 0; i < 5; ++i) {
      PolyZ f = random_poly(rng, 2, 4, 2, 5);
      for (uint64_t n = 0; n <= p * p; n += (p == 3 ? 2 : 5))
        CHECK(reduce_mod(power(f, n), ring) == power_mod(f, n, ring));
    }
  }
}

TEST_CASE("property: no zero coefficients survive any operation") {
  std::mt19937_64 rng(0x5EED);
  auto no_zeros = [](const PolyZ& f) {
    for (const auto& [e, c] : f.terms())
      if (sgn(c) == 0) return false;
    return true;
  };
  for (int i = 0; i < 40; ++i) {
    PolyZ a = random_poly(rng, 2, 6, 2, 2);
    PolyZ b = random_poly(rng, 2, 6, 2, 2);
    CHECK(no_zeros(add(a, b)));
    CHECK(no_zeros(multiply(a, b)));
    CHECK(no_zeros(power(a, 3)));
  }
  // designed cancellation
  PolyZ u = parse_laurent("t1 + t2", 2);
  PolyZ v = parse_laurent("t1 - t2", 2);
  PolyZ w = add(multiply(u, v), parse_laurent("t2^2 - t1^2", 2));
  CHECK(w.is_zero());
}

TEST_CASE("term cap blocks runaway products") {
  std::size_t old_cap = term_cap();
  set_term_cap(10);
  PolyZ f = parse_laurent("t1 + t2 + t1^-1 + t2^-1 + 1", 2);
  CHECK_THROWS_AS(power(f, 6), CapExceededError);
  set_term_cap(old_cap);
}

TEST_CASE("power coefficient extraction matches expansion") {
  std::mt19937_64 rng(0xF00D);
  for (int i = 0; i < 15; ++i) {
    int d = 1 + static_cast<int>(rng() % 2);
    PolyZ f = random_poly(rng, d, 4, 2, 3);
    if (f.is_zero()) continue;
    uint64_t n = rng() % 7;
    PolyZ fn = power(f, n);
    // probe on-support and off-support targets
    for (int probe = 0; probe < 10; ++probe) {
      ExpVec target;
      for (int j = 0; j < d; ++j)
        target[j] = static_cast<int32_t>(static_cast<int64_t>(rng() % 17) - 8);
      CHECK(power_coefficient_exact(f, n, target) == fn.coefficient(target));
    }
    for (const auto& [e, c] : fn.terms())
      CHECK(power_coefficient_exact(f, n, e) == c);
  }
}

TEST_CASE("modular power coefficient handles p in the coefficients") {
  // coefficients divisible by p stress the valuation bookkeeping
  PolyZ f = parse_laurent("5*t1 + 25 + t1^-1", 1);
  ZmodRing ring(5, 3);
  PolyZ f4 = power(f, 4);
  for (const auto& [e, c] : f4.terms())
    CHECK(power_coefficient_mod(f, 4, e, ring) == ring.reduce(c));
  CHECK(power_coefficient_mod(f, 4, ExpVec::of({9}), ring) == 0);
}
