#include <doctest.h>

#include <random>

#include "unitroot/builtins.hpp"
#include "unitroot/grouplaw.hpp"

using namespace unitroot;

namespace {

// L(tau) = sum_{nu>=1} tau^nu / nu, the multiplicative-group logarithm
std::vector<TruncatedSeries> mult_group_log(int D) {
  std::vector<TruncatedSeries::Term> ts;
  for (int nu = 1; nu <= D; ++nu)
    ts.emplace_back(mono_var(0, nu), mpq_class(1, nu));
  return {TruncatedSeries::from_terms(1, D, std::move(ts))};
}

std::vector<TruncatedSeries> random_log(std::mt19937_64& rng, int n, int D) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::vector<TruncatedSeries> L;
  for (int i = 0; i < n; ++i) {
    std::vector<TruncatedSeries::Term> ts;
    ts.emplace_back(mono_var(i), mpq_class(1));
    // a few random higher-order terms
    for (int t = 0; t < 6; ++t) {
      Mono m = 0;
      int deg = 0;
      for (int v = 0; v < n; ++v) {
        int e = static_cast<int>(rng() % 3);
        if (deg + e > D) e = 0;
        m = mono_set(m, v, e);
        deg += e;
      }
      if (deg < 2) continue;
      ts.emplace_back(m, mpq_class(coeff(rng)));
    }
    L.push_back(TruncatedSeries::from_terms(n, D, std::move(ts)));
  }
  return L;
}

}  // namespace

TEST_CASE("compose: identity substitution") {
  auto L = mult_group_log(6);
  auto id = identity_tuple(1, 6);
  CHECK(compose(L, id) == L);
}

TEST_CASE("compose: univariate examples") {
  // tau + tau^2 composed with tau
  std::vector<TruncatedSeries::Term> ts;
  ts.emplace_back(mono_var(0, 1), mpq_class(1));
  ts.emplace_back(mono_var(0, 2), mpq_class(1));
  TruncatedSeries f = TruncatedSeries::from_terms(1, 8, ts);
  CHECK(compose(f, identity_tuple(1, 8)) == f);

  // tau^2 composed with tau + tau^3 = tau^2 + 2 tau^4 + tau^6
  TruncatedSeries sq = TruncatedSeries::from_terms(
      1, 8, {{mono_var(0, 2), mpq_class(1)}});
  TruncatedSeries inner = TruncatedSeries::from_terms(
      1, 8, {{mono_var(0, 1), mpq_class(1)}, {mono_var(0, 3), mpq_class(1)}});
  TruncatedSeries got = compose(sq, {inner});
  CHECK(got.coefficient(mono_var(0, 2)) == 1);
  CHECK(got.coefficient(mono_var(0, 4)) == 2);
  CHECK(got.coefficient(mono_var(0, 6)) == 1);
  CHECK(got.terms().size() == 3);
}

TEST_CASE("compose: rejects nonzero constant term") {
  TruncatedSeries f = TruncatedSeries::variable(1, 5, 0);
  TruncatedSeries bad = TruncatedSeries::constant(1, 5, mpq_class(1));
  CHECK_THROWS_AS(compose(f, {bad}), UnsupportedError);
}

TEST_CASE("invert: identity fixed point") {
  auto id = identity_tuple(2, 5);
  CHECK(invert_composition(id) == id);
}

TEST_CASE("invert: Catalan signs for tau + tau^2") {
  TruncatedSeries L = TruncatedSeries::from_terms(
      1, 6, {{mono_var(0, 1), mpq_class(1)}, {mono_var(0, 2), mpq_class(1)}});
  auto G = invert_composition({L});
  CHECK(G[0].coefficient(mono_var(0, 1)) == 1);
  CHECK(G[0].coefficient(mono_var(0, 2)) == -1);
  CHECK(G[0].coefficient(mono_var(0, 3)) == 2);
  CHECK(G[0].coefficient(mono_var(0, 4)) == -5);
  CHECK(G[0].coefficient(mono_var(0, 5)) == 14);
  CHECK(G[0].coefficient(mono_var(0, 6)) == -42);
}

TEST_CASE("invert: round trip for the multiplicative logarithm") {
  auto L = mult_group_log(7);
  auto G = invert_composition(L);
  CHECK(compose(L, G) == identity_tuple(1, 7));
  CHECK(compose(G, L) == identity_tuple(1, 7));
}

TEST_CASE("invert: requires identity linear part") {
  TruncatedSeries L = TruncatedSeries::from_terms(
      1, 4, {{mono_var(0, 1), mpq_class(2)}});
  CHECK_THROWS_AS(invert_composition({L}), UnsupportedError);
}

TEST_CASE("property: inversion round trips on random logarithms") {
  std::mt19937_64 rng(0x1234);
  for (int trial = 0; trial < 12; ++trial) {
    int n = 1 + static_cast<int>(rng() % 3);
    int D = 5;
    auto L = random_log(rng, n, D);
    auto G = invert_composition(L);
    CHECK(compose(L, G) == identity_tuple(n, D));
    CHECK(compose(G, L) == identity_tuple(n, D));
  }
}

TEST_CASE("group law: multiplicative formal group is x + y - xy") {
  GroupLaw F = group_law_from_log(mult_group_log(8), 8);
  REQUIRE(F.comp.size() == 1);
  const auto& s = F.comp[0];
  TruncatedSeries want = TruncatedSeries::from_terms(
      2, 8,
      {{mono_var(0), mpq_class(1)},
       {mono_var(1), mpq_class(1)},
       {mono_mul(mono_var(0), mono_var(1)), mpq_class(-1)}});
  CHECK(s == want);
}

TEST_CASE("group law: F(x,0) = x and F == x + y mod degree 2") {
  GroupLaw F = group_law(builtin_polynomial("quintic-like"), 5);
  CHECK(axioms_check(F).identity_ok);
  for (int i = 0; i < F.N; ++i) {
    for (int j = 0; j < 2 * F.N; ++j) {
      mpq_class want(j == i || j == F.N + i ? 1 : 0);
      CHECK(F.comp[static_cast<std::size_t>(i)].coefficient(mono_var(j)) == want);
    }
  }
}

TEST_CASE("group law: cubic at D = 9 is integral, with frozen degree-4 slice") {
  GroupLaw F = group_law(builtin_polynomial("cubic"), 9);
  CHECK(integrality_report(F).integral);
  // manual inversion of L = tau + (3/2) tau^4 + ... gives
  // F = x + y - 6x^3y - 9x^2y^2 - 6xy^3 + O(deg 7)
  const auto& s = F.comp[0];
  auto xy = [](int a, int b) { return mono_mul(mono_var(0, a), mono_var(1, b)); };
  CHECK(s.coefficient(xy(4, 0)) == 0);
  CHECK(s.coefficient(xy(3, 1)) == -6);
  CHECK(s.coefficient(xy(2, 2)) == -9);
  CHECK(s.coefficient(xy(1, 3)) == -6);
  CHECK(s.coefficient(xy(0, 4)) == 0);
}

TEST_CASE("integrality: negative control tau + tau^2/4") {
  std::vector<TruncatedSeries> L{TruncatedSeries::from_terms(
      1, 5,
      {{mono_var(0, 1), mpq_class(1)}, {mono_var(0, 2), mpq_class(1, 4)}})};
  GroupLaw F = group_law_from_log(L, 5);
  IntegralityReport rep = integrality_report(F);
  CHECK(!rep.integral);
  REQUIRE(!rep.offenders.empty());
  // F = x + y - xy/2 + ...; the xy denominator is even
  mpq_class c = F.comp[0].coefficient(mono_mul(mono_var(0), mono_var(1)));
  CHECK(c == mpq_class(-1, 2));
  bool found_even = false;
  for (const auto& o : rep.offenders)
    if (o.denominator % 2 == 0) found_even = true;
  CHECK(found_even);
}

TEST_CASE("axioms: x + y - xy passes all three") {
  GroupLaw F = group_law_from_log(mult_group_log(7), 7);
  AxiomsReport rep = axioms_check(F);
  CHECK(rep.identity_ok);
  CHECK(rep.commutativity_ok);
  CHECK(rep.associativity_ok);
}

TEST_CASE("axioms: cubic formal group at D = 7") {
  GroupLaw F = group_law(builtin_polynomial("cubic"), 7);
  CHECK(axioms_check(F).ok());
}

TEST_CASE("axioms: mutated coefficient breaks associativity") {
  GroupLaw F = group_law_from_log(mult_group_log(6), 6);
  Mono m = mono_mul(mono_var(0, 2), mono_var(1));
  auto terms = F.comp[0].terms();
  terms.emplace_back(m, mpq_class(1));
  F.comp[0] = TruncatedSeries::from_terms(2, 6, terms);
  AxiomsReport rep = axioms_check(F);
  CHECK(!rep.associativity_ok);
}
