// Acceptance suite: one check per headline claim, each printed as a
// [PASS]/[FAIL] line with its wall time and budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "unitroot/builtins.hpp"
#include "unitroot/diffop.hpp"
#include "unitroot/grouplaw.hpp"
#include "unitroot/hassewitt.hpp"
#include "unitroot/oracle.hpp"

using namespace unitroot;

namespace {

int failures = 0;

void criterion(int index, const std::string& name, double budget_seconds,
               const std::function<bool()>& run) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = run();
  } catch (const std::exception& e) {
    ok = false;
    note = std::string(" [exception: ") + e.what() + "]";
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              start)
                    .count();
  if (secs > budget_seconds) {
    ok = false;
    note += " [over time budget]";
  }
  std::printf("[%s] criterion %d: %s (%.2fs / budget %.0fs)%s\n",
              ok ? "PASS" : "FAIL", index, name.c_str(), secs, budget_seconds,
              note.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

mpz_class fact(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// --- criterion 1: reproduction of the worked 2x2 table ----------------------

bool table_reproduction() {
  PolyZ f = builtin_polynomial("quintic-like");
  for (uint64_t p : {2ull, 3ull, 7ull, 11ull, 13ull, 19ull, 31ull, 41ull}) {
    auto a = hasse_witt_exact(f, p, 1);
    unsigned long k = static_cast<unsigned long>(p / 5);
    mpz_class zero(0);
    std::vector<std::vector<mpz_class>> want(2, std::vector<mpz_class>(2, zero));
    switch (p % 5) {
      case 1:
        // the definitional multinomial (5k)!/((2k)!^2 k!) on the first
        // diagonal entry, (5k)!/((k!)^2 (3k)!) on the second
        want[0][0] = fact(5 * k) / (fact(2 * k) * fact(2 * k) * fact(k));
        want[1][1] = fact(5 * k) / (fact(k) * fact(k) * fact(3 * k));
        break;
      case 2:
        want[0][1] = fact(5 * k + 1) / (fact(k) * fact(k) * fact(3 * k + 1));
        break;
      case 3:
        want[1][0] =
            fact(5 * k + 2) / (fact(k) * fact(2 * k + 1) * fact(2 * k + 1));
        break;
      default:
        break;  // p = 5k+4 (and 5k): the zero matrix
    }
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
            want[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
          return false;
  }
  return true;
}

// --- criterion 2: ordinarity classification ---------------------------------

bool ordinarity_sweep() {
  PolyZ f = builtin_polynomial("quintic-like");
  for (uint64_t p = 2; p <= 50; ++p) {
    if (!is_prime_u64(p)) continue;
    if (is_ordinary(f, p) != (p % 5 == 1)) return false;
  }
  return true;
}

// --- criterion 3: integrality of the group laws -----------------------------

PolyZ random_valid_poly(std::mt19937_64& rng) {
  for (;;) {
    std::vector<PolyZ::Term> ts;
    int n = 3 + static_cast<int>(rng() % 3);
    for (int i = 0; i < n; ++i) {
      ExpVec e;
      for (int j = 0; j < 2; ++j)
        e[j] = static_cast<int32_t>(static_cast<int64_t>(rng() % 7) - 3);
      int c = static_cast<int>(rng() % 7) - 3;
      if (c == 0) c = 1;
      ts.emplace_back(e, mpz_class(c));
    }
    PolyZ f = PolyZ::from_terms(2, std::move(ts));
    if (f.is_zero()) continue;
    HypothesisReport rep = check_hypotheses(f);
    if (!rep.ok() || rep.interior_count > 3) continue;
    return f;
  }
}

bool integrality_audits() {
  if (!integrality_report(group_law(builtin_polynomial("cubic"), 10)).integral)
    return false;
  if (!integrality_report(group_law(builtin_polynomial("quintic-like"), 6))
           .integral)
    return false;
  std::mt19937_64 rng(20260809);
  for (int i = 0; i < 20; ++i) {
    PolyZ f = random_valid_poly(rng);
    if (!integrality_report(group_law(f, 6)).integral) return false;
  }
  return true;
}

// --- criterion 4: congruence suites ------------------------------------------

bool congruence_suites() {
  for (const char* name : {"cubic", "quintic-like"}) {
    PolyZ f = builtin_polynomial(name);
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                       23ull, 29ull, 31ull}) {
      if (!is_ordinary(f, p)) continue;
      if (!congruence_check_1(f, p, 3).ok()) return false;
      if (!congruence_check_2(f, p, 3, 3).ok()) return false;
    }
  }
  return true;
}

// --- criterion 5: unit-root crosscheck ---------------------------------------

bool unit_root_crosscheck() {
  for (uint64_t p : {7ull, 13ull, 19ull}) {
    CrosscheckReport rep = crosscheck_unit_root(p, 4);
    if (!rep.ordinary) continue;  // restricted to ordinary primes at run time
    if (!rep.match) return false;
  }
  return true;
}

// --- criterion 6: ODE annihilation -------------------------------------------

bool ode_annihilation() {
  for (int d = 3; d <= 5; ++d) {
    PolyZ f = builtin_polynomial("cyclic-" + std::to_string(d));
    PowerSeries1D s =
        signed_pf_series(f, ExpVec::zero(), ExpVec::zero(), 60 + d);
    AnnihilationReport rep = annihilation_check(pf_operator_cyclic(d), s);
    if (!rep.annihilated || rep.checked_degree < 60) return false;
  }
  {
    EulerOperator op = pf_operator_1124();
    AnnihilationReport rep =
        annihilation_check(op, normalized_solution(op, 44));
    if (!rep.annihilated || rep.checked_degree < 40) return false;
  }
  {
    PowerSeries1D u = unsigned_pf_series(builtin_polynomial("cubic"),
                                         ExpVec::zero(), ExpVec::zero(), 20);
    AnnihilationReport rep = annihilation_check(pf_operator_cyclic(3), u);
    if (rep.annihilated || !rep.first_failure || *rep.first_failure != 3)
      return false;
  }
  return true;
}

// --- criterion 7: Honda integrality boundary ---------------------------------

bool honda_integrality() {
  {
    HondaGroupLawResult res = honda_group_law({mpq_class(1, 2)}, 2, 20);
    for (const auto& q : res.denominator_primes)
      if (q > 2) return false;
  }
  {
    HondaGroupLawResult res =
        honda_group_law({mpq_class(1, 4), mpq_class(3, 4)}, 4, 16);
    for (const auto& q : res.denominator_primes)
      if (q > 4) return false;
  }
  return true;
}

// --- criterion 8: kernel oracles ---------------------------------------------

PolyZ random_poly(std::mt19937_64& rng, int d, int max_terms) {
  std::vector<PolyZ::Term> ts;
  int n = 1 + static_cast<int>(rng() % max_terms);
  for (int i = 0; i < n; ++i) {
    ExpVec e;
    for (int j = 0; j < d; ++j)
      e[j] = static_cast<int32_t>(static_cast<int64_t>(rng() % 7) - 3);
    ts.emplace_back(e, mpz_class(static_cast<int>(rng() % 19) - 9));
  }
  return PolyZ::from_terms(d, std::move(ts));
}

bool kernel_oracles() {
  std::mt19937_64 rng(0xACCE55);

  // exact-vs-modular powering, 50 cases
  const uint64_t primes[] = {3, 5, 7, 11};
  for (int i = 0; i < 50; ++i) {
    int d = 1 + static_cast<int>(rng() % 2);
    PolyZ f = random_poly(rng, d, 5);
    uint64_t p = primes[rng() % 4];
    int M = 1 + static_cast<int>(rng() % 3);
    uint64_t n = rng() % std::min<uint64_t>(p * p, 30) + 1;
    ZmodRing ring(p, M);
    if (reduce_mod(power(f, n), ring) != power_mod(f, n, ring)) return false;
  }

  // compositional inversion round trips at D = 8, 50 cases
  for (int i = 0; i < 50; ++i) {
    int N = 1 + static_cast<int>(rng() % 3);
    const int D = 8;
    std::vector<TruncatedSeries> L;
    for (int c = 0; c < N; ++c) {
      std::vector<TruncatedSeries::Term> ts;
      ts.emplace_back(mono_var(c), mpq_class(1));
      for (int t = 0; t < 5; ++t) {
        Mono m = 0;
        int deg = 0;
        for (int v = 0; v < N; ++v) {
          int e = static_cast<int>(rng() % 3);
          m = mono_set(m, v, e);
          deg += e;
        }
        if (deg < 2 || deg > D) continue;
        ts.emplace_back(m, mpq_class(static_cast<int>(rng() % 9) - 4));
      }
      L.push_back(TruncatedSeries::from_terms(N, D, std::move(ts)));
    }
    auto G = invert_composition(L);
    if (compose(L, G) != identity_tuple(N, D)) return false;
    if (compose(G, L) != identity_tuple(N, D)) return false;
  }

  // group-law axioms at D = 7 for the two builtins
  for (const char* name : {"cubic", "quintic-like"}) {
    GroupLaw F = group_law(builtin_polynomial(name), 7);
    if (!axioms_check(F).ok()) return false;
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "worked 2x2 Hasse-Witt table, exact integers", 60,
            table_reproduction);
  criterion(2, "ordinarity iff p = 1 mod 5, p <= 50", 120, ordinarity_sweep);
  criterion(3, "group-law integrality (builtins + 20 random)", 600,
            integrality_audits);
  criterion(4, "congruences parts 1 and 2, ordinary p <= 31, s <= 3", 600,
            congruence_suites);
  criterion(5, "unit root equals the p-adic limit mod p^4", 300,
            unit_root_crosscheck);
  criterion(6, "ODE annihilation at degree 60 plus negative control", 120,
            ode_annihilation);
  criterion(7, "Honda denominator primes bounded by N", 120, honda_integrality);
  criterion(8, "kernel oracles: powering, inversion, axioms", 600,
            kernel_oracles);

  if (failures) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
